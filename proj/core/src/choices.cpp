#include <stdexcept>

#include "fracto/fractions/span.hpp"
#include "fracto/groupoid/equivalence.hpp"
#include "fracto/groupoid/iso_comma.hpp"
#include "fracto/groupoid/lifting.hpp"

namespace fracto {

WClass WClass::all_essential_equivalences()
{
    WClass w;
    w.kind_ = WKind::all_essential_equivalences;
    w.name_ = "essential-equivalences";
    return w;
}

WClass WClass::essential_coverings(SearchLimits limits)
{
    WClass w;
    w.kind_ = WKind::essential_coverings;
    w.name_ = "coverings";
    w.limits_ = limits;
    return w;
}

WClass WClass::user(std::string name, Member member, Corrector c1)
{
    if (!member || !c1)
        throw std::invalid_argument("user class needs a membership test and a correction");
    WClass w;
    w.kind_ = WKind::user;
    w.name_ = std::move(name);
    w.member_ = std::move(member);
    w.c1_ = std::move(c1);
    return w;
}

Membership WClass::contains(const GroupoidFunctor& f) const
{
    switch (kind_) {
    case WKind::all_essential_equivalences:
        return is_essential_equivalence(f) ? Membership::yes : Membership::no;
    case WKind::essential_coverings:
        if (f.is_identity())
            return Membership::yes;
        return is_essential_covering(f, limits_);
    case WKind::user:
        return member_(f);
    }
    return Membership::unknown;
}

GroupoidFunctor dedup_section(const GroupoidFunctor& u, const GroupoidFunctor& v)
{
    const auto& X = v.dom();
    std::vector<char> seen(u.cod()->object_count(), 0);
    std::vector<Obj> keep;
    for (Obj x = 0; x < X->object_count(); ++x) {
        Obj y = u(v(x));
        if (!seen[y]) {
            seen[y] = 1;
            keep.push_back(x);
        }
    }
    auto sub = full_subgroupoid(X, keep);
    return GroupoidFunctor::from_generators(sub, X, [&](const Morphism& m) {
        return Morphism{keep[m.src], keep[m.tgt], m.elem};
    });
}

GroupoidFunctor WClass::c1(const GroupoidFunctor& u, const GroupoidFunctor& v) const
{
    if (!same_groupoid(v.cod(), u.dom()))
        throw std::invalid_argument("c1: arrows are not composable");
    auto id = GroupoidFunctor::identity(v.dom());
    if (v.is_identity())
        return id;
    switch (kind_) {
    case WKind::all_essential_equivalences:
        return id;
    case WKind::essential_coverings: {
        if (u.is_identity())
            return id;
        auto uv = functor_compose(u, v);
        if (is_literal_covering(uv, limits_) == Membership::yes)
            return id;
        return dedup_section(u, v);
    }
    case WKind::user:
        return c1_(u, v);
    }
    return id;
}

Square identity_square(const GroupoidFunctor& f)
{
    return {GroupoidFunctor::identity(f.dom()), f, NatTransformation::identity(f)};
}

Square precompose(const Square& sq, const GroupoidFunctor& c)
{
    if (c.is_identity())
        return sq;
    return {functor_compose(sq.back, c), functor_compose(sq.fwd, c), whisker_right(sq.cell, c)};
}

std::vector<std::string> check_square(const Square& sq, const GroupoidFunctor& f, const GroupoidFunctor& u)
{
    std::vector<std::string> out;
    if (!same_groupoid(sq.back.dom(), sq.fwd.dom()))
        out.push_back("square legs have different domains");
    if (!same_groupoid(sq.back.cod(), f.dom()) || !same_groupoid(sq.fwd.cod(), u.dom())) {
        out.push_back("square legs do not match the cospan");
        return out;
    }
    if (!(sq.cell.source() == functor_compose(u, sq.fwd)) || !(sq.cell.target() == functor_compose(f, sq.back)))
        out.push_back("square cell has the wrong boundary");
    for (auto& p : sq.cell.check())
        out.push_back("square cell: " + p);
    return out;
}

ChoiceData::ChoiceData(WClass w, SquareChoice squares) : w_(std::move(w)), squares_(squares) {}

GroupoidFunctor ChoiceData::c1(const GroupoidFunctor& u, const GroupoidFunctor& v) const
{
    return w_.c1(u, v);
}

Square ChoiceData::c2(const GroupoidFunctor& f, const GroupoidFunctor& u) const
{
    if (!same_groupoid(f.cod(), u.cod()))
        throw std::invalid_argument("c2: not a cospan");
    if (u.is_identity())
        return identity_square(f);
    if (f.is_identity())
        return {u, GroupoidFunctor::identity(u.dom()), NatTransformation::identity(u)};
    auto pb = iso_comma(u, f);
    Square sq{pb.proj2, pb.proj1, pb.filler};
    if (squares_ == SquareChoice::compact && pb.apex->object_count() > pb.apex->component_count()) {
        std::vector<Obj> roots;
        for (const auto& c : pb.apex->components())
            roots.push_back(c.objects.front());
        auto sub = full_subgroupoid(pb.apex, roots);
        sq = precompose(sq, GroupoidFunctor::from_generators(sub, pb.apex, [&](const Morphism& m) {
            return Morphism{roots[m.src], roots[m.tgt], m.elem};
        }));
    }
    if (w_.kind() == WKind::essential_coverings) {
        auto wi = weakly_initial_witness(sq.back);
        sq = precompose(sq, wi.u);
    }
    return sq;
}

Lifting ChoiceData::c3(const GroupoidFunctor& w, const GroupoidFunctor& f, const GroupoidFunctor& g,
                       const NatTransformation& alpha) const
{
    return {GroupoidFunctor::identity(f.dom()), ff_lift(w, f, g, alpha)};
}

Square ChoiceData::c4(const GroupoidFunctor& w, const GroupoidFunctor& f, const GroupoidFunctor& v) const
{
    auto sq = c2(f, v);
    return precompose(sq, c1(w, sq.back));
}

Square ChoiceData::c5(const GroupoidFunctor& w, const GroupoidFunctor& v) const
{
    return c4(w, w, v);
}

Lifting ChoiceData::c6(const GroupoidFunctor& w, const GroupoidFunctor& s1, const GroupoidFunctor& s2,
                       const NatTransformation& alpha) const
{
    return c3(w, s1, s2, alpha);
}

Lifting ChoiceData::c7(const GroupoidFunctor&, const GroupoidFunctor& w, const GroupoidFunctor& fv,
                       const GroupoidFunctor& fv2, const NatTransformation& beta) const
{
    return c3(w, fv, fv2, beta);
}

Span::Span(GroupoidFunctor b, GroupoidFunctor f) : back(std::move(b)), fwd(std::move(f))
{
    if (!same_groupoid(back.dom(), fwd.dom()))
        throw std::invalid_argument("span legs have different domains");
}

Span identity_span(const GroupoidPtr& a)
{
    auto id = GroupoidFunctor::identity(a);
    return {id, id};
}

Span j_embed_arrow(const GroupoidFunctor& f)
{
    return {GroupoidFunctor::identity(f.dom()), f};
}

Square composition_square(const Span& s1, const Span& s2, const ChoiceData& choices)
{
    if (!same_groupoid(s1.target(), s2.source()))
        throw std::invalid_argument("span_compose: spans are not composable");
    return choices.c4(s1.back, s1.fwd, s2.back);
}

Span span_compose(const Span& s1, const Span& s2, const ChoiceData& choices)
{
    auto sq = composition_square(s1, s2, choices);
    return {functor_compose(s1.back, sq.back), functor_compose(s2.fwd, sq.fwd)};
}

}
