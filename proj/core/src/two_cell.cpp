#include <stdexcept>

#include "fracto/fractions/two_cell.hpp"
#include "fracto/groupoid/equivalence.hpp"
#include "fracto/groupoid/lifting.hpp"

namespace fracto {

namespace {

void expect_boundary(const NatTransformation& a, const GroupoidFunctor& s, const GroupoidFunctor& t,
                     const std::string& what, std::vector<std::string>& out)
{
    if (!(a.source() == s) || !(a.target() == t))
        out.push_back(what + " has the wrong boundary");
    for (auto& p : a.check())
        out.push_back(what + ": " + p);
}

}

std::vector<std::string> check_diagram(const TwoCellDiagram& d)
{
    std::vector<std::string> out;
    if (!same_groupoid(d.src.source(), d.tgt.source()) || !same_groupoid(d.src.target(), d.tgt.target()))
        out.push_back("spans do not share source and target");
    if (!same_groupoid(d.u1.dom(), d.u2.dom()))
        out.push_back("legs have different domains");
    if (!same_groupoid(d.u1.cod(), d.src.apex()) || !same_groupoid(d.u2.cod(), d.tgt.apex()))
        out.push_back("legs do not land in the span apexes");
    if (!out.empty())
        return out;
    expect_boundary(d.left, functor_compose(d.src.back, d.u1), functor_compose(d.tgt.back, d.u2), "left cell", out);
    expect_boundary(d.right, functor_compose(d.src.fwd, d.u1), functor_compose(d.tgt.fwd, d.u2), "right cell", out);
    return out;
}

TwoCellDiagram identity_2cell(const Span& s)
{
    auto id = GroupoidFunctor::identity(s.apex());
    return {s, s, id, id, NatTransformation::identity(s.back), NatTransformation::identity(s.fwd)};
}

TwoCellDiagram inverse_2cell(const TwoCellDiagram& d)
{
    return {d.tgt, d.src, d.u2, d.u1, nat_inverse(d.left), nat_inverse(d.right)};
}

TwoCellDiagram precompose_center(const TwoCellDiagram& d, const GroupoidFunctor& e)
{
    if (e.is_identity())
        return d;
    return {d.src,
            d.tgt,
            functor_compose(d.u1, e),
            functor_compose(d.u2, e),
            whisker_right(d.left, e),
            whisker_right(d.right, e)};
}

TwoCellDiagram conjugate_legs(const TwoCellDiagram& d, const NatTransformation& theta1,
                              const NatTransformation& theta2)
{
    if (!(theta1.source() == d.u1) || !(theta2.source() == d.u2))
        throw std::invalid_argument("conjugate_legs: cells do not start at the legs");
    auto left = nat_vcompose({nat_inverse(whisker_left(d.src.back, theta1)), d.left, whisker_left(d.tgt.back, theta2)});
    auto right = nat_vcompose({nat_inverse(whisker_left(d.src.fwd, theta1)), d.right, whisker_left(d.tgt.fwd, theta2)});
    return {d.src, d.tgt, theta1.target(), theta2.target(), left, right};
}

TwoCellDiagram j_embed_2cell(const NatTransformation& alpha)
{
    auto id = GroupoidFunctor::identity(alpha.dom());
    return {j_embed_arrow(alpha.source()), j_embed_arrow(alpha.target()), id, id, NatTransformation::identity(id),
            alpha};
}

TwoCellDiagram CanonicalTwoCell::diagram() const
{
    return {src, tgt, pullback->proj1, pullback->proj2, pullback->filler, delta};
}

std::shared_ptr<const IsoCommaResult> span_pullback(const Span& s1, const Span& s2)
{
    return std::make_shared<const IsoCommaResult>(iso_comma(s1.back, s2.back));
}

CanonicalTwoCell canonicalize(const TwoCellDiagram& d)
{
    auto problems = check_diagram(d);
    if (!problems.empty())
        throw std::invalid_argument("canonicalize: " + problems.front());
    auto pb = span_pullback(d.src, d.tgt);
    auto h = iso_comma_mediator(*pb, d.u1, d.u2, d.left);
    auto delta = coff_factor(h, functor_compose(d.src.fwd, pb->proj1), functor_compose(d.tgt.fwd, pb->proj2), d.right);
    return {d.src, d.tgt, pb, delta};
}

CanonicalTwoCell make_canonical(const Span& src, const Span& tgt, const NatTransformation& delta)
{
    auto pb = span_pullback(src, tgt);
    if (!(delta.source() == functor_compose(src.fwd, pb->proj1)) ||
        !(delta.target() == functor_compose(tgt.fwd, pb->proj2)))
        throw std::invalid_argument("make_canonical: cell has the wrong boundary");
    return {src, tgt, pb, delta};
}

bool same_canonical(const CanonicalTwoCell& a, const CanonicalTwoCell& b)
{
    return a.src == b.src && a.tgt == b.tgt && a.delta.components() == b.delta.components();
}

bool twocells_equal(const TwoCellDiagram& a, const TwoCellDiagram& b)
{
    if (!(a.src == b.src) || !(a.tgt == b.tgt))
        return false;
    return same_canonical(canonicalize(a), canonicalize(b));
}

std::optional<EquivalenceWitness> diagrams_equivalent_witness(const TwoCellDiagram& d1, const TwoCellDiagram& d2)
{
    if (!(d1.src == d2.src) || !(d1.tgt == d2.tgt))
        return std::nullopt;
    if (d1.u1 == d2.u1 && d1.u2 == d2.u2 && d1.left == d2.left && d1.right == d2.right) {
        auto id = GroupoidFunctor::identity(d1.center());
        return EquivalenceWitness{id, id, NatTransformation::identity(d1.u1), NatTransformation::identity(d1.u2)};
    }
    auto c1 = canonicalize(d1);
    auto c2 = canonicalize(d2);
    if (!same_canonical(c1, c2))
        return std::nullopt;
    const auto& pb = *c1.pullback;
    auto h1 = iso_comma_mediator(pb, d1.u1, d1.u2, d1.left);
    auto h2 = iso_comma_mediator(pb, d2.u1, d2.u2, d2.left);
    auto f = iso_comma(h1, h2);
    return EquivalenceWitness{f.proj1, f.proj2, whisker_left(pb.proj1, f.filler), whisker_left(pb.proj2, f.filler)};
}

std::vector<std::string> check_witness(const TwoCellDiagram& d1, const TwoCellDiagram& d2,
                                       const EquivalenceWitness& w)
{
    std::vector<std::string> out;
    if (!same_groupoid(w.s.dom(), w.t.dom()) || !same_groupoid(w.s.cod(), d1.center()) ||
        !same_groupoid(w.t.cod(), d2.center())) {
        out.push_back("witness legs have the wrong shape");
        return out;
    }
    if (!is_essential_equivalence(w.s) || !is_essential_equivalence(w.t))
        out.push_back("witness legs are not essential equivalences");
    std::vector<std::string> sub;
    expect_boundary(w.eps, functor_compose(d1.u1, w.s), functor_compose(d2.u1, w.t), "eps", sub);
    expect_boundary(w.eps2, functor_compose(d1.u2, w.s), functor_compose(d2.u2, w.t), "eps2", sub);
    if (!sub.empty()) {
        out.insert(out.end(), sub.begin(), sub.end());
        return out;
    }
    auto l1 = nat_vcompose(whisker_left(d2.tgt.back, w.eps2), whisker_right(d1.left, w.s));
    auto l2 = nat_vcompose(whisker_right(d2.left, w.t), whisker_left(d1.src.back, w.eps));
    if (!(l1 == l2))
        out.push_back("left cells disagree under the witness");
    auto r1 = nat_vcompose(whisker_left(d2.tgt.fwd, w.eps2), whisker_right(d1.right, w.s));
    auto r2 = nat_vcompose(whisker_right(d2.right, w.t), whisker_left(d1.src.fwd, w.eps));
    if (!(r1 == r2))
        out.push_back("right cells disagree under the witness");
    return out;
}

TwoCellDiagram represent_with_left_square(const TwoCellDiagram& d, const LeftSquare& square)
{
    auto c = canonicalize(d);
    auto k = iso_comma_mediator(*c.pullback, square.t1, square.t2, square.gamma);
    return {d.src, d.tgt, square.t1, square.t2, square.gamma, whisker_right(c.delta, k)};
}

NatTransformation j_recover_2cell(const TwoCellDiagram& d)
{
    if (!d.src.back.is_identity() || !d.tgt.back.is_identity())
        throw std::invalid_argument("j_recover_2cell: spans are not images of arrows");
    const auto& f = d.src.fwd;
    const auto& g = d.tgt.fwd;
    auto mu = nat_vcompose(nat_inverse(whisker_left(g, d.left)), d.right);
    return coff_factor(d.u1, f, g, mu);
}

}
