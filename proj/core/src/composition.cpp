#include <stdexcept>

#include "fracto/fractions/coherence.hpp"
#include "fracto/groupoid/lifting.hpp"

namespace fracto {

namespace {

using F = GroupoidFunctor;
using N = NatTransformation;

F comp(std::initializer_list<F> fs)
{
    auto it = fs.end();
    --it;
    F acc = *it;
    while (it != fs.begin()) {
        --it;
        acc = functor_compose(*it, acc);
    }
    return acc;
}

N wl(const F& h, const N& a) { return whisker_left(h, a); }
N wr(const N& a, const F& k) { return whisker_right(a, k); }

constexpr std::size_t skeleton_threshold = 24;

// inclusion of the full subgroupoid on component roots, or the identity for small or skeletal groupoids
F skeleton_inclusion(const GroupoidPtr& x)
{
    if (x->object_count() <= skeleton_threshold || x->object_count() == x->component_count())
        return F::identity(x);
    std::vector<Obj> roots;
    for (const auto& c : x->components())
        roots.push_back(c.objects.front());
    auto sub = full_subgroupoid(x, roots);
    return F::from_generators(sub, x, [&](const Morphism& m) { return Morphism{roots[m.src], roots[m.tgt], m.elem}; });
}

void require_valid(const TwoCellDiagram& d, const char* who)
{
    auto problems = check_diagram(d);
    if (!problems.empty())
        throw std::invalid_argument(std::string(who) + ": " + problems.front());
}

}

TwoCellDiagram vcompose_2cells(const TwoCellDiagram& d1, const TwoCellDiagram& d2, const ChoiceData& choices)
{
    if (!(d1.tgt == d2.src))
        throw std::invalid_argument("vcompose: diagrams are not composable");
    const auto& w2 = d1.tgt.back;
    auto sq = choices.c5(functor_compose(w2, d2.u1), functor_compose(w2, d1.u2));
    const auto& b = sq.back; // R -> center of d2
    const auto& a = sq.fwd;  // R -> center of d1
    auto lift = choices.c6(w2, functor_compose(d1.u2, a), functor_compose(d2.u1, b), sq.cell).cell;
    auto left = nat_vcompose({wr(d1.left, a), sq.cell, wr(d2.left, b)});
    auto right = nat_vcompose({wr(d1.right, a), wl(d1.tgt.fwd, lift), wr(d2.right, b)});
    return {d1.src, d2.tgt, functor_compose(d1.u1, a), functor_compose(d2.u2, b), left, right};
}

CanonicalTwoCell vcompose_canonical(const CanonicalTwoCell& c1, const CanonicalTwoCell& c2)
{
    if (!(c1.tgt == c2.src))
        throw std::invalid_argument("vcompose: 2-cells are not composable");
    const auto& b1 = c1.src.back;
    const auto& b2 = c1.tgt.back;
    const auto& b3 = c2.tgt.back;
    auto p13 = span_pullback(c1.src, c2.tgt);
    const auto& base = *b1.cod();
    const auto& target = *c1.src.fwd.cod();
    const auto& x2 = *b2.dom();
    std::vector<std::int64_t> first(base.component_count(), -1);
    for (Obj a = 0; a < x2.object_count(); ++a) {
        auto c = base.component_of(b2(a));
        if (first[c] < 0)
            first[c] = a;
    }
    const auto& apex = *p13->apex;
    std::vector<Morphism> comps(apex.object_count());
    for (Obj p = 0; p < apex.object_count(); ++p) {
        Obj a1 = p13->proj1(p);
        Obj a3 = p13->proj2(p);
        Morphism k = p13->filler.at(p);
        auto a2s = first[base.component_of(b1(a1))];
        if (a2s < 0)
            throw std::invalid_argument("vcompose: middle back leg is not essentially surjective");
        Obj a2 = static_cast<Obj>(a2s);
        Morphism k12{b1(a1), b2(a2), 0};
        Morphism k23 = base.compose(k, base.inverse(k12));
        Obj q12 = c1.pullback->object_of(a1, a2, k12.elem);
        Obj q23 = c2.pullback->object_of(a2, a3, k23.elem);
        comps[p] = target.compose(c2.delta.at(q23), c1.delta.at(q12));
    }
    auto delta = N::from_morphisms(functor_compose(c1.src.fwd, p13->proj1), functor_compose(c2.tgt.fwd, p13->proj2),
                                   comps);
    (void)b3;
    return {c1.src, c2.tgt, p13, delta};
}

TwoCellDiagram left_whisker_generic(const TwoCellDiagram& d, const Span& s, const ChoiceData& choices)
{
    require_valid(d, "left_whisker");
    const auto& v = s.back;
    const auto& g = s.fwd;
    const auto& w1 = d.src.back;
    const auto& f1 = d.src.fwd;
    const auto& w2 = d.tgt.back;
    const auto& f2 = d.tgt.fwd;
    const auto& s1 = d.u1;
    const auto& s2 = d.u2;

    auto g1 = choices.c4(w1, f1, v);
    auto g2 = choices.c4(w2, f2, v);

    auto side = [&](const F& w, const F& si, const Square& gi) {
        auto sq = choices.c5(functor_compose(w, si), functor_compose(w, gi.back));
        auto e = skeleton_inclusion(sq.apex());
        sq = precompose(sq, e);
        auto delta = choices.c6(w, functor_compose(gi.back, sq.fwd), functor_compose(si, sq.back), sq.cell).cell;
        return std::make_pair(sq, delta);
    };
    auto [sq1, delta1] = side(w1, s1, g1);
    auto [sq2, delta2] = side(w2, s2, g2);
    const auto& vt1 = sq1.back;
    const auto& vt2 = sq2.back;
    const auto& s1p = sq1.fwd;
    const auto& s2p = sq2.fwd;

    auto w1s1 = functor_compose(w1, s1);
    auto sq3 = choices.c5(functor_compose(w1s1, vt1), functor_compose(w1s1, vt2));
    sq3 = precompose(sq3, skeleton_inclusion(sq3.apex()));
    const auto& t1 = sq3.back;
    const auto& t2 = sq3.fwd;
    auto delta3 = choices.c6(w1s1, functor_compose(vt2, t2), functor_compose(vt1, t1), sq3.cell).cell;
    auto delta3i = nat_inverse(delta3);

    auto left = nat_vcompose({wr(wl(w1, delta1), t1), wl(w1s1, delta3i), wr(d.left, functor_compose(vt2, t2)),
                              wr(wl(w2, nat_inverse(delta2)), t2)});

    auto pi = nat_vcompose({wr(g1.cell, functor_compose(s1p, t1)), wr(wl(f1, delta1), t1),
                            wl(functor_compose(f1, s1), delta3i), wr(d.right, functor_compose(vt2, t2)),
                            wr(wl(f2, nat_inverse(delta2)), t2), wr(nat_inverse(g2.cell), functor_compose(s2p, t2))});
    auto lifted = choices.c7(functor_compose(w1, g1.back), v, comp({g1.fwd, s1p, t1}), comp({g2.fwd, s2p, t2}), pi).cell;

    Span src{functor_compose(w1, g1.back), functor_compose(g, g1.fwd)};
    Span tgt{functor_compose(w2, g2.back), functor_compose(g, g2.fwd)};
    return {src, tgt, functor_compose(s1p, t1), functor_compose(s2p, t2), left, wl(g, lifted)};
}

CanonicalTwoCell left_whisker_pullback(const CanonicalTwoCell& d, const Span& s, const ChoiceData& choices)
{
    const auto& v = s.back;
    auto g1 = choices.c4(d.src.back, d.src.fwd, v);
    auto g2 = choices.c4(d.tgt.back, d.tgt.fwd, v);
    Span src{functor_compose(d.src.back, g1.back), functor_compose(s.fwd, g1.fwd)};
    Span tgt{functor_compose(d.tgt.back, g2.back), functor_compose(s.fwd, g2.fwd)};
    auto pb = span_pullback(src, tgt);
    auto h = iso_comma_mediator(*d.pullback, functor_compose(g1.back, pb->proj1), functor_compose(g2.back, pb->proj2),
                                pb->filler);
    auto pasting = nat_vcompose({wr(g1.cell, pb->proj1), wr(d.delta, h), wr(nat_inverse(g2.cell), pb->proj2)});
    auto lifted = choices.c7(src.back, v, functor_compose(g1.fwd, pb->proj1), functor_compose(g2.fwd, pb->proj2),
                             pasting)
                      .cell;
    return {src, tgt, pb, wl(s.fwd, lifted)};
}

TwoCellDiagram right_whisker_generic(const Span& s, const TwoCellDiagram& d, const ChoiceData& choices)
{
    require_valid(d, "right_whisker");
    const auto& u = s.back;
    const auto& f = s.fwd;
    const auto& v1 = d.src.back;
    const auto& v2 = d.tgt.back;
    const auto& gg1 = d.src.fwd;
    const auto& gg2 = d.tgt.fwd;
    const auto& s1 = d.u1;
    const auto& s2 = d.u2;

    auto gam1 = choices.c4(u, f, v1);
    auto gam2 = choices.c4(u, f, v2);
    auto del1 = choices.c4(u, f, functor_compose(v1, s1));
    auto del2 = choices.c4(u, f, functor_compose(v2, s2));
    const auto& s1p = del1.back;
    const auto& s2p = del2.back;
    const auto& f1p = del1.fwd;
    const auto& f2p = del2.fwd;

    struct Link {
        F t, r;
        N b, c;
    };
    auto link = [&](const Square& gam, const Square& del, const F& vi, const F& si) {
        Square sq2{del.back, functor_compose(si, del.fwd), del.cell};
        auto con = connecting_2cell(gam, sq2, u, vi, f);
        auto e = skeleton_inclusion(con.diagram.center());
        return Link{functor_compose(con.diagram.u1, e), functor_compose(con.diagram.u2, e), wr(con.beta, e),
                    wr(con.diagram.right, e)};
    };
    auto l1 = link(gam1, del1, v1, s1);
    auto l2 = link(gam2, del2, v2, s2);

    Square mid{s2p, f2p, nat_vcompose(del2.cell, wr(d.left, f2p))};
    auto con = connecting_2cell(del1, mid, u, functor_compose(v1, s1), f);
    auto e = skeleton_inclusion(con.diagram.center());
    auto p = functor_compose(con.diagram.u1, e);
    auto q = functor_compose(con.diagram.u2, e);
    auto at = wr(con.beta, e);
    auto tau = wr(con.diagram.right, e);

    auto us1p = functor_compose(u, s1p);
    auto us2p = functor_compose(u, s2p);
    auto glue = [&](const F& usp, const F& r, const F& x) {
        auto pb = iso_comma(functor_compose(usp, r), functor_compose(usp, x));
        auto ei = skeleton_inclusion(pb.apex);
        auto a = functor_compose(pb.proj1, ei);
        auto b = functor_compose(pb.proj2, ei);
        auto rho = ff_lift(usp, functor_compose(r, a), functor_compose(x, b), wr(pb.filler, ei));
        return std::make_tuple(a, b, rho);
    };
    auto [a1, x1, rho1] = glue(us1p, l1.r, p);
    auto [a2, x2, rho2] = glue(us2p, l2.r, q);

    auto us1pp = functor_compose(us1p, p);
    auto pbh = iso_comma(functor_compose(us1pp, x1), functor_compose(us1pp, x2));
    auto eh = skeleton_inclusion(pbh.apex);
    auto h1 = functor_compose(pbh.proj1, eh);
    auto h2 = functor_compose(pbh.proj2, eh);
    auto y1 = functor_compose(x1, h1);
    auto y2 = functor_compose(x2, h2);
    auto rho3 = ff_lift(us1pp, y1, y2, wr(pbh.filler, eh));

    auto e1 = functor_compose(a1, h1);
    auto e2 = functor_compose(a2, h2);
    auto rho2i = nat_inverse(rho2);

    auto left = nat_vcompose({wr(wl(u, l1.b), e1), wr(wl(us1p, rho1), h1), wl(us1pp, rho3), wr(wl(u, at), y2),
                              wr(wl(us2p, rho2i), h2), wr(wl(u, nat_inverse(l2.b)), e2)});

    auto g1s1 = functor_compose(gg1, s1);
    auto g1s1f1 = functor_compose(g1s1, f1p);
    auto right = nat_vcompose({wr(wl(gg1, l1.c), e1), wr(wl(g1s1f1, rho1), h1), wl(functor_compose(g1s1f1, p), rho3),
                               wr(wl(g1s1, tau), y2), wr(d.right, comp({f2p, q, y2})),
                               wr(wl(comp({gg2, s2, f2p}), rho2i), h2), wr(wl(gg2, nat_inverse(l2.c)), e2)});

    Span src{functor_compose(u, gam1.back), functor_compose(gg1, gam1.fwd)};
    Span tgt{functor_compose(u, gam2.back), functor_compose(gg2, gam2.fwd)};
    return {src, tgt, functor_compose(l1.t, e1), functor_compose(l2.t, e2), left, right};
}

CanonicalTwoCell right_whisker_pullback(const Span& s, const CanonicalTwoCell& d, const ChoiceData& choices)
{
    const auto& u = s.back;
    const auto& f = s.fwd;
    auto g1 = choices.c4(u, f, d.src.back);
    auto g2 = choices.c4(u, f, d.tgt.back);
    Span src{functor_compose(u, g1.back), functor_compose(d.src.fwd, g1.fwd)};
    Span tgt{functor_compose(u, g2.back), functor_compose(d.tgt.fwd, g2.fwd)};
    auto pb = span_pullback(src, tgt);
    auto rho = ff_lift(u, functor_compose(g1.back, pb->proj1), functor_compose(g2.back, pb->proj2), pb->filler);
    auto pasting = nat_vcompose({wr(g1.cell, pb->proj1), wl(f, rho), wr(nat_inverse(g2.cell), pb->proj2)});
    auto h = iso_comma_mediator(*d.pullback, functor_compose(g1.fwd, pb->proj1), functor_compose(g2.fwd, pb->proj2),
                                pasting);
    return {src, tgt, pb, wr(d.delta, h)};
}

CanonicalTwoCell hcompose_2cells(const CanonicalTwoCell& d1, const CanonicalTwoCell& d2, const ChoiceData& choices)
{
    if (!same_groupoid(d1.src.target(), d2.src.source()))
        throw std::invalid_argument("hcompose: 2-cells are not composable");
    auto e1 = choices.c4(d1.src.back, d1.src.fwd, d2.src.back);
    auto e2 = choices.c4(d1.tgt.back, d1.tgt.fwd, d2.tgt.back);
    Span src{functor_compose(d1.src.back, e1.back), functor_compose(d2.src.fwd, e1.fwd)};
    Span tgt{functor_compose(d1.tgt.back, e2.back), functor_compose(d2.tgt.fwd, e2.fwd)};
    auto pb = span_pullback(src, tgt);
    auto wu = iso_comma_mediator(*d1.pullback, functor_compose(e1.back, pb->proj1), functor_compose(e2.back, pb->proj2),
                                 pb->filler);
    auto pasting = nat_vcompose({wr(e1.cell, pb->proj1), wr(d1.delta, wu), wr(nat_inverse(e2.cell), pb->proj2)});
    auto wv = iso_comma_mediator(*d2.pullback, functor_compose(e1.fwd, pb->proj1), functor_compose(e2.fwd, pb->proj2),
                                 pasting);
    return {src, tgt, pb, wr(d2.delta, wv)};
}

TwoCellDiagram hcompose_2cells(const TwoCellDiagram& d1, const TwoCellDiagram& d2, const ChoiceData& choices)
{
    auto first = left_whisker_generic(d1, d2.src, choices);
    auto second = right_whisker_generic(d1.tgt, d2, choices);
    return vcompose_2cells(first, second, choices);
}

}
