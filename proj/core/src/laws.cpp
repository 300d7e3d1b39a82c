#include <functional>
#include <map>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "fracto/groupoid/equivalence.hpp"
#include "fracto/groupoid/lifting.hpp"
#include "fracto/laws/laws.hpp"

namespace fracto {

const char* to_string(LawStatus s)
{
    switch (s) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    case LawStatus::xfail: return "xfail";
    case LawStatus::skip: return "skip";
    }
    return "?";
}

std::string format_report(const LawReport& r)
{
    std::ostringstream out;
    out << "law=" << r.law << " class=" << r.wclass << " seed=" << r.seed << " status=" << to_string(r.status);
    if (!r.detail.empty())
        out << " detail=" << std::quoted(r.detail);
    return out.str();
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t i)
{
    return seed * 100000 + i;
}

namespace {

using F = GroupoidFunctor;
using N = NatTransformation;

struct Outcome {
    LawStatus status = LawStatus::pass;
    std::string detail;
};

Outcome failed(std::string why) { return {LawStatus::fail, std::move(why)}; }

Outcome from_problems(const std::vector<std::string>& problems)
{
    if (problems.empty())
        return {};
    return failed(problems.front());
}

Outcome member(const WClass& w, const F& f, const std::string& what)
{
    switch (w.contains(f)) {
    case Membership::yes: return {};
    case Membership::unknown: return {LawStatus::skip, what + ": membership search exceeded its bounds"};
    case Membership::no: break;
    }
    return failed(what + " is not in the class");
}

struct Ctx {
    WClass w;
    ChoiceData ch;
    LawOptions opt;
};

using LawFn = std::function<Outcome(InstanceGenerator&, const Ctx&)>;

F comp(const F& g, const F& f) { return functor_compose(g, f); }

N random_cell(InstanceGenerator& gen, const F& f, const N& theta)
{
    return nat_vcompose(theta, gen.automorphism(f));
}

// ---- conditions on the class

Outcome law_wb1(InstanceGenerator& gen, const Ctx& c)
{
    return member(c.w, F::identity(gen.groupoid()), "identity");
}

Outcome law_wb2(InstanceGenerator& gen, const Ctx& c)
{
    auto w = gen.w_arrow(gen.groupoid(), c.w);
    auto v = gen.w_arrow(w.dom(), c.w);
    auto u = c.ch.c1(w, v);
    return member(c.w, comp(comp(w, v), u), "w v c1(w, v)");
}

Outcome law_wb3(InstanceGenerator& gen, const Ctx& c)
{
    auto w = gen.w_arrow(gen.groupoid(), c.w);
    auto f = gen.functor(gen.groupoid(), w.cod());
    auto sq = c.ch.c2(f, w);
    auto problems = check_square(sq, f, w);
    if (!problems.empty())
        return failed(problems.front());
    return member(c.w, sq.back, "back leg of the chosen square");
}

struct LiftSetup {
    F w, f, g;
    N alpha;
};

LiftSetup lift_setup(InstanceGenerator& gen, const Ctx& c)
{
    auto w = gen.w_arrow(gen.groupoid(), c.w);
    auto f = gen.functor(gen.groupoid(), w.dom());
    auto theta = gen.isomorphic(f);
    auto wf = comp(w, f);
    return {w, f, theta.target(), random_cell(gen, wf, whisker_left(w, theta))};
}

Outcome law_wb4(InstanceGenerator& gen, const Ctx& c)
{
    auto s = lift_setup(gen, c);
    auto lift = c.ch.c3(s.w, s.f, s.g, s.alpha);
    auto m = member(c.w, lift.companion, "lifting companion");
    if (m.status != LawStatus::pass)
        return m;
    if (!(whisker_left(s.w, lift.cell) == whisker_right(s.alpha, lift.companion)))
        return failed("w beta differs from alpha u");
    return {};
}

Outcome law_wb4_compat(InstanceGenerator& gen, const Ctx& c)
{
    auto s = lift_setup(gen, c);
    auto e = gen.w_arrow(s.f.dom(), c.w);
    auto b1 = ff_lift(s.w, s.f, s.g, s.alpha);
    auto b2 = ff_lift(s.w, comp(s.f, e), comp(s.g, e), whisker_right(s.alpha, e));
    auto pb = iso_comma(F::identity(s.f.dom()), e);
    auto k = weakly_initial_witness(pb.proj1).u;
    auto sl = comp(pb.proj1, k);
    auto tl = comp(pb.proj2, k);
    auto eps = whisker_right(pb.filler, k);
    for (auto [arrow, what] : {std::pair{sl, "u1 s"}, std::pair{comp(e, tl), "u2 t"}}) {
        auto m = member(c.w, arrow, what);
        if (m.status != LawStatus::pass)
            return m;
    }
    auto lhs = nat_vcompose(whisker_left(s.g, eps), whisker_right(b1, sl));
    auto rhs = nat_vcompose(whisker_right(b2, tl), whisker_left(s.f, eps));
    if (!(lhs == rhs))
        return failed("the two liftings are not compatible through eps");
    return {};
}

Outcome law_wb5(InstanceGenerator& gen, const Ctx& c)
{
    auto w = gen.w_arrow(gen.groupoid(), c.w);
    return member(c.w, gen.isomorphic(w).target(), "arrow isomorphic to a class arrow");
}

Outcome law_bf2(InstanceGenerator& gen, const Ctx& c)
{
    auto w = gen.w_arrow(gen.groupoid(), c.w);
    auto v = gen.w_arrow(w.dom(), c.w);
    return member(c.w, comp(w, v), "composite of class arrows");
}

GroupoidPtr pair2()
{
    static const GroupoidPtr g = make_groupoid({{{"a", "b"}, Group::trivial()}});
    return g;
}

Outcome law_wb2_repeated(InstanceGenerator&, const Ctx& c)
{
    auto inst = repeated_image_instance();
    auto u = c.ch.c1(inst.first, inst.second);
    auto m = member(c.w, comp(comp(inst.first, inst.second), u), "corrected composite");
    if (m.status != LawStatus::pass)
        return m;
    if (c.w.kind() == WKind::essential_coverings && u.is_identity())
        return failed("the correction should be a proper deduplication");
    return {LawStatus::pass, u.is_identity() ? "" : "dedup section used"};
}

Outcome law_bf2_strict(InstanceGenerator&, const Ctx& c)
{
    auto inst = repeated_image_instance();
    auto uv = comp(inst.first, inst.second);
    if (c.w.kind() != WKind::essential_coverings)
        return member(c.w, uv, "composite");
    if (is_literal_covering(uv) == Membership::no)
        return {LawStatus::xfail, "composite of two coverings is not a literal covering"};
    return failed("expected failure did not occur");
}

Outcome law_bf2_closure(InstanceGenerator&, const Ctx& c)
{
    auto inst = oversized_fibre_instance();
    auto uv = comp(inst.first, inst.second);
    if (c.w.kind() != WKind::essential_coverings)
        return member(c.w, uv, "composite");
    auto in_w = c.w.contains(uv);
    auto in_hat = hat_closure_member(uv, c.w, 2);
    if (in_w == Membership::no && in_hat == Membership::yes)
        return {LawStatus::xfail, "composite of two coverings lies in the depth-2 closure but not in the class"};
    return failed(std::string("expected failure did not occur (class: ") + to_string(in_w) +
                  ", closure: " + to_string(in_hat) + ")");
}

// ---- lifting lemmas

Outcome law_lift_composite(InstanceGenerator& gen, const Ctx& c)
{
    auto s = lift_setup(gen, c);
    auto theta2 = gen.isomorphic(s.g);
    auto alpha2 = random_cell(gen, comp(s.w, s.g), whisker_left(s.w, theta2));
    auto b1 = c.ch.c3(s.w, s.f, s.g, s.alpha).cell;
    auto b2 = c.ch.c3(s.w, s.g, theta2.target(), alpha2).cell;
    if (!(whisker_left(s.w, nat_vcompose(b2, b1)) == nat_vcompose(alpha2, s.alpha)))
        return failed("w (beta2 beta1) differs from alpha2 alpha1");
    return {};
}

Outcome law_lift_inverse(InstanceGenerator& gen, const Ctx& c)
{
    auto s = lift_setup(gen, c);
    auto b = c.ch.c3(s.w, s.f, s.g, s.alpha).cell;
    auto bi = c.ch.c3(s.w, s.g, s.f, nat_inverse(s.alpha)).cell;
    if (!(bi == nat_inverse(b)))
        return failed("lifting of the inverse is not the inverse of the lifting");
    if (!nat_vcompose(bi, b).is_identity() || !nat_vcompose(b, bi).is_identity())
        return failed("lifting is not invertible");
    return {};
}

Outcome law_w_cancellation(InstanceGenerator& gen, const Ctx& c)
{
    auto s = lift_setup(gen, c);
    auto theta = gen.isomorphic(s.f);
    auto b1 = random_cell(gen, s.f, theta);
    auto b2 = random_cell(gen, s.f, theta);
    if (!(whisker_left(s.w, b1) == whisker_left(s.w, b2)))
        return {LawStatus::pass, "hypothesis not met"};
    if (!(b1 == b2))
        return failed("w beta1 = w beta2 but beta1 v != beta2 v for v = id");
    return {};
}

Outcome law_w_factorization(InstanceGenerator& gen, const Ctx& c)
{
    auto a = gen.w_arrow(gen.groupoid(), c.w);
    auto b = gen.coin() ? F::identity(a.dom()) : gen.w_arrow(a.dom(), c.w);
    auto ab = comp(a, b);
    if (c.w.contains(ab) != Membership::yes)
        return {LawStatus::skip, "a b is not in the class"};
    auto sq = c.ch.c2(a, ab);
    auto lifted = ff_lift(a, comp(b, sq.fwd), sq.back, sq.cell);
    auto cc = sq.fwd;
    auto m = member(c.w, comp(b, cc), "b c");
    if (m.status != LawStatus::pass)
        return m;
    if (!(lifted.source() == comp(b, cc)))
        return failed("lifted cell has the wrong source");
    return {};
}

// ---- connecting 2-cells

struct Cospan {
    F u, f, w;
};

Cospan cospan(InstanceGenerator& gen, const Ctx& c)
{
    auto u = gen.w_arrow(gen.groupoid(), c.w);
    auto f = gen.functor(u.dom(), gen.groupoid());
    auto w = gen.w_arrow(f.cod(), c.w);
    return {u, f, w};
}

CanonicalTwoCell connector(const Square& a, const Square& b, const Cospan& cs)
{
    return canonicalize(connecting_2cell(a, b, cs.u, cs.w, cs.f).diagram);
}

Outcome law_connector_identity(InstanceGenerator& gen, const Ctx& c)
{
    auto cs = cospan(gen, c);
    auto sq = gen.perturb_square(c.ch.c2(cs.f, cs.w), cs.f, cs.w);
    auto con = connector(sq, sq, cs);
    if (!same_canonical(con, canonicalize(identity_2cell(con.src))))
        return failed("connector of a square with itself is not the identity");
    return {};
}

Outcome law_connector_composition(InstanceGenerator& gen, const Ctx& c)
{
    auto cs = cospan(gen, c);
    auto s1 = c.ch.c2(cs.f, cs.w);
    auto s2 = gen.perturb_square(s1, cs.f, cs.w);
    auto s3 = gen.perturb_square(s1, cs.f, cs.w);
    auto lhs = vcompose_canonical(connector(s1, s2, cs), connector(s2, s3, cs));
    if (!same_canonical(lhs, connector(s1, s3, cs)))
        return failed("connectors do not compose");
    return {};
}

Outcome law_connector_uniqueness(InstanceGenerator& gen, const Ctx& c)
{
    auto cs = cospan(gen, c);
    auto s1 = gen.perturb_square(c.ch.c2(cs.f, cs.w), cs.f, cs.w);
    auto s2 = gen.perturb_square(c.ch.c2(cs.f, cs.w), cs.f, cs.w);
    auto con = connecting_2cell(s1, s2, cs.u, cs.w, cs.f).diagram;
    // built without u: the iso-comma of the two back legs
    auto pb = iso_comma(s1.back, s2.back);
    auto pasted = nat_vcompose({whisker_right(s1.cell, pb.proj1), whisker_left(cs.f, pb.filler),
                                nat_inverse(whisker_right(s2.cell, pb.proj2))});
    auto gamma = ff_lift(cs.w, comp(s1.fwd, pb.proj1), comp(s2.fwd, pb.proj2), pasted);
    TwoCellDiagram other{con.src, con.tgt, pb.proj1, pb.proj2, whisker_left(cs.u, pb.filler), gamma};
    auto problems = check_diagram(other);
    if (!problems.empty())
        return failed(problems.front());
    if (!twocells_equal(con, other))
        return failed("two valid connectors differ");
    return {};
}

Outcome law_double_layer(InstanceGenerator& gen, const Ctx& c)
{
    auto u = gen.w_arrow(gen.groupoid(), c.w);
    auto f = gen.functor(u.dom(), gen.groupoid());
    auto w1 = gen.w_arrow(f.cod(), c.w);
    auto w2 = gen.w_arrow(w1.dom(), c.w);
    Cospan cs{u, f, comp(w1, w2)};
    auto q1 = c.ch.c2(f, w1);
    auto q2 = c.ch.c2(q1.fwd, w2);
    Square pasted{comp(q1.back, q2.back), q2.fwd,
                  nat_vcompose(whisker_right(q1.cell, q2.back), whisker_left(w1, q2.cell))};
    auto problems = check_square(pasted, f, cs.w);
    if (!problems.empty())
        return failed("pasted square: " + problems.front());
    auto direct = c.ch.c2(f, cs.w);
    auto other = gen.perturb_square(direct, f, cs.w);
    auto lhs = vcompose_canonical(connector(direct, pasted, cs), connector(pasted, other, cs));
    if (!same_canonical(lhs, connector(direct, other, cs)))
        return failed("connectors through a two-layer square do not compose");
    return {};
}

struct Quad {
    Span s1, s2, s3, s4;
};

Quad quadruple(InstanceGenerator& gen, const Ctx& c)
{
    GroupoidPtr g[5];
    for (auto& x : g)
        x = gen.groupoid();
    return {gen.span(g[0], g[1], c.w), gen.span(g[1], g[2], c.w), gen.span(g[2], g[3], c.w),
            gen.span(g[3], g[4], c.w)};
}

Outcome law_associator_middle(InstanceGenerator& gen, const Ctx& c)
{
    auto q = quadruple(gen, c);
    auto a = associator(q.s1, q.s2, q.s3, c.ch);
    auto a1 = c.ch.c4(q.s1.back, q.s1.fwd, q.s2.back);
    auto a2 = c.ch.c4(q.s2.back, q.s2.fwd, q.s3.back);
    auto middle = gen.perturb_square(associator_middle_square(q.s1, q.s2, q.s3, c.ch), a1.fwd, a2.back);
    if (!same_canonical(a, associator(q.s1, q.s2, q.s3, c.ch, middle)))
        return failed("associator depends on the intermediate square");
    return {};
}

Outcome law_pentagon(InstanceGenerator& gen, const Ctx& c)
{
    auto q = quadruple(gen, c);
    for (const auto* s : {&q.s1, &q.s2, &q.s3, &q.s4})
        if (s->apex()->object_count() > 6)
            return {LawStatus::skip, "span apex above 6 objects"};
    const auto& ch = c.ch;
    auto s21 = span_compose(q.s1, q.s2, ch);
    auto s32 = span_compose(q.s2, q.s3, ch);
    auto s43 = span_compose(q.s3, q.s4, ch);
    auto top = vcompose_canonical(associator(s21, q.s3, q.s4, ch), associator(q.s1, q.s2, s43, ch));
    auto bottom = vcompose_canonical(
        vcompose_canonical(left_whisker_pullback(associator(q.s1, q.s2, q.s3, ch), q.s4, ch),
                           associator(q.s1, s32, q.s4, ch)),
        right_whisker_pullback(q.s1, associator(q.s2, q.s3, q.s4, ch), ch));
    if (!same_canonical(top, bottom))
        return failed("the two pentagon composites differ");
    return {};
}

// ---- 2-cell algebra

struct Cell {
    GroupoidPtr a, b;
    Span s;
    TwoCellDiagram d;
};

Cell random_cell_diagram(InstanceGenerator& gen, const Ctx& c)
{
    auto a = gen.groupoid();
    auto b = gen.groupoid();
    auto s = gen.span(a, b, c.w);
    return {a, b, s, gen.diagram_from(s, c.w)};
}

Outcome equal_or_fail(const TwoCellDiagram& x, const TwoCellDiagram& y, const std::string& what)
{
    for (const auto* d : {&x, &y}) {
        auto problems = check_diagram(*d);
        if (!problems.empty())
            return failed(what + ": " + problems.front());
    }
    if (!twocells_equal(x, y))
        return failed(what);
    return {};
}

Outcome law_wd_vertical(InstanceGenerator& gen, const Ctx& c)
{
    auto x = random_cell_diagram(gen, c);
    auto e = gen.diagram_from(x.d.tgt, c.w);
    return equal_or_fail(vcompose_2cells(x.d, e, c.ch), vcompose_2cells(gen.perturb(x.d), gen.perturb(e), c.ch),
                         "vertical composite depends on the representatives");
}

Outcome law_wd_left(InstanceGenerator& gen, const Ctx& c)
{
    auto x = random_cell_diagram(gen, c);
    auto t = gen.span(x.b, gen.groupoid(), c.w);
    return equal_or_fail(left_whisker_generic(x.d, t, c.ch), left_whisker_generic(gen.perturb(x.d), t, c.ch),
                         "left whiskering depends on the representative");
}

Outcome law_wd_right(InstanceGenerator& gen, const Ctx& c)
{
    auto x = random_cell_diagram(gen, c);
    auto u = gen.span(gen.groupoid(), x.a, c.w);
    return equal_or_fail(right_whisker_generic(u, x.d, c.ch), right_whisker_generic(u, gen.perturb(x.d), c.ch),
                         "right whiskering depends on the representative");
}

Outcome law_left_oracle(InstanceGenerator& gen, const Ctx& c)
{
    auto x = random_cell_diagram(gen, c);
    auto t = gen.span(x.b, gen.groupoid(), c.w);
    return equal_or_fail(left_whisker_generic(x.d, t, c.ch),
                         left_whisker_pullback(canonicalize(x.d), t, c.ch).diagram(),
                         "generic and pullback left whiskering differ");
}

Outcome law_right_oracle(InstanceGenerator& gen, const Ctx& c)
{
    auto x = random_cell_diagram(gen, c);
    auto u = gen.span(gen.groupoid(), x.a, c.w);
    return equal_or_fail(right_whisker_generic(u, x.d, c.ch),
                         right_whisker_pullback(u, canonicalize(x.d), c.ch).diagram(),
                         "generic and pullback right whiskering differ");
}

Outcome law_interchange(InstanceGenerator& gen, const Ctx& c)
{
    auto x = random_cell_diagram(gen, c);
    auto t = gen.span(x.b, gen.groupoid(), c.w);
    auto e = gen.diagram_from(t, c.w);
    auto h = hcompose_2cells(canonicalize(x.d), canonicalize(e), c.ch).diagram();
    auto first = vcompose_2cells(left_whisker_generic(x.d, e.src, c.ch), right_whisker_generic(x.d.tgt, e, c.ch), c.ch);
    auto second = vcompose_2cells(right_whisker_generic(x.d.src, e, c.ch), left_whisker_generic(x.d, e.tgt, c.ch), c.ch);
    auto r = equal_or_fail(h, first, "horizontal composite differs from whisker-left-then-right");
    if (r.status != LawStatus::pass)
        return r;
    return equal_or_fail(h, second, "horizontal composite differs from whisker-right-then-left");
}

Outcome law_vertical_associative(InstanceGenerator& gen, const Ctx& c)
{
    auto x = random_cell_diagram(gen, c);
    auto e = gen.diagram_from(x.d.tgt, c.w);
    auto g = gen.diagram_from(e.tgt, c.w);
    auto left = vcompose_2cells(vcompose_2cells(x.d, e, c.ch), g, c.ch);
    auto right = vcompose_2cells(x.d, vcompose_2cells(e, g, c.ch), c.ch);
    auto r = equal_or_fail(left, right, "vertical composition is not associative");
    if (r.status != LawStatus::pass)
        return r;
    auto cx = canonicalize(x.d), ce = canonicalize(e), cg = canonicalize(g);
    if (!same_canonical(vcompose_canonical(vcompose_canonical(cx, ce), cg),
                        vcompose_canonical(cx, vcompose_canonical(ce, cg))))
        return failed("canonical vertical composition is not associative");
    if (!same_canonical(canonicalize(left), vcompose_canonical(vcompose_canonical(cx, ce), cg)))
        return failed("generic and canonical vertical composition differ");
    return {};
}

Outcome law_vertical_unital(InstanceGenerator& gen, const Ctx& c)
{
    auto x = random_cell_diagram(gen, c);
    auto r = equal_or_fail(vcompose_2cells(identity_2cell(x.d.src), x.d, c.ch), x.d, "left unit law fails");
    if (r.status != LawStatus::pass)
        return r;
    return equal_or_fail(vcompose_2cells(x.d, identity_2cell(x.d.tgt), c.ch), x.d, "right unit law fails");
}

Outcome law_vertical_inverse(InstanceGenerator& gen, const Ctx& c)
{
    auto x = random_cell_diagram(gen, c);
    auto inv = inverse_2cell(x.d);
    auto r = equal_or_fail(vcompose_2cells(x.d, inv, c.ch), identity_2cell(x.d.src), "d then d^-1 is not the identity");
    if (r.status != LawStatus::pass)
        return r;
    return equal_or_fail(vcompose_2cells(inv, x.d, c.ch), identity_2cell(x.d.tgt), "d^-1 then d is not the identity");
}

Outcome law_canonical_form(InstanceGenerator& gen, const Ctx& c)
{
    auto x = random_cell_diagram(gen, c);
    auto can = canonicalize(x.d);
    if (!same_canonical(canonicalize(can.diagram()), can))
        return failed("canonicalize is not idempotent");
    auto p = gen.perturb(x.d);
    if (!same_canonical(canonicalize(p), can))
        return failed("canonical form changes under an equivalent representative");
    auto w = diagrams_equivalent_witness(x.d, p);
    if (!w)
        return failed("no witness for equivalent diagrams");
    auto problems = check_witness(x.d, p, *w);
    if (!problems.empty())
        return failed("witness: " + problems.front());
    // re-represent with a different left square: the chosen pullback precomposed with an essential equivalence
    auto e = gen.essential_equivalence_into(can.pullback->apex, can.pullback->apex->component_count() + 1);
    LeftSquare sq{comp(can.pullback->proj1, e), comp(can.pullback->proj2, e), whisker_right(can.pullback->filler, e)};
    auto rep = represent_with_left_square(x.d, sq);
    if (!(rep.left == sq.gamma))
        return failed("re-represented diagram does not carry the requested left cell");
    if (!same_canonical(canonicalize(rep), can))
        return failed("re-representation changes the 2-cell");
    return {};
}

// ---- weak initiality and the comparison with coverings

Outcome law_weakly_initial(InstanceGenerator& gen, const Ctx&)
{
    auto v = gen.essential_equivalence_into(gen.groupoid(), 4);
    auto wi = weakly_initial_witness(v);
    if (!(wi.covering == comp(v, wi.u)))
        return failed("witness composite is not v u");
    if (!wi.psi.is_identity())
        return failed("witness 2-cell is not the identity");
    if (is_literal_covering(wi.covering) != Membership::yes)
        return failed("v u is not a literal covering");
    return {};
}

Outcome law_coverings_span(InstanceGenerator& gen, const Ctx&)
{
    auto a = gen.groupoid();
    auto v = gen.essential_equivalence_into(a, 4);
    Span ambient{v, gen.functor(v.dom(), gen.groupoid())};
    auto wi = weakly_initial_witness(v);
    Span cov{wi.covering, comp(ambient.fwd, wi.u)};
    if (is_essential_covering(cov.back) != Membership::yes)
        return failed("replacement back leg is not a covering");
    TwoCellDiagram d{ambient, cov, wi.u, F::identity(wi.u.dom()), N::identity(cov.back), N::identity(cov.fwd)};
    auto problems = check_diagram(d);
    if (!problems.empty())
        return failed(problems.front());
    auto cd = canonicalize(d);
    auto ci = canonicalize(inverse_2cell(d));
    if (!same_canonical(vcompose_canonical(cd, ci), canonicalize(identity_2cell(ambient))) ||
        !same_canonical(vcompose_canonical(ci, cd), canonicalize(identity_2cell(cov))))
        return failed("comparison 2-cell is not invertible");
    return {};
}

Outcome law_two_full(InstanceGenerator& gen, const Ctx&)
{
    auto cov = WClass::essential_coverings();
    auto a = gen.groupoid();
    auto s = gen.span(a, gen.groupoid(), cov);
    auto d = gen.diagram_from(s, cov);
    auto pb = iso_comma(d.src.back, d.tgt.back);
    auto k = weakly_initial_witness(pb.proj1).u;
    LeftSquare sq{comp(pb.proj1, k), comp(pb.proj2, k), whisker_right(pb.filler, k)};
    if (is_essential_covering(comp(d.src.back, sq.t1)) != Membership::yes)
        return failed("left square leg is not a covering");
    auto rep = represent_with_left_square(d, sq);
    return equal_or_fail(d, rep, "re-representation through a covering square changes the 2-cell");
}

Outcome law_two_faithful(InstanceGenerator& gen, const Ctx&)
{
    auto f = gen.functor(gen.groupoid(), gen.groupoid());
    auto theta = gen.isomorphic(f);
    auto a = random_cell(gen, f, theta);
    auto b = random_cell(gen, f, theta);
    bool same = same_canonical(canonicalize(j_embed_2cell(a)), canonicalize(j_embed_2cell(b)));
    if (same != (a == b))
        return failed("J does not separate 2-cells exactly");
    if (!(j_recover_2cell(j_embed_2cell(a)) == a))
        return failed("J round trip lost the 2-cell");
    return {};
}

Outcome law_hat_closure(InstanceGenerator& gen, const Ctx&)
{
    auto u = gen.covering_into(gen.groupoid());
    auto v = gen.covering_into(u.dom());
    auto m = hat_closure_member(comp(u, v), WClass::essential_coverings(), 2);
    if (m == Membership::unknown)
        return {LawStatus::skip, "closure search exceeded its bounds"};
    if (m == Membership::no)
        return failed("composite of two coverings is not in the depth-2 closure");
    return {};
}

Outcome law_internal_equivalence(InstanceGenerator& gen, const Ctx& c)
{
    auto w = gen.w_arrow(gen.groupoid(), c.w);
    auto e = internal_equivalence_witness(w, c.ch);
    return from_problems(check_internal_equivalence(e, c.ch));
}

struct LawDef {
    const char* name;
    const char* suite;
    bool fixed; // a single constructed instance, run once per suite
    LawFn fn;
};

const std::vector<LawDef>& registry()
{
    static const std::vector<LawDef> laws = {
        {"WB1", "wb", false, law_wb1},
        {"WB2", "wb", false, law_wb2},
        {"WB3", "wb", false, law_wb3},
        {"WB4", "wb", false, law_wb4},
        {"WB4-compat", "wb", false, law_wb4_compat},
        {"WB5", "wb", false, law_wb5},
        {"BF2", "wb", false, law_bf2},
        {"WB2-repeated", "wb", true, law_wb2_repeated},
        {"BF2-strict", "wb", true, law_bf2_strict},
        {"BF2-closure", "wb", true, law_bf2_closure},
        {"lift-composite", "lifting", false, law_lift_composite},
        {"lift-inverse", "lifting", false, law_lift_inverse},
        {"w-cancellation", "lifting", false, law_w_cancellation},
        {"w-factorization", "lifting", false, law_w_factorization},
        {"connector-identity", "connectors", false, law_connector_identity},
        {"connector-composition", "connectors", false, law_connector_composition},
        {"connector-uniqueness", "connectors", false, law_connector_uniqueness},
        {"associator-middle", "connectors", false, law_associator_middle},
        {"internal-equivalence", "connectors", false, law_internal_equivalence},
        {"pentagon", "pentagon", false, law_pentagon},
        {"double-layer", "pentagon", false, law_double_layer},
        {"wd-vertical", "well-definedness", false, law_wd_vertical},
        {"wd-left-whisker", "well-definedness", false, law_wd_left},
        {"wd-right-whisker", "well-definedness", false, law_wd_right},
        {"left-whisker-oracle", "well-definedness", false, law_left_oracle},
        {"right-whisker-oracle", "well-definedness", false, law_right_oracle},
        {"interchange", "well-definedness", false, law_interchange},
        {"vertical-associative", "well-definedness", false, law_vertical_associative},
        {"vertical-unital", "well-definedness", false, law_vertical_unital},
        {"vertical-inverse", "well-definedness", false, law_vertical_inverse},
        {"canonical-form", "well-definedness", false, law_canonical_form},
        {"weakly-initial", "weakly-initial", false, law_weakly_initial},
        {"coverings-span", "weakly-initial", false, law_coverings_span},
        {"two-full", "weakly-initial", false, law_two_full},
        {"two-faithful", "weakly-initial", false, law_two_faithful},
        {"hat-closure", "weakly-initial", false, law_hat_closure},
    };
    return laws;
}

// bounded-BF2 random probes only make sense for composition-closed classes
bool applicable(const LawDef& law, const WClass& w)
{
    return !(std::string(law.name) == "BF2" && w.kind() == WKind::essential_coverings);
}

LawReport run_one(const LawDef& law, const WClass& w, std::uint64_t seed, const LawOptions& opt)
{
    LawReport r{law.name, w.name(), seed, LawStatus::pass, {}};
    try {
        InstanceGenerator gen(seed, opt.bounds);
        Ctx ctx{w, ChoiceData(w, opt.squares), opt};
        auto o = law.fn(gen, ctx);
        r.status = o.status;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.status = LawStatus::fail;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

std::vector<LawReport> run_suite(const std::string& suite, const WClass& w, std::uint64_t seed, std::size_t n,
                                 const LawOptions& opt)
{
    std::vector<LawReport> out;
    for (const auto& law : registry()) {
        if (law.suite != suite || !applicable(law, w))
            continue;
        if (law.fixed) {
            out.push_back(run_one(law, w, 0, opt));
            continue;
        }
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(run_one(law, w, instance_seed(seed, i), opt));
    }
    return out;
}

}

std::vector<LawReport> check_wb(const WClass& w, std::uint64_t seed, std::size_t n, const LawOptions& opt)
{
    return run_suite("wb", w, seed, n, opt);
}

std::vector<LawReport> check_lifting_lemmas(const WClass& w, std::uint64_t seed, std::size_t n, const LawOptions& opt)
{
    return run_suite("lifting", w, seed, n, opt);
}

std::vector<LawReport> check_connectors(const WClass& w, std::uint64_t seed, std::size_t n, const LawOptions& opt)
{
    return run_suite("connectors", w, seed, n, opt);
}

std::vector<LawReport> check_pentagon(const WClass& w, std::uint64_t seed, std::size_t n, const LawOptions& opt)
{
    return run_suite("pentagon", w, seed, n, opt);
}

std::vector<LawReport> check_well_definedness(const WClass& w, std::uint64_t seed, std::size_t n,
                                              const LawOptions& opt)
{
    return run_suite("well-definedness", w, seed, n, opt);
}

std::vector<LawReport> check_weakly_initial(std::uint64_t seed, std::size_t n, const LawOptions& opt)
{
    return run_suite("weakly-initial", WClass::essential_coverings(), seed, n, opt);
}

std::vector<LawReport> check_all(const WClass& w, std::uint64_t seed, std::size_t n, const LawOptions& opt)
{
    std::vector<LawReport> out;
    for (auto part : {check_wb(w, seed, n, opt), check_lifting_lemmas(w, seed, n, opt),
                      check_connectors(w, seed, n, opt), check_pentagon(w, seed, n, opt),
                      check_well_definedness(w, seed, n, opt), check_weakly_initial(seed, n, opt)})
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

Membership hat_closure_member(const GroupoidFunctor& f, const WClass& w, std::size_t depth)
{
    switch (w.kind()) {
    case WKind::all_essential_equivalences:
        if (depth == 0)
            return f.is_identity() ? Membership::yes : Membership::no;
        return is_essential_equivalence(f) ? Membership::yes : Membership::no;
    case WKind::essential_coverings:
        return covering_closure_member(f, depth);
    case WKind::user: {
        if (depth == 0)
            return f.is_identity() ? Membership::yes : Membership::unknown;
        auto m = w.contains(f);
        return m == Membership::yes ? m : Membership::unknown;
    }
    }
    return Membership::unknown;
}

std::vector<std::string> law_names()
{
    std::vector<std::string> out;
    for (const auto& law : registry())
        out.push_back(law.name);
    return out;
}

LawReport replay(const std::string& law, const WClass& w, std::uint64_t seed, const LawOptions& opt)
{
    for (const auto& def : registry())
        if (law == def.name)
            return run_one(def, w, seed, opt);
    throw std::invalid_argument("unknown law: " + law);
}

CoveringCounterexample repeated_image_instance()
{
    auto first = essential_covering(pair2(), {{0}, {0, 1}});
    auto second = essential_covering(first.dom(), {{0}, {1}});
    return {first, second};
}

CoveringCounterexample oversized_fibre_instance()
{
    auto first = essential_covering(pair2(), {{0}, {1}, {0, 1}});
    auto second = essential_covering(first.dom(), {{0, 1, 2, 3}, {0}});
    return {first, second};
}

}
