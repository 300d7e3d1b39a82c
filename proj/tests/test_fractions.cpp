#include "doctest.h"

#include "fracto/fractions/coherence.hpp"
#include "fracto/fractions/composition.hpp"
#include "fracto/groupoid/equivalence.hpp"
#include "fracto/laws/generator.hpp"

#include "support.hpp"

using namespace fracto;
using support::D;
using support::F;
using support::G;
using support::S;
using support::T;

namespace {

const ChoiceData& ess()
{
    static const ChoiceData c(WClass::all_essential_equivalences(), SquareChoice::literal);
    return c;
}

const ChoiceData& cov()
{
    static const ChoiceData c(WClass::essential_coverings(), SquareChoice::literal);
    return c;
}

bool same_diagram(const TwoCellDiagram& a, const TwoCellDiagram& b)
{
    return a.src == b.src && a.tgt == b.tgt && a.u1 == b.u1 && a.u2 == b.u2 && a.left == b.left && a.right == b.right;
}

}

TEST_CASE("composing with identity spans is strict")
{
    for (const auto* ch : {&ess(), &cov()}) {
        const auto& s = S("s_twist");
        CHECK(span_compose(identity_span(s.source()), s, *ch) == s);
        CHECK(span_compose(s, identity_span(s.target()), *ch) == s);
    }
}

TEST_CASE("J is strictly functorial on arrows")
{
    CHECK(j_embed_arrow(F("id_pair2")) == identity_span(G("pair2")));
    CHECK(span_compose(j_embed_arrow(F("incl_a")), j_embed_arrow(F("collapse")), ess()) ==
          j_embed_arrow(F("id_pt")));
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        InstanceGenerator gen(seed);
        auto b = gen.groupoid();
        auto f = gen.functor(gen.groupoid(), b);
        auto g = gen.functor(b, gen.groupoid());
        CAPTURE(seed);
        CHECK(span_compose(j_embed_arrow(f), j_embed_arrow(g), ess()) == j_embed_arrow(functor_compose(g, f)));
    }
}

TEST_CASE("span against an identity span keeps apex and legs")
{
    auto bang = GroupoidFunctor::constant(G("pt"), G("z2"), 0);
    Span s(F("incl_a"), bang);
    auto r = span_compose(s, S("span_z2"), ess());
    CHECK(same_groupoid(r.apex(), G("pt")));
    CHECK(r.back == F("incl_a"));
    CHECK(r.fwd == bang);
}

TEST_CASE("equivalence witnesses")
{
    const auto& d = D("d_flip");
    auto self = diagrams_equivalent_witness(d, d);
    REQUIRE(self);
    CHECK(self->s.is_identity());
    CHECK(self->t.is_identity());
    CHECK(self->eps.is_identity());
    CHECK(self->eps2.is_identity());

    auto can = canonicalize(d).diagram();
    auto w = diagrams_equivalent_witness(d, can);
    REQUIRE(w);
    CHECK(check_witness(d, can, *w).empty());

    auto sw = diagrams_equivalent_witness(d, D("d_flip_swapped"));
    REQUIRE(sw);
    CHECK(check_witness(d, D("d_flip_swapped"), *sw).empty());

    CHECK_FALSE(diagrams_equivalent_witness(D("d_id"), d));
}

TEST_CASE("equality of 2-cells on the sample workspace")
{
    CHECK(twocells_equal(D("d_flip"), D("d_flip_swapped")));
    CHECK_FALSE(twocells_equal(D("d_id"), D("d_flip")));
    CHECK(twocells_equal(D("d_id"), identity_2cell(S("s_twist"))));
    CHECK(check_diagram(D("d_flip")).empty());
}

TEST_CASE("re-representation through a left square")
{
    const auto& d = D("d_flip_swapped");
    auto same = represent_with_left_square(d, {d.u1, d.u2, d.left});
    CHECK(twocells_equal(same, d));
    CHECK(same.left == d.left);

    auto can = canonicalize(d);
    const auto& pb = *can.pullback;
    auto via = represent_with_left_square(d, {pb.proj1, pb.proj2, pb.filler});
    CHECK(same_diagram(via, can.diagram()));
}

TEST_CASE("2-fullness round trip through the identity square")
{
    const auto& eta = T("eta");
    auto d = j_embed_2cell(eta);
    auto a = G("pt");
    auto id = GroupoidFunctor::identity(a);
    auto rep = represent_with_left_square(d, {id, id, NatTransformation::identity(id)});
    CHECK(j_recover_2cell(rep) == eta);

    auto can = canonicalize(d).diagram();
    CHECK(j_recover_2cell(can) == eta);
}

TEST_CASE("canonical form of an identity 2-cell")
{
    const auto& s = S("s_twist");
    auto can = canonicalize(identity_2cell(s));
    CHECK(twocells_equal(can.diagram(), identity_2cell(s)));
    CHECK(same_canonical(canonicalize(can.diagram()), can));
    CHECK(same_canonical(can, make_canonical(s, s, can.delta)));
}

TEST_CASE("vertical composition on the sample workspace")
{
    const auto& d = D("d_flip");
    const auto& s = d.src;
    CHECK(twocells_equal(vcompose_2cells(identity_2cell(s), d, ess()), d));
    CHECK(twocells_equal(vcompose_2cells(d, identity_2cell(s), ess()), d));
    CHECK(twocells_equal(vcompose_2cells(d, inverse_2cell(d), ess()), identity_2cell(s)));
    // flip has order two
    CHECK(twocells_equal(vcompose_2cells(d, d, ess()), identity_2cell(s)));
    CHECK(twocells_equal(vcompose_2cells(d, D("d_flip_swapped"), ess()), identity_2cell(s)));
}

TEST_CASE("whiskering by identity spans and of identity cells")
{
    const auto& d = D("d_flip");
    for (const auto* ch : {&ess(), &cov()}) {
        CHECK(twocells_equal(left_whisker_generic(d, S("span_z2"), *ch), d));
        CHECK(twocells_equal(right_whisker_generic(S("span_pt"), d, *ch), d));
        CHECK(same_canonical(left_whisker_pullback(canonicalize(d), S("span_z2"), *ch), canonicalize(d)));
        CHECK(same_canonical(right_whisker_pullback(S("span_pt"), canonicalize(d), *ch), canonicalize(d)));
    }
    auto id = identity_2cell(S("j_collapse"));
    auto whiskered = left_whisker_generic(id, S("s_twist"), ess());
    CHECK(twocells_equal(whiskered, identity_2cell(span_compose(S("j_collapse"), S("s_twist"), ess()))));
}

TEST_CASE("horizontal composition of J-images is J of the ambient composite")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        InstanceGenerator gen(seed);
        auto b = gen.groupoid();
        auto f = gen.functor(gen.groupoid(), b);
        auto g = gen.functor(b, gen.groupoid());
        auto alpha = nat_vcompose(gen.isomorphic(f), gen.automorphism(f));
        auto beta = nat_vcompose(gen.isomorphic(g), gen.automorphism(g));
        auto h = hcompose_2cells(canonicalize(j_embed_2cell(alpha)), canonicalize(j_embed_2cell(beta)), ess());
        CAPTURE(seed);
        CHECK(same_canonical(h, canonicalize(j_embed_2cell(nat_hcompose(beta, alpha)))));
        CHECK(j_recover_2cell(h.diagram()) == nat_hcompose(beta, alpha));
    }
}

TEST_CASE("hcompose of identities is the identity of the composite span")
{
    const auto& s = S("j_collapse");
    const auto& t = S("s_twist");
    auto h = hcompose_2cells(canonicalize(identity_2cell(s)), canonicalize(identity_2cell(t)), ess());
    CHECK(same_canonical(h, canonicalize(identity_2cell(span_compose(s, t, ess())))));
}

TEST_CASE("connectors between equal squares are identities")
{
    const auto& u = F("collapse");
    const auto& f = F("twist");
    const auto& w = F("id_z2");
    for (const auto* ch : {&ess(), &cov()}) {
        auto sq = ch->c2(f, w);
        CHECK(check_square(sq, f, w).empty());
        auto c = connecting_2cell(sq, sq, u, w, f);
        CHECK(twocells_equal(c.diagram, identity_2cell(c.diagram.src)));
    }
}

TEST_CASE("associator examples")
{
    const auto& s = S("s_twist");
    for (const auto* ch : {&ess(), &cov()}) {
        auto a = associator(S("span_pt"), s, S("span_z2"), *ch);
        CHECK(twocells_equal(a.diagram(), identity_2cell(a.src)));
        auto b = associator(s, S("span_z2"), S("span_z2"), *ch);
        CHECK(twocells_equal(b.diagram(), identity_2cell(b.src)));
    }
    auto j = associator(j_embed_arrow(F("incl_a")), j_embed_arrow(F("swap")), j_embed_arrow(F("collapse")), ess());
    CHECK(twocells_equal(j.diagram(), identity_2cell(j.src)));
    CHECK(j.src == j.tgt);
}

TEST_CASE("J on 2-cells")
{
    CHECK(j_embed_2cell(NatTransformation::identity(F("incl_a"))).left.is_identity());
    auto a = canonicalize(j_embed_2cell(T("flip")));
    auto b = canonicalize(j_embed_2cell(T("id_twist")));
    CHECK_FALSE(same_canonical(a, b));
}

TEST_CASE("internal equivalences")
{
    auto id = internal_equivalence_witness(F("id_pair2"), ess());
    CHECK(id.arrow == identity_span(G("pair2")));
    CHECK(id.inverse == identity_span(G("pair2")));
    CHECK(twocells_equal(id.unit, identity_2cell(id.unit.src)));
    CHECK(twocells_equal(id.counit, identity_2cell(id.counit.src)));
    CHECK(check_internal_equivalence(id, ess()).empty());

    auto incl = internal_equivalence_witness(F("incl_a"), ess());
    CHECK(check_internal_equivalence(incl, ess()).empty());
    CHECK(incl.unit_target.apex()->object_count() == 1);
    auto composite = span_compose(incl.inverse, incl.arrow, ess());
    CHECK(composite.apex()->object_count() == 1);

    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        InstanceGenerator gen(seed);
        auto w = gen.w_arrow(gen.groupoid(), WClass::essential_coverings());
        CAPTURE(seed);
        CHECK(check_internal_equivalence(internal_equivalence_witness(w, cov()), cov()).empty());
    }
}

TEST_CASE("pseudo-inverse of an essential equivalence")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        InstanceGenerator gen(seed);
        auto f = gen.essential_equivalence_into(gen.groupoid());
        auto p = pseudo_inverse(f);
        CAPTURE(seed);
        CHECK(p.eta.check().empty());
        CHECK(p.eta.source() == functor_compose(f, p.sigma));
        CHECK(p.eta.target().is_identity());
        CHECK(is_essential_equivalence(p.sigma));
    }
}
