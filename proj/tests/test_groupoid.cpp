#include "doctest.h"

#include "fracto/groupoid/covering.hpp"
#include "fracto/groupoid/equivalence.hpp"
#include "fracto/groupoid/iso_comma.hpp"
#include "fracto/groupoid/lifting.hpp"
#include "fracto/laws/generator.hpp"

#include "oracle.hpp"
#include "support.hpp"

using namespace fracto;
using support::F;
using support::G;
using support::T;

namespace {

Presentation z2_with(const char* ss)
{
    return {{"o"}, {{"e", "o", "o"}, {"s", "o", "o"}}, {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", ss}}};
}

Obj obj(const char* g, const char* x) { return *G(g)->find_object(x); }

}

TEST_CASE("validate on small presentations")
{
    Presentation pt{{"o"}, {{"id", "o", "o"}}, {{"id", "id", "id"}}};
    CHECK(validate(pt).empty());
    CHECK(validate(z2_with("e")).empty());

    auto bad = validate(z2_with("s"));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == "morphism 's' has no inverse");

    Presentation missing{{"o"}, {{"id", "o", "o"}}, {}};
    CHECK(validate(missing) == std::vector<std::string>{"missing composite 'id' . 'id'"});
    CHECK_THROWS_AS(normalize(z2_with("s")), IoError);
}

TEST_CASE("validate reports associativity failures by triple")
{
    // e is a unit, s.s = t, t.s = e, s.t = s breaks (s.s).t = s.(s.t)
    Presentation p{{"o"},
                   {{"e", "o", "o"}, {"s", "o", "o"}, {"t", "o", "o"}},
                   {{"e", "e", "e"}, {"e", "s", "s"}, {"e", "t", "t"}, {"s", "e", "s"}, {"t", "e", "t"},
                    {"s", "s", "t"}, {"s", "t", "s"}, {"t", "s", "e"}, {"t", "t", "s"}}};
    auto bad = validate(p);
    bool assoc = std::any_of(bad.begin(), bad.end(), [](const std::string& s) { return s.rfind("associativity", 0) == 0; });
    CHECK(assoc);
}

TEST_CASE("normalization keeps names and composition")
{
    const auto& z2 = G("z2");
    CHECK(z2->object_count() == 1);
    CHECK(z2->morphism_count() == 2);
    auto s = *z2->find_morphism("s");
    CHECK(z2->morphism_name(z2->compose(s, s)) == "e");
    const auto& pair2 = G("pair2");
    auto ab = *pair2->find_morphism("ab");
    auto ba = *pair2->find_morphism("ba");
    CHECK(pair2->morphism_name(pair2->compose(ba, ab)) == "id_a");
    CHECK(pair2->morphism_name(pair2->inverse(ab)) == "ba");
}

TEST_CASE("functor composition examples")
{
    CHECK(functor_compose(F("id_pair2"), F("swap")) == F("swap"));
    CHECK(functor_compose(F("collapse"), F("incl_a")) == F("id_pt"));
    CHECK(functor_compose(F("incl_a"), F("collapse")) == F("const_a"));
    CHECK(functor_compose(F("swap"), F("swap")) == F("id_pair2"));
}

TEST_CASE("natural transformation examples")
{
    const auto& eta = T("eta");
    CHECK(nat_vcompose(eta, NatTransformation::identity(eta.source())) == eta);
    CHECK(whisker_left(F("collapse"), NatTransformation::identity(F("incl_a"))).is_identity());
    auto back = nat_vcompose(nat_inverse(eta), eta);
    CHECK(back.is_identity());
    CHECK(back.source() == F("incl_a"));
    CHECK(G("pair2")->morphism_name(eta.at(0)) == "ab");
    CHECK_THROWS(nat_vcompose(eta, eta));
}

TEST_CASE("essential equivalence examples")
{
    CHECK(is_essential_equivalence(F("incl_a")));
    CHECK(is_essential_equivalence(F("collapse")));
    auto q2 = essential_equivalence_report(F("q2"));
    CHECK_FALSE(q2.ok());
    CHECK_FALSE(q2.faithful);
    CHECK(q2.full);
    auto disc = essential_equivalence_report(F("disc_collapse"));
    CHECK_FALSE(disc.full);
    CHECK(disc.faithful);
    CHECK_FALSE(is_essential_equivalence(F("twist")));
}

TEST_CASE("essential equivalence agrees with the brute-force oracle")
{
    std::size_t positives = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        InstanceGenerator gen(seed);
        auto a = gen.groupoid();
        auto b = gen.groupoid();
        auto f = gen.coin() ? gen.essential_equivalence_into(b) : gen.functor(a, b);
        bool expected = oracle::essential_equivalence(oracle::table(*f.dom()), oracle::table(*b), oracle::map_of(f));
        positives += expected;
        CAPTURE(seed);
        CHECK(is_essential_equivalence(f) == expected);
    }
    CHECK(positives > 100);
}

TEST_CASE("iso-comma examples")
{
    auto pt = iso_comma(F("id_pt"), F("id_pt"));
    CHECK(pt.apex->object_count() == 1);
    CHECK(pt.apex->morphism_count() == 1);

    auto cc = iso_comma(F("collapse"), F("collapse"));
    CHECK(cc.apex->object_count() == 4);
    CHECK(cc.apex->component_count() == 1);
    CHECK(cc.apex->group_at(0).order() == 1);

    auto aa = iso_comma(F("incl_a"), F("incl_a"));
    CHECK(aa.apex->object_count() == 1);
    CHECK(aa.filler.check().empty());
}

TEST_CASE("iso-comma sizes, filler and mediator against brute force")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        InstanceGenerator gen(seed);
        auto c = gen.groupoid();
        auto f = gen.functor(gen.groupoid(), c);
        auto g = gen.coin() ? gen.essential_equivalence_into(c) : gen.functor(gen.groupoid(), c);
        auto pb = iso_comma(f, g);
        auto [objs, mors] = oracle::iso_comma_size(oracle::table(*f.dom()), oracle::table(*g.dom()), oracle::table(*c),
                                                   oracle::map_of(f), oracle::map_of(g));
        CAPTURE(seed);
        CHECK(pb.apex->object_count() == objs);
        CHECK(pb.apex->morphism_count() == mors);
        CHECK(pb.filler.check().empty());
        CHECK(pb.filler.source() == functor_compose(f, pb.proj1));
        CHECK(pb.filler.target() == functor_compose(g, pb.proj2));
        auto h = iso_comma_mediator(pb, pb.proj1, pb.proj2, pb.filler);
        CHECK(h.is_identity());
    }
}

TEST_CASE("ff_lift examples")
{
    const auto& w = F("collapse");
    auto alpha = NatTransformation::identity(functor_compose(w, F("incl_a")));
    auto wg = functor_compose(w, F("incl_b"));
    alpha = NatTransformation(alpha.source(), wg, alpha.components());
    auto beta = ff_lift(w, F("incl_a"), F("incl_b"), alpha);
    CHECK(G("pair2")->morphism_name(beta.at(0)) == "ab");
    CHECK(whisker_left(w, beta) == alpha);

    auto id = ff_lift(w, F("incl_a"), F("incl_a"), NatTransformation::identity(functor_compose(w, F("incl_a"))));
    CHECK(id.is_identity());
}

TEST_CASE("ff_lift matches the unique hom-set preimage")
{
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        InstanceGenerator gen(seed);
        auto w = gen.essential_equivalence_into(gen.groupoid());
        auto f = gen.functor(gen.groupoid(), w.dom());
        auto theta = gen.isomorphic(f);
        auto alpha = nat_vcompose(whisker_left(w, theta), gen.automorphism(functor_compose(w, f)));
        auto beta = ff_lift(w, f, theta.target(), alpha);

        auto b = oracle::table(*w.dom());
        auto wm = oracle::map_of(w);
        const auto& cod = *w.cod();
        CAPTURE(seed);
        for (Obj x = 0; x < f.dom()->object_count(); ++x) {
            std::vector<int> pre;
            for (int m : b.hom(int(f(x)), int(theta.target()(x))))
                if (wm.mor[m] == int(cod.morphism_index(alpha.at(x))))
                    pre.push_back(m);
            REQUIRE(pre.size() == 1);
            CHECK(w.dom()->morphism_index(beta.at(x)) == std::size_t(pre[0]));
        }
    }
}

TEST_CASE("coff_factor examples and defining equation")
{
    const auto& h = F("id_pair2");
    auto mu = NatTransformation::identity(F("swap"));
    CHECK(coff_factor(h, F("swap"), F("swap"), mu).is_identity());
    const auto& flip = T("flip");
    CHECK(coff_factor(F("id_pair2"), F("twist"), F("twist"), flip) == flip);

    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        InstanceGenerator gen(seed);
        auto a = gen.groupoid();
        auto e = gen.essential_equivalence_into(a);
        auto x = gen.functor(a, gen.groupoid());
        auto theta = nat_vcompose(gen.isomorphic(x), gen.automorphism(x));
        auto m = whisker_right(theta, e);
        auto delta = coff_factor(e, x, theta.target(), m);
        CAPTURE(seed);
        CHECK(whisker_right(delta, e) == m);
        CHECK(delta == theta);
    }
}

TEST_CASE("weakly initial witness examples")
{
    auto wi = weakly_initial_witness(F("collapse"));
    CHECK(wi.u.dom()->object_count() == 1);
    CHECK(wi.u(0) == obj("pair2", "a"));
    CHECK(wi.psi.is_identity());
    CHECK(wi.covering.dom()->morphism_count() == 1);
    CHECK(is_literal_covering(wi.covering) == Membership::yes);

    auto v = essential_covering(G("pair2"), {{obj("pair2", "a")}});
    auto wv = weakly_initial_witness(v);
    CHECK(wv.u.is_identity());
    CHECK(wv.covering == v);

    auto wid = weakly_initial_witness(F("id_pair2"));
    CHECK(wid.u.is_identity());
}

TEST_CASE("essential covering examples")
{
    Obj a = obj("pair2", "a"), b = obj("pair2", "b");
    auto single = essential_covering(G("pair2"), {{a}});
    CHECK(single.dom()->object_count() == 1);
    CHECK(is_essential_equivalence(single));

    auto overlap = essential_covering(G("pair2"), {{a}, {a, b}});
    REQUIRE(overlap.dom()->object_count() == 3);
    CHECK(overlap.obj_map() == std::vector<Obj>{a, a, b});
    CHECK(is_essential_equivalence(overlap));
    CHECK(is_literal_covering(overlap) == Membership::yes);

    CHECK_THROWS_AS(essential_covering(G("pair2"), {{a}, {a}}), std::invalid_argument);
    CHECK_THROWS_AS(essential_covering(G("disc2"), {{0}}), std::invalid_argument);
}

TEST_CASE("generated groupoids and functors validate")
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        InstanceGenerator gen(seed);
        auto a = gen.groupoid();
        auto b = gen.groupoid();
        CAPTURE(seed);
        CHECK(validate(present(*a)).empty());
        auto f = gen.functor(a, b);
        CHECK(f.check().empty());
        auto theta = gen.isomorphic(f);
        CHECK(theta.check().empty());
        InstanceGenerator again(seed);
        CHECK(same_groupoid(again.groupoid(), a));
    }
}
