#include "doctest.h"

#include <algorithm>
#include <set>

#include "fracto/groupoid/covering.hpp"
#include "fracto/groupoid/equivalence.hpp"
#include "fracto/laws/laws.hpp"

using namespace fracto;

namespace {

std::vector<std::string> failures(const std::vector<LawReport>& rs)
{
    std::vector<std::string> out;
    for (const auto& r : rs)
        if (r.status == LawStatus::fail)
            out.push_back(format_report(r));
    return out;
}

std::set<std::string> with_status(const std::vector<LawReport>& rs, LawStatus s)
{
    std::set<std::string> out;
    for (const auto& r : rs)
        if (r.status == s)
            out.insert(r.law);
    return out;
}

}

TEST_CASE("all suites pass for the essential equivalences")
{
    auto rs = check_all(WClass::all_essential_equivalences(), 7, 12);
    CHECK(failures(rs) == std::vector<std::string>{});
    CHECK(with_status(rs, LawStatus::xfail).empty());
}

TEST_CASE("all suites pass for coverings up to the strict composition clause")
{
    auto rs = check_all(WClass::essential_coverings(), 7, 12);
    CHECK(failures(rs) == std::vector<std::string>{});
    CHECK(with_status(rs, LawStatus::xfail) == std::set<std::string>{"BF2-closure", "BF2-strict"});
}

TEST_CASE("literal square choices satisfy the same laws")
{
    LawOptions opt;
    opt.squares = SquareChoice::literal;
    for (const auto& w : {WClass::all_essential_equivalences(), WClass::essential_coverings()}) {
        CHECK(failures(check_wb(w, 3, 10, opt)) == std::vector<std::string>{});
        CHECK(failures(check_connectors(w, 3, 10, opt)) == std::vector<std::string>{});
        CHECK(failures(check_well_definedness(w, 3, 10, opt)) == std::vector<std::string>{});
    }
}

TEST_CASE("replay reproduces a report")
{
    auto w = WClass::essential_coverings();
    auto rs = check_connectors(w, 11, 5);
    REQUIRE_FALSE(rs.empty());
    for (const auto& r : rs) {
        auto again = replay(r.law, w, r.seed);
        CHECK(format_report(again) == format_report(r));
    }
    CHECK(instance_seed(11, 3) == 1100003);
}

TEST_CASE("law names are unique and replayable")
{
    auto names = law_names();
    std::set<std::string> unique(names.begin(), names.end());
    CHECK(unique.size() == names.size());
    for (const char* n : {"WB1", "WB5", "BF2-strict", "pentagon", "canonical-form", "weakly-initial"})
        CHECK(unique.count(n) == 1);
    CHECK_THROWS(replay("no-such-law", WClass::all_essential_equivalences(), 1));
}

TEST_CASE("report lines")
{
    LawReport r{"WB3", "coverings", 42, LawStatus::xfail, "a \"quoted\" detail"};
    CHECK(format_report(r) == "law=WB3 class=coverings seed=42 status=xfail detail=\"a \\\"quoted\\\" detail\"");
    CHECK(std::string(to_string(LawStatus::skip)) == "skip");
}

TEST_CASE("fixed covering counterexamples")
{
    auto cov = WClass::essential_coverings();
    for (auto inst : {repeated_image_instance(), oversized_fibre_instance()}) {
        CHECK(cov.contains(inst.first) == Membership::yes);
        CHECK(cov.contains(inst.second) == Membership::yes);
        auto comp = functor_compose(inst.first, inst.second);
        CHECK(is_literal_covering(comp) == Membership::no);
        CHECK(is_essential_equivalence(comp));
        CHECK(hat_closure_member(comp, cov, 2) == Membership::yes);
    }
    auto r = repeated_image_instance();
    auto rc = functor_compose(r.first, r.second);
    CHECK(rc.obj_map() == std::vector<Obj>{0, 0});
    CHECK(cov.contains(rc) == Membership::yes);
    auto o = oversized_fibre_instance();
    CHECK(cov.contains(functor_compose(o.first, o.second)) == Membership::no);
}

TEST_CASE("hat closure membership")
{
    InstanceGenerator gen(5);
    auto ess = WClass::all_essential_equivalences();
    for (int i = 0; i < 20; ++i) {
        auto b = gen.groupoid();
        auto e = gen.essential_equivalence_into(b);
        CHECK(hat_closure_member(e, ess, 1) == Membership::yes);
        auto f = gen.functor(gen.groupoid(), b);
        CHECK(hat_closure_member(f, ess, 1) == (is_essential_equivalence(f) ? Membership::yes : Membership::no));
    }
}
