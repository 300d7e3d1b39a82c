#include "doctest.h"

#include <fstream>
#include <sstream>

#include "fracto/fractions/composition.hpp"
#include "fracto/laws/generator.hpp"

#include "support.hpp"

using namespace fracto;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

ErrorKind kind_of(const std::string& text, std::string* message = nullptr)
{
    try {
        parse_workspace(text, "t.json");
    } catch (const IoError& e) {
        if (message)
            *message = e.what();
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::parse;
}

const char* pt = R"("pt": {"objects": ["o"], "morphisms": [["id", "o", "o"]], "compose": [["id", "id", "id"]]})";

std::string doc(const std::string& groupoids, const std::string& rest = "")
{
    return R"({"format": 1, "groupoids": {)" + groupoids + "}" + (rest.empty() ? "" : ", " + rest) + "}";
}

}

TEST_CASE("the sample workspace round-trips byte for byte")
{
    const auto& ws = support::basic();
    auto text = serialize(ws);
    auto again = parse_workspace(text);
    CHECK(serialize(again) == text);
    CHECK(again.entries().size() == ws.entries().size());
    CHECK(again.functor("twist") == ws.functor("twist"));
    CHECK(twocells_equal(again.diagram("d_flip"), ws.diagram("d_flip")));
}

TEST_CASE("generated values round-trip")
{
    ChoiceData ch(WClass::all_essential_equivalences(), SquareChoice::compact);
    std::size_t exact = 0, checked = 0;
    for (std::uint64_t seed = 1; checked < 40; ++seed) {
        InstanceGenerator gen(seed);
        auto w = WClass::all_essential_equivalences();
        auto s = gen.span(gen.groupoid(), gen.groupoid(), w);
        auto d = gen.diagram_from(s, w);
        // the composition table grows with the square of the morphism count
        if (d.center()->morphism_count() > 150 || s.apex()->morphism_count() > 150)
            continue;
        ++checked;
        Writer wr;
        wr.add("d", d);
        wr.add("sq", span_compose(s, identity_span(s.target()), ch));
        auto text = wr.str();
        auto ws = parse_workspace(text);
        CAPTURE(seed);
        CHECK(check_diagram(ws.diagram("d")).empty());
        CHECK(serialize(ws) == text);
        CHECK(ws.diagram("d").center()->morphism_count() == d.center()->morphism_count());
        // renamed duplicates make the groupoids differ by name only
        if (text.find('~') == std::string::npos) {
            ++exact;
            CHECK(twocells_equal(ws.diagram("d"), d));
            CHECK(ws.diagram("d").left == d.left);
            CHECK(ws.span("sq") == s);
        }
    }
    CHECK(exact > 10);
}

TEST_CASE("repeated names in generated groupoids are made unique")
{
    auto z2 = support::G("z2");
    auto pb = iso_comma(GroupoidFunctor::identity(z2), GroupoidFunctor::identity(z2));
    auto p = present(*pb.apex);
    CHECK(validate(p).empty());
    Writer wr;
    wr.add("apex", pb.apex);
    auto back = parse_workspace(wr.str()).groupoid("apex");
    CHECK(back->object_count() == pb.apex->object_count());
    CHECK(back->morphism_count() == pb.apex->morphism_count());
}

TEST_CASE("error kinds and positions")
{
    std::string msg;
    CHECK(kind_of("{\"format\": 1,\n  \"groupoids\": {,}}", &msg) == ErrorKind::parse);
    CHECK(msg.rfind("t.json:2:", 0) == 0);

    CHECK(kind_of(R"({"format": 2})") == ErrorKind::parse);
    CHECK(kind_of(doc(pt, R"("extra": {})")) == ErrorKind::parse);
    CHECK(kind_of(doc(R"("pt": {"objects": ["o"], "morphisms": [["id", "o"]], "compose": []})")) == ErrorKind::parse);

    CHECK(kind_of(doc(pt, R"("spans": {"s": {"back": "nope", "fwd": "nope"}})"), &msg) == ErrorKind::reference);
    CHECK(msg.find("unknown identifier 'nope'") != std::string::npos);
    CHECK(kind_of(doc(pt, R"("spans": {"s": {"back": "pt", "fwd": "pt"}})")) == ErrorKind::reference);
    CHECK(kind_of(doc(pt, R"("functors": {"f": {"dom": "pt", "cod": "pt", "objects": {"o": "x"}, "morphisms": {"id": "id"}}})")) ==
          ErrorKind::reference);

    CHECK(kind_of(doc(R"("pt": {"objects": ["o"], "morphisms": [["id", "o", "o"]], "compose": []})"), &msg) ==
          ErrorKind::invariant);
    CHECK(msg.find("not a groupoid") != std::string::npos);
    CHECK(kind_of(doc(pt, R"("functors": {"f": {"dom": "pt", "cod": "pt", "objects": {}, "morphisms": {}}})")) ==
          ErrorKind::invariant);
    CHECK(kind_of(doc(pt + std::string(", ") + pt)) == ErrorKind::parse);
}

TEST_CASE("files under data/invalid fail with the documented codes")
{
    const std::string dir = FRACTO_DATA_DIR "/invalid/";
    CHECK(kind_of(slurp(dir + "syntax.json")) == ErrorKind::parse);
    CHECK(kind_of(slurp(dir + "dangling.json")) == ErrorKind::reference);
    std::string msg;
    CHECK(kind_of(slurp(dir + "z2_idempotent.json"), &msg) == ErrorKind::invariant);
    CHECK(msg.find("morphism 's' has no inverse") != std::string::npos);
    try {
        load_workspace(dir + "syntax.json");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("syntax.json:7:15:") != std::string::npos);
    }
    CHECK_THROWS_AS(load_workspace(dir + "missing.json"), IoError);
}

TEST_CASE("workspace lookups")
{
    const auto& ws = support::basic();
    CHECK(std::string(kind_name(ws.at("eta"))) == "transformation");
    CHECK(ws.find("nothing") == nullptr);
    try {
        ws.span("eta");
        FAIL("expected an error");
    } catch (const IoError& e) {
        CHECK(e.kind() == ErrorKind::reference);
    }
    Workspace copy = ws;
    CHECK_THROWS_AS(copy.add("eta", ws.at("eta")), IoError);
}

TEST_CASE("DOT export")
{
    const auto& ws = support::basic();
    auto g = to_dot("pair2", ws.at("pair2"));
    CHECK(g.rfind("digraph", 0) == 0);
    CHECK(g.find("\"ab\"") != std::string::npos);
    CHECK(g.find("id_a") == std::string::npos);
    for (const char* id : {"twist", "eta", "s_twist", "d_flip"}) {
        auto text = to_dot(id, ws.at(id));
        CAPTURE(id);
        CHECK(text.rfind("digraph", 0) == 0);
        CHECK(text.back() == '\n');
        CHECK(std::count(text.begin(), text.end(), '{') == std::count(text.begin(), text.end(), '}'));
    }
}
