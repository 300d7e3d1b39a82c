#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "fracto/fractions/coherence.hpp"
#include "fracto/fractions/composition.hpp"
#include "fracto/io/workspace.hpp"
#include "fracto/laws/laws.hpp"

using namespace fracto;

namespace {

constexpr int exit_law_failure = 5;

WClass wclass_named(const std::string& s)
{
    if (s == "coverings")
        return WClass::essential_coverings();
    return WClass::all_essential_equivalences();
}

SquareChoice squares_named(const std::string& s)
{
    return s == "literal" ? SquareChoice::literal : SquareChoice::compact;
}

struct Output {
    std::string name;
    std::string file;
    bool write_back = false;
};

void emit(const std::string& text, const std::string& file)
{
    if (file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(file, std::ios::binary);
    if (!out)
        throw IoError(ErrorKind::parse, file + ": cannot write file");
    out << text;
}

// prints the value with its dependencies; optionally appends it to the workspace file
void publish(Workspace& ws, const std::string& path, const Output& o, const Value& v)
{
    Writer w(&ws);
    w.add(o.name, v);
    emit(w.str(), o.file);
    if (o.write_back) {
        ws.add(o.name, v);
        emit(serialize(ws), path);
    }
}

std::vector<LawReport> run_suite(const std::string& suite, const WClass& w, std::uint64_t seed, std::size_t n,
                                 const LawOptions& opt)
{
    if (suite == "wb")
        return check_wb(w, seed, n, opt);
    if (suite == "lifting")
        return check_lifting_lemmas(w, seed, n, opt);
    if (suite == "connectors")
        return check_connectors(w, seed, n, opt);
    if (suite == "pentagon")
        return check_pentagon(w, seed, n, opt);
    if (suite == "well-definedness")
        return check_well_definedness(w, seed, n, opt);
    if (suite == "weakly-initial")
        return check_weakly_initial(seed, n, opt);
    return check_all(w, seed, n, opt);
}

int print_reports(const std::vector<LawReport>& reports, bool failures_only)
{
    std::map<LawStatus, std::size_t> count;
    std::map<std::string, std::size_t> failing;
    for (const auto& r : reports) {
        ++count[r.status];
        if (r.status == LawStatus::fail)
            ++failing[r.law];
        if (!failures_only || r.status == LawStatus::fail || r.status == LawStatus::xfail)
            std::cout << format_report(r) << "\n";
    }
    std::cout << "summary: instances=" << reports.size() << " pass=" << count[LawStatus::pass]
              << " fail=" << count[LawStatus::fail] << " xfail=" << count[LawStatus::xfail]
              << " skip=" << count[LawStatus::skip] << "\n";
    for (const auto& r : reports)
        if (r.status == LawStatus::xfail)
            std::cout << "expected failure: " << r.law << " (" << r.detail << ")\n";
    for (const auto& [law, k] : failing)
        std::cout << "FAILED: " << law << " on " << k << " instance(s)\n";
    return failing.empty() ? 0 : exit_law_failure;
}

std::uint64_t default_seed()
{
    if (const char* s = std::getenv("FRACTO_SEED"); s && *s)
        return std::stoull(s);
    return 1;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"fracto: finite groupoids, spans and 2-cells of fractions"};
    app.require_subcommand(1);

    std::string file, wclass = "essential-equivalences", squares = "compact";
    std::vector<std::string> ids;
    Output out;
    std::uint64_t seed = default_seed();
    std::size_t n = 100;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--wclass", wclass, "class of arrows: essential-equivalences | coverings")
            ->check(CLI::IsMember({"essential-equivalences", "coverings"}));
        c->add_option("--squares", squares, "square choices: compact | literal")
            ->check(CLI::IsMember({"compact", "literal"}));
    };
    auto add_output = [&](CLI::App* c, const std::string& default_name) {
        out.name = default_name;
        c->add_option("--name", out.name, "identifier of the result");
        c->add_option("-o,--output", out.file, "write the result to this file instead of stdout");
        c->add_flag("--write", out.write_back, "also append the result to the workspace file");
    };
    auto add_file = [&](CLI::App* c) { c->add_option("file", file, "workspace file")->required(); };

    auto* validate = app.add_subcommand("validate", "check a workspace file");
    add_file(validate);
    add_common(validate);

    auto* show = app.add_subcommand("show", "print one value with its dependencies");
    add_file(show);
    show->add_option("id", ids, "identifier")->required()->expected(1);
    show->add_option("-o,--output", out.file, "output file");

    auto* compose = app.add_subcommand("compose-spans", "compose spans, first one applied first");
    add_file(compose);
    compose->add_option("ids", ids, "span identifiers")->required()->expected(2, -1);
    add_common(compose);
    add_output(compose, "result");

    auto* canon = app.add_subcommand("canonicalize", "canonical representative of a 2-cell");
    add_file(canon);
    canon->add_option("id", ids, "diagram identifier")->required()->expected(1);
    add_output(canon, "result");

    auto* equal = app.add_subcommand("equal", "whether two diagrams are the same 2-cell");
    add_file(equal);
    equal->add_option("ids", ids, "two diagram identifiers")->required()->expected(2);

    std::string side, method = "generic";
    auto* whisker = app.add_subcommand("whisker", "whisker a 2-cell by a span");
    add_file(whisker);
    whisker->add_option("--side", side, "left: DIAGRAM SPAN (span applied after); right: SPAN DIAGRAM")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
    whisker->add_option("--method", method, "generic | pullback")->check(CLI::IsMember({"generic", "pullback"}));
    whisker->add_option("ids", ids, "identifiers in composition order")->required()->expected(2);
    add_common(whisker);
    add_output(whisker, "result");

    auto* assoc = app.add_subcommand("associator", "associator 2-cell of three composable spans");
    add_file(assoc);
    assoc->add_option("ids", ids, "three span identifiers")->required()->expected(3);
    add_common(assoc);
    add_output(assoc, "result");

    bool failures_only = false;
    auto* pentagon = app.add_subcommand("pentagon", "seeded pentagon check");
    pentagon->add_option("--seed", seed, "seed (default: FRACTO_SEED or 1)");
    pentagon->add_option("--n", n, "number of quadruples");
    pentagon->add_flag("--failures-only", failures_only, "print only failing and expected-failure records");
    add_common(pentagon);

    std::string suite = "all";
    auto* laws = app.add_subcommand("laws", "run the law suites");
    laws->add_option("--seed", seed, "seed (default: FRACTO_SEED or 1)");
    laws->add_option("--n", n, "instances per law");
    laws->add_option("--suite", suite, "all | wb | lifting | connectors | pentagon | well-definedness | weakly-initial")
        ->check(CLI::IsMember({"all", "wb", "lifting", "connectors", "pentagon", "well-definedness", "weakly-initial"}));
    laws->add_flag("--failures-only", failures_only, "print only failing and expected-failure records");
    add_common(laws);

    std::string law;
    auto* replay_cmd = app.add_subcommand("replay", "rerun one law instance from a report line");
    replay_cmd->add_option("law", law, "law identifier")->required();
    replay_cmd->add_option("--seed", seed, "instance seed from the report")->required();
    add_common(replay_cmd);

    auto* dot = app.add_subcommand("export-dot", "graph description of a value");
    add_file(dot);
    dot->add_option("id", ids, "identifier")->required()->expected(1);
    dot->add_option("-o,--output", out.file, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    auto w = wclass_named(wclass);
    ChoiceData choices(w, squares_named(squares));
    LawOptions opt;
    opt.squares = squares_named(squares);

    try {
        if (*laws) {
            std::cout << "laws: class=" << w.name() << " seed=" << seed << " n=" << n << " suite=" << suite << "\n";
            return print_reports(run_suite(suite, w, seed, n, opt), failures_only);
        }
        if (*pentagon) {
            std::cout << "pentagon: class=" << w.name() << " seed=" << seed << " n=" << n << "\n";
            return print_reports(check_pentagon(w, seed, n, opt), failures_only);
        }
        if (*replay_cmd) {
            auto r = replay(law, w, seed, opt);
            std::cout << format_report(r) << "\n";
            return r.status == LawStatus::fail ? exit_law_failure : 0;
        }

        auto ws = load_workspace(file);

        if (*validate) {
            std::vector<std::string> problems;
            std::map<std::string, std::size_t> kinds;
            for (const auto& [name, v] : ws.entries()) {
                ++kinds[kind_name(v)];
                if (auto* s = std::get_if<Span>(&v); s && w.contains(s->back) != Membership::yes)
                    problems.push_back("span '" + name + "': back leg is not in " + w.name());
            }
            for (const auto& p : problems)
                std::cout << "invalid: " << p << "\n";
            std::cout << file << ": " << (problems.empty() ? "valid" : "invalid");
            for (const auto& [k, c] : kinds)
                std::cout << " " << k << "s=" << c;
            std::cout << "\n";
            return problems.empty() ? 0 : int(ErrorKind::invariant);
        }
        if (*show) {
            Writer wr(&ws);
            wr.add(ids[0], ws.at(ids[0]));
            emit(wr.str(), out.file);
            return 0;
        }
        if (*dot) {
            emit(to_dot(ids[0], ws.at(ids[0])), out.file);
            return 0;
        }
        if (*equal) {
            std::cout << (twocells_equal(ws.diagram(ids[0]), ws.diagram(ids[1])) ? "true" : "false") << "\n";
            return 0;
        }

        auto require_w = [&](const Span& s, const std::string& id) {
            if (w.contains(s.back) != Membership::yes)
                throw IoError(ErrorKind::invariant, "span '" + id + "': back leg is not in " + w.name());
        };
        auto guarded = [&](auto fn) {
            try {
                return fn();
            } catch (const IoError&) {
                throw;
            } catch (const std::exception& e) {
                throw IoError(ErrorKind::invariant, e.what());
            }
        };

        if (*compose) {
            for (const auto& id : ids)
                require_w(ws.span(id), id);
            auto result = guarded([&] {
                Span s = ws.span(ids[0]);
                for (std::size_t i = 1; i < ids.size(); ++i)
                    s = span_compose(s, ws.span(ids[i]), choices);
                return s;
            });
            publish(ws, file, out, result);
            return 0;
        }
        if (*canon) {
            auto c = canonicalize(ws.diagram(ids[0]));
            publish(ws, file, out, c.diagram());
            return 0;
        }
        if (*whisker) {
            bool left = side == "left";
            const auto& d = ws.diagram(left ? ids[0] : ids[1]);
            const auto& s = ws.span(left ? ids[1] : ids[0]);
            require_w(s, left ? ids[1] : ids[0]);
            auto result = guarded([&] {
                if (method == "pullback")
                    return left ? left_whisker_pullback(canonicalize(d), s, choices).diagram()
                                : right_whisker_pullback(s, canonicalize(d), choices).diagram();
                return left ? left_whisker_generic(d, s, choices) : right_whisker_generic(s, d, choices);
            });
            publish(ws, file, out, result);
            return 0;
        }
        if (*assoc) {
            for (const auto& id : ids)
                require_w(ws.span(id), id);
            auto result = guarded(
                [&] { return associator(ws.span(ids[0]), ws.span(ids[1]), ws.span(ids[2]), choices).diagram(); });
            publish(ws, file, out, result);
            return 0;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(ErrorKind::invariant);
    }
    return 0;
}
