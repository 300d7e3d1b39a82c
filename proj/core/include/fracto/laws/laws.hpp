#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracto/fractions/coherence.hpp"
#include "fracto/laws/generator.hpp"

namespace fracto {

enum class LawStatus { pass, fail, xfail, skip };

const char* to_string(LawStatus s);

struct LawReport {
    std::string law;
    std::string wclass;
    std::uint64_t seed = 0; // instance seed; replay(law, wclass, seed) reruns exactly this instance
    LawStatus status = LawStatus::pass;
    std::string detail;
};

// one machine-readable line
std::string format_report(const LawReport& r);

struct LawOptions {
    SquareChoice squares = SquareChoice::compact;
    GeneratorBounds bounds{};
};

// seed of the i-th instance of a run started with `seed`
std::uint64_t instance_seed(std::uint64_t seed, std::size_t i);

std::vector<LawReport> check_wb(const WClass& w, std::uint64_t seed, std::size_t n, const LawOptions& opt = {});
std::vector<LawReport> check_lifting_lemmas(const WClass& w, std::uint64_t seed, std::size_t n,
                                            const LawOptions& opt = {});
std::vector<LawReport> check_connectors(const WClass& w, std::uint64_t seed, std::size_t n,
                                        const LawOptions& opt = {});
std::vector<LawReport> check_pentagon(const WClass& w, std::uint64_t seed, std::size_t n, const LawOptions& opt = {});
std::vector<LawReport> check_well_definedness(const WClass& w, std::uint64_t seed, std::size_t n,
                                              const LawOptions& opt = {});
std::vector<LawReport> check_weakly_initial(std::uint64_t seed, std::size_t n, const LawOptions& opt = {});
// every suite above
std::vector<LawReport> check_all(const WClass& w, std::uint64_t seed, std::size_t n, const LawOptions& opt = {});

// f lies in the closure of the class under composites of at most `depth` arrows and invertible 2-cells
Membership hat_closure_member(const GroupoidFunctor& f, const WClass& w, std::size_t depth);

std::vector<std::string> law_names();
LawReport replay(const std::string& law, const WClass& w, std::uint64_t instance_seed, const LawOptions& opt = {});

// fixed instances over pair2 = {a, b} with a single isomorphism a -> b
struct CoveringCounterexample {
    GroupoidFunctor first;  // a covering of pair2
    GroupoidFunctor second; // a covering of dom(first)
};
// pieces [{a}, {a, b}] then [{a1}, {a2}]: the composite repeats the image {a}
CoveringCounterexample repeated_image_instance();
// pieces [{a}, {b}, {a, b}] then [everything, {a1}]: five objects over a two-object orbit
CoveringCounterexample oversized_fibre_instance();

}
