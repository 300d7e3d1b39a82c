#pragma once

#include <optional>

#include "fracto/groupoid/functor.hpp"

namespace fracto {

enum class Membership { no, yes, unknown };

const char* to_string(Membership m);

struct WeaklyInitialWitness {
    GroupoidFunctor u;
    NatTransformation psi;     // identity on v u
    GroupoidFunctor covering;  // v u, literally an essential covering
};

WeaklyInitialWitness weakly_initial_witness(const GroupoidFunctor& v);

// Inclusion of the disjoint union of the pieces, with all morphisms of base between selected objects.
GroupoidFunctor essential_covering(const GroupoidPtr& base, const std::vector<std::vector<Obj>>& pieces);

struct SearchLimits {
    std::size_t max_nodes = 500000;
    std::size_t max_states = 2000000;
};

// f is literally a covering: fully faithful, meets every orbit, and its object fibres
// can be arranged as a non-repeating family of pieces.
Membership is_literal_covering(const GroupoidFunctor& f, const SearchLimits& limits = {});
// the pieces of a literal covering structure, if one is found
std::optional<std::vector<std::vector<Obj>>> literal_pieces(const GroupoidFunctor& f,
                                                            const SearchLimits& limits = {});

// f is 2-isomorphic to a literal covering
Membership is_essential_covering(const GroupoidFunctor& f, const SearchLimits& limits = {});

// f is 2-isomorphic to a composite of at most `depth` coverings
Membership covering_closure_member(const GroupoidFunctor& f, std::size_t depth, const SearchLimits& limits = {});

}
