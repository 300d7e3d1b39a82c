#pragma once

#include <optional>

#include "fracto/fractions/composition.hpp"

namespace fracto {

// The 2-cell (u back1, fwd1) => (u back2, fwd2) connecting two squares over the cospan (f, w).
struct Connector {
    TwoCellDiagram diagram; // left = u beta, right = gamma
    NatTransformation beta; // back1 s1 => back2 s2
};
Connector connecting_2cell(const Square& sq1, const Square& sq2, const GroupoidFunctor& u,
                           const GroupoidFunctor& w, const GroupoidFunctor& f);

// The associativity 2-cell s3 (s2 s1) => (s3 s2) s1. `middle` replaces the intermediate square.
CanonicalTwoCell associator(const Span& s1, const Span& s2, const Span& s3, const ChoiceData& choices,
                            const std::optional<Square>& middle = std::nullopt);
// the default intermediate square and the cospan it lives over
Square associator_middle_square(const Span& s1, const Span& s2, const Span& s3, const ChoiceData& choices);

struct InternalEquivalence {
    Span arrow, inverse;
    Span unit_source, unit_target;     // identity span => inverse after arrow
    TwoCellDiagram unit, counit;       // counit : arrow after inverse => identity span
};
InternalEquivalence internal_equivalence_witness(const GroupoidFunctor& w, const ChoiceData& choices);
std::vector<std::string> check_internal_equivalence(const InternalEquivalence& e, const ChoiceData& choices);

}
