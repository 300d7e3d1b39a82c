#pragma once

#include "fracto/groupoid/functor.hpp"

namespace fracto {

struct EquivalenceReport {
    bool essentially_surjective = true;
    bool full = true;
    bool faithful = true;

    bool ok() const { return essentially_surjective && full && faithful; }
    std::string describe() const;
};

EquivalenceReport essential_equivalence_report(const GroupoidFunctor& f);
bool is_essential_equivalence(const GroupoidFunctor& f);
bool is_fully_faithful(const GroupoidFunctor& f);

// sigma : cod -> dom with eta : f sigma => id, for f an essential equivalence
struct PseudoInverse {
    GroupoidFunctor sigma;
    NatTransformation eta;
};
PseudoInverse pseudo_inverse(const GroupoidFunctor& f);

}
