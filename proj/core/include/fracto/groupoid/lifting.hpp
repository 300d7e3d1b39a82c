#pragma once

#include "fracto/groupoid/functor.hpp"

namespace fracto {

// The unique beta : f => g with w beta = alpha, for alpha : w f => w g and w fully faithful.
NatTransformation ff_lift(const GroupoidFunctor& w, const GroupoidFunctor& f, const GroupoidFunctor& g,
                          const NatTransformation& alpha);

enum class PreimageRule { first, last };

// The unique delta : x => y with delta h = mu, for mu : x h => y h and h an essential equivalence.
NatTransformation coff_factor(const GroupoidFunctor& h, const GroupoidFunctor& x, const GroupoidFunctor& y,
                              const NatTransformation& mu, PreimageRule rule = PreimageRule::first);

// Replaces f by f' with f'(x) = targets[x].tgt, f'(m) = targets . f(m) . targets^-1.
// Returns f' together with theta : f => f'.
struct Conjugate {
    GroupoidFunctor functor;
    NatTransformation theta;
};
Conjugate conjugate(const GroupoidFunctor& f, const std::vector<Morphism>& targets);

}
