#pragma once

#include <cstdint>

#include "fracto/fractions/two_cell.hpp"

namespace fracto {

struct GeneratorBounds {
    std::size_t max_objects = 3;
    std::size_t max_components = 2;
};

// Deterministic random instances. Groups are drawn from Z1, Z2, Z3 and S3.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed, GeneratorBounds bounds = {});

    std::uint64_t seed() const { return seed_; }
    const GeneratorBounds& bounds() const { return bounds_; }
    std::uint64_t next();
    std::size_t below(std::size_t n);
    bool coin() { return next() & 1; }

    GroupPtr group();
    GroupoidPtr groupoid(std::size_t max_objects = 0);
    GroupoidFunctor functor(const GroupoidPtr& dom, const GroupoidPtr& cod);
    Morphism morphism_from(const FiniteGroupoid& g, Obj x);

    // an essential equivalence into cod whose domain has at most max(max_objects, components) objects
    GroupoidFunctor essential_equivalence_into(const GroupoidPtr& cod, std::size_t max_objects = 0);
    // an essential covering into cod (a literal one, possibly conjugated)
    GroupoidFunctor covering_into(const GroupoidPtr& cod, std::size_t max_objects = 0);
    GroupoidFunctor w_arrow(const GroupoidPtr& cod, const WClass& w);

    // theta : f => f' for a random isomorphic f'
    NatTransformation isomorphic(const GroupoidFunctor& f);
    NatTransformation automorphism(const GroupoidFunctor& f);

    Span span(const GroupoidPtr& a, const GroupoidPtr& b, const WClass& w);
    // a random 2-cell out of s into a freshly generated span
    TwoCellDiagram diagram_from(const Span& s, const WClass& w);
    // an equivalent diagram: center precomposed with an essential equivalence, legs conjugated
    TwoCellDiagram perturb(const TwoCellDiagram& d);
    // another valid square over the cospan (f, u): apex moved along an essential equivalence, legs conjugated
    Square perturb_square(const Square& sq, const GroupoidFunctor& f, const GroupoidFunctor& u);

private:
    std::uint64_t seed_;
    std::uint64_t state_;
    GeneratorBounds bounds_;
};

}
