#pragma once

#include <memory>
#include <optional>

#include "fracto/fractions/span.hpp"
#include "fracto/groupoid/iso_comma.hpp"

namespace fracto {

// A 2-cell representative between spans with common source and target:
//   u1 : center -> apex(src), u2 : center -> apex(tgt),
//   left : back1 u1 => back2 u2, right : fwd1 u1 => fwd2 u2.
struct TwoCellDiagram {
    Span src, tgt;
    GroupoidFunctor u1, u2;
    NatTransformation left, right;

    const GroupoidPtr& center() const { return u1.dom(); }
};

std::vector<std::string> check_diagram(const TwoCellDiagram& d);

TwoCellDiagram identity_2cell(const Span& s);
TwoCellDiagram inverse_2cell(const TwoCellDiagram& d);
// precompose the center with e (an essential equivalence keeps the 2-cell)
TwoCellDiagram precompose_center(const TwoCellDiagram& d, const GroupoidFunctor& e);
// replace u1, u2 by isomorphic legs: theta_i : u_i => u_i'
TwoCellDiagram conjugate_legs(const TwoCellDiagram& d, const NatTransformation& theta1,
                              const NatTransformation& theta2);
TwoCellDiagram j_embed_2cell(const NatTransformation& alpha);

// Normal form: the left cell is the filler of iso_comma(back1, back2).
struct CanonicalTwoCell {
    Span src, tgt;
    std::shared_ptr<const IsoCommaResult> pullback;
    NatTransformation delta; // fwd1 proj1 => fwd2 proj2

    TwoCellDiagram diagram() const;
};

std::shared_ptr<const IsoCommaResult> span_pullback(const Span& s1, const Span& s2);

CanonicalTwoCell canonicalize(const TwoCellDiagram& d);
// the canonical form whose delta is given; delta must be fwd1 proj1 => fwd2 proj2 on iso_comma(back1, back2)
CanonicalTwoCell make_canonical(const Span& src, const Span& tgt, const NatTransformation& delta);
bool same_canonical(const CanonicalTwoCell& a, const CanonicalTwoCell& b);
bool twocells_equal(const TwoCellDiagram& a, const TwoCellDiagram& b);

// (F, s, t, eps : u1 s => u1' t, eps2 : u2 s => u2' t) relating two diagrams
struct EquivalenceWitness {
    GroupoidFunctor s, t;
    NatTransformation eps, eps2;
};

std::optional<EquivalenceWitness> diagrams_equivalent_witness(const TwoCellDiagram& d1, const TwoCellDiagram& d2);
std::vector<std::string> check_witness(const TwoCellDiagram& d1, const TwoCellDiagram& d2,
                                       const EquivalenceWitness& w);

// square: t1 : X -> apex(src), t2 : X -> apex(tgt), gamma : back1 t1 => back2 t2
struct LeftSquare {
    GroupoidFunctor t1, t2;
    NatTransformation gamma;
};
TwoCellDiagram represent_with_left_square(const TwoCellDiagram& d, const LeftSquare& square);

// the ambient 2-cell f => g represented by a diagram between j(f) and j(g)
NatTransformation j_recover_2cell(const TwoCellDiagram& d);

}
