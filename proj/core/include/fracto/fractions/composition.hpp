#pragma once

#include "fracto/fractions/two_cell.hpp"

namespace fracto {

// Vertical composite d2 . d1 built from a [C5] square and a [C6] lifting.
TwoCellDiagram vcompose_2cells(const TwoCellDiagram& d1, const TwoCellDiagram& d2, const ChoiceData& choices);
CanonicalTwoCell vcompose_canonical(const CanonicalTwoCell& c1, const CanonicalTwoCell& c2);

// s after d, for d between spans A -> B and s : B -> C
TwoCellDiagram left_whisker_generic(const TwoCellDiagram& d, const Span& s, const ChoiceData& choices);
CanonicalTwoCell left_whisker_pullback(const CanonicalTwoCell& d, const Span& s, const ChoiceData& choices);

// d after s, for s : A -> B and d between spans B -> C
TwoCellDiagram right_whisker_generic(const Span& s, const TwoCellDiagram& d, const ChoiceData& choices);
CanonicalTwoCell right_whisker_pullback(const Span& s, const CanonicalTwoCell& d, const ChoiceData& choices);

// d2 * d1 for d1 between spans A -> B and d2 between spans B -> C
CanonicalTwoCell hcompose_2cells(const CanonicalTwoCell& d1, const CanonicalTwoCell& d2, const ChoiceData& choices);
TwoCellDiagram hcompose_2cells(const TwoCellDiagram& d1, const TwoCellDiagram& d2, const ChoiceData& choices);

}
