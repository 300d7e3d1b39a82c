#pragma once

#include "fracto/fractions/wclass.hpp"

namespace fracto {

// source <-back- apex -fwd-> target
struct Span {
    GroupoidFunctor back, fwd;

    Span(GroupoidFunctor back, GroupoidFunctor fwd);

    const GroupoidPtr& apex() const { return back.dom(); }
    const GroupoidPtr& source() const { return back.cod(); }
    const GroupoidPtr& target() const { return fwd.cod(); }

    friend bool operator==(const Span& a, const Span& b) { return a.back == b.back && a.fwd == b.fwd; }
};

Span identity_span(const GroupoidPtr& a);
Span j_embed_arrow(const GroupoidFunctor& f);

// s2 after s1, through the chosen square c4(back1, fwd1, back2)
Span span_compose(const Span& s1, const Span& s2, const ChoiceData& choices);
Square composition_square(const Span& s1, const Span& s2, const ChoiceData& choices);

}
