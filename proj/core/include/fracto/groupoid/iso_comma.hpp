#pragma once

#include <memory>

#include "fracto/groupoid/functor.hpp"

namespace fracto {

struct IsoCommaIndex {
    std::size_t right_count = 0;
    std::vector<std::int64_t> pair_offset;           // a * right_count + b -> first object, or -1
    std::vector<std::vector<std::int64_t>> lookup;   // per apex component: p * |G_B| + q -> element
    std::vector<std::size_t> right_order;            // per apex component: |G_B|
};

// The iso-comma (pseudo pullback) of the cospan f : A -> C <- B : g.
struct IsoCommaResult {
    GroupoidFunctor f, g;
    GroupoidPtr apex;
    GroupoidFunctor proj1, proj2;
    NatTransformation filler; // f proj1 => g proj2
    std::shared_ptr<const IsoCommaIndex> index;

    // the apex object (a, b, k)
    Obj object_of(Obj a, Obj b, Elem k) const;
};

IsoCommaResult iso_comma(const GroupoidFunctor& f, const GroupoidFunctor& g);

// the unique h with proj1 h = t1, proj2 h = t2 and filler h = gamma
GroupoidFunctor iso_comma_mediator(const IsoCommaResult& pb, const GroupoidFunctor& t1, const GroupoidFunctor& t2,
                                   const NatTransformation& gamma);

}
