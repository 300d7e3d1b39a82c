#include <stdexcept>

#include "fracto/fractions/coherence.hpp"
#include "fracto/groupoid/lifting.hpp"

namespace fracto {

namespace {

struct ConnectorParts {
    Connector con;
    std::shared_ptr<const IsoCommaResult> pullback;
};

ConnectorParts connect(const Square& sq1, const Square& sq2, const GroupoidFunctor& u, const GroupoidFunctor& w,
                       const GroupoidFunctor& f)
{
    auto e = std::make_shared<const IsoCommaResult>(
        iso_comma(functor_compose(u, sq1.back), functor_compose(u, sq2.back)));
    const auto& s1 = e->proj1;
    const auto& s2 = e->proj2;
    auto beta =
        ff_lift(u, functor_compose(sq1.back, s1), functor_compose(sq2.back, s2), e->filler);
    auto pasted = nat_vcompose({whisker_right(sq1.cell, s1), whisker_left(f, beta),
                                nat_inverse(whisker_right(sq2.cell, s2))});
    auto gamma = ff_lift(w, functor_compose(sq1.fwd, s1), functor_compose(sq2.fwd, s2), pasted);
    Span src{functor_compose(u, sq1.back), sq1.fwd};
    Span tgt{functor_compose(u, sq2.back), sq2.fwd};
    return {{{src, tgt, s1, s2, e->filler, gamma}, beta}, e};
}

CanonicalTwoCell post(const ConnectorParts& c, const GroupoidFunctor& g)
{
    const auto& d = c.con.diagram;
    Span src{d.src.back, functor_compose(g, d.src.fwd)};
    Span tgt{d.tgt.back, functor_compose(g, d.tgt.fwd)};
    return {src, tgt, c.pullback, whisker_left(g, d.right)};
}

}

Connector connecting_2cell(const Square& sq1, const Square& sq2, const GroupoidFunctor& u,
                           const GroupoidFunctor& w, const GroupoidFunctor& f)
{
    return connect(sq1, sq2, u, w, f).con;
}

Square associator_middle_square(const Span& s1, const Span& s2, const Span& s3, const ChoiceData& choices)
{
    auto a1 = choices.c4(s1.back, s1.fwd, s2.back);
    auto a2 = choices.c4(s2.back, s2.fwd, s3.back);
    return choices.c4(functor_compose(s1.back, a1.back), a1.fwd, a2.back);
}

CanonicalTwoCell associator(const Span& s1, const Span& s2, const Span& s3, const ChoiceData& choices,
                            const std::optional<Square>& middle)
{
    if (!same_groupoid(s1.target(), s2.source()) || !same_groupoid(s2.target(), s3.source()))
        throw std::invalid_argument("associator: spans are not composable");
    const auto& w1 = s1.back;
    const auto& f1 = s1.fwd;
    const auto& w2 = s2.back;
    const auto& f2 = s2.fwd;
    const auto& w3 = s3.back;
    const auto& f3 = s3.fwd;

    auto a1 = choices.c4(w1, f1, w2);
    auto w1w2 = functor_compose(w1, a1.back);
    auto f2f1 = functor_compose(f2, a1.fwd);
    auto b1 = choices.c4(w1w2, f2f1, w3);
    auto a2 = choices.c4(w2, f2, w3);
    auto w2w3 = functor_compose(w2, a2.back);
    auto b2 = choices.c4(w1, f1, w2w3);
    auto a3 = middle ? *middle : choices.c4(w1w2, a1.fwd, a2.back);
    auto problems = check_square(a3, a1.fwd, a2.back);
    if (!problems.empty())
        throw std::invalid_argument("associator: middle square: " + problems.front());

    Square upper{a3.back, functor_compose(a2.fwd, a3.fwd),
                 nat_vcompose(whisker_left(f2, a3.cell), whisker_right(a2.cell, a3.fwd))};
    auto cell1 = post(connect(b1, upper, w1w2, w3, f2f1), f3);

    Square lower{functor_compose(a1.back, a3.back), a3.fwd,
                 nat_vcompose(whisker_right(a1.cell, a3.back), whisker_left(w2, a3.cell))};
    auto cell2 = post(connect(lower, b2, w1, w2w3, f1), functor_compose(f3, a2.fwd));

    return vcompose_canonical(cell1, cell2);
}

InternalEquivalence internal_equivalence_witness(const GroupoidFunctor& w, const ChoiceData& choices)
{
    const auto& a = w.dom();
    const auto& b = w.cod();
    auto ida = GroupoidFunctor::identity(a);
    auto idb = GroupoidFunctor::identity(b);
    Span arrow{ida, w};
    Span inverse{w, ida};

    auto usq = composition_square(arrow, inverse, choices);
    Square trivial{ida, ida, NatTransformation::identity(w)};
    auto unit = connecting_2cell(trivial, usq, ida, w, w).diagram;

    auto csq = composition_square(inverse, arrow, choices);
    Square upper{functor_compose(w, csq.back), functor_compose(w, csq.fwd), whisker_left(w, csq.cell)};
    auto counit = connecting_2cell(upper, identity_square(idb), idb, idb, idb).diagram;

    return {arrow, inverse, identity_span(a), span_compose(arrow, inverse, choices), unit, counit};
}

std::vector<std::string> check_internal_equivalence(const InternalEquivalence& e, const ChoiceData& choices)
{
    std::vector<std::string> out;
    auto check_one = [&](const TwoCellDiagram& d, const Span& src, const Span& tgt, const std::string& what) {
        for (auto& p : check_diagram(d))
            out.push_back(what + ": " + p);
        if (!(d.src == src) || !(d.tgt == tgt)) {
            out.push_back(what + " has the wrong source or target");
            return;
        }
        if (!out.empty())
            return;
        auto c = canonicalize(d);
        auto ci = canonicalize(inverse_2cell(d));
        if (!same_canonical(vcompose_canonical(c, ci), canonicalize(identity_2cell(src))) ||
            !same_canonical(vcompose_canonical(ci, c), canonicalize(identity_2cell(tgt))))
            out.push_back(what + " is not invertible");
    };
    check_one(e.unit, e.unit_source, e.unit_target, "unit");
    check_one(e.counit, span_compose(e.inverse, e.arrow, choices), identity_span(e.arrow.target()), "counit");
    return out;
}

}
