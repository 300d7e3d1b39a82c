#pragma once

#include <functional>
#include <string>

#include "fracto/groupoid/covering.hpp"
#include "fracto/groupoid/functor.hpp"

namespace fracto {

enum class WKind { all_essential_equivalences, essential_coverings, user };

// The class of arrows to be inverted.
class WClass {
public:
    using Member = std::function<Membership(const GroupoidFunctor&)>;
    // (u, v) -> w with u v w in the class
    using Corrector = std::function<GroupoidFunctor(const GroupoidFunctor&, const GroupoidFunctor&)>;

    static WClass all_essential_equivalences();
    static WClass essential_coverings(SearchLimits limits = {});
    static WClass user(std::string name, Member member, Corrector c1);

    WKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    Membership contains(const GroupoidFunctor& f) const;
    GroupoidFunctor c1(const GroupoidFunctor& u, const GroupoidFunctor& v) const;

private:
    WKind kind_ = WKind::all_essential_equivalences;
    std::string name_;
    Member member_;
    Corrector c1_;
    SearchLimits limits_;
};

// First preimage of every object in the image of u v; the inclusion of the full
// subgroupoid of dom(v) on those objects makes u v w injective on objects.
GroupoidFunctor dedup_section(const GroupoidFunctor& u, const GroupoidFunctor& v);

// A square over the cospan (f : S -> B, u : T -> B):
//   back : R -> S, fwd : R -> T, cell : u fwd => f back.
struct Square {
    GroupoidFunctor back, fwd;
    NatTransformation cell;

    const GroupoidPtr& apex() const { return back.dom(); }
};

Square identity_square(const GroupoidFunctor& f);
// (back c, fwd c, cell c)
Square precompose(const Square& sq, const GroupoidFunctor& c);
// problems with sq as a square over (f, u); empty when valid
std::vector<std::string> check_square(const Square& sq, const GroupoidFunctor& f, const GroupoidFunctor& u);

struct Lifting {
    GroupoidFunctor companion; // always an identity here
    NatTransformation cell;
};

// literal: the chosen square is the iso-comma itself; compact: its full subgroupoid on component roots
enum class SquareChoice { literal, compact };

class ChoiceData {
public:
    explicit ChoiceData(WClass w = WClass::all_essential_equivalences(), SquareChoice squares = SquareChoice::literal);

    const WClass& wclass() const { return w_; }
    SquareChoice squares() const { return squares_; }

    GroupoidFunctor c1(const GroupoidFunctor& u, const GroupoidFunctor& v) const;
    Square c2(const GroupoidFunctor& f, const GroupoidFunctor& u) const;
    Lifting c3(const GroupoidFunctor& w, const GroupoidFunctor& f, const GroupoidFunctor& g,
               const NatTransformation& alpha) const;
    // zig-zag <-w- . -f-> . <-v- : square over (f, v), corrected so that w back is in the class
    Square c4(const GroupoidFunctor& w, const GroupoidFunctor& f, const GroupoidFunctor& v) const;
    // cospan of two class arrows
    Square c5(const GroupoidFunctor& w, const GroupoidFunctor& v) const;
    // alpha : w s1 => w s2 lifted to s1 => s2
    Lifting c6(const GroupoidFunctor& w, const GroupoidFunctor& s1, const GroupoidFunctor& s2,
               const NatTransformation& alpha) const;
    // beta : w f v => w f' v' lifted to f v => f' v'; uv is the class arrow the companion must keep in W
    Lifting c7(const GroupoidFunctor& uv, const GroupoidFunctor& w, const GroupoidFunctor& fv,
               const GroupoidFunctor& fv2, const NatTransformation& beta) const;

private:
    WClass w_;
    SquareChoice squares_;
};

}
