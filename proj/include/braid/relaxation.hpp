#pragma once
// The relaxation algorithm and its normal form, the word problem, and the
// classification of braids in the Dehornoy order.

#include <string>
#include <utility>

#include "braid/lamination.hpp"
#include "braid/word.hpp"

namespace braid {

// All strategies pick a bigon-covered puncture and slide it along one of the
// two arcs sharing an endpoint with its bigon; they differ only in which
// puncture and which arc they prefer.  Right is the default; its normal-form
// language is the one recognized by the shadow automaton.
enum class Strategy { Right, SimpleRight, Left, SimpleLeft, Outermost, RightCovered };

Strategy parse_strategy(const std::string& name);
std::string to_string(Strategy s);

struct RelaxResult {
    SlidingLetter letter;  // the relaxing braid applied (left-oriented for Right)
    Lamination next;       // tight lamination after the slide
};
RelaxResult relax_step(const Lamination& L, Strategy strategy = Strategy::Right);

// iterated relaxation: the normal form of the braid of w (empty iff trivial)
SlidingWord rnf(const ArtinWord& w, Strategy strategy = Strategy::Right);
SlidingWord rnf_of_lamination(const Lamination& L, Strategy strategy = Strategy::Right);

bool braid_equal(const ArtinWord& w1, const ArtinWord& w2);

struct PositivityClass {
    enum Kind { Trivial, Positive, Negative };
    Kind kind = Trivial;
    int index = 0;  // the i of sigma_i-positive / -negative; 0 for Trivial
    bool operator==(const PositivityClass&) const = default;
};
std::string to_string(const PositivityClass& c);

PositivityClass classify_geometric(const ArtinWord& w);
// scan of a right-oriented normal word; rejects UL/LL letters
PositivityClass classify_syntactic(const SlidingWord& v);

bool dehornoy_less(const ArtinWord& w1, const ArtinWord& w2);

// normal form of the variant that relaxes toward the right edge of the disk,
// obtained by conjugating the right normal form with the half-twist
SlidingWord left_variant_rnf(const ArtinWord& w);

}  // namespace braid
