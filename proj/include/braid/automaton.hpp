#pragma once
// The finite automaton recognizing the language of relaxation normal words.
//
// States are extended shadows of braids.  dec(s, letter) decides whether the
// letter extends a normal word ending in state s, and comp(s, letter) computes
// the successor state from s alone, without touching any lamination.  BFS from
// the trivial state synthesizes the DFA; every reachable state is accepting
// (the language is closed under prefixes) and the dead state stays implicit.

#include <cstddef>
#include <string>
#include <vector>

#include "braid/lamination.hpp"
#include "braid/word.hpp"

namespace braid {

// True iff appending the right-oriented letter to a normal word whose braid
// has extended shadow s yields a normal word again.  The simple variant uses
// the acceptance condition of the simple-right relaxation strategy instead.
bool dec(const ExtendedShadowTable& s, const SlidingLetter& letter, bool simple_variant = false);

// Extended shadow of beta*letter computed from the extended shadow of beta.
// Requires dec(s, letter); the trivial state must be handled by the caller
// (its successors are computed geometrically).
ExtendedShadowTable comp(const ExtendedShadowTable& s, const SlidingLetter& letter);

struct NormalFormDFA {
    int n = 2;
    std::vector<SlidingLetter> alphabet;  // canonical order, n(n-1) letters
    int initial = 0;
    // delta[state][letter index] = target state, or -1 for the dead state
    std::vector<std::vector<int>> delta;
    // extended shadows of the states; empty after minimization or import
    std::vector<ExtendedShadowTable> tables;

    int states() const { return static_cast<int>(delta.size()); }
    bool operator==(const NormalFormDFA&) const = default;
};

std::vector<SlidingLetter> normal_alphabet(int n);

NormalFormDFA build_automaton(int n, bool simple_variant = false,
                              std::size_t state_budget = 10'000'000);

// language-equivalent minimal complete DFA, dead state elided, states
// renumbered canonically by BFS order
NormalFormDFA minimize(const NormalFormDFA& A);

bool accepts(const NormalFormDFA& A, const SlidingWord& v);
bool language_equal(const NormalFormDFA& A, const NormalFormDFA& B);

std::string to_json(const NormalFormDFA& A);
NormalFormDFA from_json(const std::string& text);
std::string to_dot(const NormalFormDFA& A);

// For every sign tuple e in {-1,+1}^m with m = floor((n-1)/2), the braid
// sigma_1^{e_1} sigma_3^{e_2} ... sigma_{2m-1}^{e_m} spells its own normal
// form, and any two distinct tuples land in distinct automaton states: if
// e_i = +1 and h_i = -1, extending by LR(2i, n) is allowed after the first
// braid but not after the second.  Running this certifies >= 2^m live states.
struct DistinguishReport {
    int n = 0;
    int m = 0;
    bool spellings_ok = false;      // every rnf matches the letterwise spelling
    bool extensions_ok = false;     // every differing pair separated by LR(2i,n)
    int pairs_checked = 0;
    int distinct_states = 0;        // states reached in the minimized automaton
    std::string details;            // human-readable per-tuple log
    bool ok() const { return spellings_ok && extensions_ok && distinct_states == (1 << m); }
};
DistinguishReport distinguishing_experiment(int n);

}  // namespace braid
