#pragma once
// Automaticity experiments for the relaxation normal form.
//
// Everything here runs on the Artin-letter variant of the normal form: each
// letter UR(k,l) of a normal word is spelled sigma_k ... sigma_{l-1} and each
// LR(k,l) is spelled sigma_k^{-1} ... sigma_{l-1}^{-1}, so the alphabet is the
// set of signed Artin generators.  Difference-set product automata track the
// quotient mu^{-1} x lambda of two normal words read in parallel; the normal
// form is (a)synchronously automatic iff some finite set T of braids supports
// every generator, which check_witness/search_witness test constructively.

#include <cstddef>
#include <string>
#include <vector>

#include "braid/automaton.hpp"
#include "braid/word.hpp"

namespace braid {

// DFA over the 2(n-1) signed Artin generators; -1 is the implicit dead state
struct ArtinDFA {
    int n = 2;
    int initial = 0;
    std::vector<std::vector<int>> delta;
    std::vector<char> accepting;

    int states() const { return static_cast<int>(delta.size()); }
    int letters() const { return 2 * (n - 1); }
    bool operator==(const ArtinDFA&) const = default;
};

// signed generator g <-> letter index
int artin_letter_index(int n, int g);
int artin_letter_of(int n, int index);

// the normal-form language respelled over Artin letters (determinized and
// minimized)
ArtinDFA expand_automaton(const NormalFormDFA& M);
ArtinDFA minimize(const ArtinDFA& A);
bool accepts(const ArtinDFA& A, const ArtinWord& w);
bool language_equal(const ArtinDFA& A, const ArtinDFA& B);

enum class Timing { Async, Sync };
enum class Side { Left, Right };
std::string to_string(Timing t);
std::string to_string(Side s);

// candidate difference set: all braids of Artin length <= radius, one
// representative per group element, in deterministic discovery order
struct DifferenceSet {
    int n = 2;
    int radius = 0;
    std::vector<ArtinWord> elements;  // element 0 is the identity
    std::size_t size() const { return elements.size(); }
};
DifferenceSet braid_ball(int n, int radius);

struct ProductAutomaton {
    int n = 2;
    Timing timing = Timing::Async;
    Side side = Side::Left;
    int anchor = 0;  // the signed generator g
    int initial = 0;
    std::vector<char> accepting;
    struct Edge {
        int lambda = 0, mu = 0, to = 0;  // letter indices; letters() means epsilon
    };
    std::vector<std::vector<Edge>> edges;
    std::vector<int> diff_index;  // per state: the tracked element of T
    int states() const { return static_cast<int>(edges.size()); }
};

// product of the base automaton with itself, tracking mu^{-1} x lambda in T
ProductAutomaton build_product(const ArtinDFA& base, const DifferenceSet& T, int g,
                               Timing timing, Side side,
                               std::size_t state_budget = 5'000'000);

// DFA for the words obtained by erasing the epsilon padding from the chosen
// component of every accepted pair word
ArtinDFA epsilon_reduce(const ProductAutomaton& P, Side component = Side::Left,
                        std::size_t state_budget = 2'000'000);

// true iff T witnesses automaticity: for every signed generator g, the
// epsilon-reductions of the product language equal the normal-form language
bool check_witness(const ArtinDFA& base, const DifferenceSet& T, Timing timing, Side side,
                   std::size_t state_budget = 5'000'000);

// shrink a verified witness to the elements actually tracked on useful product
// states (accessible and co-accessible), re-verifying the result
DifferenceSet prune_witness(const ArtinDFA& base, const DifferenceSet& T, Timing timing,
                            Side side, std::size_t state_budget = 5'000'000);

struct WitnessResult {
    bool found = false;      // a witness set was verified
    bool exhausted = false;  // budget ran out before refutation or success
    int n = 0;
    Timing timing = Timing::Async;
    Side side = Side::Left;
    int radius = 0;           // ball radius of the last candidate
    std::size_t t_size = 0;   // cardinality of the last candidate
    std::string note;
};
WitnessResult search_witness(int n, Timing timing, Side side, int max_radius,
                             std::size_t max_t_size = 1000,
                             std::size_t state_budget = 5'000'000);

// the two four-strand families whose prefixes drift apart without bound
struct FamilyReport {
    bool ok = false;
    int max_k = 0;
    std::vector<std::string> lines;
    std::vector<long long> sync_divergence_norms;   // ||(sigma2^-1 sigma1)^-u||
    std::vector<long long> async_divergence_norms;  // ||sigma3^-l sigma1^l||
    std::string text() const;
    std::string json() const;
};
FamilyReport family_checks(int max_k = 6);

}  // namespace braid
