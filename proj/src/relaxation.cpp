#include "braid/relaxation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace braid {

Strategy parse_strategy(const std::string& name) {
    if (name == "right") return Strategy::Right;
    if (name == "simple-right") return Strategy::SimpleRight;
    if (name == "left") return Strategy::Left;
    if (name == "simple-left") return Strategy::SimpleLeft;
    if (name == "outermost") return Strategy::Outermost;
    if (name == "right-covered") return Strategy::RightCovered;
    throw std::invalid_argument("unknown strategy: " + name);
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Right: return "right";
        case Strategy::SimpleRight: return "simple-right";
        case Strategy::Left: return "left";
        case Strategy::SimpleLeft: return "simple-left";
        case Strategy::Outermost: return "outermost";
        case Strategy::RightCovered: return "right-covered";
    }
    throw std::logic_error("unreachable");
}

namespace {

// bigon-covered mobile punctures with their (unique) bigons
std::map<int, ArcRef> covered_punctures(const Lamination& L) {
    std::map<int, ArcRef> out;
    for (const ArcRef& b : bigons(L)) {
        Iv cov = arc_cover(L, b);
        if (cov.lo < 1) continue;  // covers only the fixed puncture
        if (!out.emplace(cov.lo, b).second)
            throw std::logic_error("puncture covered by two bigons");
    }
    return out;
}

// index of the innermost curve whose inside contains p_m
int innermost_enclosing_curve(const Lamination& L, int m) {
    int ppos = puncture_pos(L, m);
    std::vector<int> parity(L.n + 1, 0);
    for (int i = 0; i < ppos; ++i) {
        int item = L.axis[i];
        if (item >= 0) parity[L.curve[item]] ^= 1;
    }
    for (int c = 0; c <= L.n; ++c)
        if (parity[c]) return c;
    throw std::logic_error("puncture inside no curve");
}

// number of arcs of L covering p_m and no other puncture
int single_cover_count(const Lamination& L, int m) {
    int count = 0;
    for (int id = 0; id < L.crossings(); ++id)
        for (const auto* match : {&L.upper, &L.lower}) {
            int other = (*match)[id];
            if (other < id) continue;
            Iv cov = arc_cover(L, ArcRef{match == &L.upper, id, other});
            if (cov.lo == m && cov.hi == m) ++count;
        }
    return count;
}

}  // namespace

RelaxResult relax_step(const Lamination& L, Strategy strategy) {
    auto candidates = covered_punctures(L);
    if (candidates.empty()) throw std::invalid_argument("trivial lamination cannot be relaxed");

    int k = 0;
    switch (strategy) {
        case Strategy::Right:
        case Strategy::SimpleRight:
            k = candidates.rbegin()->first;
            break;
        case Strategy::Left:
        case Strategy::SimpleLeft:
            k = candidates.begin()->first;
            break;
        case Strategy::Outermost: {
            int best = -1;
            for (const auto& [m, b] : candidates) {
                int depth = innermost_enclosing_curve(L, m) - 1;
                if (depth >= best) {  // ties break to the rightmost puncture
                    best = depth;
                    k = m;
                }
            }
            break;
        }
        case Strategy::RightCovered: {
            int best = -1;
            for (const auto& [m, b] : candidates) {
                int count = single_cover_count(L, m);
                if (count >= best) {
                    best = count;
                    k = m;
                }
            }
            break;
        }
    }
    const ArcRef B = candidates.at(k);
    const ArcRef A2 = arc_at(L, B.right, !B.up);  // right neighbor arc
    const ArcRef A1 = arc_at(L, B.left, !B.up);   // left neighbor arc
    ArcRef A;
    switch (strategy) {
        case Strategy::SimpleRight:
            A = A1;
            break;
        case Strategy::SimpleLeft:
            A = A2;
            break;
        case Strategy::Left:
            A = !arc_cover(L, A1).contains(0) ? A1 : A2;
            break;
        default:  // Right, Outermost, RightCovered
            A = !arc_cover(L, A2).contains(0) ? A2 : A1;
            break;
    }
    if (arc_cover(L, A).contains(0))
        throw std::logic_error("selected slide arc covers the fixed puncture");

    RelaxResult r{relaxing_letter(L, k, B, A), tighten(slide(L, k, A))};
    if (norm(r.next) >= norm(L)) throw std::logic_error("relaxation did not decrease the norm");
    return r;
}

SlidingWord rnf_of_lamination(const Lamination& L, Strategy strategy) {
    SlidingWord steps{L.n, {}};
    Lamination cur = L;
    const Lamination target = trivial(L.n);
    while (!(cur == target)) {
        RelaxResult r = relax_step(cur, strategy);
        steps.letters.push_back(r.letter);
        cur = std::move(r.next);
    }
    return invert(steps);  // beta = alpha_k^{-1} ... alpha_1^{-1}
}

SlidingWord rnf(const ArtinWord& w, Strategy strategy) {
    return rnf_of_lamination(lam(w), strategy);
}

bool braid_equal(const ArtinWord& w1, const ArtinWord& w2) {
    if (w1.n != w2.n) throw std::invalid_argument("strand count mismatch");
    return lam(w1) == lam(w2);
}

std::string to_string(const PositivityClass& c) {
    switch (c.kind) {
        case PositivityClass::Trivial: return "Trivial";
        case PositivityClass::Positive: return "Positive(" + std::to_string(c.index) + ")";
        case PositivityClass::Negative: return "Negative(" + std::to_string(c.index) + ")";
    }
    throw std::logic_error("unreachable");
}

PositivityClass classify_geometric(const ArtinWord& w) {
    Lamination L = lam(w);
    if (L == trivial(w.n)) return {};
    ShadowTable t = shadow(L);
    int i = 0;  // first index whose neutrality condition fails
    for (int j = 1; j <= L.n; ++j) {
        if (!(t.at(j, true, true).contains(0) && t.at(j, true, false).contains(0))) {
            i = j;
            break;
        }
    }
    if (i == 0 || i > L.n - 1) throw std::logic_error("non-trivial braid looks neutral");
    auto [up, low] = second_right_arcs(L, i - 1);
    bool pos = !arc_cover(L, up).contains(0);
    bool neg = !arc_cover(L, low).contains(0);
    if (pos == neg) throw std::logic_error("positivity trichotomy violated");
    return {pos ? PositivityClass::Positive : PositivityClass::Negative, i};
}

PositivityClass classify_syntactic(const SlidingWord& v) {
    if (!v.right_oriented()) throw std::invalid_argument("normal words are right-oriented");
    if (v.letters.empty()) return {};
    int mink = v.letters[0].k;
    for (const SlidingLetter& s : v.letters) mink = std::min(mink, s.k);
    for (const SlidingLetter& s : v.letters)
        if (s.k == mink)
            return {s.q == Quad::UR ? PositivityClass::Positive : PositivityClass::Negative,
                    mink};
    throw std::logic_error("unreachable");
}

bool dehornoy_less(const ArtinWord& w1, const ArtinWord& w2) {
    if (w1.n != w2.n) throw std::invalid_argument("strand count mismatch");
    PositivityClass c = classify_geometric(concat(invert(w1), w2));
    return c.kind == PositivityClass::Positive;
}

SlidingWord left_variant_rnf(const ArtinWord& w) {
    // Conjugating a sliding braid by the half-twist flips both the vertical
    // side and the direction and reflects the indices:
    // UR(k,l) becomes LL(n+1-l,n+1-k), LR(k,l) becomes UL(n+1-l,n+1-k).
    SlidingWord v = rnf(phi_delta(w));
    for (SlidingLetter& s : v.letters) {
        s.q = quad_invert(quad_mirror(s.q));
        int k = s.k, l = s.l;
        s.k = v.n + 1 - l;
        s.l = v.n + 1 - k;
    }
    return v;
}

}  // namespace braid
