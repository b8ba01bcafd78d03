#pragma once
// Exact word-problem oracle, independent of the lamination machinery.
//
// A braid on n strands acts on the fundamental group of the disk with n+1
// punctures q_1 < ... < q_{n+1} (q_1 stays fixed; q_{i+1} carries strand i).
// With x_j the standard loop around q_j, sigma_i acts by
//     x_{i+1} -> x_{i+1} x_{i+2} x_{i+1}^{-1},   x_{i+2} -> x_{i+1},
// and this action is faithful, so comparing the images of the generators
// solves the word problem exactly.
//
// The CoordinateState additionally exposes a curve-coordinate tuple of
// 2(n-1) integers: intersection counts of the test multicurve
// {L_1, ..., L_{n-1}} (L_t encircles q_1..q_{t+1}) with vertical rays above
// and below each interior puncture (a_i) and with the vertical lines between
// consecutive punctures (b_i).  The counts are taken on a canonical
// representative obtained from the reduced image words by expanding each
// curve word into its sequence of ray crossings and cancelling adjacent
// double crossings of the same ray.  The representative is canonical (a
// deterministic function of the freely reduced images, hence a braid
// invariant) but not always taut, so the tuple is an upper bound for the
// minimal intersection numbers; it is used for reporting, while equality
// always goes through the images.  All quantities are exact integer counts.

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "braid/word.hpp"

namespace braid {

using FWord = std::vector<int>;  // freely reduced word over x_1..x_N, letters +-j

inline void fw_push(FWord& w, int g) {
    if (!w.empty() && w.back() == -g)
        w.pop_back();
    else
        w.push_back(g);
}

inline void fw_append(FWord& w, const FWord& v, bool inverted = false) {
    if (!inverted) {
        for (int g : v) fw_push(w, g);
    } else {
        for (auto it = v.rbegin(); it != v.rend(); ++it) fw_push(w, -*it);
    }
}

struct CoordinateState {
    int n = 2;
    std::vector<long long> coords;   // (a_1, b_1, ..., a_{n-1}, b_{n-1})
    std::vector<FWord> images;       // images of x_2 .. x_{n+1}

    // Faithful comparison: equal automorphisms <=> equal braids.
    bool operator==(const CoordinateState& o) const {
        return n == o.n && images == o.images;
    }
};

namespace detail {

// One cut-sequence element: a ray crossing plus the column the curve sits in
// until the next crossing.  Ray (j, up?) is the vertical ray at puncture q_j;
// column c is the region between q_c and q_{c+1} (column 0: left of q_1).
struct CutElem {
    int punc;
    bool up;
    int col;
};

// Expand a freely+cyclically reduced curve word into its reduced cut sequence.
inline std::vector<CutElem> cut_sequence(const FWord& word) {
    std::vector<CutElem> seq;
    seq.reserve(word.size() * 4);
    auto emit = [&seq](int j, bool up, int col) {
        if (!seq.empty() && seq.back().punc == j && seq.back().up == up) {
            seq.pop_back();  // immediate double crossing of one ray: a bigon
        } else {
            seq.push_back({j, up, col});
        }
    };
    for (int g : word) {
        int j = g > 0 ? g : -g;
        for (int t = 1; t < j; ++t) emit(t, false, t);
        if (g > 0) {
            emit(j, false, j);
            emit(j, true, j - 1);
        } else {
            emit(j, true, j);
            emit(j, false, j - 1);
        }
        for (int t = j - 1; t >= 1; --t) emit(t, false, t - 1);
    }
    // cyclic reduction across the seam
    while (seq.size() >= 2 && seq.front().punc == seq.back().punc &&
           seq.front().up == seq.back().up) {
        seq.pop_back();
        seq.erase(seq.begin());
    }
    return seq;
}

}  // namespace detail

// Intersection counts of the multicurve of `state` with the vertical rays
// (u, d per puncture) and vertical mid-lines (v per column), plus the number
// of axis crossings per column.  Sizes: u,d indexed 1..n+1; v, axis 0..n+1.
struct CurveCounts {
    std::vector<long long> u, d, v, axis;
};

inline CurveCounts curve_counts(const CoordinateState& state) {
    const int N = state.n + 1;
    CurveCounts c;
    c.u.assign(N + 2, 0);
    c.d.assign(N + 2, 0);
    c.v.assign(N + 2, 0);
    c.axis.assign(N + 2, 0);
    for (int t = 1; t <= state.n - 1; ++t) {
        FWord word;
        fw_push(word, 1);  // x_1 is fixed by every braid
        for (int j = 2; j <= t + 1; ++j) fw_append(word, state.images[j - 2]);
        // cyclic free reduction
        while (word.size() >= 2 && word.front() == -word.back()) {
            word.pop_back();
            word.erase(word.begin());
        }
        auto seq = detail::cut_sequence(word);
        if (seq.empty()) throw std::logic_error("curve cut sequence vanished");
        for (std::size_t s = 0; s < seq.size(); ++s) {
            const auto& e = seq[s];
            const auto& f = seq[(s + 1) % seq.size()];
            (e.up ? c.u : c.d)[e.punc] += 1;
            if (e.col < 0 || e.col > N) throw std::logic_error("cut column out of range");
            if (e.punc != f.punc) c.v[e.col] += 1;       // crosses the mid-line
            if (e.up != f.up) c.axis[e.col] += 1;        // crosses the axis
        }
    }
    return c;
}

inline void recompute_coords(CoordinateState& state) {
    CurveCounts c = curve_counts(state);
    state.coords.assign(2 * (state.n - 1), 0);
    for (int i = 1; i <= state.n - 1; ++i) {
        long long ua = c.u[i + 1], da = c.d[i + 1];
        long long dv = c.v[i] - c.v[i + 1];
        if ((ua - da) % 2 || dv % 2) throw std::logic_error("odd intersection parity");
        state.coords[2 * (i - 1)] = (ua - da) / 2;
        state.coords[2 * (i - 1) + 1] = dv / 2;
    }
}

inline CoordinateState identity_state(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    CoordinateState s;
    s.n = n;
    s.images.resize(n);
    for (int j = 2; j <= n + 1; ++j) s.images[j - 2] = {j};
    recompute_coords(s);
    return s;
}

// Total letters the oracle may hold before reporting blow-up (never wraps).
inline constexpr std::size_t kCoordinateSizeBudget = std::size_t(1) << 27;

inline CoordinateState coordinate_action(const CoordinateState& state, const ArtinWord& w) {
    if (w.n != state.n) throw std::invalid_argument("strand count mismatch");
    if (!w.valid()) throw std::invalid_argument("invalid Artin word");
    CoordinateState s = state;
    for (int g : w.letters) {
        int i = g > 0 ? g : -g;
        FWord& a = s.images[i - 1];  // image of x_{i+1}
        FWord& b = s.images[i];      // image of x_{i+2}
        if (g > 0) {
            // x_{i+1} -> x_{i+1} x_{i+2} x_{i+1}^{-1},  x_{i+2} -> x_{i+1}
            FWord na;
            na.reserve(a.size() * 2 + b.size());
            fw_append(na, a);
            fw_append(na, b);
            fw_append(na, a, true);
            b = a;
            a = std::move(na);
        } else {
            // x_{i+1} -> x_{i+2},  x_{i+2} -> x_{i+2}^{-1} x_{i+1} x_{i+2}
            FWord nb;
            nb.reserve(b.size() * 2 + a.size());
            fw_append(nb, b, true);
            fw_append(nb, a);
            fw_append(nb, b);
            a.swap(b);
            b = std::move(nb);
        }
        std::size_t total = 0;
        for (const auto& im : s.images) total += im.size();
        if (total > kCoordinateSizeBudget)
            throw std::overflow_error("coordinate oracle size budget exceeded");
    }
    recompute_coords(s);
    return s;
}

inline bool oracle_trivial(const ArtinWord& w) {
    CoordinateState id = identity_state(w.n);
    return coordinate_action(id, w) == id;
}

inline bool oracle_equal(const ArtinWord& w1, const ArtinWord& w2) {
    if (w1.n != w2.n) throw std::invalid_argument("strand count mismatch");
    return oracle_trivial(concat(invert(w1), w2));
}

}  // namespace braid
