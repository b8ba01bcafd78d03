#include "braid/lamination.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace braid {

namespace {

bool is_puncture(int item) { return item < 0; }
int puncture_index(int item) { return -item - 1; }

// Renumber crossing ids to their left-to-right rank and recompute curve labels.
// Throws std::logic_error when the structural invariants fail.
void canonicalize(Lamination& L) {
    const int m = L.crossings();
    std::vector<int> rank(m, -1);
    int next = 0;
    for (int item : L.axis)
        if (!is_puncture(item)) rank[item] = next++;
    if (next != m) throw std::logic_error("axis does not list every crossing once");

    std::vector<int> up(m), low(m);
    for (int id = 0; id < m; ++id) {
        up[rank[id]] = rank[L.upper[id]];
        low[rank[id]] = rank[L.lower[id]];
    }
    for (int& item : L.axis)
        if (!is_puncture(item)) item = rank[item];
    L.upper = std::move(up);
    L.lower = std::move(low);

    // relabel punctures by axis order (the braid action permutes them)
    int pn = 0;
    for (int& item : L.axis)
        if (is_puncture(item)) item = -(pn++) - 1;
    if (pn != L.n + 1) throw std::logic_error("wrong number of punctures");

    // derive curve labels by the alternating traversal
    for (int id = 0; id < m; ++id) {
        if (L.upper[id] == id || L.lower[id] == id)
            throw std::logic_error("crossing matched with itself");
        if (L.upper[L.upper[id]] != id || L.lower[L.lower[id]] != id)
            throw std::logic_error("matching is not an involution");
    }
    std::vector<int> pos(m);  // canonical ids: position on axis restricted to crossings
    {
        int r = 0;
        for (int item : L.axis)
            if (!is_puncture(item)) pos[item] = r++;
    }
    // puncture positions measured in "number of crossings to the left"
    std::vector<int> left_of_puncture(L.n + 1, 0);
    {
        int seen = 0, pj = 0;
        for (int item : L.axis) {
            if (is_puncture(item))
                left_of_puncture[pj++] = seen;
            else
                ++seen;
        }
    }

    L.curve.assign(m, -1);
    std::vector<int> label_used(L.n + 1, 0);
    int cycles = 0;
    for (int start = 0; start < m; ++start) {
        if (L.curve[start] != -1) continue;
        // collect the cycle
        std::vector<int> cyc;
        int c = start;
        do {
            cyc.push_back(c);
            L.curve[c] = -2;  // visiting
            int d = L.upper[c];
            cyc.push_back(d);
            L.curve[d] = -2;
            c = L.lower[d];
        } while (c != start);
        ++cycles;
        // count crossings of this cycle left of each puncture
        std::sort(cyc.begin(), cyc.end());
        auto count_left = [&](int threshold) {
            return int(std::lower_bound(cyc.begin(), cyc.end(), threshold) - cyc.begin());
        };
        if (count_left(left_of_puncture[0]) != 1)
            throw std::logic_error("curve must cross exactly once left of the fixed puncture");
        int label = 0;
        for (int j = 1; j <= L.n; ++j)
            if (count_left(left_of_puncture[j]) % 2) ++label;
        if (label_used[label]++)
            throw std::logic_error("duplicate curve label");
        for (int id : cyc) L.curve[id] = label;
    }
    if (cycles != L.n + 1) throw std::logic_error("wrong number of curves");

    // each matching must be non-crossing
    for (const auto* match : {&L.upper, &L.lower}) {
        std::vector<int> stack;
        for (int item : L.axis) {
            if (is_puncture(item)) continue;
            if (!stack.empty() && (*match)[stack.back()] == item)
                stack.pop_back();
            else
                stack.push_back(item);
        }
        if (!stack.empty()) throw std::logic_error("matching has crossing arcs");
    }
}

}  // namespace

int puncture_pos(const Lamination& L, int j) {
    for (int i = 0; i < int(L.axis.size()); ++i)
        if (L.axis[i] == -(j + 1)) return i;
    throw std::invalid_argument("puncture index out of range");
}

int crossing_pos(const Lamination& L, int id) {
    // canonical ids are axis ranks, so scan for the id directly
    for (int i = 0; i < int(L.axis.size()); ++i)
        if (L.axis[i] == id) return i;
    throw std::invalid_argument("crossing id out of range");
}

ArcRef arc_at(const Lamination& L, int id, bool up) {
    int other = up ? L.upper[id] : L.lower[id];
    return ArcRef{up, std::min(id, other), std::max(id, other)};
}

Iv arc_cover(const Lamination& L, const ArcRef& a) {
    int lo = L.n + 1, hi = -1;
    int lpos = crossing_pos(L, a.left), rpos = crossing_pos(L, a.right);
    for (int i = lpos + 1; i < rpos; ++i)
        if (is_puncture(L.axis[i])) {
            int j = puncture_index(L.axis[i]);
            lo = std::min(lo, j);
            hi = std::max(hi, j);
        }
    return Iv{lo, hi};
}

Lamination trivial(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    Lamination L;
    L.n = n;
    // axis: x_n ... x_1 x_0 P0 y_0 P1 y_1 ... Pn y_n, with (x_j, y_j) matched
    // on both sides; after renumbering x_j gets id n-j and y_j gets id n+1+j.
    const int m = 2 * (n + 1);
    L.upper.resize(m);
    L.lower.resize(m);
    for (int j = n; j >= 0; --j) L.axis.push_back(n - j);  // x_j
    L.axis.push_back(-1);                                  // P0
    for (int j = 0; j <= n; ++j) {
        L.axis.push_back(n + 1 + j);            // y_j
        if (j < n) L.axis.push_back(-(j + 2));  // P_{j+1}
    }
    for (int j = 0; j <= n; ++j) {
        int x = n - j, y = n + 1 + j;
        L.upper[x] = y;
        L.upper[y] = x;
        L.lower[x] = y;
        L.lower[y] = x;
    }
    canonicalize(L);
    return L;
}

int norm(const Lamination& L) { return L.crossings(); }

Lamination transport(const Lamination& L, int j, int gap_after, bool upper_side) {
    if (j < 1 || j > L.n) throw std::invalid_argument("only mobile punctures move");
    const int ppos = puncture_pos(L, j);
    if (gap_after == ppos || gap_after == ppos - 1) {
        Lamination copy = L;  // lands back in its own gap: nothing happens
        return copy;
    }
    const bool leftward = gap_after < ppos;
    // crossings strictly between the puncture and the landing gap, in axis order
    std::vector<int> dragged;
    {
        int lo = leftward ? gap_after + 1 : ppos + 1;
        int hi = leftward ? ppos - 1 : gap_after;
        for (int i = lo; i <= hi; ++i)
            if (!is_puncture(L.axis[i])) dragged.push_back(L.axis[i]);
    }
    const int m = L.crossings();
    const int dm = int(dragged.size());
    Lamination R;
    R.n = L.n;
    R.upper = L.upper;
    R.lower = L.lower;
    R.upper.resize(m + 2 * dm);
    R.lower.resize(m + 2 * dm);
    // new crossings: tL(dragged[t]) = m + 2t, tR(dragged[t]) = m + 2t + 1
    std::vector<int> tl(dragged.size()), tr(dragged.size());
    std::vector<int> drag_slot(m, -1);
    for (int t = 0; t < dm; ++t) {
        tl[t] = m + 2 * t;
        tr[t] = m + 2 * t + 1;
        drag_slot[dragged[t]] = t;
    }
    auto& same = upper_side ? R.upper : R.lower;  // side the path runs on
    auto& opp = upper_side ? R.lower : R.upper;
    const auto& same_old = upper_side ? L.upper : L.lower;
    auto link = [](std::vector<int>& match, int a, int b) {
        match[a] = b;
        match[b] = a;
    };
    for (int t = 0; t < dm; ++t) {
        int c = dragged[t];
        int e = same_old[c];
        link(opp, tl[t], tr[t]);  // the detour cap around the landed puncture
        if (leftward) {
            link(same, tr[t], c);
            if (drag_slot[e] == -1)
                link(same, tl[t], e);
            else if (e > c)  // both arms dragged: wire the two inner stubs once
                link(same, tl[t], tl[drag_slot[e]]);
        } else {
            link(same, c, tl[t]);
            if (drag_slot[e] == -1)
                link(same, tr[t], e);
            else if (e > c)
                link(same, tr[t], tr[drag_slot[e]]);
        }
    }
    // rebuild the axis: drop the puncture, insert the landing block
    R.axis.reserve(L.axis.size() + 2 * dm);
    for (int i = 0; i < int(L.axis.size()); ++i) {
        if (i == ppos) continue;
        R.axis.push_back(L.axis[i]);
        if (i == gap_after) {
            // first-crossed strand wraps innermost around the landed puncture
            if (leftward) {
                for (int t = 0; t < dm; ++t) R.axis.push_back(tl[t]);
                R.axis.push_back(-(j + 1));
                for (int t = dm - 1; t >= 0; --t) R.axis.push_back(tr[t]);
            } else {
                for (int t = dm - 1; t >= 0; --t) R.axis.push_back(tl[t]);
                R.axis.push_back(-(j + 1));
                for (int t = 0; t < dm; ++t) R.axis.push_back(tr[t]);
            }
        }
    }
    canonicalize(R);
    return R;
}

Lamination tighten(Lamination L) {
    // remove useless bigons (arcs with axis-adjacent endpoints) left to right
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < int(L.axis.size()); ++i) {
            int a = L.axis[i], b = L.axis[i + 1];
            if (is_puncture(a) || is_puncture(b)) continue;
            for (auto* same : {&L.upper, &L.lower}) {
                if ((*same)[a] != b) continue;
                auto& opp = (same == &L.upper) ? L.lower : L.upper;
                int x = opp[a], y = opp[b];
                if (x == b) throw std::logic_error("closed component in tighten");
                opp[x] = y;
                opp[y] = x;
                L.axis.erase(L.axis.begin() + i, L.axis.begin() + i + 2);
                // compact the two dead ids out of the matchings
                std::vector<int> remap(L.crossings());
                int next = 0;
                for (int id = 0; id < L.crossings(); ++id)
                    remap[id] = (id == a || id == b) ? -1 : next++;
                std::vector<int> up(next), low(next);
                for (int id = 0; id < L.crossings(); ++id) {
                    if (remap[id] == -1) continue;
                    up[remap[id]] = remap[L.upper[id]];
                    low[remap[id]] = remap[L.lower[id]];
                }
                for (int& item : L.axis)
                    if (!is_puncture(item)) item = remap[item];
                L.upper = std::move(up);
                L.lower = std::move(low);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    canonicalize(L);
    return L;
}

Lamination apply_artin(const Lamination& L, int g) {
    int i = g > 0 ? g : -g;
    if (i < 1 || i >= L.n) throw std::invalid_argument("generator out of range");
    // sigma_i carries p_{i+1} left below the axis to just left of p_i;
    // sigma_i^{-1} does the same above the axis.
    int target = puncture_pos(L, i) - 1;
    return tighten(transport(L, i + 1, target, /*upper_side=*/g < 0));
}

Lamination apply_artin_word(const Lamination& L, const ArtinWord& w) {
    if (w.n != L.n) throw std::invalid_argument("strand count mismatch");
    if (!w.valid()) throw std::invalid_argument("invalid Artin word");
    Lamination cur = L;
    for (int g : w.letters) cur = apply_artin(cur, g);
    return cur;
}

Lamination apply_sliding(const Lamination& L, const SlidingLetter& s) {
    if (s.k < 1 || s.k >= s.l || s.l > L.n) throw std::invalid_argument("bad sliding letter");
    switch (s.q) {
        case Quad::UR:  // p_k travels right above the others, landing past p_l
            return tighten(transport(L, s.k, puncture_pos(L, s.l), true));
        case Quad::LR:
            return tighten(transport(L, s.k, puncture_pos(L, s.l), false));
        case Quad::UL:  // p_l travels left above the others, landing before p_k
            return tighten(transport(L, s.l, puncture_pos(L, s.k) - 1, true));
        case Quad::LL:
            return tighten(transport(L, s.l, puncture_pos(L, s.k) - 1, false));
    }
    throw std::logic_error("unreachable");
}

Lamination lam(const ArtinWord& w) { return apply_artin_word(trivial(w.n), w); }

bool canonical_equal(const Lamination& L1, const Lamination& L2) { return L1 == L2; }

std::vector<ArcRef> bigons(const Lamination& L) {
    // an arc is a bigon when no crossing lies strictly between its endpoints
    std::vector<int> crossings_before(L.axis.size() + 1, 0);
    for (int i = 0; i < int(L.axis.size()); ++i)
        crossings_before[i + 1] = crossings_before[i] + (is_puncture(L.axis[i]) ? 0 : 1);
    std::vector<ArcRef> out;
    for (int i = 0; i < int(L.axis.size()); ++i) {
        int id = L.axis[i];
        if (is_puncture(id)) continue;
        for (bool up : {true, false}) {
            int other = up ? L.upper[id] : L.lower[id];
            if (other < id) continue;  // report each arc once, from its left end
            int j = crossing_pos(L, other);
            if (crossings_before[j] - crossings_before[i + 1] == 0)
                out.push_back(ArcRef{up, id, other});
        }
    }
    return out;
}

bool is_tight(const Lamination& L) {
    // tight <=> every arc covers at least one puncture
    std::vector<int> punctures_before(L.crossings(), 0);
    {
        int p = 0;
        for (int item : L.axis) {
            if (is_puncture(item))
                ++p;
            else
                punctures_before[item] = p;
        }
    }
    for (int id = 0; id < L.crossings(); ++id)
        for (const auto* match : {&L.upper, &L.lower}) {
            int other = (*match)[id];
            if (other < id) continue;
            if (punctures_before[other] == punctures_before[id]) return false;
        }
    return true;
}

int rightmost_bigon_puncture(const Lamination& L, ArcRef* bigon_out) {
    int best = -1;
    ArcRef best_arc;
    for (const ArcRef& b : bigons(L)) {
        Iv cov = arc_cover(L, b);
        if (cov.empty()) continue;       // only in non-tight input
        int k = cov.hi;                  // tight: exactly one puncture
        if (k >= 1 && k > best) {
            best = k;
            best_arc = b;
        }
    }
    if (bigon_out && best != -1) *bigon_out = best_arc;
    return best;
}

namespace {

// nearest crossing strictly left (step=-1) or right (step=+1) of axis index i
int neighbor_crossing(const Lamination& L, int pos, int step) {
    for (int i = pos + step; i >= 0 && i < int(L.axis.size()); i += step)
        if (!is_puncture(L.axis[i])) return L.axis[i];
    throw std::logic_error("no neighbor crossing on that side");
}

}  // namespace

ShadowTable shadow(const Lamination& L) {
    if (!is_tight(L)) throw std::invalid_argument("shadow requires a tight lamination");
    ShadowTable t;
    t.n = L.n;
    t.entries.resize(4 * L.n);
    for (int i = 1; i <= L.n; ++i) {
        int pos = puncture_pos(L, i);
        for (bool plus : {false, true}) {
            int c = neighbor_crossing(L, pos, plus ? +1 : -1);
            for (bool up : {false, true})
                t.entries[ShadowTable::slot(i, plus, up)] = arc_cover(L, arc_at(L, c, up));
        }
    }
    return t;
}

ExtendedShadowTable extended_shadow(const Lamination& L) {
    if (!is_tight(L)) throw std::invalid_argument("extended shadow requires a tight lamination");
    ExtendedShadowTable t;
    t.n = L.n;
    t.entries.resize(4 * L.n);
    int k = rightmost_bigon_puncture(L);
    for (int i = 1; i <= L.n; ++i) {
        int pos = puncture_pos(L, i);
        for (bool plus : {false, true}) {
            int c = neighbor_crossing(L, pos, plus ? +1 : -1);
            for (bool up : {false, true}) {
                ArcRef a = arc_at(L, c, up);
                Iv I = arc_cover(L, a);
                Iv J;  // empty unless the rightmost bigon puncture is covered
                if (k != -1 && I.contains(k)) {
                    ArcRef other = arc_at(L, a.right, !up);
                    J = arc_cover(L, other);
                }
                t.entries[ShadowTable::slot(i, plus, up)] = {I, J};
            }
        }
    }
    return t;
}

std::pair<ArcRef, ArcRef> second_right_arcs(const Lamination& L, int i) {
    if (i < 0 || i >= L.n) throw std::invalid_argument("puncture has no second right crossing");
    int pos = puncture_pos(L, i);
    int first = neighbor_crossing(L, pos, +1);
    int second = neighbor_crossing(L, crossing_pos(L, first), +1);
    return {arc_at(L, second, true), arc_at(L, second, false)};
}

namespace {

// the endpoint of A not shared with p_k's bigon (whose endpoints are p_k's
// neighbor crossings), i.e. the landing target of the slide
int far_endpoint(const Lamination& L, int k, const ArcRef& A) {
    int pos = puncture_pos(L, k);
    int ln = neighbor_crossing(L, pos, -1);
    int rn = neighbor_crossing(L, pos, +1);
    bool left_shared = (A.left == ln || A.left == rn);
    bool right_shared = (A.right == ln || A.right == rn);
    if (left_shared == right_shared)
        throw std::invalid_argument("arc must share exactly one endpoint with the bigon");
    return left_shared ? A.right : A.left;
}

}  // namespace

Lamination slide(const Lamination& L, int k, const ArcRef& A) {
    if (arc_cover(L, A).contains(0))
        throw std::invalid_argument("cannot slide along an arc covering the fixed puncture");
    int fpos = crossing_pos(L, far_endpoint(L, k, A));
    bool leftward = fpos < puncture_pos(L, k);
    return transport(L, k, leftward ? fpos : fpos - 1, A.up);
}

RelaxChoice rightmost_relaxable(const Lamination& L) {
    RelaxChoice c;
    int k = rightmost_bigon_puncture(L, &c.B);
    if (k < 1) throw std::invalid_argument("trivial lamination cannot be relaxed");
    c.k = k;
    ArcRef A2 = arc_at(L, c.B.right, !c.B.up);
    ArcRef A1 = arc_at(L, c.B.left, !c.B.up);
    c.A = !arc_cover(L, A2).contains(0) ? A2 : A1;
    if (c.A == c.B) throw std::logic_error("slide arc equals the bigon");
    if (arc_cover(L, c.A).contains(0))
        throw std::logic_error("both candidate arcs cover the fixed puncture");
    if (crossing_pos(L, c.A.left) >= crossing_pos(L, c.B.left))
        throw std::logic_error("slide arc must start strictly left of the bigon");
    c.leftward = crossing_pos(L, far_endpoint(L, k, c.A)) < puncture_pos(L, k);
    return c;
}

SlidingLetter relaxing_letter(const Lamination& L, int k, const ArcRef& B, const ArcRef& A) {
    (void)B;
    int fpos = crossing_pos(L, far_endpoint(L, k, A));
    // landing interval (p_i, p_{i+1}): i + 1 punctures lie left of the target
    int i = -1;
    for (int p = 0; p < fpos; ++p)
        if (is_puncture(L.axis[p])) ++i;
    if (i < 0) throw std::logic_error("slide target left of the fixed puncture");
    if (i == k) throw std::logic_error("slide stays within the puncture's own gap");
    if (i <= k - 1) return SlidingLetter{A.up ? Quad::UL : Quad::LL, i + 1, k};
    return SlidingLetter{A.up ? Quad::UR : Quad::LR, k, i};
}

SlidingLetter relaxing_braid(const Lamination& L) {
    RelaxChoice c = rightmost_relaxable(L);
    return relaxing_letter(L, c.k, c.B, c.A);
}

void validate(const Lamination& L, bool require_tight) {
    Lamination copy = L;
    canonicalize(copy);
    if (copy != L) throw std::logic_error("lamination is not in canonical form");
    if (L.axis.empty() || L.axis[0] < 0)
        throw std::logic_error("fixed puncture must have a crossing on its left");
    // punctures must appear in order 0..n (canonicalize relabels, so check axis)
    int expect = 0;
    for (int item : L.axis)
        if (is_puncture(item)) {
            if (puncture_index(item) != expect++) throw std::logic_error("puncture order broken");
        }
    if (require_tight && !is_tight(L)) throw std::logic_error("lamination is not tight");
}

std::string debug_dump(const Lamination& L) {
    std::ostringstream os;
    os << "n=" << L.n << " norm=" << norm(L) << "\naxis:";
    for (int item : L.axis) {
        if (is_puncture(item))
            os << " P" << puncture_index(item);
        else
            os << ' ' << item;
    }
    os << "\nupper:";
    for (int id = 0; id < L.crossings(); ++id)
        if (L.upper[id] > id) os << " (" << id << ',' << L.upper[id] << ')';
    os << "\nlower:";
    for (int id = 0; id < L.crossings(); ++id)
        if (L.lower[id] > id) os << " (" << id << ',' << L.lower[id] << ')';
    os << "\ncurve:";
    for (int id = 0; id < L.crossings(); ++id) os << ' ' << L.curve[id];
    os << '\n';
    return os.str();
}

Lamination assemble(int n, const std::vector<int>& axis_items,
                    const std::vector<std::pair<int, int>>& upper_pairs,
                    const std::vector<std::pair<int, int>>& lower_pairs) {
    Lamination L;
    L.n = n;
    int pj = 0;
    for (int item : axis_items)
        L.axis.push_back(item < 0 ? -(++pj) : item);
    int m = int(upper_pairs.size() + lower_pairs.size());
    L.upper.assign(m, -1);
    L.lower.assign(m, -1);
    for (auto [a, b] : upper_pairs) {
        L.upper[a] = b;
        L.upper[b] = a;
    }
    for (auto [a, b] : lower_pairs) {
        L.lower[a] = b;
        L.lower[b] = a;
    }
    canonicalize(L);
    validate(L);
    return L;
}

}  // namespace braid
