#pragma once
// Tight laminations of the punctured disk.
//
// A lamination is stored as its intersection pattern with the real axis:
// an ordered axis word whose items are punctures P0..Pn (P0 fixed) and
// crossings, plus two non-crossing perfect matchings on the crossings (upper
// and lower arcs).  Crossing ids are canonical: they equal the left-to-right
// rank of the crossing on the axis, so structural equality of the fields is
// equality of laminations.

#include <string>
#include <utility>
#include <vector>

#include "braid/word.hpp"

namespace braid {

struct Lamination {
    int n = 0;
    // axis item: -(j+1) encodes puncture j; values >= 0 are crossing ids
    std::vector<int> axis;
    std::vector<int> upper;  // crossing id -> upper partner
    std::vector<int> lower;  // crossing id -> lower partner
    std::vector<int> curve;  // crossing id -> curve index 0..n

    bool operator==(const Lamination&) const = default;
    int crossings() const { return static_cast<int>(upper.size()); }
};

struct ArcRef {
    bool up = true;
    int left = 0, right = 0;  // crossing ids, left < right in axis order
    bool operator==(const ArcRef&) const = default;
};

// Closed interval {lo..hi} of puncture indices; hi < lo encodes the empty set.
struct Iv {
    int lo = 0, hi = -1;
    bool empty() const { return hi < lo; }
    bool contains(int x) const { return lo <= x && x <= hi; }
    bool operator==(const Iv&) const = default;
};

struct ShadowTable {
    int n = 0;
    std::vector<Iv> entries;  // indexed by slot(i, plus, up)
    static int slot(int i, bool plus, bool up) { return 4 * (i - 1) + 2 * plus + up; }
    const Iv& at(int i, bool plus, bool up) const { return entries[slot(i, plus, up)]; }
    bool operator==(const ShadowTable&) const = default;
};

struct ExtendedShadowTable {
    int n = 0;
    std::vector<std::pair<Iv, Iv>> entries;  // (I, J); J empty unless k in I
    const std::pair<Iv, Iv>& at(int i, bool plus, bool up) const {
        return entries[ShadowTable::slot(i, plus, up)];
    }
    std::pair<Iv, Iv>& at(int i, bool plus, bool up) {
        return entries[ShadowTable::slot(i, plus, up)];
    }
    ShadowTable shadow_part() const {
        ShadowTable t;
        t.n = n;
        t.entries.reserve(entries.size());
        for (auto& e : entries) t.entries.push_back(e.first);
        return t;
    }
    bool operator==(const ExtendedShadowTable&) const = default;
};

// construction and the braid action
Lamination trivial(int n);
Lamination tighten(Lamination L);
Lamination apply_artin(const Lamination& L, int g);
Lamination apply_artin_word(const Lamination& L, const ArtinWord& w);
Lamination apply_sliding(const Lamination& L, const SlidingLetter& s);
Lamination lam(const ArtinWord& w);

// queries
int norm(const Lamination& L);
bool is_tight(const Lamination& L);
bool canonical_equal(const Lamination& L1, const Lamination& L2);
std::vector<ArcRef> bigons(const Lamination& L);
ShadowTable shadow(const Lamination& L);
ExtendedShadowTable extended_shadow(const Lamination& L);
std::pair<ArcRef, ArcRef> second_right_arcs(const Lamination& L, int i);

// position helpers (axis indexes)
int puncture_pos(const Lamination& L, int j);
int crossing_pos(const Lamination& L, int id);
ArcRef arc_at(const Lamination& L, int id, bool up);
// punctures covered by an arc, as a (possibly empty only for raw input) interval
Iv arc_cover(const Lamination& L, const ArcRef& a);

// rightmost mobile puncture covered by a bigon, with its bigon; k = -1 if none
int rightmost_bigon_puncture(const Lamination& L, ArcRef* bigon_out = nullptr);

// the relaxation choice of the default (right) strategy: rightmost
// bigon-covered puncture, slide along the arc at the bigon's right endpoint
// unless that arc covers the fixed puncture, else the one at its left endpoint
struct RelaxChoice {
    int k = 0;      // puncture to slide
    ArcRef B;       // its bigon
    ArcRef A;       // arc to slide along
    bool leftward = true;
};
RelaxChoice rightmost_relaxable(const Lamination& L);

// sliding braid performed when p_k slides along A (shared endpoint with B)
SlidingLetter relaxing_letter(const Lamination& L, int k, const ArcRef& B, const ArcRef& A);
// the relaxing braid of the default strategy
SlidingLetter relaxing_braid(const Lamination& L);

// the transport primitive: move puncture j so that it lands in the axis gap
// between items gap_after and gap_after+1, pushing every strand it crosses on
// the chosen side into a detour around the landing point; raw (not tightened)
Lamination transport(const Lamination& L, int j, int gap_after, bool upper_side);

// slide for the relaxation step: carry p_k along arc A to its far endpoint
Lamination slide(const Lamination& L, int k, const ArcRef& A);

// invariant checker (throws std::logic_error) and debugging helpers
void validate(const Lamination& L, bool require_tight = false);
std::string debug_dump(const Lamination& L);

// test helper: assemble a lamination from an axis pattern (-1 items become
// punctures numbered in order) and explicit matchings; validates
Lamination assemble(int n, const std::vector<int>& axis_items,
                    const std::vector<std::pair<int, int>>& upper_pairs,
                    const std::vector<std::pair<int, int>>& lower_pairs);

}  // namespace braid
