#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braid/coords.hpp"
#include "braid/lamination.hpp"
#include "braid/word.hpp"

using namespace braid;

namespace {

Lamination act(int n, std::vector<int> letters) {
    return lam(ArtinWord{n, std::move(letters)});
}

// the tight lamination of sigma_1^{-1} on two strands, assembled by hand
Lamination sigma1_inverse_n2() {
    return assemble(2, {0, 1, 2, -1, 3, 4, -1, 5, -1, 6, 7},
                    {{1, 4}, {5, 6}, {2, 3}, {0, 7}},
                    {{4, 5}, {1, 6}, {2, 3}, {0, 7}});
}

Lamination swap_sides(Lamination L) {
    std::swap(L.upper, L.lower);
    return L;
}

// the tight lamination of sigma_2^{-1} on three strands
Lamination sigma2_inverse_n3() {
    return assemble(3, {0, 1, 2, 3, -1, 4, -1, 5, 6, -1, 7, -1, 8, 9},
                    {{3, 4}, {2, 5}, {1, 6}, {7, 8}, {0, 9}},
                    {{3, 4}, {2, 5}, {6, 7}, {1, 8}, {0, 9}});
}

// the tight lamination of sigma_2 sigma_1 sigma_3^{-1} on four strands
Lamination fig5_lamination() {
    return assemble(
        4,
        {0, 1, 2, 3, 4, -1, 5, 6, 7, -1, 8, 9, -1, 10, 11, 12, -1, 13, 14, -1, 15, 16, 17},
        {{4, 5}, {3, 10}, {6, 9}, {2, 11}, {14, 15}, {7, 8}, {1, 12}, {13, 16}, {0, 17}},
        {{4, 5}, {9, 10}, {3, 6}, {11, 14}, {8, 15}, {2, 7}, {12, 13}, {1, 16}, {0, 17}});
}

}  // namespace

TEST_CASE("trivial lamination structure") {
    for (int n = 1; n <= 6; ++n) {
        Lamination L = trivial(n);
        validate(L, /*require_tight=*/true);
        CHECK(norm(L) == 2 * (n + 1));
        // axis: n+1 crossings, P0, then y_j / P_{j+1} alternating
        REQUIRE(int(L.axis.size()) == 3 * (n + 1));
        for (int i = 0; i <= n; ++i) CHECK(L.axis[i] == i);
        CHECK(L.axis[n + 1] == -1);
        // curve j is matched (n-j, n+1+j) on both sides
        for (int j = 0; j <= n; ++j) {
            CHECK(L.upper[n - j] == n + 1 + j);
            CHECK(L.lower[n - j] == n + 1 + j);
            CHECK(L.curve[n - j] == j);
        }
    }
}

TEST_CASE("shadow of the trivial lamination") {
    for (int n = 2; n <= 5; ++n) {
        ShadowTable t = shadow(trivial(n));
        for (int i = 1; i <= n; ++i)
            for (bool up : {false, true}) {
                CHECK(t.at(i, true, up) == Iv{0, i});
                CHECK(t.at(i, false, up) == Iv{0, i - 1});
            }
    }
}

TEST_CASE("bigons of the trivial lamination") {
    for (int n = 2; n <= 5; ++n) {
        auto bs = bigons(trivial(n));
        // only the innermost curve's two arcs have no crossing inside;
        // both cover exactly the fixed puncture
        REQUIRE(bs.size() == 2);
        for (const ArcRef& b : bs) {
            CHECK(b.left == n);
            CHECK(b.right == n + 1);
            CHECK(arc_cover(trivial(n), b) == Iv{0, 0});
        }
        CHECK(rightmost_bigon_puncture(trivial(n)) == -1);
    }
}

TEST_CASE("generator handedness pinned by the frozen sigma_1^{-1} picture") {
    Lamination expect = sigma1_inverse_n2();
    CHECK(act(2, {-1}) == expect);
    CHECK(act(2, {1}) == swap_sides(expect));
    CHECK(norm(expect) == 8);
}

TEST_CASE("frozen sigma_2^{-1} lamination, norm and shadow") {
    Lamination L = act(3, {-2});
    REQUIRE(L == sigma2_inverse_n3());
    CHECK(norm(L) == 10);
    CHECK(norm(act(3, {2})) == 10);

    ShadowTable t = shadow(L);
    CHECK(t.at(1, false, true) == Iv{0, 0});
    CHECK(t.at(2, false, true) == Iv{0, 1});
    CHECK(t.at(3, false, true) == Iv{3, 3});
    CHECK(t.at(1, true, true) == Iv{0, 1});
    CHECK(t.at(2, true, true) == Iv{3, 3});
    CHECK(t.at(3, true, true) == Iv{3, 3});
    CHECK(t.at(1, false, false) == Iv{0, 0});
    CHECK(t.at(2, false, false) == Iv{2, 2});
    CHECK(t.at(3, false, false) == Iv{2, 2});
    CHECK(t.at(1, true, false) == Iv{0, 1});
    CHECK(t.at(2, true, false) == Iv{2, 2});
    CHECK(t.at(3, true, false) == Iv{0, 3});
}

TEST_CASE("frozen sigma_2^{-1} extended shadow") {
    Lamination L = act(3, {-2});
    ArcRef bigon;
    REQUIRE(rightmost_bigon_puncture(L, &bigon) == 3);
    CHECK(bigon == ArcRef{true, 7, 8});

    ExtendedShadowTable t = extended_shadow(L);
    auto P = [](int alo, int ahi, int blo, int bhi) {
        return std::pair<Iv, Iv>{{alo, ahi}, {blo, bhi}};
    };
    auto E = [](int alo, int ahi) { return std::pair<Iv, Iv>{{alo, ahi}, {}}; };
    CHECK(t.at(1, false, true) == E(0, 0));
    CHECK(t.at(2, false, true) == E(0, 1));
    CHECK(t.at(3, false, true) == P(3, 3, 0, 3));
    CHECK(t.at(1, true, true) == E(0, 1));
    CHECK(t.at(2, true, true) == P(3, 3, 0, 3));
    CHECK(t.at(3, true, true) == P(3, 3, 0, 3));
    CHECK(t.at(1, false, false) == E(0, 0));
    CHECK(t.at(2, false, false) == E(2, 2));
    CHECK(t.at(3, false, false) == E(2, 2));
    CHECK(t.at(1, true, false) == E(0, 1));
    CHECK(t.at(2, true, false) == E(2, 2));
    CHECK(t.at(3, true, false) == P(0, 3, 3, 3));
}

TEST_CASE("frozen four-strand lamination of sigma_2 sigma_1 sigma_3^{-1}") {
    Lamination L = act(4, {2, 1, -3});
    CHECK(norm(L) == 18);
    CHECK(L == fig5_lamination());
}

TEST_CASE("inverse pairs and braid relations") {
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i) {
            CHECK(act(n, {i, -i}) == trivial(n));
            CHECK(act(n, {-i, i}) == trivial(n));
        }
    CHECK(act(3, {1, 2, 1}) == act(3, {2, 1, 2}));
    CHECK(act(4, {1, 3}) == act(4, {3, 1}));
    CHECK(act(2, {1}) != act(2, {-1}));
    CHECK(canonical_equal(act(4, {1, 2, 1, 3}), act(4, {2, 1, 2, 3})));
}

TEST_CASE("sliding letters act like their Artin expansions") {
    for (int n = 2; n <= 5; ++n) {
        Lamination base = act(n, random_word(n, 4, 31 + n).letters);
        for (int k = 1; k < n; ++k)
            for (int l = k + 1; l <= n; ++l)
                for (Quad q : {Quad::UR, Quad::UL, Quad::LR, Quad::LL}) {
                    SlidingLetter s{q, k, l};
                    Lamination via_slide = apply_sliding(base, s);
                    Lamination via_artin = apply_artin_word(base, sliding_to_artin(s, n));
                    CHECK(via_slide == via_artin);
                }
    }
}

TEST_CASE("mirror symmetry swaps the two sides") {
    for (int seed = 0; seed < 12; ++seed) {
        ArtinWord w = random_word(4, 8, 500 + seed);
        CHECK(lam(mirror(w)) == swap_sides(lam(w)));
    }
}

TEST_CASE("canonical equality agrees with the word-problem oracle") {
    std::vector<ArtinWord> corpus;
    for (int seed = 0; seed < 10; ++seed) corpus.push_back(random_word(4, 6, 900 + seed));
    corpus.push_back(ArtinWord{4, {}});
    corpus.push_back(ArtinWord{4, {1, -1, 2, -2}});
    corpus.push_back(ArtinWord{4, {1, 2, 1, -2, -1, -2, 3}});
    corpus.push_back(ArtinWord{4, {3}});
    std::vector<Lamination> lams;
    for (const auto& w : corpus) lams.push_back(lam(w));
    for (std::size_t a = 0; a < corpus.size(); ++a)
        for (std::size_t b = a; b < corpus.size(); ++b)
            CHECK(canonical_equal(lams[a], lams[b]) == oracle_equal(corpus[a], corpus[b]));
}

TEST_CASE("laminations stay valid and tight under the action") {
    for (int n = 2; n <= 5; ++n)
        for (int seed = 0; seed < 6; ++seed) {
            ArtinWord w = random_word(n, 10, 40 * n + seed);
            Lamination L = trivial(n);
            for (int g : w.letters) {
                L = apply_artin(L, g);
                validate(L, /*require_tight=*/true);
            }
        }
}

TEST_CASE("tighten is idempotent on tight laminations") {
    for (int seed = 0; seed < 6; ++seed) {
        Lamination L = act(4, random_word(4, 8, 700 + seed).letters);
        CHECK(tighten(L) == L);
    }
}

TEST_CASE("second right arcs") {
    for (int n = 2; n <= 4; ++n) {
        Lamination T = trivial(n);
        for (int i = 0; i < n; ++i) {
            auto [up, low] = second_right_arcs(T, i);
            // in the trivial lamination both arcs belong to curve i+1 and cover P0
            CHECK(T.curve[up.left] == i + 1);
            CHECK(T.curve[low.left] == i + 1);
            CHECK(arc_cover(T, up).contains(0));
            CHECK(arc_cover(T, low).contains(0));
        }
        CHECK_THROWS(second_right_arcs(T, n));
    }
    // after sigma_1 the upper second-right arc of p_0 leaves P0 uncovered,
    // after sigma_1^{-1} the lower one does
    auto [u1, l1] = second_right_arcs(act(2, {1}), 0);
    CHECK(!arc_cover(act(2, {1}), u1).contains(0));
    CHECK(arc_cover(act(2, {1}), l1).contains(0));
    auto [u2, l2] = second_right_arcs(act(2, {-1}), 0);
    CHECK(arc_cover(act(2, {-1}), u2).contains(0));
    CHECK(!arc_cover(act(2, {-1}), l2).contains(0));
}

TEST_CASE("slide undoes sigma_1 on two strands") {
    Lamination L = act(2, {1});
    ArcRef bigon;
    REQUIRE(rightmost_bigon_puncture(L, &bigon) == 2);
    // the arc sharing the bigon's right endpoint covers P0, so relax along
    // the one at the left endpoint: the upper arc over p_1
    ArcRef A = arc_at(L, bigon.left, !bigon.up);
    REQUIRE(!arc_cover(L, A).contains(0));
    Lamination slid = slide(L, 2, A);
    CHECK(norm(slid) >= norm(L) - 4);  // raw result may carry useless bigons
    Lamination relaxed = tighten(slid);
    CHECK(norm(relaxed) < norm(L));
    CHECK(relaxed == trivial(2));
}

TEST_CASE("transport to the adjacent gap is the identity") {
    Lamination L = act(3, {1, -2});
    int pos = puncture_pos(L, 2);
    CHECK(transport(L, 2, pos, true) == L);
    CHECK(transport(L, 2, pos - 1, false) == L);
}

TEST_CASE("debug dump mentions the basics") {
    std::string d = debug_dump(trivial(2));
    CHECK(d.find("n=2") != std::string::npos);
    CHECK(d.find("norm=6") != std::string::npos);
    CHECK(d.find("P0") != std::string::npos);
}
