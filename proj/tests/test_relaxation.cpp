#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "braid/coords.hpp"
#include "braid/relaxation.hpp"

using namespace braid;

namespace {

ArtinWord aw(int n, std::vector<int> letters) { return ArtinWord{n, std::move(letters)}; }

SlidingWord sw(int n, std::vector<SlidingLetter> letters) {
    return SlidingWord{n, std::move(letters)};
}

ArtinWord pow_concat(int n, const std::vector<int>& base, int k) {
    ArtinWord w{n, {}};
    for (int i = 0; i < k; ++i) w.letters.insert(w.letters.end(), base.begin(), base.end());
    return w;
}

}  // namespace

TEST_CASE("full right-relaxation run on sigma_2 sigma_1 sigma_3^{-1}") {
    Lamination L = lam(aw(4, {2, 1, -3}));
    std::vector<SlidingLetter> expect = {
        {Quad::LL, 2, 4}, {Quad::UL, 1, 3}, {Quad::UL, 2, 3}};
    for (const SlidingLetter& e : expect) {
        RelaxResult r = relax_step(L, Strategy::Right);
        CHECK(r.letter == e);
        CHECK(norm(r.next) < norm(L));
        L = r.next;
    }
    CHECK(L == trivial(4));
}

TEST_CASE("rightmost_relaxable choice data") {
    Lamination L = lam(aw(4, {2, 1, -3}));
    RelaxChoice c = rightmost_relaxable(L);
    CHECK(c.k == 4);
    CHECK(c.B.up);
    CHECK(arc_cover(L, c.B) == Iv{4, 4});
    CHECK(c.leftward);
    // the slide target lands between p_1 and p_2: the relaxing braid is LL(2,4)
    CHECK(relaxing_braid(L) == SlidingLetter{Quad::LL, 2, 4});

    // lam(sigma_2): the wrapped puncture p_3 carries the lower bigon, and the
    // relaxing braid UL(2,3) slides it back leftward over p_2 on the upper side
    Lamination S2 = lam(aw(3, {2}));
    RelaxChoice c2 = rightmost_relaxable(S2);
    CHECK(c2.k == 3);
    CHECK(!c2.B.up);
    CHECK(relaxing_braid(S2) == SlidingLetter{Quad::UL, 2, 3});

    CHECK_THROWS(rightmost_relaxable(trivial(3)));
    CHECK_THROWS(relax_step(trivial(3), Strategy::Right));
}

TEST_CASE("relaxing braids after appending UR(1,3) to small braids") {
    struct Case {
        int n;
        std::vector<int> word;
        SlidingLetter expect;
    };
    // each braid is extended by the sliding braid UR(1,3) before relaxing
    std::vector<Case> cases = {
        {3, {-1, -1}, {Quad::UL, 2, 3}},
        {3, {-1, -2, -1, -1, -2}, {Quad::LL, 1, 2}},
        {5, {-4, 3}, {Quad::LL, 2, 5}},
        {4, {-3}, {Quad::LL, 2, 4}},
        {4, {1, 2, 3, 1, 2, 1}, {Quad::UL, 1, 4}},
    };
    for (const Case& c : cases) {
        Lamination L = apply_sliding(lam(aw(c.n, c.word)), SlidingLetter{Quad::UR, 1, 3});
        CHECK(relaxing_braid(L) == c.expect);
    }
}

TEST_CASE("normal forms of the worked examples") {
    CHECK(rnf(aw(4, {2, 1, -3})) ==
          sw(4, {{Quad::UR, 2, 3}, {Quad::UR, 1, 3}, {Quad::LR, 2, 4}}));
    CHECK(rnf(aw(3, {2, 2, 1})) ==
          sw(3, {{Quad::UR, 2, 3}, {Quad::UR, 2, 3}, {Quad::UR, 1, 3}, {Quad::LR, 2, 3}}));
    CHECK(rnf(aw(2, {})) == sw(2, {}));
    CHECK(rnf(aw(5, {})) == sw(5, {}));

    // the square of the half-twist followed by sigma_3 sigma_2 sigma_3 sigma_2 sigma_3
    ArtinWord alpha{4, {1, 2, 3, 1, 2, 1, 1, 2, 3, 1, 2, 1, 3, 2, 3, 2, 3}};
    SlidingWord a = sw(4, {{Quad::UR, 3, 4},
                           {Quad::UR, 2, 4},
                           {Quad::UR, 1, 4},
                           {Quad::UR, 1, 4},
                           {Quad::UR, 1, 4},
                           {Quad::UR, 1, 4},
                           {Quad::UR, 2, 4}});
    CHECK(rnf(alpha) == a);

    // extending alpha by (sigma_2 sigma_3)^3 appends [2->4]^3 to the normal form
    ArtinWord alpha2 = alpha;
    for (int i = 0; i < 3; ++i) {
        alpha2.letters.push_back(2);
        alpha2.letters.push_back(3);
    }
    SlidingWord a2 = a;
    for (int i = 0; i < 3; ++i) a2.letters.push_back({Quad::UR, 2, 4});
    CHECK(rnf(alpha2) == a2);

    // multiplying by the commutator gamma changes distant letters of the form
    ArtinWord gamma{4, {1, 2, 3, -1, -2, -3}};
    CHECK(rnf(concat(alpha, gamma)) == sw(4, {{Quad::UR, 3, 4},
                                              {Quad::UR, 2, 4},
                                              {Quad::UR, 1, 4},
                                              {Quad::UR, 1, 4},
                                              {Quad::UR, 1, 4},
                                              {Quad::UR, 1, 3},
                                              {Quad::UR, 2, 3},
                                              {Quad::UR, 1, 3}}));
    SlidingWord a2g = a2;
    a2g.letters.push_back({Quad::UR, 1, 4});
    a2g.letters.push_back({Quad::LR, 1, 4});
    CHECK(rnf(concat(alpha2, gamma)) == a2g);
}

TEST_CASE("normal form soundness and prefix closure") {
    for (int n = 2; n <= 5; ++n)
        for (int seed = 0; seed < 8; ++seed) {
            ArtinWord w = random_word(n, 8, 1000 * n + seed);
            SlidingWord v = rnf(w);
            CHECK(v.right_oriented());
            CHECK(oracle_equal(sliding_to_artin(v), w));
            // every prefix is itself a normal form
            for (std::size_t len = 0; len < v.letters.size(); ++len) {
                SlidingWord prefix{n, {v.letters.begin(), v.letters.begin() + len}};
                CHECK(rnf(sliding_to_artin(prefix)) == prefix);
            }
        }
}

TEST_CASE("mirror metamorphic relation") {
    for (int seed = 0; seed < 10; ++seed) {
        ArtinWord w = random_word(4, 9, 2000 + seed);
        CHECK(rnf(mirror(w)) == mirror(rnf(w)));
    }
}

TEST_CASE("braid_equal") {
    CHECK(braid_equal(aw(4, {1, 3}), aw(4, {3, 1})));
    CHECK(braid_equal(aw(4, {1, 2, 3, -2, 1}), aw(4, {-3, 2, 1, 2, 3})));
    CHECK(!braid_equal(aw(4, {1}), aw(4, {-1})));
    // sigma_1^3 sigma_3^3 Delta_3 = sigma_3^4 (sigma_1 sigma_2 sigma_3)^2 sigma_3^2
    ArtinWord g{4, {1, 1, 1, 3, 3, 3, 1, 2, 3, 1, 2, 1}};
    ArtinWord d{4, {3, 3, 3, 3, 1, 2, 3, 1, 2, 3, 3, 3}};
    CHECK(braid_equal(g, d));
    // agreement with the independent oracle
    for (int seed = 0; seed < 8; ++seed) {
        ArtinWord w1 = random_word(3, 6, 3000 + seed);
        ArtinWord w2 = random_word(3, 6, 4000 + seed);
        CHECK(braid_equal(w1, w2) == oracle_equal(w1, w2));
        CHECK((rnf(w1) == rnf(w2)) == braid_equal(w1, w2));
    }
}

TEST_CASE("positivity classification") {
    CHECK(classify_geometric(aw(2, {})) == PositivityClass{});
    CHECK(classify_geometric(aw(2, {1})) ==
          PositivityClass{PositivityClass::Positive, 1});
    CHECK(classify_geometric(aw(4, {-3})) ==
          PositivityClass{PositivityClass::Negative, 3});
    CHECK(classify_geometric(aw(4, {3, -2})) ==
          PositivityClass{PositivityClass::Negative, 2});

    CHECK(classify_syntactic(sw(3, {{Quad::UR, 2, 3},
                                    {Quad::UR, 2, 3},
                                    {Quad::UR, 1, 3},
                                    {Quad::LR, 2, 3}})) ==
          PositivityClass{PositivityClass::Positive, 1});
    CHECK(classify_syntactic(sw(4, {{Quad::LR, 3, 4}})) ==
          PositivityClass{PositivityClass::Negative, 3});
    CHECK(classify_syntactic(rnf(aw(4, {1, 2, 3, 1, 2, 1, 1, 2, 3, 1, 2, 1, 3, 2, 3, 2, 3}))) ==
          PositivityClass{PositivityClass::Positive, 1});
    CHECK_THROWS(classify_syntactic(sw(3, {{Quad::UL, 1, 2}})));

    // the two classifiers agree on a corpus
    for (int n = 2; n <= 5; ++n)
        for (int seed = 0; seed < 10; ++seed) {
            ArtinWord w = random_word(n, 7, 5000 * n + seed);
            CHECK(classify_syntactic(rnf(w)) == classify_geometric(w));
        }
}

TEST_CASE("dehornoy order") {
    CHECK(dehornoy_less(aw(2, {}), aw(2, {1})));
    CHECK(dehornoy_less(aw(2, {-1}), aw(2, {})));
    // trichotomy and left-invariance on random pairs
    for (int seed = 0; seed < 12; ++seed) {
        ArtinWord a = random_word(4, 6, 6000 + seed);
        ArtinWord b = random_word(4, 6, 7000 + seed);
        ArtinWord c = random_word(4, 4, 8000 + seed);
        int rels = int(dehornoy_less(a, b)) + int(dehornoy_less(b, a)) +
                   int(braid_equal(a, b));
        CHECK(rels == 1);
        if (dehornoy_less(a, b)) CHECK(dehornoy_less(concat(c, a), concat(c, b)));
    }
}

TEST_CASE("left variant by half-twist conjugation") {
    CHECK(left_variant_rnf(aw(3, {})) == sw(3, {}));
    // half-twist conjugation carries UR(k,l) to LL(n+1-l,n+1-k), so the word
    // it produces is left-oriented
    CHECK(left_variant_rnf(aw(4, {3})) == sw(4, {{Quad::LL, 3, 4}}));
    CHECK(left_variant_rnf(aw(4, {-3})) == sw(4, {{Quad::UL, 3, 4}}));
    // soundness of the letters as a braid word, and left-orientation
    for (int seed = 0; seed < 6; ++seed) {
        ArtinWord w = random_word(4, 7, 9000 + seed);
        SlidingWord v = left_variant_rnf(w);
        CHECK(oracle_equal(sliding_to_artin(v), w));
        for (const SlidingLetter& s : v.letters)
            CHECK((s.q == Quad::UL || s.q == Quad::LL));
    }
    // the leftmost-puncture strategy computes the same normal form directly
    for (int seed = 0; seed < 6; ++seed) {
        ArtinWord w = random_word(4, 6, 9500 + seed);
        CHECK(rnf(w, Strategy::Left) == left_variant_rnf(w));
    }
}

TEST_CASE("every strategy yields a sound factorization") {
    for (Strategy s : {Strategy::Right, Strategy::SimpleRight, Strategy::Left,
                       Strategy::SimpleLeft, Strategy::Outermost, Strategy::RightCovered})
        for (int seed = 0; seed < 5; ++seed) {
            ArtinWord w = random_word(4, 7, 11000 + 100 * int(s) + seed);
            SlidingWord v = rnf(w, s);
            CHECK(oracle_equal(sliding_to_artin(v), w));
        }
}

TEST_CASE("strategy name round trip") {
    for (Strategy s : {Strategy::Right, Strategy::SimpleRight, Strategy::Left,
                       Strategy::SimpleLeft, Strategy::Outermost, Strategy::RightCovered})
        CHECK(parse_strategy(to_string(s)) == s);
    CHECK_THROWS(parse_strategy("fastest"));
}

TEST_CASE("the single-cover counting strategy is not prefix-stable") {
    // on six strands, LR(2,3)^k LR(5,6)^l LR(1,2) LR(4,5) is claimed to be a
    // normal form of the right-covered strategy exactly when k <= l.
    //
    // KNOWN FAILURE: under the literal selection rule (maximal number of arcs
    // covering the puncture and no other, ties to the rightmost puncture,
    // right arc preferred) only (k,l) = (0,0) is in normal form: the first
    // relaxation picks p4, whose count l+1 always beats p5's count l.  The
    // claimed table would further require opposite tie-breaks in two states
    // with identical candidate profiles (see the decision log).  We keep the
    // claimed table as the expectation rather than bake in behaviour we
    // cannot justify, so this case documents the discrepancy by failing.
    for (int k = 0; k <= 5; ++k)
        for (int l = 0; l <= 5; ++l) {
            SlidingWord v{6, {}};
            for (int i = 0; i < k; ++i) v.letters.push_back({Quad::LR, 2, 3});
            for (int i = 0; i < l; ++i) v.letters.push_back({Quad::LR, 5, 6});
            v.letters.push_back({Quad::LR, 1, 2});
            v.letters.push_back({Quad::LR, 4, 5});
            bool in_nf = rnf(sliding_to_artin(v), Strategy::RightCovered) == v;
            CHECK(in_nf == (k <= l));
        }
}
