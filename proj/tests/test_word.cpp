#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braid/word.hpp"

using namespace braid;

TEST_CASE("sliding_to_artin on single letters") {
    CHECK(sliding_to_artin({Quad::UR, 2, 4}, 4).letters == std::vector<int>{2, 3});
    CHECK(sliding_to_artin({Quad::LR, 2, 3}, 3).letters == std::vector<int>{-2});
    CHECK(sliding_to_artin({Quad::LL, 1, 3}, 3).letters == std::vector<int>{2, 1});
    CHECK(sliding_to_artin({Quad::UL, 1, 3}, 3).letters == std::vector<int>{-2, -1});
    CHECK(sliding_to_artin({Quad::UR, 1, 2}, 2).letters == std::vector<int>{1});
}

TEST_CASE("invert reverses and flips") {
    ArtinWord w{3, {1, -2}};
    CHECK(invert(w).letters == std::vector<int>{2, -1});
    CHECK(invert(ArtinWord{3, {}}).letters.empty());

    SlidingWord s{4, {{Quad::UR, 1, 3}, {Quad::LR, 2, 4}}};
    SlidingWord si = invert(s);
    CHECK(si.letters == std::vector<SlidingLetter>{{Quad::LL, 2, 4}, {Quad::UL, 1, 3}});
    CHECK(invert(si) == s);
}

TEST_CASE("phi_delta") {
    CHECK(phi_delta(ArtinWord{4, {1, -3}}).letters == std::vector<int>{3, -1});
    CHECK(phi_delta(ArtinWord{3, {2}}).letters == std::vector<int>{1});
    ArtinWord w{4, {1, 2, -1}};
    CHECK(phi_delta(phi_delta(w)) == w);

    SlidingWord s{4, {{Quad::UR, 1, 3}}};
    CHECK(phi_delta(s).letters == std::vector<SlidingLetter>{{Quad::UR, 2, 4}});
    CHECK(phi_delta(phi_delta(s)) == s);
}

TEST_CASE("mirror") {
    CHECK(mirror(ArtinWord{3, {1, -2}}).letters == std::vector<int>{-1, 2});
    ArtinWord w{4, {2, -3, 1}};
    CHECK(mirror(mirror(w)) == w);

    SlidingWord s{4, {{Quad::UR, 2, 3}, {Quad::LR, 2, 4}}};
    SlidingWord m = mirror(s);
    CHECK(m.letters == std::vector<SlidingLetter>{{Quad::LR, 2, 3}, {Quad::UR, 2, 4}});
    CHECK(mirror(m) == s);
}

TEST_CASE("random_word") {
    CHECK(random_word(3, 0, 7).letters.empty());
    CHECK(random_word(3, 5, 7) == random_word(3, 5, 7));
    ArtinWord w = random_word(4, 10000, 1);
    REQUIRE(w.letters.size() == 10000);
    bool seen[7] = {};
    for (int g : w.letters) {
        REQUIRE(g != 0);
        REQUIRE(std::abs(g) <= 3);
        seen[g + 3] = true;
    }
    for (int g : {-3, -2, -1, 1, 2, 3}) CHECK(seen[g + 3]);
    CHECK(random_word(4, 64, 1).letters != random_word(4, 64, 2).letters);
}

TEST_CASE("text round trips") {
    ArtinWord w = parse_artin("2 1 -3", 4);
    CHECK(w.letters == std::vector<int>{2, 1, -3});
    CHECK(to_string(w) == "2 1 -3");
    CHECK_THROWS(parse_artin("5", 4));
    CHECK_THROWS(parse_artin("0", 4));

    SlidingWord s = parse_sliding("UR(1,3) LR(2,4)", 4);
    CHECK(s.letters == std::vector<SlidingLetter>{{Quad::UR, 1, 3}, {Quad::LR, 2, 4}});
    CHECK(to_string(s) == "UR(1,3) LR(2,4)");
    CHECK(parse_sliding(to_string(s), 4) == s);
    CHECK_THROWS(parse_sliding("UR(3,3)", 4));
    CHECK_THROWS(parse_sliding("XX(1,2)", 4));
    CHECK(looks_like_sliding("UR(1,2)"));
    CHECK(!looks_like_sliding("1 -2"));
}

TEST_CASE("right_oriented flag") {
    CHECK(SlidingWord{4, {{Quad::UR, 1, 3}, {Quad::LR, 2, 4}}}.right_oriented());
    CHECK(!SlidingWord{4, {{Quad::UL, 1, 3}}}.right_oriented());
}
