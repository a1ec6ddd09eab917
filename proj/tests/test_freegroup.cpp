#include <doctest.h>

#include <random>

#include "ajf/errors.hpp"
#include "ajf/freegroup.hpp"
#include "oracles.hpp"

using namespace ajf;

namespace {
Word w3(std::vector<Letter> l) { return Word(3, std::move(l)); }
}  // namespace

TEST_CASE("concat reduces at the junction") {
    CHECK((w3({1}) * w3({-1})).empty());
    CHECK(w3({1, 2}) * w3({-2, 3}) == w3({1, 3}));
    CHECK(w3({1}) * w3({2}) == w3({1, 2}));
    CHECK(w3({1, 2, 3}) * w3({-3, -2, -1}) == Word(3));
}

TEST_CASE("construction reduces eagerly") {
    CHECK(w3({1, 2, -2, -1, 3}) == w3({3}));
    CHECK(w3({1, -1}).empty());
}

TEST_CASE("invert") {
    CHECK(invert(w3({1, 2})) == w3({-2, -1}));
    CHECK(invert(Word(3)).empty());
    CHECK(invert(w3({-1})) == w3({1}));
}

TEST_CASE("commutator is a^-1 b^-1 a b") {
    CHECK(commutator(w3({1}), w3({2})) == w3({-1, -2, 1, 2}));
    CHECK(commutator(w3({1}), w3({1})).empty());
    CHECK(commutator(w3({1}), Word(3)).empty());
}

TEST_CASE("abelianize") {
    CHECK(abelianize(w3({1, 2, 1})) == AbelianVector{2, 1, 0});
    CHECK(abelianize(commutator(w3({1}), w3({2}))) == AbelianVector{0, 0, 0});
    CHECK(abelianize(Word(4, {-3})) == AbelianVector{0, 0, -1, 0});
}

TEST_CASE("rank is checked on binary operations") {
    CHECK_THROWS_AS(Word(2, {1}) * Word(3, {1}), DomainError);
    CHECK_THROWS_AS(commutator(Word(2, {1}), Word(3, {1})), DomainError);
    CHECK_THROWS_AS(Word(2, {3}), DomainError);
    CHECK_THROWS_AS(Word::generator(2, 0), DomainError);
}

TEST_CASE("group laws on random words") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Word a = oracle::random_word(rng, 3, 8), b = oracle::random_word(rng, 3, 8), c = oracle::random_word(rng, 3, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(invert(invert(a)) == a);
        CHECK((a * invert(a)).empty());
        auto sa = abelianize(a), sb = abelianize(b), sab = abelianize(a * b);
        for (std::size_t i = 0; i < 3; ++i) CHECK(sab[i] == sa[i] + sb[i]);
        CHECK(abelianize(commutator(a, b)) == AbelianVector{0, 0, 0});
    }
}

TEST_CASE("parse_word grammar") {
    CHECK(parse_word(3, "x1 x2") == w3({1, 2}));
    CHECK(parse_word(3, "x1*x2^-1") == w3({1, -2}));
    CHECK(parse_word(3, "[x1,x2]") == w3({-1, -2, 1, 2}));
    CHECK(parse_word(3, "[[x1, x2], x1]") == commutator(commutator(w3({1}), w3({2})), w3({1})));
    CHECK(parse_word(3, "(x1 x2)^2") == w3({1, 2, 1, 2}));
    CHECK(parse_word(3, "(x1x2)^-2") == w3({-2, -1, -2, -1}));
    CHECK(parse_word(3, "1").empty());
    CHECK(parse_word(3, "  x3 ^ -1 ") == w3({-3}));
    CHECK(parse_word(12, "x12") == Word(12, {12}));
}

TEST_CASE("parse_word reports position") {
    try {
        parse_word(3, "x1 * [x2, x4]");
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 11);
    }
    CHECK_THROWS_AS(parse_word(3, "x1 ]"), ParseError);
    CHECK_THROWS_AS(parse_word(3, "[x1 x2]"), ParseError);
    CHECK_THROWS_AS(parse_word(3, ""), ParseError);
    CHECK_THROWS_AS(parse_word(3, "y1"), ParseError);
}

TEST_CASE("to_string") {
    CHECK(to_string(w3({1, -2})) == "x1 x2^-1");
    CHECK(to_string(Word(3)) == "1");
}
