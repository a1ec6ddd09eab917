#include <doctest.h>

#include <random>

#include "ajf/errors.hpp"
#include "ajf/lielyndon.hpp"
#include "oracles.hpp"

using namespace ajf;

namespace {

LieElement random_lie(std::mt19937_64& rng, int q, int s) {
    LieElement e(q, s);
    const auto& basis = lyndon_words(q, s);
    if (basis.empty()) return e;
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t)
        e.add_term(basis[rng() % basis.size()], static_cast<long>(rng() % 9) - 4);
    return e;
}

std::vector<int> letters_of(const LyndonWord& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST_CASE("lyndon_words") {
    const auto& w21 = lyndon_words(2, 1);
    REQUIRE(w21.size() == 2);
    CHECK(letters_of(w21[0]) == std::vector<int>{1});
    CHECK(letters_of(w21[1]) == std::vector<int>{2});
    const auto& w23 = lyndon_words(2, 3);
    REQUIRE(w23.size() == 2);
    CHECK(letters_of(w23[0]) == std::vector<int>{1, 1, 2});
    CHECK(letters_of(w23[1]) == std::vector<int>{1, 2, 2});
    CHECK(lyndon_words(1, 2).empty());
    CHECK(lyndon_words(1, 1).size() == 1);
}

TEST_CASE("Duval enumeration matches exhaustive rotation testing") {
    for (int q = 1; q <= 4; ++q)
        for (int s = 1; s <= 8; ++s) {
            if (q == 4 && s > 7) continue;
            auto brute = oracle::brute_lyndon(q, s);
            const auto& words = lyndon_words(q, s);
            REQUIRE(words.size() == brute.size());
            for (std::size_t t = 0; t < words.size(); ++t) CHECK(letters_of(words[t]) == brute[t]);
            CHECK(witt_rank(q, s) == static_cast<unsigned long>(words.size()));
        }
}

TEST_CASE("witt_rank") {
    for (int q = 1; q <= 8; ++q) CHECK(witt_rank(q, 1) == q);
    CHECK(witt_rank(3, 2) == 3);
    CHECK(witt_rank(2, 6) == 9);
    CHECK(witt_rank(5, 1) == 5);
    // Recursion q^s = sum_{m|s} m d_m.
    for (int q = 1; q <= 5; ++q)
        for (int s = 1; s <= 10; ++s) {
            Integer sum = 0;
            for (int m = 1; m <= s; ++m)
                if (s % m == 0) sum += m * witt_rank(q, m);
            CHECK(sum == ipow(Integer(q), static_cast<unsigned long>(s)));
        }
    CHECK_THROWS_AS(witt_rank(0, 2), DomainError);
}

TEST_CASE("bracketing uses the smallest proper suffix") {
    CHECK(to_string(bracketing(LyndonWord(2, {1, 2}))) == "[x1,x2]");
    CHECK(to_string(bracketing(LyndonWord(2, {1, 1, 2}))) == "[x1,[x1,x2]]");
    CHECK(to_string(bracketing(LyndonWord(2, {1, 2, 2}))) == "[[x1,x2],x2]");
    CHECK(to_string(bracketing(LyndonWord(3, {1, 3, 2}))) == "[[x1,x3],x2]");
    CHECK(to_string(bracketing(LyndonWord(2, {1, 1, 2, 1, 2}))) == "[[x1,[x1,x2]],[x1,x2]]");
}

TEST_CASE("LyndonWord rejects non-Lyndon input") {
    CHECK_THROWS_AS(LyndonWord(2, {2, 1}), DomainError);
    CHECK_THROWS_AS(LyndonWord(2, {1, 2, 1, 2}), DomainError);
    CHECK_THROWS_AS(LyndonWord(2, {1, 3}), DomainError);
}

TEST_CASE("expand_to_tensor") {
    using oracle::commutator_tensor;
    using oracle::gen;
    CHECK(expand_to_tensor(LieElement::basis(LyndonWord(2, {1, 2}))) ==
          commutator_tensor(gen(2, 2, 1), gen(2, 2, 2)));
    CHECK(expand_to_tensor(LieElement(2, 3)).is_zero());
    Series want = commutator_tensor(gen(2, 3, 1), commutator_tensor(gen(2, 3, 1), gen(2, 3, 2)));
    CHECK(expand_to_tensor(LieElement::basis(LyndonWord(2, {1, 1, 2}))) == want);
    CHECK(to_string(want) == "X1X1X2 - 2*X1X2X1 + X2X1X1");
}

TEST_CASE("expansion is unitriangular") {
    for (int q = 2; q <= 3; ++q)
        for (int s = 2; s <= 5; ++s)
            for (const auto& w : lyndon_words(q, s)) {
                const Series& t = expand_bracketing(w);
                CHECK(t.coefficient(w.monomial()) == 1);
                for (const auto& [m, c] : t.terms()) CHECK(!(m < w.monomial()));
            }
}

TEST_CASE("lie_to_lyndon") {
    Series t = oracle::commutator_tensor(oracle::gen(2, 2, 1), oracle::gen(2, 2, 2));
    CHECK(lie_to_lyndon(t, 2) == LieElement::basis(LyndonWord(2, {1, 2})));
    Series sym = Series::term(2, 2, Monomial{1, 2}, 1) + Series::term(2, 2, Monomial{2, 1}, 1);
    CHECK_THROWS_AS(lie_to_lyndon(sym, 2), NotLieElement);
    LieElement e(2, 3);
    e.add_term(LyndonWord(2, {1, 2, 2}), 3);
    e.add_term(LyndonWord(2, {1, 1, 2}), -1);
    LieElement back = lie_to_lyndon(expand_to_tensor(e), 3);
    CHECK(back.coefficient(LyndonWord(2, {1, 1, 2})) == -1);
    CHECK(back.coefficient(LyndonWord(2, {1, 2, 2})) == 3);
    CHECK_THROWS_AS(lie_to_lyndon(Series::one(2, 2), 2), DomainError);
    CHECK(lie_to_lyndon(Series(2, 2), 2).is_zero());
}

TEST_CASE("round trip on random elements") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = 1 + static_cast<int>(rng() % 3), s = 1 + static_cast<int>(rng() % 5);
        LieElement e = random_lie(rng, q, s);
        CHECK(lie_to_lyndon(expand_to_tensor(e), s) == e);
    }
}

TEST_CASE("lie_bracket") {
    LieElement e1 = LieElement::generator(2, 1), e2 = LieElement::generator(2, 2);
    CHECK(lie_bracket(e1, e2) == LieElement::basis(LyndonWord(2, {1, 2})));
    CHECK(lie_bracket(e1, e1).is_zero());
    CHECK(lie_bracket(lie_bracket(e1, e2), e2) == LieElement::basis(LyndonWord(2, {1, 2, 2})));
    CHECK_THROWS_AS(lie_bracket(e1, LieElement::generator(3, 1)), DomainError);
}

TEST_CASE("alternation and Jacobi on random triples") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int q = 2 + static_cast<int>(rng() % 2);
        const int sa = 1 + static_cast<int>(rng() % 2), sb = 1 + static_cast<int>(rng() % 2), sc = 1 + static_cast<int>(rng() % 2);
        LieElement a = random_lie(rng, q, sa), b = random_lie(rng, q, sb), c = random_lie(rng, q, sc);
        CHECK(lie_bracket(a, a).is_zero());
        CHECK(lie_bracket(a, b) + lie_bracket(b, a) == LieElement(q, sa + sb));
        LieElement jac = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                         lie_bracket(c, lie_bracket(a, b));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("text form") {
    LieElement e(2, 3);
    e.add_term(LyndonWord(2, {1, 1, 2}), 1);
    e.add_term(LyndonWord(2, {1, 2, 2}), 3);
    CHECK(to_string(e) == "1*[x1,[x1,x2]] + 3*[[x1,x2],x2]");
    CHECK(to_string(LieElement(2, 3)) == "0");
    CHECK(to_string(Integer(-2) * LieElement::generator(2, 1)) == "-2*x1");
}
