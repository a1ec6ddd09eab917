#include <doctest.h>

#include <random>

#include "ajf/errors.hpp"
#include "ajf/tensorseries.hpp"

using namespace ajf;

namespace {

Series random_series(std::mt19937_64& rng, int n, int d) {
    Series s(n, d);
    const int terms = static_cast<int>(rng() % 6);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint8_t> letters;
        const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(d + 1));
        for (int k = 0; k < deg; ++k) letters.push_back(static_cast<std::uint8_t>(1 + rng() % static_cast<std::uint64_t>(n)));
        s.add_term(Monomial(letters), static_cast<long>(rng() % 7) - 3);
    }
    return s;
}

}  // namespace

TEST_CASE("series_add") {
    const int n = 2, d = 3;
    Series a = Series::one(n, d) + Series::generator(n, d, 1);
    Series b = Series::generator(n, d, 1) - Series::one(n, d);
    CHECK(a + b == Series::term(n, d, Monomial{1}, 2));
    CHECK(a + Series(n, d) == a);
    Series x12 = Series::term(n, d, Monomial{1, 2}, 1);
    CHECK((x12 + Series::term(n, d, Monomial{1, 2}, -1)).is_zero());
}

TEST_CASE("series_mul truncates") {
    const int n = 2, d = 2;
    // (1 + X1)(1 - X1 + X1^2) = 1 + X1^3, and X1^3 is above the truncation.
    Series a = Series::one(n, d) + Series::generator(n, d, 1);
    Series b = Series::one(n, d) - Series::generator(n, d, 1) + Series::term(n, d, Monomial{1, 1}, 1);
    CHECK(a * b == Series::one(n, d));
    CHECK(Series::generator(n, d, 1) * Series::generator(n, d, 2) == Series::term(n, d, Monomial{1, 2}, 1));
    CHECK((a * Series(n, d)).is_zero());
}

TEST_CASE("degree_component") {
    const int n = 2, d = 2;
    Series s = Series::one(n, d) + Series::generator(n, d, 1) + Series::term(n, d, Monomial{1, 2}, 1);
    CHECK(degree_component(s, 2) == Series::term(n, d, Monomial{1, 2}, 1));
    CHECK(degree_component(Series::one(n, d), 0) == Series::one(n, d));
    CHECK(degree_component(Series::generator(n, d, 1), 2).is_zero());
    CHECK_THROWS_AS(degree_component(s, 3), DomainError);
    CHECK_THROWS_AS(degree_component(s, -1), DomainError);
}

TEST_CASE("mismatched rank or truncation is rejected") {
    CHECK_THROWS_AS(Series::one(2, 3) + Series::one(3, 3), DomainError);
    CHECK_THROWS_AS(Series::one(2, 3) * Series::one(2, 4), DomainError);
}

TEST_CASE("no zero coefficients or over-degree terms are stored") {
    Series s(2, 2);
    s.add_term(Monomial{1, 2, 1}, 5);
    s.add_term(Monomial{1}, 0);
    CHECK(s.is_zero());
    s.add_term(Monomial{1}, 3);
    s.add_term(Monomial{1}, -3);
    CHECK(s.size() == 0);
}

TEST_CASE("ring axioms on random small instances") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int d = 1 + static_cast<int>(rng() % 5);
        Series a = random_series(rng, n, d), b = random_series(rng, n, d), c = random_series(rng, n, d);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(Series::one(n, d) * a == a);
        CHECK(a * Series::one(n, d) == a);
        // Components of a product up to degree k only see components of degree <= k.
        const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(d + 1));
        Series low_a(n, d), low_b(n, d);
        for (int j = 0; j <= k; ++j) {
            low_a += degree_component(a, j);
            low_b += degree_component(b, j);
        }
        CHECK(degree_component(a * b, k) == degree_component(low_a * low_b, k));
    }
}

TEST_CASE("exact big coefficients") {
    Series s = Series::one(1, 1) + Series::term(1, 1, Monomial{1}, Integer("1000000000000000000000"));
    Series p = s;
    for (int i = 0; i < 3; ++i) p = p * s;
    CHECK(p.coefficient(Monomial{1}) == Integer("4000000000000000000000"));
}

TEST_CASE("debug text form") {
    const int n = 2, d = 2;
    Series s = Series::term(n, d, Monomial{1, 2}, 3) - Series::term(n, d, Monomial{2, 1}, 1) + Series::one(n, d);
    CHECK(to_string(s) == "3*X1X2 - X2X1 + 1");
    CHECK(to_string(Series(n, d)) == "0");
    CHECK(to_string(Series::term(n, d, Monomial{2}, -2)) == "-2*X2");
}
