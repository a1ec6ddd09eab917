#include <doctest.h>

#include <random>

#include "ajf/errors.hpp"
#include "ajf/johnson.hpp"
#include "oracles.hpp"

using namespace ajf;

namespace {

Word x(int n, int i) { return Word::generator(n, i); }
AutWord a(int n, int i, int j) { return AutWord::letter(n, AutLetter::alpha(i, j)); }

// τ_s(f) read off the naive Magnus product, compared in the tensor algebra.
void check_tau_against_magnus(const Endomorphism& f, int s) {
    Derivation d = tau(f, s);
    for (int i = 1; i <= f.rank(); ++i) {
        Word diff = apply(f, x(f.rank(), i)) * invert(x(f.rank(), i));
        Series m = oracle::naive_magnus(diff, s + 1);
        for (int deg = 1; deg <= s; ++deg) CHECK(degree_component(m, deg).is_zero());
        CHECK(retruncate(expand_to_tensor(d.value(i)), s + 1) == degree_component(m, s + 1));
    }
}

LieElement lie(int q, std::initializer_list<int> w) { return LieElement::basis(LyndonWord(q, w)); }

Derivation random_derivation(std::mt19937_64& rng, int n, int s) {
    std::vector<LieElement> values;
    const auto& basis = lyndon_words(n, s + 1);
    for (int i = 0; i < n; ++i) {
        LieElement v(n, s + 1);
        for (int t = 0; t < 2; ++t) v.add_term(basis[rng() % basis.size()], static_cast<long>(rng() % 5) - 2);
        values.push_back(v);
    }
    return Derivation(n, s, values);
}

}  // namespace

TEST_CASE("tau_1 of the generators") {
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                Endomorphism f = alpha(n, i, j);
                CHECK(johnson_degree(f, 3).value == 1);
                Derivation d = tau(f, 1);
                for (int t = 1; t <= n; ++t) {
                    LieElement want = t == i ? lie_bracket(LieElement::generator(n, j), LieElement::generator(n, i))
                                             : LieElement(n, 2);
                    CHECK(d.value(t) == want);
                }
                check_tau_against_magnus(f, 1);
            }
    Endomorphism A = bigA(3, 1, 2, 3);
    Derivation d = tau(A, 1);
    CHECK(d.value(1) == lie(3, {2, 3}));
    CHECK(d.value(2).is_zero());
    check_tau_against_magnus(A, 1);
}

TEST_CASE("tau_2 of the commutator of a(3,1) and a(3,2)") {
    Endomorphism f = autword_compile(commutator(a(3, 3, 1), a(3, 3, 2)));
    CHECK(johnson_degree(f, 4).value == 2);
    Derivation d = tau(f, 2);
    CHECK(d.value(1).is_zero());
    CHECK(d.value(2).is_zero());
    CHECK(d.value(3).coefficient(LyndonWord(3, {1, 2, 3})) == 1);
    CHECK(d.value(3).coefficient(LyndonWord(3, {1, 3, 2})) == 1);
    CHECK(d.value(3).coordinates().size() == 2);
    check_tau_against_magnus(f, 2);
    CHECK_THROWS_AS(tau(f, 3), NotInFiltration);
}

TEST_CASE("johnson_degree") {
    CHECK(johnson_degree(Endomorphism::identity(3), 4).capped());
    CHECK(to_string(johnson_degree(Endomorphism::identity(3), 4)) == "infinity-capped(4)");
    CHECK_THROWS_AS(johnson_degree(Endomorphism({x(2, 2), x(2, 1)}), 3), DomainError);
    for (int n = 3; n <= 4; ++n) {
        std::vector<long> p(static_cast<std::size_t>(n - 2), 1), q(static_cast<std::size_t>(n - 2), -1);
        Endomorphism r = rho(n, p, q);
        CHECK(is_ia(r));
        CHECK(johnson_degree(r, 4).value == 2);
        check_tau_against_magnus(r, 2);
    }
}

TEST_CASE("lambda words") {
    std::vector<int> rs{1, 2, 1};
    CHECK(lambda_x(3, rs) == commutator(commutator(x(3, 1), x(3, 2)), x(3, 1)));
    CHECK(lambda_word(3, rs, 3) == commutator(commutator(a(3, 3, 1), a(3, 3, 2)), a(3, 3, 1)));
    CHECK_THROWS_AS(lambda_word(3, std::vector<int>{3}, 3), DomainError);
    CHECK_THROWS_AS(lambda_word(3, std::vector<int>{}, 3), DomainError);
}

TEST_CASE("verify_prop62") {
    Prop62Report r = verify_prop62(3, 3, {1, 2});
    CHECK(r.holds);
    CHECK_FALSE(r.degenerate);
    CHECK(r.degree == 2);
    Prop62Report v = verify_prop62(3, 3, {1, 1});
    CHECK(v.holds);
    CHECK(v.vacuous);
    CHECK(v.detail == "degenerate, vacuously true");
    for (int q = 2; q <= 4; ++q) {
        std::vector<int> rs;
        for (int len = 1; len <= 3; ++len) {
            rs.push_back(1 + (len * 7) % (q - 1));
            CHECK(verify_prop62(4, q, rs).holds);
        }
    }
}

TEST_CASE("derivation_apply is the unique derivation extending the values") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2), s = 1 + static_cast<int>(rng() % 2);
        Derivation d = random_derivation(rng, n, s);
        const int deg = 1 + static_cast<int>(rng() % 3);
        const auto& basis = lyndon_words(n, deg);
        if (basis.empty()) continue;
        LieElement e = LieElement::basis(basis[rng() % basis.size()]);
        std::vector<Series> images;
        for (int i = 1; i <= n; ++i) images.push_back(expand_to_tensor(d.value(i)));
        Series want = oracle::tensor_derivation(images, expand_to_tensor(e), deg + s);
        CHECK(retruncate(expand_to_tensor(derivation_apply(d, e)), deg + s) == want);
    }
}

TEST_CASE("derivation bracket is alternating and satisfies Jacobi") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        Derivation d = random_derivation(rng, 3, 1), e = random_derivation(rng, 3, 1), f = random_derivation(rng, 3, 1);
        CHECK(derivation_bracket(d, d).is_zero());
        CHECK((derivation_bracket(d, e) + derivation_bracket(e, d)).is_zero());
        Derivation jac = derivation_bracket(d, derivation_bracket(e, f)) +
                         derivation_bracket(e, derivation_bracket(f, d)) +
                         derivation_bracket(f, derivation_bracket(d, e));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("tau sends commutators to brackets") {
    const std::vector<std::pair<AutWord, AutWord>> pairs{
        {a(3, 3, 1), a(3, 3, 2)},
        {a(3, 2, 1), a(3, 3, 1)},
        {a(3, 2, 1), a(3, 3, 2)},
        {a(4, 4, 1) * a(4, 3, 2), inverse(a(4, 4, 3))},
        {AutWord::letter(3, AutLetter::bigA(1, 2, 3)), a(3, 2, 1)},
    };
    for (const auto& [u, v] : pairs) {
        Endomorphism fc = autword_compile(commutator(u, v));
        Derivation lhs = tau(fc, 2);
        Derivation rhs = derivation_bracket(tau(autword_compile(u), 1), tau(autword_compile(v), 1));
        CHECK(lhs == rhs);
    }
    LieMorphismReport rep = verify_lie_morphism(15, 5);
    CHECK(rep.samples.size() == 15);
    CHECK(rep.failures() == 0);
}

TEST_CASE("tau is additive on products of equal degree") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        AutWord u(3), v(3);
        for (int t = 0; t < 3; ++t) {
            u = u * a(3, 2 + static_cast<int>(rng() % 2), 1);
            v = v * inverse(a(3, 3, 1 + static_cast<int>(rng() % 2)));
        }
        Endomorphism fu = autword_compile(u), fv = autword_compile(v), fuv = autword_compile(u * v);
        if (johnson_degree(fu, 2).value != 1 || johnson_degree(fv, 2).value != 1) continue;
        CHECK(tau(fuv, 1) == tau(fu, 1) + tau(fv, 1));
    }
}

TEST_CASE("flatten layout") {
    Derivation d = tau(alpha(2, 2, 1), 1);
    auto row = flatten(d);
    REQUIRE(row.size() == 2);
    CHECK(row[0] == 0);
    CHECK(row[1] == 1);
}

TEST_CASE("injectivity_matrix") {
    InjectivityReport r = injectivity_matrix(3, 3, 2);
    CHECK(r.rows.size() == 1);
    CHECK(r.cols == 3 * 8);
    CHECK(r.rank == 1);
    CHECK(r.ok());
    for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= n; ++k)
            for (int s = 1; s <= 3; ++s) {
                InjectivityReport rep = injectivity_matrix(n, k, s);
                CHECK(rep.rank == oracle::rational_rank(rep.rows));
                CHECK(rep.ok());
            }
    CHECK_THROWS_AS(injectivity_matrix(3, 4, 1), DomainError);
}
