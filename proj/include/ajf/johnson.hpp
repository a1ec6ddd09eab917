#ifndef AJF_JOHNSON_HPP
#define AJF_JOHNSON_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ajf/automorphisms.hpp"
#include "ajf/intmatrix.hpp"
#include "ajf/lielyndon.hpp"

namespace ajf {

/// Element of Der_s(L[V_n]) = Hom(V_n, L_{s+1}[V_n]): the images of x_1..x_n.
class Derivation {
public:
    Derivation(int rank, int degree);
    Derivation(int rank, int degree, std::vector<LieElement> values);

    int rank() const noexcept { return rank_; }
    int degree() const noexcept { return degree_; }
    // 1-based.
    const LieElement& value(int i) const;
    const std::vector<LieElement>& values() const noexcept { return values_; }
    bool is_zero() const;

    Derivation& operator+=(const Derivation& other);

    friend bool operator==(const Derivation&, const Derivation&) = default;

private:
    int rank_;
    int degree_;
    std::vector<LieElement> values_;
};

Derivation operator+(const Derivation& a, const Derivation& b);
Derivation operator-(const Derivation& a, const Derivation& b);

struct JohnsonDegree {
    std::optional<int> value;
    int cap = 0;

    bool capped() const noexcept { return !value.has_value(); }
    int at_least() const noexcept { return value.value_or(cap); }

    friend bool operator==(const JohnsonDegree&, const JohnsonDegree&) = default;
};

std::string to_string(const JohnsonDegree& d);

// Largest s <= cap with f(x_i) x_i^{-1} in Γ^{s+1} for every i.
JohnsonDegree johnson_degree(const Endomorphism& f, int cap);

// τ_s(f): x_i -> class of f(x_i) x_i^{-1} in L_{s+1}[V_n].
Derivation tau(const Endomorphism& f, int s);

// Left-nested [..[w_{r_1}, w_{r_2}], ..., w_{r_m}] with w_r = α_{q,r}.
AutWord lambda_word(int n, std::span<const int> rs, int q);
// The same commutator with each w_r replaced by x_r.
Word lambda_x(int n, std::span<const int> rs);

struct Prop62Report {
    int n = 0, q = 0;
    std::vector<int> rs;
    bool degenerate = false;  // Λ_x trivial, or deeper than len(rs)
    bool vacuous = false;     // Λ_x trivial
    int degree = 0;           // actual filtration degree of Λ_x (0 when vacuous)
    bool action_ok = false;
    bool identity_ok = false;
    bool tau_ok = false;
    bool holds = false;
    std::string detail;
};

Prop62Report verify_prop62(int n, int q, std::vector<int> rs);

// Extends D to L[V_n] by D[a,b] = [Da, b] + [a, Db] over Lyndon bracketings.
LieElement derivation_apply(const Derivation& d, const LieElement& e);

// [D,E](x_i) = E(D(x_i)) - D(E(x_i)), of degree s + t. With the composition
// order of AutWord this makes τ_{s+t}([u,v]) = [τ_s(u), τ_t(v)].
Derivation derivation_bracket(const Derivation& d, const Derivation& e);

// Row-major flattening over the basis (i, Lyndon word) of Hom(V_n, L_{s+1}[V_n]).
std::vector<Integer> flatten(const Derivation& d);

struct InjectivityReport {
    int n = 0, k = 0, s = 0;
    std::vector<std::string> row_labels;
    IntMatrix rows;
    std::size_t cols = 0;
    std::size_t rank = 0;
    Integer expected = 0;

    bool ok() const { return Integer(static_cast<unsigned long>(rank)) == expected; }
};

// τ_s of the standard Lyndon brackets of the generators of every factor of H(n,k).
InjectivityReport injectivity_matrix(int n, int k, int s);

struct LieMorphismSample {
    int n = 0, s = 0, t = 0;
    std::string u, v;
    bool ok = false;
    std::string detail;
};

struct LieMorphismReport {
    std::uint64_t seed = 0;
    std::vector<LieMorphismSample> samples;

    std::size_t failures() const;
};

// Random pairs u, v of upper-triangular α words (Johnson degrees s, t in {1,2},
// n in {3,4}); checks τ_{s+t}([u,v]) == [τ_s(u), τ_t(v)].
LieMorphismReport verify_lie_morphism(int samples, std::uint64_t seed, int max_rank = 4);

}  // namespace ajf

#endif
