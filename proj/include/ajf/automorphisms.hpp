#ifndef AJF_AUTOMORPHISMS_HPP
#define AJF_AUTOMORPHISMS_HPP

#include <string>
#include <vector>

#include "ajf/freegroup.hpp"

namespace ajf {

/// Endomorphism of F_n given by the images of x_1, ..., x_n.
class Endomorphism {
public:
    explicit Endomorphism(std::vector<Word> images);
    static Endomorphism identity(int rank);

    int rank() const noexcept { return static_cast<int>(images_.size()); }
    // 1-based.
    const Word& image(int i) const;
    const std::vector<Word>& images() const noexcept { return images_; }

    friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

private:
    std::vector<Word> images_;
};

Word apply(const Endomorphism& f, const Word& w);
// (f ∘ g)(x) = f(g(x))
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);
bool is_ia(const Endomorphism& f);
// Row i is the exponent-sum vector of f(x_i).
std::vector<AbelianVector> abelianization(const Endomorphism& f);
// The map on F_m, m <= rank, when f preserves the subgroup on x_1..x_m.
Endomorphism restrict_to(const Endomorphism& f, int m);

// x_i -> x_j x_i x_j^{-1}
Endomorphism alpha(int n, int i, int j);
// x_i -> x_j^{-1} x_i x_j
Endomorphism alpha_inverse(int n, int i, int j);
// x_i -> [x_j, x_k] x_i
Endomorphism bigA(int n, int i, int j, int k);
// x_i -> [x_j, x_k]^{-1} x_i
Endomorphism bigA_inverse(int n, int i, int j, int k);
// x_1, x_2 fixed; x_j -> w^{p_j} x_j w^{q_j}, w = [x_1, x_2], j = 3..n.
// p and q are indexed from j = 3.
Endomorphism rho(int n, const std::vector<long>& p, const std::vector<long>& q);

/// Generator of an automorphism word: α_{ij}, A_{ijk}, or ρ(p; q), possibly inverted.
struct AutLetter {
    enum class Kind { Alpha, BigA, Rho };

    Kind kind = Kind::Alpha;
    int i = 0, j = 0, k = 0;
    std::vector<long> p, q;
    bool inverse = false;

    static AutLetter alpha(int i, int j) { return {Kind::Alpha, i, j, 0, {}, {}, false}; }
    static AutLetter bigA(int i, int j, int k) { return {Kind::BigA, i, j, k, {}, {}, false}; }
    static AutLetter rho(std::vector<long> p, std::vector<long> q) {
        return {Kind::Rho, 0, 0, 0, std::move(p), std::move(q), false};
    }

    AutLetter inverted() const {
        AutLetter l = *this;
        l.inverse = !l.inverse;
        return l;
    }

    friend bool operator==(const AutLetter&, const AutLetter&) = default;
};

void validate(const AutLetter& l, int n);
Endomorphism compile(const AutLetter& l, int n);
// "a(3,1)", "A(1,2,3)^-1", "rho(1;-1)"
std::string to_string(const AutLetter& l);

/// Formal product of AutLetters in Aut(F_n).
///
/// Composition order: in `u*v` the factor u acts first and v second, so
/// compile(u*v) == compose(compile(v), compile(u)). This is the order in
/// which w_{r_1} w_{r_2} ... w_{r_m} acts on x_q as conjugation by
/// x_{r_1} x_{r_2} ... x_{r_m}. Adjacent inverse letters cancel.
class AutWord {
public:
    explicit AutWord(int rank);
    AutWord(int rank, std::vector<AutLetter> letters);
    static AutWord letter(int rank, AutLetter l);

    int rank() const noexcept { return rank_; }
    const std::vector<AutLetter>& letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }

    friend bool operator==(const AutWord&, const AutWord&) = default;

private:
    int rank_;
    std::vector<AutLetter> letters_;
};

AutWord operator*(const AutWord& u, const AutWord& v);
AutWord inverse(const AutWord& u);
AutWord power(const AutWord& u, long k);
// u^{-1} v^{-1} u v
AutWord commutator(const AutWord& u, const AutWord& v);

Endomorphism autword_compile(const AutWord& aw);
std::string to_string(const AutWord& aw);

// Grammar: a(i,j), A(i,j,k), rho(p3,...,pn; q3,...,qn), '*', '^k', [U,V], parentheses.
AutWord parse_autword(int rank, const std::string& text);

// π: PΣ_n^+ -> PΣ_{n-1}^+, deleting letters α_{k,i} with k = n or i = n.
AutWord project_pi(const AutWord& aw);
// σ: PΣ_{n-1}^+ -> PΣ_n^+, the same letters in rank n.
AutWord section_sigma(const AutWord& aw);

struct SubgroupSpec {
    enum class Kind { G, H };

    Kind kind = Kind::G;
    int n = 0, k = 0, j = 0;

    static SubgroupSpec G(int n, int k, int j) { return {Kind::G, n, k, j}; }
    static SubgroupSpec H(int n, int k) { return {Kind::H, n, k, 0}; }
};

// Generators grouped by direct factor: one group for G(n,k,j), and the
// factors G(n,m,k-1), m = k..n, for H(n,k).
std::vector<std::vector<AutLetter>> subgroup_factors(const SubgroupSpec& spec);
std::vector<AutLetter> subgroup_generators(const SubgroupSpec& spec);

struct RelationFamily {
    int id = 0;
    std::string description;
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

struct McCoolReport {
    int n = 0;
    std::vector<RelationFamily> families;

    std::size_t failures() const;
    std::size_t checked() const;
};

// Checks the four McCool relation families on every admissible index tuple.
McCoolReport verify_mccool(int n);

struct CommutingReport {
    int n = 0, k = 0;
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

// Generators from distinct factors of H(n,k) commute.
CommutingReport verify_commuting(int n, int k);

}  // namespace ajf

#endif
