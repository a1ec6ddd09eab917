#ifndef AJF_LIELYNDON_HPP
#define AJF_LIELYNDON_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ajf/integer.hpp"
#include "ajf/tensorseries.hpp"

namespace ajf {

bool is_lyndon(std::span<const std::uint8_t> letters);

/// Lyndon word over the alphabet 1..q: strictly smaller than each of its
/// proper rotations.
class LyndonWord {
public:
    LyndonWord(int alphabet, std::vector<std::uint8_t> letters);
    LyndonWord(int alphabet, std::initializer_list<int> letters);

    int alphabet() const noexcept { return alphabet_; }
    int degree() const noexcept { return static_cast<int>(letters_.size()); }
    std::span<const std::uint8_t> letters() const noexcept { return letters_; }
    Monomial monomial() const { return Monomial(letters_); }

    friend bool operator==(const LyndonWord& a, const LyndonWord& b) {
        return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
    }
    friend bool operator<(const LyndonWord& a, const LyndonWord& b) {
        if (a.alphabet_ != b.alphabet_) return a.alphabet_ < b.alphabet_;
        if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }

private:
    int alphabet_;
    std::vector<std::uint8_t> letters_;
};

// All Lyndon words of length s over 1..q in lexicographic order (Duval).
// The list is computed once per (q, s) and shared.
const std::vector<LyndonWord>& lyndon_words(int q, int s);

// Rank d_s(V_q) of the degree-s part of the free Lie algebra on q generators,
// from q^s = sum_{m | s} m d_m.
Integer witt_rank(int q, int s);

// Right standard factorization w = u v, v the lexicographically smallest
// proper suffix. Requires degree >= 2.
std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w);

struct Bracket {
    int letter = 0;  // nonzero for a leaf
    std::shared_ptr<const Bracket> left, right;

    bool is_leaf() const noexcept { return letter != 0; }
};

Bracket bracketing(const LyndonWord& w);
// "[x1,[x1,x2]]"
std::string to_string(const Bracket& b);

/// Integer combination of Lyndon basis brackets of a fixed degree.
class LieElement {
public:
    using Coordinates = std::map<LyndonWord, Integer>;

    LieElement(int alphabet, int degree);
    static LieElement basis(const LyndonWord& w);
    static LieElement generator(int alphabet, int i);

    int alphabet() const noexcept { return alphabet_; }
    int degree() const noexcept { return degree_; }
    const Coordinates& coordinates() const noexcept { return coords_; }
    bool is_zero() const noexcept { return coords_.empty(); }

    Integer coefficient(const LyndonWord& w) const;
    void add_term(const LyndonWord& w, const Integer& c);

    LieElement& operator+=(const LieElement& other);
    LieElement& operator-=(const LieElement& other);

    friend bool operator==(const LieElement&, const LieElement&) = default;

private:
    int alphabet_;
    int degree_;
    Coordinates coords_;
};

LieElement operator+(const LieElement& a, const LieElement& b);
LieElement operator-(const LieElement& a, const LieElement& b);
LieElement operator*(const Integer& c, const LieElement& a);

// Expansion of the bracketing of w in the tensor algebra, truncated at |w|.
const Series& expand_bracketing(const LyndonWord& w);
Series expand_to_tensor(const LieElement& e);

// Coordinates of a homogeneous degree-s tensor in the Lyndon basis. Throws
// NotLieElement when the tensor is not in the free Lie algebra.
LieElement lie_to_lyndon(const Series& t, int s);

LieElement lie_bracket(const LieElement& a, const LieElement& b);

// Dense coordinate vector in the order of lyndon_words(q, s).
std::vector<Integer> dense_coordinates(const LieElement& e);
std::size_t basis_index(const LyndonWord& w);

// "1*[x1,[x1,x2]] + 3*[[x1,x2],x2]"; zero prints as "0".
std::string to_string(const LieElement& e);

}  // namespace ajf

#endif
