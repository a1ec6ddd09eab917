#ifndef AJF_TENSORSERIES_HPP
#define AJF_TENSORSERIES_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ajf/integer.hpp"

namespace ajf {

/// Noncommutative monomial X_{i_1} X_{i_2} ... X_{i_d}; the empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<int> letters);
    explicit Monomial(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}

    int degree() const noexcept { return static_cast<int>(letters_.size()); }
    std::span<const std::uint8_t> letters() const noexcept { return letters_; }
    std::uint8_t operator[](std::size_t i) const { return letters_[i]; }

    Monomial operator*(const Monomial& other) const;

    // Graded lexicographic: degree first, then letters.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint8_t> letters_;
};

/// Element of Z<X_1..X_n> modulo monomials of degree > truncation.
///
/// Coefficients are exact; zero coefficients are never stored and neither is
/// any monomial above the truncation bound.
class Series {
public:
    using Terms = std::map<Monomial, Integer>;

    Series(int rank, int truncation);

    static Series one(int rank, int truncation);
    static Series generator(int rank, int truncation, int i);
    static Series term(int rank, int truncation, const Monomial& m, const Integer& c);

    int rank() const noexcept { return rank_; }
    int truncation() const noexcept { return truncation_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(const Monomial& m) const;
    // Adds c·m in place; drops the term if it exceeds the truncation or cancels.
    void add_term(const Monomial& m, const Integer& c);

    // Smallest d >= 1 with a nonzero degree-d component, if any.
    std::optional<int> lowest_positive_degree() const;
    bool is_homogeneous(int d) const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);

    friend bool operator==(const Series&, const Series&) = default;

private:
    int rank_;
    int truncation_;
    Terms terms_;
};

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
Series series_scale(const Series& a, const Integer& c);
Series degree_component(const Series& a, int d);
// Same terms under a different truncation bound (terms above it are dropped).
Series retruncate(const Series& a, int truncation);

inline Series operator+(const Series& a, const Series& b) { return series_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return series_sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

// "3*X1X2 - X2X1 + 1": descending degree, lexicographic within a degree.
std::string to_string(const Series& s);

}  // namespace ajf

#endif
