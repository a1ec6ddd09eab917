#ifndef AJF_MAGNUS_HPP
#define AJF_MAGNUS_HPP

#include <optional>
#include <string>

#include "ajf/freegroup.hpp"
#include "ajf/lielyndon.hpp"
#include "ajf/tensorseries.hpp"

namespace ajf {

/// Lower central series depth of a word, or "at least cap" when every
/// positive Magnus component up to the truncation vanishes.
struct FiltrationDegree {
    std::optional<int> value;
    int cap = 0;

    bool capped() const noexcept { return !value.has_value(); }
    // Lower bound usable in comparisons: the exact value, or cap when capped.
    int at_least() const noexcept { return value.value_or(cap); }

    friend bool operator==(const FiltrationDegree&, const FiltrationDegree&) = default;
};

// Image of w under x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i + X_i^2 - ..., modulo degree > D.
Series magnus_expand(const Word& w, int truncation);

FiltrationDegree filtration_degree(const Word& w, int truncation);

// Class of w in Γ^s / Γ^{s+1} = L_s[V_n]. Zero when w lies deeper than Γ^s;
// throws NotInFiltration when w is not in Γ^s at all.
LieElement leading_lie(const Word& w, int s);

// "3", or "infinity-capped(D)".
std::string to_string(const FiltrationDegree& d);

}  // namespace ajf

#endif
