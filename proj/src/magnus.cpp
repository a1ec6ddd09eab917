#include "ajf/magnus.hpp"

#include "ajf/errors.hpp"

namespace ajf {

namespace {

// acc * (1 + X_i)  or  acc * (1 - X_i + X_i^2 - ...), truncated.
Series times_letter(const Series& acc, Letter l) {
    const int i = generator_of(l);
    const int d = acc.truncation();
    Series out = acc;
    for (const auto& [m, c] : acc.terms()) {
        std::vector<std::uint8_t> letters(m.letters().begin(), m.letters().end());
        for (int k = 1; m.degree() + k <= d; ++k) {
            letters.push_back(static_cast<std::uint8_t>(i));
            // x_i contributes only X_i; x_i^{-1} contributes (-X_i)^k for every k.
            if (l > 0 && k > 1) break;
            out.add_term(Monomial(letters), (l < 0 && k % 2 == 1) ? Integer(-c) : c);
        }
    }
    return out;
}

}  // namespace

Series magnus_expand(const Word& w, int truncation) {
    if (truncation < 1) throw DomainError("truncation must be at least 1");
    Series acc = Series::one(w.rank(), truncation);
    for (Letter l : w.letters()) acc = times_letter(acc, l);
    return acc;
}

FiltrationDegree filtration_degree(const Word& w, int truncation) {
    Series m = magnus_expand(w, truncation);
    return FiltrationDegree{m.lowest_positive_degree(), truncation};
}

LieElement leading_lie(const Word& w, int s) {
    if (s < 1) throw DomainError("degree must be positive");
    Series m = magnus_expand(w, s);
    if (auto low = m.lowest_positive_degree(); low && *low < s)
        throw NotInFiltration("not in Γ^" + std::to_string(s) + ": nonzero Magnus component in degree " +
                              std::to_string(*low));
    return lie_to_lyndon(degree_component(m, s), s);
}

std::string to_string(const FiltrationDegree& d) {
    return d.value ? std::to_string(*d.value) : "infinity-capped(" + std::to_string(d.cap) + ")";
}

}  // namespace ajf
