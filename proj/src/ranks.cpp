#include "ajf/ranks.hpp"

#include <algorithm>
#include <string>

#include "ajf/errors.hpp"
#include "ajf/lielyndon.hpp"

namespace ajf {

namespace {

std::string idx(int v) { return std::to_string(v); }

bool admissible_k(int n, int k, int s) { return k <= n && (k >= 3 || (k == 2 && s == 1)); }

}  // namespace

Integer gr_rank_psn(int n, int s) {
    if (n < 2) throw DomainError("gr_rank_psn requires n >= 2, got n = " + idx(n));
    if (s < 1) throw DomainError("gr_rank_psn requires s >= 1");
    Integer total = 0;
    for (int q = 2; q <= n; ++q) total += witt_rank(q - 1, s);
    return total;
}

Integer RankTable::total() const {
    Integer t = 0;
    for (const auto& r : ranks) t += r;
    return t;
}

RankTable summand_ranks(int n, int k, int s) {
    if (n < 3) throw DomainError("summand_ranks requires n >= 3, got n = " + idx(n));
    if (s < 1) throw DomainError("summand_ranks requires s >= 1");
    if (!admissible_k(n, k, s))
        throw DomainError("summand_ranks requires 3 <= k <= n (k = 2 only when s = 1), got k = " + idx(k));
    RankTable t{n, k, s, {}};
    const Integer d = witt_rank(k - 1, s);
    const int factors = n - k + 1;
    for (int i = 0; i <= factors; ++i) t.ranks.push_back(binomial(factors, i) * ipow(d, static_cast<unsigned long>(i)));
    return t;
}

LowerBound hi_lower_bound(int n, int s, int i) {
    if (n < 3) throw DomainError("hi_lower_bound requires n >= 3");
    if (s < 1) throw DomainError("hi_lower_bound requires s >= 1");
    if (i < 1 || i > n - 2) throw DomainError("degree i must satisfy 1 <= i <= n-2, got i = " + idx(i));
    LowerBound b{n, s, i, ipow(witt_rank(n - i, s), static_cast<unsigned long>(i)), 0, 0, 0};
    for (int k = 2; k <= n; ++k) {
        if (!admissible_k(n, k, s)) continue;
        RankTable t = summand_ranks(n, k, s);
        if (static_cast<std::size_t>(i) >= t.ranks.size()) continue;
        if (b.best_k == 0 || t.ranks[static_cast<std::size_t>(i)] > b.best_summand) {
            b.best_summand = t.ranks[static_cast<std::size_t>(i)];
            b.best_k = k;
        }
    }
    b.value = std::max(b.power_bound, b.best_summand);
    return b;
}

SeriesCoefficients ep_coeffs(int n, int s_max) {
    if (n < 1) throw DomainError("ep_coeffs requires n >= 1");
    if (s_max < 1) throw DomainError("ep_coeffs requires s_max >= 1");
    SeriesCoefficients c{n, {}};
    for (int s = 1; s <= s_max; ++s) c.coeffs.push_back(Integer(n) * witt_rank(n, s + 1));
    return c;
}

GrowthReport growth_check(int n, int i, int s_min, int s_max) {
    if (s_min < 1 || s_max < s_min) throw DomainError("growth_check requires 1 <= s_min <= s_max");
    GrowthReport r{n, i, s_min, s_max, {}, true, s_max, false};
    for (int s = s_min; s <= s_max; ++s) r.bounds.push_back(hi_lower_bound(n, s, i).value);
    for (std::size_t t = 1; t < r.bounds.size(); ++t)
        if (r.bounds[t] < r.bounds[t - 1]) r.monotone = false;
    std::size_t start = r.bounds.size() - 1;
    while (start > 0 && r.bounds[start - 1] < r.bounds[start]) --start;
    r.increasing_from = s_min + static_cast<int>(start);
    const Integer& last = r.bounds.back();
    const bool last_is_strict_max =
        std::all_of(r.bounds.begin(), r.bounds.end() - 1, [&](const Integer& b) { return b < last; });
    r.passes = r.increasing_from < s_max && last_is_strict_max;
    return r;
}

}  // namespace ajf
