#ifndef AJF_RANKS_HPP
#define AJF_RANKS_HPP

#include <vector>

#include "ajf/integer.hpp"

namespace ajf {

// Rank of Γ^s PΣ_n^+ / Γ^{s+1} PΣ_n^+, i.e. sum_{q=2}^n d_s(V_{q-1}).
Integer gr_rank_psn(int n, int s);

/// Per-degree ranks of the tensor product of n-k+1 copies of Z ⊕ L_s[V_{k-1}]^*.
struct RankTable {
    int n = 0, k = 0, s = 0;
    std::vector<Integer> ranks;  // indexed by cohomological degree

    Integer total() const;
};

// Admissible for n >= 3 and 3 <= k <= n; k = 2 only when s = 1.
RankTable summand_ranks(int n, int k, int s);

struct LowerBound {
    int n = 0, s = 0, i = 0;
    Integer power_bound;  // d_s(V_{n-i})^i
    Integer best_summand;     // max over admissible k of the degree-i summand rank
    int best_k = 0;           // smallest k attaining best_summand
    Integer value;            // max of the two
};

LowerBound hi_lower_bound(int n, int s, int i);

struct SeriesCoefficients {
    int n = 0;
    std::vector<Integer> coeffs;  // coeffs[s-1] = n * d_{s+1}(V_n)
};

SeriesCoefficients ep_coeffs(int n, int s_max);

struct GrowthReport {
    int n = 0, i = 0, s_min = 0, s_max = 0;
    std::vector<Integer> bounds;  // hi_lower_bound for s = s_min..s_max
    bool monotone = false;        // nondecreasing over the whole range
    int increasing_from = 0;      // first s from which the bounds strictly increase to s_max
    bool passes = false;          // strictly increasing tail of length >= 2 ending at the maximum
};

GrowthReport growth_check(int n, int i, int s_min, int s_max);

}  // namespace ajf

#endif
