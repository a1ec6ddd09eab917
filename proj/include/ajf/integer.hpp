#ifndef AJF_INTEGER_HPP
#define AJF_INTEGER_HPP

#include <gmpxx.h>

#include <string>

namespace ajf {

using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace ajf

#endif
