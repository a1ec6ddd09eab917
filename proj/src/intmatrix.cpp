#include "ajf/intmatrix.hpp"

#include "ajf/errors.hpp"

namespace ajf {

std::size_t exact_rank(IntMatrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    for (const auto& row : m)
        if (row.size() != cols) throw DomainError("ragged matrix");

    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        const Integer& pivot = m[rank][c];
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            const Integer lead = m[r][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = pivot * m[r][j] - lead * m[rank][j];
                // Every entry is a minor of the original matrix, so this division is exact.
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[r][j] = std::move(v);
            }
            m[r][c] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace ajf
