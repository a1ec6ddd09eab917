#ifndef AJF_INTMATRIX_HPP
#define AJF_INTMATRIX_HPP

#include <vector>

#include "ajf/integer.hpp"

namespace ajf {

using IntMatrix = std::vector<std::vector<Integer>>;

// Rank over Q by fraction-free (Bareiss) elimination. Rows must have equal length.
std::size_t exact_rank(IntMatrix rows);

}  // namespace ajf

#endif
