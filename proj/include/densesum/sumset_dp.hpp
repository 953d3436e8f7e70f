#pragma once

#include <cstdint>

#include "densesum/bitrow.hpp"
#include "densesum/multiset.hpp"

namespace densesum {

// Word-packed Bellman table: bit t set iff t is a subset sum of x with t <= cap.
// Multiplicities are folded in by binary decomposition, so the table costs
// O(support * log(mul) * cap / 64) word operations.
BitRow subset_sums_up_to(const MultiSet& x, std::uint64_t cap);

} // namespace densesum
