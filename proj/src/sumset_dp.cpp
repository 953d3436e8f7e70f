#include "densesum/sumset_dp.hpp"

namespace densesum {

BitRow subset_sums_up_to(const MultiSet& x, std::uint64_t cap) {
    BitRow dp(static_cast<std::size_t>(cap) + 1);
    dp.set(0);
    for (const Entry& e : x.entries()) {
        if (e.value > cap) continue;
        // Binary decomposition: chunks 1, 2, 4, ..., remainder cover every
        // count in [0, mult]. Chunks whose weight exceeds cap cannot
        // contribute to any tracked sum.
        count_t remaining = e.mult;
        count_t chunk = 1;
        while (remaining > 0) {
            count_t take = std::min(chunk, remaining);
            remaining -= take;
            unsigned __int128 weight = static_cast<unsigned __int128>(take) * e.value;
            if (weight > cap) break;
            dp.self_or_shift(static_cast<std::size_t>(weight));
            chunk <<= 1;
        }
    }
    return dp;
}

} // namespace densesum
