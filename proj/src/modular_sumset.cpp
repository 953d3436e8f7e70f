#include "densesum/modular_sumset.hpp"

#include <algorithm>

namespace densesum {

ResidueSet subset_sums_mod(const MultiSet& x, std::uint64_t d) {
    if (d == 0) throw invalid_input("modulus must be >= 1");
    BitRow bits(static_cast<std::size_t>(d));
    bits.set(0);
    if (d == 1) return {d, bits};
    for (const Entry& e : x.entries()) {
        std::uint64_t v = e.value % d;
        if (v == 0) continue;
        // j*v mod d cycles within j in [0, d-1]; larger counts add nothing.
        count_t remaining = std::min<count_t>(e.mult, d - 1);
        count_t chunk = 1;
        while (remaining > 0) {
            count_t take = std::min(chunk, remaining);
            remaining -= take;
            std::uint64_t weight =
                static_cast<std::uint64_t>((static_cast<unsigned __int128>(take) * v) % d);
            if (weight != 0) bits.self_or_rotate(static_cast<std::size_t>(weight));
            chunk <<= 1;
        }
    }
    return {d, bits};
}

bool is_complete_mod(const MultiSet& x, std::uint64_t d) {
    return subset_sums_mod(x, d).popcount() == d;
}

} // namespace densesum
