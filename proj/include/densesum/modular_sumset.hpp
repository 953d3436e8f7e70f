#pragma once

#include <cstdint>

#include "densesum/bitrow.hpp"
#include "densesum/multiset.hpp"

namespace densesum {

// Membership table for S(X) mod d. member(0) always holds (empty subset).
struct ResidueSet {
    std::uint64_t d;
    BitRow members;

    bool member(std::uint64_t r) const { return members.test(r % d); }
    std::uint64_t popcount() const { return members.popcount(); }

    bool operator==(const ResidueSet&) const = default;
};

// Word-packed boolean DP over Z_d; each distinct value handled by binary
// multiplicity decomposition, counts capped at d-1 (sound in Z_d).
ResidueSet subset_sums_mod(const MultiSet& x, std::uint64_t d);

// S(X) mod d == Z_d.
bool is_complete_mod(const MultiSet& x, std::uint64_t d);

} // namespace densesum
