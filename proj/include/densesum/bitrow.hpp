#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace densesum {

// Fixed-width packed bit vector backing the subset-sum DP tables.
// Bit i of word i/64 is value i.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t popcount() const;

    // this |= (this << k), bits shifted past size() are dropped.
    void self_or_shift(std::size_t k);

    // this |= rotl(this, k) where rotation wraps modulo size().
    void self_or_rotate(std::size_t k);

    // Smallest set bit in [from, to], or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find_unset(std::size_t from, std::size_t to) const;

    bool operator==(const BitRow& other) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void clear_tail();

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace densesum
