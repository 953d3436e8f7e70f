#include "densesum/bitrow.hpp"

#include <bit>

namespace densesum {

void BitRow::clear_tail() {
    std::size_t rem = nbits_ & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

std::size_t BitRow::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

void BitRow::self_or_shift(std::size_t k) {
    if (k == 0 || k >= nbits_) return;
    const std::size_t wk = k >> 6;
    const unsigned bk = static_cast<unsigned>(k & 63);
    const std::size_t nw = words_.size();
    if (bk == 0) {
        for (std::size_t i = nw; i-- > wk;) words_[i] |= words_[i - wk];
    } else {
        for (std::size_t i = nw; i-- > wk;) {
            std::uint64_t v = words_[i - wk] << bk;
            if (i > wk) v |= words_[i - wk - 1] >> (64 - bk);
            words_[i] |= v;
        }
    }
    clear_tail();
}

void BitRow::self_or_rotate(std::size_t k) {
    k %= nbits_;
    if (k == 0) return;
    // rotl(x, k) over nbits = (x << k | x >> (nbits - k)) truncated.
    BitRow low(nbits_);
    const std::size_t back = nbits_ - k;
    const std::size_t wk = back >> 6;
    const unsigned bk = static_cast<unsigned>(back & 63);
    const std::size_t nw = words_.size();
    // low = this >> back
    if (bk == 0) {
        for (std::size_t i = 0; i + wk < nw; ++i) low.words_[i] = words_[i + wk];
    } else {
        for (std::size_t i = 0; i + wk < nw; ++i) {
            std::uint64_t v = words_[i + wk] >> bk;
            if (i + wk + 1 < nw) v |= words_[i + wk + 1] << (64 - bk);
            low.words_[i] = v;
        }
    }
    self_or_shift(k);
    for (std::size_t i = 0; i < nw; ++i) words_[i] |= low.words_[i];
    clear_tail();
}

std::size_t BitRow::find_unset(std::size_t from, std::size_t to) const {
    if (from > to || from >= nbits_) return npos;
    for (std::size_t i = from; i <= to && i < nbits_; ++i) {
        std::size_t w = i >> 6;
        if (words_[w] == ~std::uint64_t{0}) {
            i = (w << 6) + 63;
            continue;
        }
        if (!test(i)) return i;
    }
    return npos;
}

} // namespace densesum
