#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "densesum/multiset.hpp"

namespace densesum {

struct ReductionStep {
    std::uint64_t prime;   // d_i
    count_t size_after;    // |X_i|
};

struct ReductionTrace {
    std::uint64_t d;                  // product of step primes (1 if none)
    std::vector<ReductionStep> steps;
    MultiSet final;                   // X' = X(d)/d
};

// Smallest prime alpha-almost divisor, or nullopt when no integer d > 1
// qualifies. Backed by factorize_batch over the distinct values.
std::optional<std::uint64_t> find_almost_divisor(const MultiSet& x, const rational& alpha);

// Iterated almost-divisor stripping. Requires is_dense(x, delta) and
// 16*alpha <= delta; throws precondition_failed naming the failed inequality.
ReductionTrace strip_almost_divisors(const MultiSet& x, const rational& alpha,
                                     const rational& delta);

} // namespace densesum
