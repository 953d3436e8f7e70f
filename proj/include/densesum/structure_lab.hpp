#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "densesum/multiset.hpp"

namespace densesum {

// Sparse representation counts f_X over a uniform multi-set: f_X(z) =
// mul * #{(a,b) in supp(X)^2 : a+b = z} (ordered pairs).
struct RepCounts {
    std::vector<std::pair<std::uint64_t, count_t>> counts; // sorted by z, zeros omitted
    count_t at(std::uint64_t z) const;
    std::uint64_t total() const; // sum of all f values
};

struct Bucket {
    count_t v;
    std::vector<std::uint64_t> members; // sorted
};

struct APWitness {
    std::uint64_t start;  // a; progression is {a+s, a+2s, ..., a+m*s}
    std::uint64_t step;   // s
    count_t length;       // m
};

struct RemainderCover {
    MultiSet r;
    std::uint64_t tau;
    std::vector<std::uint64_t> primes_patched; // P
    bool degenerate;                           // R = X branch
};

struct IntervalReport {
    bool ok;
    std::optional<std::uint64_t> first_miss;
};

// Throws not_uniform unless every value has multiplicity mul(x).
RepCounts representation_counts(const MultiSet& x);

Bucket bucket(const MultiSet& x, count_t v);

// Smallest v in (1, n] with |B_v| >= n/(3 mul) + n^2/(3 v mul log2(2n)),
// the log evaluated as an exact dyadic upper bound. Requires uniform, 7-dense.
std::pair<count_t, Bucket> select_bucket(const MultiSet& x);

// Layer X_r (2^r copies of every value with multiplicity in [2^r, 2^{r+1}))
// of maximum size, ties to the smallest r.
std::pair<std::uint32_t, MultiSet> uniform_layer(const MultiSet& x);

// Lemma-style remainder cover. Requires is_dense(x, delta), alpha >= 1, and
// that x has no alpha-almost divisor.
RemainderCover build_remainder_cover(const MultiSet& x, const rational& alpha,
                                     const rational& delta);

// For all 1 < d <= tau: |complement(X(d))| >= d.
bool check_completeness_precondition(const MultiSet& x, std::uint64_t tau);

// One DP pass; checks every t in [lambda, sigma - lambda] for membership.
IntervalReport verify_interval(const MultiSet& x, std::uint64_t lambda);

// Scans steps s in [1, max_step] over S(X) for the longest run, preferring
// smallest s then smallest start. Desk scale: O(sigma * max_step).
std::optional<APWitness> find_ap_in_sums(const MultiSet& x, count_t min_len,
                                         std::uint64_t max_step);

} // namespace densesum
