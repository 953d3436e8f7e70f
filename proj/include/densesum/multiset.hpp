#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "densesum/errors.hpp"
#include "densesum/rational.hpp"

namespace densesum {

using value_t = std::uint64_t;
using count_t = std::uint64_t;

struct Entry {
    value_t value;
    count_t mult;
    bool operator==(const Entry&) const = default;
};

struct Profile {
    count_t n;          // |X|
    value_t mx;         // max element
    count_t mul;        // max multiplicity
    std::uint64_t sum;  // sigma
    count_t support;    // distinct values
    bool operator==(const Profile&) const = default;
};

// Non-empty multi-set of positive integers, run-length encoded with values
// strictly increasing. Immutable after construction.
class MultiSet {
public:
    static MultiSet from_values(std::span<const value_t> values);
    static MultiSet from_values(std::initializer_list<value_t> values);
    // Entries must be sorted by value, strictly increasing, positive
    // multiplicities; validated.
    static MultiSet from_entries(std::vector<Entry> entries);

    // {lo, lo+1, ..., hi}
    static MultiSet range(value_t lo, value_t hi);

    const std::vector<Entry>& entries() const { return entries_; }

    count_t size() const { return n_; }
    value_t max_value() const { return entries_.back().value; }
    count_t max_mult() const { return mul_; }
    std::uint64_t sum() const { return sum_; }
    count_t support() const { return entries_.size(); }
    count_t mult_of(value_t v) const;

    // Every value scaled by k (k >= 1).
    MultiSet scaled(value_t k) const;

    bool operator==(const MultiSet&) const = default;

private:
    MultiSet() = default;

    std::vector<Entry> entries_;
    count_t n_ = 0;
    count_t mul_ = 0;
    std::uint64_t sum_ = 0;
};

struct NormalizedInstance {
    MultiSet x;
    std::uint64_t t;
    bool mirrored;
    count_t dropped_count;
    std::optional<bool> trivial_answer;
};

Profile profile(const MultiSet& x);

// n^2 >= delta * mul * mx, exact arithmetic.
bool is_dense(const MultiSet& x, const rational& delta);

// (X(d), |complement|); X(d) may be empty, signalled by nullopt.
std::pair<std::optional<MultiSet>, count_t> restrict_divisible(const MultiSet& x, std::uint64_t d);

// X/d; throws not_divisible if some value is not a multiple of d.
MultiSet divide(const MultiSet& x, std::uint64_t d);

// |complement(X(d))| <= alpha * mul * sigma / n^2, exact arithmetic. d >= 2.
bool is_almost_divisor(const MultiSet& x, std::uint64_t d, const rational& alpha);

NormalizedInstance normalize_instance(const MultiSet& x, std::uint64_t t);

} // namespace densesum
