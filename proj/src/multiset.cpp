#include "densesum/multiset.hpp"

#include <algorithm>

namespace densesum {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw invalid_input("64-bit overflow in multi-set totals");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw invalid_input("64-bit overflow in multi-set totals");
    return r;
}

} // namespace

MultiSet MultiSet::from_values(std::span<const value_t> values) {
    if (values.empty()) throw invalid_input("multi-set must be non-empty");
    std::vector<value_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Entry> entries;
    for (value_t v : sorted) {
        if (v == 0) throw invalid_input("multi-set values must be positive");
        if (!entries.empty() && entries.back().value == v)
            ++entries.back().mult;
        else
            entries.push_back({v, 1});
    }
    return from_entries(std::move(entries));
}

MultiSet MultiSet::from_values(std::initializer_list<value_t> values) {
    return from_values(std::span<const value_t>(values.begin(), values.size()));
}

MultiSet MultiSet::from_entries(std::vector<Entry> entries) {
    if (entries.empty()) throw invalid_input("multi-set must be non-empty");
    MultiSet x;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].value == 0) throw invalid_input("multi-set values must be positive");
        if (entries[i].mult == 0) throw invalid_input("multiplicities must be positive");
        if (i > 0 && entries[i - 1].value >= entries[i].value)
            throw invalid_input("entries must be strictly increasing by value");
        x.n_ = checked_add(x.n_, entries[i].mult);
        x.sum_ = checked_add(x.sum_, checked_mul(entries[i].value, entries[i].mult));
        x.mul_ = std::max(x.mul_, entries[i].mult);
    }
    x.entries_ = std::move(entries);
    return x;
}

MultiSet MultiSet::range(value_t lo, value_t hi) {
    if (lo == 0 || lo > hi) throw invalid_input("bad range");
    std::vector<Entry> entries;
    entries.reserve(hi - lo + 1);
    for (value_t v = lo; v <= hi; ++v) entries.push_back({v, 1});
    return from_entries(std::move(entries));
}

count_t MultiSet::mult_of(value_t v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, value_t x) { return e.value < x; });
    if (it == entries_.end() || it->value != v) return 0;
    return it->mult;
}

MultiSet MultiSet::scaled(value_t k) const {
    if (k == 0) throw invalid_input("scale factor must be positive");
    std::vector<Entry> entries;
    entries.reserve(entries_.size());
    for (const Entry& e : entries_) entries.push_back({checked_mul(e.value, k), e.mult});
    return from_entries(std::move(entries));
}

Profile profile(const MultiSet& x) {
    return Profile{x.size(), x.max_value(), x.max_mult(), x.sum(), x.support()};
}

bool is_dense(const MultiSet& x, const rational& delta) {
    if (sgn(delta) < 0) throw invalid_input("delta must be nonnegative");
    // n^2 >= delta * mul * mx  <=>  den * n^2 >= num * mul * mx
    bigint lhs = bigint(x.size()) * bigint(x.size()) * delta.get_den();
    bigint rhs = delta.get_num() * bigint(x.max_mult()) * bigint(x.max_value());
    return lhs >= rhs;
}

std::pair<std::optional<MultiSet>, count_t> restrict_divisible(const MultiSet& x, std::uint64_t d) {
    if (d == 0) throw invalid_input("divisor must be >= 1");
    std::vector<Entry> kept;
    count_t complement = 0;
    for (const Entry& e : x.entries()) {
        if (e.value % d == 0)
            kept.push_back(e);
        else
            complement += e.mult;
    }
    if (kept.empty()) return {std::nullopt, complement};
    return {MultiSet::from_entries(std::move(kept)), complement};
}

MultiSet divide(const MultiSet& x, std::uint64_t d) {
    if (d == 0) throw invalid_input("divisor must be >= 1");
    std::vector<Entry> entries;
    entries.reserve(x.entries().size());
    for (const Entry& e : x.entries()) {
        if (e.value % d != 0) throw not_divisible("element " + std::to_string(e.value) +
                                                  " not divisible by " + std::to_string(d));
        entries.push_back({e.value / d, e.mult});
    }
    return MultiSet::from_entries(std::move(entries));
}

bool is_almost_divisor(const MultiSet& x, std::uint64_t d, const rational& alpha) {
    if (d < 2) throw invalid_input("almost divisors are integers >= 2");
    if (sgn(alpha) < 0) throw invalid_input("alpha must be nonnegative");
    count_t complement = 0;
    for (const Entry& e : x.entries())
        if (e.value % d != 0) complement += e.mult;
    // complement <= alpha * mul * sigma / n^2
    bigint lhs = bigint(complement) * alpha.get_den() * bigint(x.size()) * bigint(x.size());
    bigint rhs = alpha.get_num() * bigint(x.max_mult()) * bigint(x.sum());
    return lhs <= rhs;
}

NormalizedInstance normalize_instance(const MultiSet& x, std::uint64_t t) {
    MultiSet cur = x;
    bool mirrored = false;
    count_t dropped = 0;
    for (;;) {
        std::uint64_t sigma = cur.sum();
        if (t > sigma) return {cur, t, mirrored, dropped, false};
        if (t == 0 || t == sigma) return {cur, t, mirrored, dropped, true};
        // Mirroring first: it changes which elements exceed t.
        if (t > sigma - t) {
            t = sigma - t;
            mirrored = true;
        }
        std::vector<Entry> kept;
        count_t round_dropped = 0;
        for (const Entry& e : cur.entries()) {
            if (e.value <= t)
                kept.push_back(e);
            else
                round_dropped += e.mult;
        }
        if (kept.empty()) {
            // Everything exceeds t > 0: only the empty subset remains.
            return {cur, t, mirrored, dropped + round_dropped, false};
        }
        MultiSet next = MultiSet::from_entries(std::move(kept));
        dropped += round_dropped;
        bool changed = round_dropped > 0 || next.sum() != sigma;
        cur = std::move(next);
        std::uint64_t sigma2 = cur.sum();
        if (t == sigma2) return {cur, t, mirrored, dropped, true};
        if (t <= sigma2 && t <= sigma2 - t) return {cur, t, mirrored, dropped, std::nullopt};
        if (!changed) return {cur, t, mirrored, dropped, std::nullopt};
    }
}

} // namespace densesum
