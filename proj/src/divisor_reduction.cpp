#include "densesum/divisor_reduction.hpp"

#include <algorithm>
#include <map>

#include "densesum/factorize.hpp"

namespace densesum {

std::optional<std::uint64_t> find_almost_divisor(const MultiSet& x, const rational& alpha) {
    if (sgn(alpha) < 0) throw invalid_input("alpha must be nonnegative");
    const count_t n = x.size();
    // threshold = alpha * mul * sigma / n^2
    rational ratio(bigint(x.max_mult()) * bigint(x.sum()), bigint(n) * bigint(n));
    ratio.canonicalize();
    rational threshold = alpha * ratio;
    if (threshold >= rational(bigint(n))) {
        // Every d > 1 qualifies (even divisors of nothing); 2 is the smallest prime.
        return 2;
    }
    // A qualifying prime must divide at least n - threshold > 0 elements, so
    // it shows up in the batch factorization of the values.
    std::vector<std::uint64_t> values;
    values.reserve(x.entries().size());
    for (const Entry& e : x.entries()) values.push_back(e.value);
    auto factorizations = factorize_batch(values, x.max_value());
    std::map<std::uint64_t, count_t> divisible_count;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (const FactorPower& f : factorizations[i].factors)
            divisible_count[f.prime] += x.entries()[i].mult;
    for (const auto& [p, cnt] : divisible_count) {
        count_t complement = n - cnt;
        if (rational(bigint(complement)) <= threshold) return p;
    }
    return std::nullopt;
}

ReductionTrace strip_almost_divisors(const MultiSet& x, const rational& alpha,
                                     const rational& delta) {
    if (!is_dense(x, delta))
        throw precondition_failed("n^2 >= delta*mul*mx fails: input is not delta-dense");
    if (16 * alpha > delta)
        throw precondition_failed("16*alpha <= delta fails");

    ReductionTrace trace{1, {}, x};
    MultiSet cur = x;
    for (;;) {
        auto p = find_almost_divisor(cur, alpha);
        if (!p) break;
        auto [restricted, complement] = restrict_divisible(cur, *p);
        if (!restricted)
            throw internal_invariant_violation("almost divisor " + std::to_string(*p) +
                                               " divides no element");
        cur = divide(*restricted, *p);
        std::uint64_t d_next;
        if (__builtin_mul_overflow(trace.d, *p, &d_next))
            throw internal_invariant_violation("divisor product overflow");
        trace.d = d_next;
        trace.steps.push_back({*p, cur.size()});
    }
    trace.final = std::move(cur);
    return trace;
}

} // namespace densesum
