#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "densesum/divisor_reduction.hpp"
#include "densesum/modular_sumset.hpp"
#include "densesum/multiset.hpp"

namespace densesum {

enum class ConstantsMode { paper, practical };

struct ConstantsProfile {
    ConstantsMode mode;
    rational c_delta;
    rational c_alpha;
    rational c_lambda;
};

struct ConstantsOverrides {
    std::optional<rational> c_delta;
    std::optional<rational> c_alpha;
    std::optional<rational> c_lambda;
};

// Paper mode evaluates the formulas with log2 as an exact dyadic upper bound
// (exact at powers of two); practical mode defaults to (64, 4, 8).
// Always enforces 16*c_alpha <= c_delta.
ConstantsProfile constants_for(count_t n, count_t mul, ConstantsMode mode,
                               const ConstantsOverrides& overrides = {});

struct FeasibleWindow {
    std::uint64_t lo; // saturates at UINT64_MAX when the exact bound exceeds 2^64-1
    std::uint64_t hi; // floor(sigma / 2)
    bool empty;       // lo > hi

    bool contains(std::uint64_t t) const { return !empty && lo <= t && t <= hi; }
};

FeasibleWindow feasible_window(const Profile& p, const ConstantsProfile& c);

struct PreparedSolver {
    Profile original_profile;
    ReductionTrace trace;
    ResidueSet residues; // S(X) mod trace.d, for the original X
    FeasibleWindow window;
    ConstantsProfile constants;
};

enum class Answer { yes, no };
enum class QueryReason { modular_window, oracle_fallback, trivial };

struct QueryDecision {
    Answer answer;
    bool certified;
    QueryReason reason;
};

// Extra facts the CLI reports alongside a solve() decision.
struct SolveDetails {
    std::uint64_t d = 1;
    bool used_window = false;
    bool mirrored = false;
    count_t dropped = 0;
};

// Requires is_dense(x, c.c_delta); throws not_dense otherwise.
PreparedSolver preprocess(const MultiSet& x, const ConstantsProfile& c);

// Certified O(1) decision; t must lie in the window (throws outside_window).
QueryDecision query(const PreparedSolver& s, std::uint64_t t);

// Full pipeline: normalize, certified modular answer when density and window
// admit it, exact DP fallback otherwise. Never guesses.
QueryDecision solve(const MultiSet& x, std::uint64_t t, const ConstantsProfile& c,
                    SolveDetails* details = nullptr);

// Ground truth: word-packed Bellman DP over [0, t].
bool oracle_decide(const MultiSet& x, std::uint64_t t);

const char* to_string(Answer a);
const char* to_string(QueryReason r);

} // namespace densesum
