#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "densesum/multiset.hpp"

namespace densesum {

enum class SettingClass { trivial, nontrivial, hard_nontrivial };

struct ParameterSetting {
    rational tau;
    rational xi;
    rational sigma;
    SettingClass classification;
    std::vector<std::string> violated; // failed inequalities when trivial
};

struct Exponents {
    rational alpha; // 1 / (xi + sigma - tau - 1)
    rational beta;  // alpha*sigma - alpha - 1
    rational gamma; // alpha*(xi - sigma + 1)
};

struct KSumInstance {
    std::vector<std::uint64_t> z; // distinct, in [1, u]
    std::uint64_t t_target;
    std::uint32_t k;              // >= 3
    std::uint64_t u;
};

// Instance ratios against the setting's nominal powers, for rho calibration.
struct SettingRatios {
    double n_over_u_alpha;
    double mx_over_n_xi;
    double sum_over_n_sigma;
    double t_over_n_tau;
};

struct ReductionOutput {
    MultiSet x;
    std::uint64_t t;
    Exponents exponents;
    std::array<count_t, 3> blocks; // |X1|, |X2|, |X3|
    SettingRatios ratios;
};

ParameterSetting validate_setting(const rational& tau, const rational& xi,
                                  const rational& sigma);

// Requires a hard-nontrivial setting.
Exponents exponents_for(const ParameterSetting& s);

// Block construction with all fractional powers replaced by exact integer
// ceilings. Requires |Z| <= ceil(U^alpha), Z subset of [1,U], T <= kU, k >= 3.
ReductionOutput reduce_ksum(const KSumInstance& inst, const ParameterSetting& s);

KSumInstance random_ksum(count_t n_count, std::uint64_t u, std::uint32_t k,
                         std::uint64_t seed, bool planted);

// n distinct values sampled without replacement from [1, ceil(n^xi)].
MultiSet random_dense_instance(count_t n, const rational& xi_exponent, std::uint64_t seed);

// ceil(u^{p/q}) by integer root extraction (binary search on m^q >= u^p).
bigint pow_ceil(std::uint64_t u, const rational& e);

const char* to_string(SettingClass c);

} // namespace densesum
