#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpt/sequence.hpp"

namespace bpt {

// A {0,1} sequence mapped to {+1,-1} for correlation arithmetic.
struct BipolarSequence {
    std::vector<double> values;

    size_t length() const { return values.size(); }
};

// Periodic correlation values r(tau) for tau = 0..n-1. Negative lags are
// reached through r(-tau) = r(n - tau).
struct CorrelationProfile {
    size_t n = 0;
    std::vector<double> values;
};

struct FamilyReport {
    std::string family_name;
    size_t m = 0;
    double mspac = 0.0;
    std::optional<double> mspcc;      // absent when m = 1
    double peak_auto = 0.0;
    std::optional<double> peak_cross; // absent when m = 1
};

// bit b -> 1 - 2b, so 0 -> +1 and 1 -> -1.
BipolarSequence to_bipolar(const BitSequence& s);

// Cyclically repeats both inputs to their common lcm length.
std::pair<BipolarSequence, BipolarSequence> lcm_extend(const BipolarSequence& a,
                                                       const BipolarSequence& b);

// r(tau) = (1/N) sum_n x(n) y((n+tau) mod N) over one full period.
// Unequal lengths are lcm-extended first.
CorrelationProfile periodic_correlation(const BipolarSequence& x,
                                        const BipolarSequence& y);

// Largest |r(tau)|, optionally skipping tau = 0.
double peak_offpeak(const CorrelationProfile& profile, bool exclude_zero);

// Mean square periodic autocorrelation over off-peak lags tau = 1-N..N-1,
// tau != 0. Throws std::domain_error for an empty family.
double mspac(const std::vector<BipolarSequence>& family);

// Mean square periodic crosscorrelation over ordered pairs i != j and lags
// tau = 1-N..N-1 (tau = 0 included). Throws std::domain_error for M < 2.
double mspcc(const std::vector<BipolarSequence>& family);

// All family metrics in one pass; cross metrics are absent for M = 1.
FamilyReport evaluate_family(std::string name,
                             const std::vector<BipolarSequence>& family);

}  // namespace bpt
