#include "bpt/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bpt {

BipolarSequence to_bipolar(const BitSequence& s) {
    if (s.bits.empty()) throw std::invalid_argument("to_bipolar of empty sequence");
    BipolarSequence out;
    out.values.reserve(s.bits.size());
    for (uint8_t b : s.bits) out.values.push_back(1.0 - 2.0 * b);
    return out;
}

std::pair<BipolarSequence, BipolarSequence> lcm_extend(const BipolarSequence& a,
                                                       const BipolarSequence& b) {
    const size_t n = std::lcm(a.length(), b.length());
    auto repeat = [n](const BipolarSequence& s) {
        if (s.length() == n) return s;
        BipolarSequence out;
        out.values.reserve(n);
        for (size_t i = 0; i < n; ++i) out.values.push_back(s.values[i % s.length()]);
        return out;
    };
    return {repeat(a), repeat(b)};
}

CorrelationProfile periodic_correlation(const BipolarSequence& x,
                                        const BipolarSequence& y) {
    const BipolarSequence* px = &x;
    const BipolarSequence* py = &y;
    std::pair<BipolarSequence, BipolarSequence> extended;
    if (x.length() != y.length()) {
        extended = lcm_extend(x, y);
        px = &extended.first;
        py = &extended.second;
    }
    const size_t n = px->length();
    const double* xs = px->values.data();
    const double* ys = py->values.data();

    CorrelationProfile profile;
    profile.n = n;
    profile.values.resize(n);
    for (size_t tau = 0; tau < n; ++tau) {
        double sum = 0.0;
        // Split at the wrap point so the inner loops are modulo-free.
        const size_t head = n - tau;
        for (size_t i = 0; i < head; ++i) sum += xs[i] * ys[i + tau];
        for (size_t i = head; i < n; ++i) sum += xs[i] * ys[i + tau - n];
        profile.values[tau] = sum / static_cast<double>(n);
    }
    return profile;
}

double peak_offpeak(const CorrelationProfile& profile, bool exclude_zero) {
    if (exclude_zero && profile.n < 2)
        throw std::invalid_argument("peak_offpeak needs n >= 2 to exclude tau=0");
    double peak = 0.0;
    for (size_t tau = exclude_zero ? 1 : 0; tau < profile.n; ++tau)
        peak = std::max(peak, std::abs(profile.values[tau]));
    return peak;
}

namespace {

// Sum over off-peak lags tau = 1..N-1 of r(tau)^2; the mirrored negative
// lags contribute the same total by r(-tau) = r(N-tau).
double offpeak_square_sum(const CorrelationProfile& profile) {
    double sum = 0.0;
    for (size_t tau = 1; tau < profile.n; ++tau)
        sum += profile.values[tau] * profile.values[tau];
    return sum;
}

}  // namespace

double mspac(const std::vector<BipolarSequence>& family) {
    if (family.empty()) throw std::domain_error("mspac of empty family");
    double total = 0.0;
    for (const auto& s : family)
        total += 2.0 * offpeak_square_sum(periodic_correlation(s, s));
    return total / static_cast<double>(family.size());
}

double mspcc(const std::vector<BipolarSequence>& family) {
    const size_t m = family.size();
    if (m < 2) throw std::domain_error("mspcc needs a family of at least 2");
    double total = 0.0;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            CorrelationProfile r = periodic_correlation(family[i], family[j]);
            // r_ji(tau) = r_ij(-tau), so the (j,i) term equals the (i,j) term.
            total += 2.0 * (r.values[0] * r.values[0] + 2.0 * offpeak_square_sum(r));
        }
    }
    return total / static_cast<double>(m * (m - 1));
}

FamilyReport evaluate_family(std::string name,
                             const std::vector<BipolarSequence>& family) {
    FamilyReport rep;
    rep.family_name = std::move(name);
    rep.m = family.size();
    rep.mspac = mspac(family);
    double peak_auto = 0.0;
    for (const auto& s : family)
        peak_auto = std::max(peak_auto, peak_offpeak(periodic_correlation(s, s), true));
    rep.peak_auto = peak_auto;
    if (rep.m >= 2) {
        rep.mspcc = mspcc(family);
        double peak_cross = 0.0;
        for (size_t i = 0; i < rep.m; ++i)
            for (size_t j = i + 1; j < rep.m; ++j)
                peak_cross = std::max(
                    peak_cross,
                    peak_offpeak(periodic_correlation(family[i], family[j]), false));
        rep.peak_cross = peak_cross;
    }
    return rep;
}

}  // namespace bpt
