#include "bpt/reference_codes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bpt {

namespace {

// Preferred pairs realized as (u, u[d]) with d = 2^k + 1: gcd(n,k) = 1 for
// odd n, gcd(n,k) = 2 with n/2 odd for n = 2 mod 4. Polynomials are the
// usual minimum-tap primitive trinomials/pentanomial from standard tables.
const std::vector<PolynomialEntry> kTable = {
    {2, {2, 1, 0}, 0, "x^2+x+1"},
    {3, {3, 1, 0}, 0, "x^3+x+1"},
    {4, {4, 1, 0}, 0, "x^4+x+1"},
    {5, {5, 2, 0}, 3, "x^5+x^2+1, pair via d=2^1+1"},
    {6, {6, 1, 0}, 5, "x^6+x+1, pair via d=2^2+1"},
    {7, {7, 1, 0}, 3, "x^7+x+1, pair via d=2^1+1"},
    {8, {8, 4, 3, 2, 0}, 0, "x^8+x^4+x^3+x^2+1"},
    {9, {9, 4, 0}, 3, "x^9+x^4+1, pair via d=2^1+1"},
    {10, {10, 3, 0}, 5, "x^10+x^3+1, pair via d=2^2+1"},
    {11, {11, 2, 0}, 3, "x^11+x^2+1, pair via d=2^1+1"},
};

std::string supported_degrees(bool gold_only) {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : kTable) {
        if (gold_only && e.preferred_decimation == 0) continue;
        os << (first ? "" : ", ") << e.degree;
        first = false;
    }
    return os.str();
}

BitSequence xor_seq(const BitSequence& a, const BitSequence& b) {
    BitSequence out = a;
    for (size_t i = 0; i < out.bits.size(); ++i) out.bits[i] ^= b.bits[i];
    return out;
}

BitSequence base_sequence(unsigned n) {
    const PolynomialEntry& e = polynomial_for_degree(n);
    return m_sequence(LfsrSpec{n, e.taps, 1});
}

}  // namespace

std::span<const PolynomialEntry> polynomial_table() { return kTable; }

const PolynomialEntry& polynomial_for_degree(unsigned degree) {
    for (const auto& e : kTable)
        if (e.degree == degree) return e;
    throw std::invalid_argument("no polynomial for degree " + std::to_string(degree) +
                                "; supported: " + supported_degrees(false));
}

BitSequence m_sequence(const LfsrSpec& spec) {
    const unsigned n = spec.degree;
    if (n == 0 || n > 63) throw std::invalid_argument("LFSR degree out of range");
    if (spec.seed == 0 || (spec.seed >> n) != 0)
        throw std::invalid_argument("LFSR seed must be a nonzero n-bit value");
    bool has0 = false, hasn = false;
    uint64_t mask = 0;  // recurrence taps: exponents below n
    for (unsigned t : spec.taps) {
        if (t == 0) has0 = true;
        if (t == n) hasn = true;
        if (t < n) mask |= uint64_t{1} << t;
    }
    if (!has0 || !hasn)
        throw std::invalid_argument("taps must include exponents 0 and the degree");

    const uint64_t period = (uint64_t{1} << n) - 1;
    BitSequence out;
    out.bits.reserve(period);

    uint64_t state = spec.seed;
    uint64_t steps = 0;
    do {
        if (steps < period) out.bits.push_back(static_cast<uint8_t>(state & 1));
        uint64_t fb = static_cast<uint64_t>(__builtin_parityll(state & mask));
        state = (state >> 1) | (fb << (n - 1));
        ++steps;
    } while (state != spec.seed && steps <= period);

    if (steps != period)
        throw std::invalid_argument("taps are not primitive: observed period " +
                                    std::to_string(steps) + ", expected " +
                                    std::to_string(period));
    return out;
}

BitSequence decimate(const BitSequence& s, uint64_t d) {
    const uint64_t n = s.bits.size();
    BitSequence out;
    out.bits.resize(n);
    for (uint64_t i = 0; i < n; ++i) out.bits[i] = s.bits[(i * d) % n];
    return out;
}

BitSequence cyclic_shift(const BitSequence& s, uint64_t k) {
    const uint64_t n = s.bits.size();
    BitSequence out;
    out.bits.resize(n);
    for (uint64_t i = 0; i < n; ++i) out.bits[i] = s.bits[(i + k) % n];
    return out;
}

CodeFamily gold_family(unsigned n) {
    const PolynomialEntry* entry = nullptr;
    for (const auto& e : kTable)
        if (e.degree == n && e.preferred_decimation != 0) entry = &e;
    if (!entry)
        throw std::invalid_argument("no Gold preferred pair for degree " +
                                    std::to_string(n) +
                                    "; supported: " + supported_degrees(true));

    const BitSequence u = m_sequence(LfsrSpec{n, entry->taps, 1});
    const BitSequence v = decimate(u, entry->preferred_decimation);
    const uint64_t len = u.bits.size();

    CodeFamily fam;
    fam.name = "gold";
    fam.native_length = len;
    fam.members.reserve(len + 2);
    fam.members.push_back(u);
    fam.members.push_back(v);
    for (uint64_t k = 0; k < len; ++k)
        fam.members.push_back(xor_seq(u, cyclic_shift(v, k)));
    return fam;
}

CodeFamily kasami_small(unsigned n) {
    if (n % 2 != 0 || n < 4 || n > 10)
        throw std::invalid_argument("small Kasami set needs even n in {4, 6, 8, 10}");
    const BitSequence u = base_sequence(n);
    const uint64_t short_period = (uint64_t{1} << (n / 2)) - 1;
    const BitSequence w = decimate(u, (uint64_t{1} << (n / 2)) + 1);

    CodeFamily fam;
    fam.name = "kasami-small";
    fam.native_length = u.bits.size();
    fam.members.reserve(short_period + 1);
    fam.members.push_back(u);
    for (uint64_t k = 0; k < short_period; ++k)
        fam.members.push_back(xor_seq(u, cyclic_shift(w, k)));
    return fam;
}

CodeFamily kasami_large(unsigned n) {
    if (n % 4 != 2 || !(n == 6 || n == 10))
        throw std::invalid_argument("large Kasami set needs n = 2 mod 4, n in {6, 10}");
    CodeFamily gold = gold_family(n);
    const BitSequence u = base_sequence(n);
    const uint64_t short_period = (uint64_t{1} << (n / 2)) - 1;
    const BitSequence w = decimate(u, (uint64_t{1} << (n / 2)) + 1);

    CodeFamily fam;
    fam.name = "kasami-large";
    fam.native_length = gold.native_length;
    fam.members.reserve(gold.members.size() * (short_period + 1));
    for (const auto& g : gold.members) {
        fam.members.push_back(g);
        for (uint64_t m = 0; m < short_period; ++m)
            fam.members.push_back(xor_seq(g, cyclic_shift(w, m)));
    }
    return fam;
}

BitSequence fit_to_length(const BitSequence& s, size_t target) {
    if (target < 1) throw std::invalid_argument("fit_to_length needs target >= 1");
    BitSequence out;
    out.bits.resize(target);
    for (size_t i = 0; i < target; ++i) out.bits[i] = s.bits[i % s.bits.size()];
    return out;
}

}  // namespace bpt
