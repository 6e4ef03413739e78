#include "bpt/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace bpt {

namespace {

uint64_t isqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Marks composites in marks[lo..hi] using base primes <= sqrt(hi).
void sieve_segment(std::vector<uint8_t>& marks, uint64_t lo, uint64_t hi) {
    // Base primes via a small plain sieve; hi stays modest in this artifact
    // (chunk sizes are small), so this is never a bottleneck.
    const uint64_t root = isqrt(hi);
    std::vector<uint8_t> base(root + 1, 1);
    if (root >= 1) base[0] = base[1] = 0;
    for (uint64_t i = 2; i * i <= root; ++i)
        if (base[i])
            for (uint64_t j = i * i; j <= root; j += i) base[j] = 0;

    for (uint64_t n = lo; n <= hi; ++n) marks[n] = 1;
    if (lo == 0) marks[0] = 0;
    if (lo <= 1 && hi >= 1) marks[1] = 0;

    for (uint64_t p = 2; p <= root; ++p) {
        if (!base[p]) continue;
        uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
        if (start < 2 * p) start = 2 * p;
        for (uint64_t j = start; j <= hi; j += p) marks[j] = 0;
    }
}

}  // namespace

uint64_t PrimalityTable::count_primes() const {
    return static_cast<uint64_t>(
        std::accumulate(marks_.begin(), marks_.end(), uint64_t{0}));
}

PrimalityTable sieve_up_to(uint64_t limit) {
    PrimalityTable t;
    t.limit_ = limit;
    t.marks_.assign(limit + 1, 0);
    if (limit >= 2) sieve_segment(t.marks_, 0, limit);
    return t;
}

PrimalityTable extend(const PrimalityTable& table, uint64_t new_limit) {
    if (new_limit <= table.limit_) return table;
    const uint64_t target = std::max({new_limit, 2 * table.limit_, uint64_t{64}});

    PrimalityTable t;
    t.limit_ = target;
    t.marks_ = table.marks_;
    t.marks_.resize(target + 1, 0);
    sieve_segment(t.marks_, table.limit_ + 1, target);
    return t;
}

double prime_count_estimate(double x) {
    if (!(x > 1.0)) throw std::domain_error("prime_count_estimate requires x > 1");
    return x / std::log(x);
}

}  // namespace bpt
