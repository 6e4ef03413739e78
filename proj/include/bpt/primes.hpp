#pragma once

#include <cstdint>
#include <vector>

namespace bpt {

// Primality marks for every integer in [0, limit]. 0 and 1 are marked
// composite. Immutable after construction; extend() returns a new table.
class PrimalityTable {
public:
    uint64_t limit() const { return limit_; }

    bool is_prime(uint64_t n) const { return marks_[n] != 0; }

    uint64_t count_primes() const;

    friend PrimalityTable sieve_up_to(uint64_t limit);
    friend PrimalityTable extend(const PrimalityTable& table, uint64_t new_limit);

private:
    uint64_t limit_ = 0;
    std::vector<uint8_t> marks_;  // one byte per integer, index = value
};

// Full sieve of Eratosthenes over [0, limit].
PrimalityTable sieve_up_to(uint64_t limit);

// Returns a table covering at least new_limit; marks below the old limit are
// unchanged. The sieved range at least doubles so repeated small extensions
// stay amortized. If new_limit <= table.limit() the table is returned as is.
PrimalityTable extend(const PrimalityTable& table, uint64_t new_limit);

// Prime number theorem estimate x / ln(x). Throws std::domain_error for x <= 1.
double prime_count_estimate(double x);

}  // namespace bpt
