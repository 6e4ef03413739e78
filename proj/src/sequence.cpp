#include "bpt/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpt {

BitSequence bpt_sequence(const Tableau& t) {
    BitSequence s;
    s.bits.assign(t.p, 0);
    for (uint64_t r = 0; r < t.rows; ++r)
        for (uint64_t c = 0; c < t.p; ++c) s.bits[c] ^= t.cell(r, c);
    return s;
}

BitSequence dt_sequence(const Tableau& t) {
    BitSequence s;
    s.bits.assign(t.rows, 0);
    for (uint64_t r = 0; r < t.rows; ++r)
        for (uint64_t c = 0; c < t.p; ++c) s.bits[r] ^= t.cell(r, c);
    return s;
}

BalanceReport balance(const BitSequence& s) {
    if (s.bits.empty()) throw std::invalid_argument("balance of empty sequence");
    BalanceReport rep;
    for (uint8_t b : s.bits) rep.ones += b;
    rep.zeros = s.bits.size() - rep.ones;
    rep.ones_ratio = static_cast<double>(rep.ones) / static_cast<double>(s.bits.size());
    rep.zeros_ratio = static_cast<double>(rep.zeros) / static_cast<double>(s.bits.size());
    return rep;
}

uint64_t stirling2(unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("stirling2 requires k <= n");
    // Row-by-row recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1).
    std::vector<uint64_t> row(k + 1, 0);
    row[0] = 1;  // S(0,0)
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j) {
            uint64_t scaled;
            if (__builtin_mul_overflow(row[j], uint64_t{j}, &scaled) ||
                __builtin_add_overflow(scaled, row[j - 1], &row[j]))
                throw std::overflow_error("stirling2 overflows uint64");
        }
        row[0] = 0;  // S(i,0) = 0 for i >= 1
    }
    return row[k];
}

}  // namespace bpt
