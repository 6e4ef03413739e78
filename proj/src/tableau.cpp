#include "bpt/tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include "bpt/primes.hpp"

namespace bpt {

Tableau build_tableau(uint64_t p, TerminationKind kind) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");

    PrimalityTable table = sieve_up_to(std::max<uint64_t>(4 * p, 64));

    // Composite p makes the scan diverge: column 0 only ever holds multiples
    // of p, none of which are prime, so coverage can never complete.
    if (!table.is_prime(p))
        throw std::invalid_argument(
            "p must be prime: with composite p the tableau never completes "
            "(column 0 holds only multiples of p)");

    // Row-major scan: the first prime that completes column coverage is n_max.
    std::vector<uint8_t> covered(p, 0);
    uint64_t remaining = p;
    uint64_t n = 0;
    uint64_t n_max = 0;
    for (;; ++n) {
        if (n > table.limit()) table = extend(table, n);
        if (table.is_prime(n)) {
            uint64_t c = n % p;
            if (!covered[c]) {
                covered[c] = 1;
                if (--remaining == 0) {
                    n_max = n;
                    break;
                }
            }
        }
    }

    Tableau t;
    t.p = p;
    t.kind = kind;
    t.n_max = n_max;
    t.rows = n_max / p + 1;

    const uint64_t last = t.rows * p - 1;
    if (last > table.limit()) table = extend(table, last);

    t.cells.resize(t.rows * p);
    for (uint64_t v = 0; v <= last; ++v) {
        bool mark = table.is_prime(v);
        if (v > n_max && kind == TerminationKind::KindOne) mark = false;
        t.cells[v] = mark ? 1 : 0;
    }
    return t;
}

ChunkSize chunk_size(const Tableau& t) { return ChunkSize{t.n_max, t.p}; }

std::vector<ScanRecord> scan_series(const std::vector<uint64_t>& p_values,
                                    TerminationKind kind) {
    std::vector<ScanRecord> out;
    out.reserve(p_values.size());
    for (uint64_t p : p_values) {
        Tableau t = build_tableau(p, kind);
        out.push_back(ScanRecord{p, t.n_max, chunk_size(t), t.rows});
    }
    return out;
}

}  // namespace bpt
