#pragma once

#include <cstdint>
#include <vector>

namespace bpt {

// How the last row of a complete tableau is finished: KindOne zero-fills
// every cell past n_max, KindTwo keeps primality marks to the end of the row.
enum class TerminationKind { KindOne = 1, KindTwo = 2 };

// Exact n_max / p with a real-valued view.
struct ChunkSize {
    uint64_t numerator = 0;    // n_max
    uint64_t denominator = 1;  // p
    double value() const {
        return static_cast<double>(numerator) / static_cast<double>(denominator);
    }
};

// Integers 0,1,2,... laid out row-major in p columns with primes marked 1,
// truncated at the first prime that gives every column at least one 1.
struct Tableau {
    uint64_t p = 0;
    TerminationKind kind = TerminationKind::KindOne;
    uint64_t n_max = 0;
    uint64_t rows = 0;  // q = floor(n_max / p) + 1
    std::vector<uint8_t> cells;  // rows * p bits, row-major

    uint8_t cell(uint64_t row, uint64_t col) const { return cells[row * p + col]; }
};

// Builds the minimal complete tableau for p columns. Scans 0,1,2,... marking
// primes until every column holds a 1; the completing prime is n_max.
// Throws std::invalid_argument for p < 2 and for composite p (column 0 can
// then never receive a prime, so the scan would not terminate).
Tableau build_tableau(uint64_t p, TerminationKind kind);

ChunkSize chunk_size(const Tableau& t);

struct ScanRecord {
    uint64_t p = 0;
    uint64_t n_max = 0;
    ChunkSize chunk;
    uint64_t rows = 0;
};

// One record per p, in input order. Propagates build_tableau errors.
std::vector<ScanRecord> scan_series(const std::vector<uint64_t>& p_values,
                                    TerminationKind kind);

}  // namespace bpt
