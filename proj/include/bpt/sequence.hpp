#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bpt/tableau.hpp"

namespace bpt {

struct BitSequence {
    std::vector<uint8_t> bits;

    size_t length() const { return bits.size(); }

    std::string to_string() const {
        std::string s;
        s.reserve(bits.size());
        for (uint8_t b : bits) s.push_back(b ? '1' : '0');
        return s;
    }
};

struct BalanceReport {
    uint64_t ones = 0;
    uint64_t zeros = 0;
    double ones_ratio = 0.0;
    double zeros_ratio = 0.0;
};

// Column-wise mod-2 sum of the tableau; length p.
BitSequence bpt_sequence(const Tableau& t);

// Row-wise mod-2 sum of the tableau; length = row count.
BitSequence dt_sequence(const Tableau& t);

// Throws std::invalid_argument for an empty sequence.
BalanceReport balance(const BitSequence& s);

// Stirling number of the second kind, exact. Throws std::domain_error for
// k > n and std::overflow_error when the value exceeds uint64_t.
uint64_t stirling2(unsigned n, unsigned k);

}  // namespace bpt
