#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bpt/sequence.hpp"

namespace bpt {

// Fibonacci LFSR: taps are the exponents of the feedback polynomial over
// GF(2); they must include 0 and the degree. Output bit is the low-order
// state bit each step.
struct LfsrSpec {
    unsigned degree = 0;
    std::vector<unsigned> taps;
    uint64_t seed = 1;
};

struct CodeFamily {
    std::string name;
    std::vector<BitSequence> members;  // all of native_length
    size_t native_length = 0;
};

// One audited entry per supported degree. preferred_decimation is the
// decimation d for which (u, u[d]) is a preferred pair (0 when degree
// admits no Gold construction, i.e. degree % 4 == 0).
struct PolynomialEntry {
    unsigned degree;
    std::vector<unsigned> taps;
    unsigned preferred_decimation;
    const char* note;
};

std::span<const PolynomialEntry> polynomial_table();

// Looks up the audited entry for a degree; throws std::invalid_argument
// listing supported degrees when absent.
const PolynomialEntry& polynomial_for_degree(unsigned degree);

// One full period of length 2^degree - 1. Non-primitive taps are detected
// by the state cycle closing early; the error names the observed period.
BitSequence m_sequence(const LfsrSpec& spec);

// w[i] = s[(i * d) mod N]; used for preferred pairs and Kasami sets.
BitSequence decimate(const BitSequence& s, uint64_t d);

BitSequence cyclic_shift(const BitSequence& s, uint64_t k);

// {u, v, u ^ shift_k(v)}, size 2^n + 1, length 2^n - 1.
// Supported degrees: 5, 6, 7, 9, 10, 11 (n mod 4 != 0 with a stored pair).
CodeFamily gold_family(unsigned n);

// Small set of Kasami sequences, size 2^(n/2). Supported n: 4, 6, 8, 10.
CodeFamily kasami_small(unsigned n);

// Large set of Kasami sequences, size 2^(n/2) * (2^n + 1). Supported n: 6, 10.
CodeFamily kasami_large(unsigned n);

// Truncates or cyclically repeats to exactly target bits.
BitSequence fit_to_length(const BitSequence& s, size_t target);

}  // namespace bpt
