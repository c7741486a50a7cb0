#pragma once

#include "repcensus/word.hpp"

namespace repcensus {

// The binary block 0^i 1 0^(i+1) 1 of length 2i+3, i >= 1.
Word p_block(int i);

// Concatenation p_block(1) ... p_block(n), of length n^2 + 4n.
Word q_word(int n);

// Closed form n(n+1)/2 - 1 + floor((n+1)/3) for the number of distinct cubes
// in q_word(n), computed in exact integers.
long long expected_qn_cubes(long long n);

Word uniform_word(char symbol, int n);

// The square-rich block 0^(i+1) 1 0^i 1 0^(i+1) 1 of length 3i+5, i >= 1.
// Generator only; no count formula is asserted for this family.
Word fs_prime_block(int i);

}  // namespace repcensus
