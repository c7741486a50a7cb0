#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace repcensus {

// Words are byte strings; positions in the public API are 1-based, matching
// the usual convention in the combinatorics-on-words literature.
using Word = std::string;

// Decomposition w = root^exponent with root primitive.
struct RootDecomposition {
    Word root;
    int exponent = 1;

    bool operator==(const RootDecomposition&) const = default;
};

// All periods of w, ascending. |w| is always a period. Throws on the empty word.
std::vector<int> periods(std::string_view w);

// Quadratic reference implementation of periods(); the two must agree.
std::vector<int> periods_naive(std::string_view w);

// True iff u[i] == u[i+p] for every valid i. p must satisfy 1 <= p <= |w|.
bool is_period(std::string_view w, int p);

int smallest_period(std::string_view w);

RootDecomposition primitive_root(std::string_view w);

bool is_primitive(std::string_view w);

// Hypothesis of the periodicity lemma for periods p, q of w:
// p + q <= n + gcd(p, q), or p + q <= n in the weak variant.
bool fine_wilf_premise(std::string_view w, int p, int q, bool weak = false);

// True iff gcd(p, q) is also a period of w. p and q must be periods of w;
// whenever fine_wilf_premise() holds the result is guaranteed true.
bool fine_wilf_holds(std::string_view w, int p, int q);

}  // namespace repcensus
