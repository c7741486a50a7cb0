#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "repcensus/word.hpp"

namespace repcensus {

// Classes of repetitive subwords, characterized by the exponent e of the
// subword with respect to its primitive root:
//   Cube             e >= 3 and e divisible by 3   (u = v^3)
//   Square           e >= 2 and e even             (u = x^2)
//   NpSquare         e >= 4 and e even             (u = x^2, x nonprimitive)
//   HighlyRepetitive e >= 3                        (u = v^k, k >= 3)
enum class PowerClass { Cube, Square, NpSquare, HighlyRepetitive };

constexpr std::array<PowerClass, 4> kAllPowerClasses = {
    PowerClass::Cube, PowerClass::Square, PowerClass::NpSquare,
    PowerClass::HighlyRepetitive};

std::string_view power_class_name(PowerClass cls);

// True iff a power subword with the given primitive-root exponent belongs
// to the class.
bool class_matches(PowerClass cls, int exponent);

// The last occurrence of one distinct repetitive subword. `start` is 1-based;
// the subword is w[start .. start+total_len-1] and equals its primitive root
// (of length root_len) raised to total_len / root_len.
struct Occurrence {
    int start = 0;
    int root_len = 0;
    int total_len = 0;
    PowerClass power_class = PowerClass::Cube;

    bool operator==(const Occurrence&) const = default;
};

struct CensusReport {
    int word_len = 0;
    // Distinct-subword counts indexed by PowerClass.
    std::array<long long, 4> counts{};
    std::vector<Occurrence> cube_last_occurrences;
    // c_sequence[i-1] is the primitive-root length of the cube whose last
    // occurrence starts at position i, or 0 if there is none.
    std::vector<int> c_sequence;

    long long count(PowerClass cls) const {
        return counts[static_cast<int>(cls)];
    }
};

// One distinct subword of class `cls` per entry, placed at its last
// occurrence, sorted by (start, total_len). The two paths must agree:
// enumerate_distinct() runs the optimized scan, enumerate_distinct_naive()
// works directly from the definitions (all subwords, brute-force roots).
std::vector<Occurrence> enumerate_distinct(std::string_view w, PowerClass cls);
std::vector<Occurrence> enumerate_distinct_naive(std::string_view w,
                                                 PowerClass cls);

long long count_distinct(std::string_view w, PowerClass cls);
long long count_distinct_naive(std::string_view w, PowerClass cls);

CensusReport census(std::string_view w);

// Length of the independent prefix of w: 1 if no cube has its last occurrence
// at position 1, otherwise the smallest i + ceil(q/2) such that a cube with
// root length q has its last occurrence at position i and the next ceil(q/2)
// positions hold no last occurrence of any cube.
int independent_prefix(std::string_view w);

// Checks that a highly repetitive prefix x of a highly repetitive word y with
// |x| >= |y| - |root(y)| is also a suffix of y. Preconditions are validated
// and violations throw std::invalid_argument naming the failed clause.
bool check_hr_prefix_suffix(std::string_view x, std::string_view y);

// A falsified combinatorial property, with a printable counterexample.
struct Violation {
    std::string check;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

// Cube last occurrences at positions i < j <= i + ceil(p/2) (p the root
// length at i) must satisfy q == p or q >= 2p - (j-i-1) for the root length
// q at j. Returns all violating pairs; expected empty for every word.
std::vector<Violation> check_close_cube_roots(std::string_view w);

// No p+1 positions holding cubes with root length p may appear with
// consecutive gaps at most p. Expected empty for every word.
std::vector<Violation> check_p_occurrence_runs(std::string_view w);

// No two distinct highly repetitive subwords share a last-occurrence start.
std::vector<Violation> check_distinct_starts(std::string_view w);

// Within the independent prefix v (when |v| > 1), consecutive nonzero
// c-sequence entries c_i, c_j satisfy j-i <= ceil(c_i/2) (gap bound) and
// c_j >= 2*c_i - (j-i-1) (growth bound).
std::vector<Violation> check_gap_growth(std::string_view w);

// Count bounds for a word of length n: highly repetitive <= n-2 and
// np-squares <= floor(n/2)-1 for n >= 2, cubes <= floor(4n/5).
std::vector<Violation> check_count_bounds(std::string_view w);

// All of the above checks on one word.
std::vector<Violation> check_word_properties(std::string_view w);

}  // namespace repcensus
