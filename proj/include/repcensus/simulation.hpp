#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace repcensus {

// State of the abstract block generator: p is the value of the last positive
// block, occ the number of positive elements emitted, len the emitted length
// not counting the ceil(p/2) trailing zeros.
struct SimState {
    long long p = 0;
    long long occ = 0;
    long long len = 0;

    bool operator==(const SimState&) const = default;
};

// One generator step: `gap` zeros (the pseudocode's l, 0 <= gap < ceil(p/2))
// followed by a block of the new value p' = 2p - gap + alpha.
struct SimStep {
    long long gap = 0;
    long long alpha = 0;

    bool operator==(const SimStep&) const = default;
};

struct SimTrace {
    long long initial_p = 1;
    std::vector<SimStep> steps;
};

struct SimRunResult {
    SimState final_state;
    // Emitted sequence including the ceil(p_final/2) trailing zeros; filled
    // only when requested.
    std::vector<long long> emitted;
    long long total_len = 0;   // len + ceil(p_final/2)
    long long positives = 0;   // == occ
};

SimState sim_init(long long p);

SimState sim_step(const SimState& s, const SimStep& step);

SimRunResult sim_run(const SimTrace& trace, bool keep_sequence = false);

// Integer form of occ / (len + p/2) <= 4/5.
bool invariant_holds(const SimState& s);

struct ExplorationReport {
    long long traces = 0;
    std::vector<std::string> violations;  // expected empty
};

// Enumerates every trace with initial_p <= max_p0, at most max_steps steps,
// every legal gap and every alpha <= max_alpha, checking the invariant after
// initialization and after every step. Alpha is capped because growing alpha
// only widens the invariant margin (the denominator gains 2*alpha against
// alpha in the numerator).
ExplorationReport explore_traces(long long max_p0, long long max_steps,
                                 long long max_alpha);

// Normalization of a nonnegative sequence, applied to fixpoint:
// (i) drop the zeros lying between two equal positive values with only zeros
//     between them, then
// (ii) extend any maximal run of a positive value q shorter than q to length
//      exactly q.
// Each elementary step is applied leftmost-first; neither can decrease the
// ratio of positive elements to length.
std::vector<long long> normalize_c(std::vector<long long> c);

// Every intermediate sequence of normalize_c, starting with the input.
std::vector<std::vector<long long>> normalize_c_steps(std::vector<long long> c);

// Diagnostic: checks whether a normalized sequence has the block shape the
// generator can produce (leading run of value p of length p, then blocks of
// gap zeros and p' copies of p' with gap < ceil(p/2) and p' >= 2p - gap,
// ending in exactly ceil(p_final/2) zeros). Returns a description of the
// first mismatch, or nullopt if the shape fits.
std::optional<std::string> trace_shape_mismatch(
    const std::vector<long long>& seq);

}  // namespace repcensus
