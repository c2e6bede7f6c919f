#pragma once

#include "covering/instance.hpp"

#include <utility>

namespace covering {

// One Next Cover run at a guess value. Intervals are half-open ranges of
// sorted job indices, one per machine; on success any leftover jobs are
// folded into the last interval. On failure a suffix of machines holds
// short or empty intervals.
struct NcOutcome {
    bool success = false;
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
    Rational guess;
};

// Greedy consecutive fill: each machine in turn takes jobs in sorted order
// until its total reaches the guess. Succeeds iff all m machines get there.
NcOutcome next_cover(const std::vector<Rational>& sorted_jobs, std::size_t m,
                     const Rational& guess);

struct SncIteration {
    Rational lower, upper, guess;
    bool success;
};

struct SncTrace {
    Rational lpt_value;  // A
    std::vector<SncIteration> iterations;
    Rational final_lower;
};

struct SncResult {
    Assignment assignment;
    SncTrace trace;
};

// Sorted Next Cover: normalize, bracket [A/2, 4A/3] from LPT, geometric
// binary search on the guess until U - L <= (eps/2) L, then one final run at
// L whose subsets are sorted non-increasing and handed to machines in bid
// order. The partition never reads bids. epsilon must lie in (0, 1/2).
SncResult snc(const Instance& instance, const Rational& epsilon);

}  // namespace covering
