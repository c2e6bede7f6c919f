#pragma once

#include "covering/instance.hpp"

#include <optional>

namespace covering {

// A two-machine split of the sorted job list after position index (1-based):
// head = jobs 1..index, tail = jobs index+1..n.
struct SplitChoice {
    std::size_t index;   // in 1..n-1
    Rational head_sum;   // sigma1
    Rational tail_sum;   // sigma2
    Rational bid_ratio;  // r = b2/b1 (1 for the speed-oblivious variant)
};

// Maximizes min(sigma1, sigma2); ties go to the smallest index.
SplitChoice choose_split_snc2(const std::vector<Rational>& sorted_jobs);

// Maximizes min(sigma1 / r, sigma2); ties go to the smallest index.
SplitChoice choose_split_ssnc2(const std::vector<Rational>& sorted_jobs, const Rational& r);

// Two-machine Sorted Next Cover: best split by min(sigma1, sigma2), then the
// larger side goes to the faster (lower-bid) machine. n < 2 puts everything
// on the first machine.
Assignment snc2(const Instance& instance);

// Speed-aware variant: split objective divides the head by r = b2/b1.
Assignment ssnc2(const Instance& instance);

// Exponential speed-aware variant for any m: scans all consecutive
// partitions of the sorted jobs into m sets and keeps the one maximizing the
// minimum load with set k on the k-th machine in bid order (ties to the
// lexicographically smallest split tuple). With a rounding base the
// objective uses sizes rounded up to powers of the base, and the final sets
// are re-sorted by true sum before being handed to the machines. Not
// monotone for m > 2; kept to reproduce exactly that failure.
Assignment ssnc_multi(const Instance& instance,
                      const std::optional<Rational>& job_rounding_base = std::nullopt);

}  // namespace covering
