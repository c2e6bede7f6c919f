#pragma once

#include "covering/instance.hpp"

namespace covering {

struct MegaJob {
    std::vector<std::size_t> members;  // sorted-job indices
    Rational size;
};

enum class ReductionCase { identity, greedy, list_scheduling };

// Result of merging the small jobs into mega-jobs. The delta largest jobs
// are kept intact; the rest are combined either greedily (each mega-job in
// [a, 3a) where a is the largest small size) or via List Scheduling onto
// delta virtual machines (each mega-job in [A/delta - a, A/delta + a]).
// Total size is conserved exactly and bids are never consulted.
struct ReducedJobs {
    std::vector<std::size_t> kept;
    std::vector<MegaJob> mega;
    BigInt delta;
    ReductionCase case_tag = ReductionCase::identity;
};

// delta = ceil(2 m^2 / eps^2) + m
BigInt reduction_threshold(std::size_t m, const Rational& epsilon);

ReducedJobs reduce_jobs(const std::vector<Rational>& sorted_jobs, std::size_t m,
                        const Rational& epsilon);

// Reduce, solve the reduced instance exactly with the lexicographically
// smallest optimal assignment, then expand mega-jobs back onto their
// machines. epsilon in (0,1); the exhaustive stage honors oracle_budget.
Assignment ptas(const Instance& instance, const Rational& epsilon, const BigInt& oracle_budget);

}  // namespace covering
