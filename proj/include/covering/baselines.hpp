#pragma once

#include "covering/instance.hpp"

namespace covering {

struct IdenticalSchedule {
    std::vector<std::vector<std::size_t>> sets;  // job indices per machine
    Rational min_sum;                            // the LPT value A
};

// LPT on k identical machines. Jobs must be sorted non-increasing; each job
// goes to a currently least-loaded machine, ties to the lowest index.
IdenticalSchedule lpt_identical(const std::vector<Rational>& sorted_jobs, std::size_t k);

// List Scheduling: jobs in the given order, each to a least-loaded set,
// ties to the lowest index. Max set sum - min set sum <= max job size.
std::vector<std::vector<std::size_t>> list_schedule(const std::vector<Rational>& jobs,
                                                    std::size_t k);

// Sorted job j goes to the machine at sorted position j mod m. The job sets
// depend only on sizes, so a machine bidding higher can only move to a later
// position and receive a (weakly) smaller set.
Assignment round_robin(const Instance& instance);

}  // namespace covering
