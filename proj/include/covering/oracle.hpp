#pragma once

#include "covering/instance.hpp"

#include <stdexcept>

namespace covering {

// Raised when an exhaustive stage would exceed its enumeration budget.
struct budget_error : std::runtime_error {
    BigInt required;
    explicit budget_error(BigInt req)
        : std::runtime_error("oracle budget exceeded: " + req.str() + " assignments required"),
          required(std::move(req)) {}
};

struct OracleResult {
    Rational opt_cover;
    Assignment assignment;  // lexicographically smallest optimum
    BigInt explored;
};

// Exact optimum over all m^n assignments. The returned assignment is the
// first optimum in mixed-radix counter order over external machine ids
// (job 1 most significant), which is the lexicographically smallest one.
// The counter never reads bids, so the tie-break cannot move with speeds.
OracleResult optimal_cover(const Instance& instance, const BigInt& budget);

Assignment lex_min_optimal(const Instance& instance, const BigInt& budget);

}  // namespace covering
