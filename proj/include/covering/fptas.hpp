#pragma once

#include "covering/instance.hpp"

#include <cstdint>

namespace covering {

// Integer DP input: loads[i][k] is the rounded load of job k on machine i
// (all >= 1), target is the per-machine cover S to reach. With strict_guard
// the predecessor lookup requires a_i - l >= 0 as written; by default the
// subtraction clamps at zero so a single oversized job can still cover a
// machine ("or better" semantics).
struct DpInput {
    std::vector<std::vector<long>> loads;  // [machine][job]
    long target = 0;
    std::size_t machines = 0;
    std::size_t jobs = 0;
    bool strict_guard = false;
};

struct DpResult {
    bool reachable = false;
    std::size_t minimal_k = 0;           // smallest prefix length covering the target
    std::vector<int> prefix;             // machine per job 0..minimal_k-1
    std::vector<std::vector<std::uint8_t>> tables;  // tables[k][state], built up to minimal_k
};

// Fills tables k = 1..n in order; each cell holds the maximum machine index
// (1-based) that job k can take while keeping the state reachable, 0 if
// unreachable. Stops at the first k whose all-target state is positive.
DpResult dp_cover_test(const DpInput& input);

// ell = ceil(log_{1+eps} (sum of sizes / smallest size)), computed by exact
// power iteration.
long compute_ell(const std::vector<Rational>& jobs, const Rational& epsilon);

struct RoundedBids {
    std::vector<long> exponents;   // per canonical machine position, min is 0
    std::vector<Rational> values;  // (1+eps)^exponent
    long ell = 0;
    bool clamped = false;  // some bid exceeded (1+eps)^(ell+1) and was cut
};

// Round each bid up to the nearest power of 1+eps, normalize so the lowest
// rounded bid is 1, clamp exponents above ell+1.
RoundedBids round_bids(const std::vector<Rational>& bids, const Rational& epsilon, long ell);

struct FptasResult {
    Assignment assignment;
    long achieved_j = 0;         // largest j whose rounded DP covers the target
    bool search_anomaly = false; // binary-search bracket failed; fell back to a linear scan
};

// Non-monotone FPTAS: scale so Round Robin covers 1, binary-search the
// largest j in {1/eps..m/eps} whose rounded DP reaches (S,...,S) with
// S = n/eps, reconstruct from the minimal prefix and put every remaining job
// on the fastest machine. Requires 1/eps to be a positive integer. The
// unrounded cover is at least (1-2 eps) OPT.
FptasResult fptas(const Instance& instance, const Rational& epsilon);

struct MechanismResult {
    Assignment assignment;
    RoundedBids rounded;
    long candidates = 0;
    // Subroutine calls where a machine bidding (1+eps)^ell or more received
    // a job count other than one; observed, never assumed.
    long single_job_monitor = 0;
};

// Monotone mechanism: round and clamp the bids, run the FPTAS once per
// candidate bid vector in {(1+eps)^0..(1+eps)^(ell+1)}^m, re-sort each
// output so larger work goes to faster machines under the rounded bids, and
// keep the candidate with the maximal cover (ties: lexicographically
// maximum work sequence by machine id).
MechanismResult mechanism(const Instance& instance, const Rational& epsilon);

}  // namespace covering
