#pragma once

#include "covering/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace covering {

// Canonical problem instance. Jobs are sorted by non-increasing size (stable,
// so ties keep their input order); machines are sorted by non-decreasing bid
// with ties broken by ascending external machine id. The bid of a machine is
// the inverse of its speed.
struct Instance {
    std::vector<Rational> jobs;             // sorted non-increasing
    std::vector<std::size_t> job_input_pos; // sorted position -> input position
    std::vector<Rational> bids;             // sorted non-decreasing
    std::vector<int> machine_ids;           // external id per sorted position
    std::vector<int> pos_of_id;             // inverse of machine_ids

    std::size_t n() const { return jobs.size(); }
    std::size_t m() const { return bids.size(); }
    int id_at(std::size_t pos) const { return machine_ids[pos]; }
    std::size_t pos_of(int id) const { return static_cast<std::size_t>(pos_of_id[static_cast<std::size_t>(id)]); }

    // Copy with one machine's bid replaced, re-canonicalized.
    Instance with_bid(int machine_id, const Rational& new_bid) const;
};

Instance sort_canonical(std::vector<Rational> jobs, std::vector<Rational> bids,
                        std::vector<int> machine_ids = {});

// Instance document: {"jobs":[str...],"bids":[str...],"machine_ids":[int...]?}
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

// Jobs scaled so they sum to 1; bids and ordering untouched.
Instance normalize_total(const Instance& instance);

// machine_of[j] is the canonical machine position of sorted job j.
struct Assignment {
    std::vector<int> machine_of;
};

struct CoverReport {
    std::vector<Rational> work;  // per canonical machine position
    std::vector<Rational> load;  // work * bid
    Rational cover;              // min load
    std::vector<std::size_t> bottleneck;  // positions attaining the cover
};

CoverReport evaluate(const Assignment& assignment, const Instance& instance);

// Work per external machine id (index = id).
std::vector<Rational> works_by_id(const Assignment& assignment, const Instance& instance);

}  // namespace covering
