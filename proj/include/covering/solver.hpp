#pragma once

#include "covering/instance.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace covering {

enum class Alg {
    snc,
    snc2,
    ssnc2,
    ssnc_multi,
    round_robin,
    ptas,
    fptas,
    mechanism,
    oracle,
};

Alg parse_alg(const std::string& name);
std::string alg_name(Alg alg);

struct SolveOptions {
    std::optional<Rational> epsilon;
    unsigned long long budget = 2'000'000;
    std::optional<Rational> round_base;  // job-size rounding for ssnc_multi
};

struct SolveOutput {
    Assignment assignment;
    nlohmann::ordered_json trace;  // algorithm-specific diagnostics, may be null
};

// Runs one algorithm with validated options. snc defaults epsilon to 1/10;
// ptas/fptas/mechanism require an explicit epsilon.
SolveOutput run_algorithm(Alg alg, const Instance& instance, const SolveOptions& options);

// Full CLI-facing report: cover, per-id works/loads, assignment by original
// job order, plus the trace.
nlohmann::ordered_json solve_report(Alg alg, const Instance& instance,
                                    const SolveOutput& output);

}  // namespace covering
