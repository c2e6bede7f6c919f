#pragma once

#include "covering/instance.hpp"
#include "covering/solver.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

namespace covering {

// Deterministic helper around mt19937_64; all draws go through here so a
// (seed, params) pair reproduces a suite bit for bit.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t below(std::uint64_t n) { return engine() % n; }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

// key=value parameters, e.g. "family=nonmono3,a=3/2".
struct GenParams {
    std::string family = "random";
    std::map<std::string, std::string> kv;

    bool has(const std::string& key) const { return kv.count(key) > 0; }
    Rational rational(const std::string& key, const Rational& fallback) const;
    long integer(const std::string& key, long fallback) const;
    void set_default(const std::string& key, const std::string& value);
};

GenParams parse_gen_params(const std::string& text);

struct GeneratedInstance {
    Instance instance;
    std::string family;
    std::optional<Rational> planted_cover;  // certified lower bound on OPT
    std::optional<Assignment> witness;      // attains planted_cover
    std::optional<Rational> predicted_ratio;
    std::optional<int> deviant_machine;     // bid raise that exhibits the family's violation
    std::optional<Rational> deviation_factor;
    std::optional<Rational> round_base;     // job-size rounding the family is built against
};

// Random related-machines instances; in planted mode per-machine bundles are
// drawn first so the witness certifies the planted cover.
GeneratedInstance gen_random(const GenParams& params, Rng& rng);

// Fixed worst-case families: rr_tight, snc_lb1, snc_lb2, ssnc_lb_small,
// ssnc_lb_large, nonmono3, round_nonmono, ptas_planted (randomized).
GeneratedInstance gen_adversarial(const GenParams& params, Rng& rng);

// Dispatch on params.family.
GeneratedInstance generate(const GenParams& params, Rng& rng);

// Thresholds the two-machine lower-bound analysis splits on. The prose
// crossover (SNC preferable up to 1+sqrt(2)) and the proof split (phi) are
// irrational; these rational stand-ins are data, not logic.
inline const Rational kPhiStandIn{8, 5};
inline const Rational kSncPreferredBelow{12, 5};

struct MonotonicityVerdict {
    std::string algorithm;
    std::string instance_doc;
    int machine_id = 0;
    Rational old_bid, new_bid;
    Rational old_work, new_work;
    bool violated = false;
};

// Runs the algorithm twice: as-is and with one bid multiplied by factor > 1
// (re-canonicalized), and compares the deviator's work exactly.
MonotonicityVerdict check_monotone_once(Alg alg, const SolveOptions& options,
                                        const Instance& instance, int machine_id,
                                        const Rational& factor);

inline const std::vector<Rational> kRaiseFactors{Rational(9, 8), Rational(3, 2), Rational(2),
                                                 Rational(5)};

struct MonotoneReport {
    std::string algorithm;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<MonotonicityVerdict> violations;
    bool pass = false;  // zero violations
};

MonotoneReport monotonicity_suite(Alg alg, const SolveOptions& options, int trials,
                                  std::uint64_t seed, GenParams params);

struct RatioBreach {
    std::string instance_doc;
    Rational opt, cover, ratio, bound;
};

struct RatioReport {
    std::string algorithm;
    int trials = 0;
    std::uint64_t seed = 0;
    Rational max_ratio{0};
    Rational bound_at_max{0};
    std::vector<RatioBreach> breaches;
    bool pass = false;  // every trial within its bound
};

// Per-trial exact ratio OPT / cover against the algorithm's proven bound;
// planted instances use the certified planted cover (conservative).
RatioReport ratio_suite(Alg alg, const SolveOptions& options, int trials, std::uint64_t seed,
                        GenParams params, unsigned long long budget);

// Proven approximation bound for one instance (depends on speeds/epsilon).
Rational ratio_bound(Alg alg, const Instance& instance, const SolveOptions& options);

nlohmann::ordered_json to_json(const MonotonicityVerdict& verdict);
nlohmann::ordered_json to_json(const MonotoneReport& report);
nlohmann::ordered_json to_json(const RatioReport& report);

}  // namespace covering
