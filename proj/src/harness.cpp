#include "covering/harness.hpp"

#include "covering/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace covering {

Rational GenParams::rational(const std::string& key, const Rational& fallback) const {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    return parse_rational(it->second);
}

long GenParams::integer(const std::string& key, long fallback) const {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    const Rational r = parse_rational(it->second);
    if (denominator(r) != 1) throw std::invalid_argument("parameter " + key + " must be an integer");
    return static_cast<long>(numerator(r));
}

void GenParams::set_default(const std::string& key, const std::string& value) {
    kv.emplace(key, value);
}

GenParams parse_gen_params(const std::string& text) {
    GenParams params;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const std::string entry = text.substr(start, end - start);
        if (!entry.empty()) {
            const std::size_t eq = entry.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("gen-params entries must look like key=value");
            const std::string key = entry.substr(0, eq);
            const std::string value = entry.substr(eq + 1);
            if (key == "family")
                params.family = value;
            else
                params.kv[key] = value;
        }
        start = end + 1;
    }
    return params;
}

namespace {

Rational draw_rational(Rng& rng, long num_max, long den_max) {
    const long num = rng.range(1, num_max);
    const long den = rng.range(1, den_max);
    return Rational(num, den);
}

// Largest n with m^n <= cap.
long cap_jobs(long m, long n_max, unsigned long long cap) {
    long n = 0;
    unsigned long long total = 1;
    while (n < n_max && total <= cap / static_cast<unsigned long long>(m)) {
        total *= static_cast<unsigned long long>(m);
        ++n;
    }
    return n;
}

}  // namespace

GeneratedInstance gen_random(const GenParams& params, Rng& rng) {
    const long m_min = params.integer("m_min", 2);
    const long m_max = params.integer("m_max", 4);
    long n_min = params.integer("n_min", 1);
    long n_max = params.integer("n_max", 10);
    const long size_max = params.integer("size_max", 12);
    const long size_den = params.integer("size_den", 3);
    const long bid_max = params.integer("bid_max", 6);
    const long bid_den = params.integer("bid_den", 3);
    const bool planted = params.integer("planted", 0) != 0;
    const long oracle_cap = params.integer("oracle_cap", 0);

    const long m = rng.range(m_min, m_max);
    if (oracle_cap > 0)
        n_max = std::min(n_max, cap_jobs(m, n_max, static_cast<unsigned long long>(oracle_cap)));
    n_min = std::min(n_min, n_max);
    const long n = rng.range(std::max(1L, n_min), std::max(1L, n_max));

    std::vector<Rational> bids;
    for (long i = 0; i < m; ++i) bids.push_back(draw_rational(rng, bid_max, bid_den));

    GeneratedInstance out;
    out.family = "random";
    if (!planted) {
        std::vector<Rational> jobs;
        for (long j = 0; j < n; ++j) jobs.push_back(draw_rational(rng, size_max, size_den));
        out.instance = sort_canonical(std::move(jobs), std::move(bids));
        return out;
    }

    // Planted mode: draw a bundle per machine, record the witness.
    const long usable = std::max(n, m);  // every machine needs at least one job
    std::vector<long> counts(static_cast<std::size_t>(m), 1);
    for (long extra = usable - m; extra > 0; --extra)
        ++counts[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)))];
    std::vector<Rational> jobs;
    std::vector<int> owner_by_input;
    for (long id = 0; id < m; ++id) {
        for (long c = 0; c < counts[static_cast<std::size_t>(id)]; ++c) {
            jobs.push_back(draw_rational(rng, size_max, size_den));
            owner_by_input.push_back(static_cast<int>(id));
        }
    }
    out.family = "planted";
    out.instance = sort_canonical(jobs, std::move(bids));
    Assignment witness;
    witness.machine_of.resize(out.instance.n());
    for (std::size_t sorted = 0; sorted < out.instance.n(); ++sorted) {
        const int id = owner_by_input[out.instance.job_input_pos[sorted]];
        witness.machine_of[sorted] = static_cast<int>(out.instance.pos_of(id));
    }
    out.planted_cover = evaluate(witness, out.instance).cover;
    out.witness = std::move(witness);
    return out;
}

namespace {

GeneratedInstance make_rr_tight(long m) {
    if (m < 2) throw std::invalid_argument("rr_tight needs m >= 2");
    std::vector<Rational> jobs;
    for (long i = 0; i + 1 < m; ++i) jobs.emplace_back(1);
    for (long i = 0; i < m; ++i) jobs.emplace_back(Rational(1, m));
    std::vector<Rational> bids(static_cast<std::size_t>(m), Rational(1));
    GeneratedInstance out;
    out.family = "rr_tight";
    out.instance = sort_canonical(jobs, bids);
    Assignment witness;
    witness.machine_of.resize(out.instance.n());
    for (std::size_t j = 0; j < out.instance.n(); ++j) {
        // one unit job per machine, all small jobs on the last machine
        witness.machine_of[j] = j < static_cast<std::size_t>(m - 1) ? static_cast<int>(j)
                                                                    : static_cast<int>(m - 1);
    }
    out.planted_cover = evaluate(witness, out.instance).cover;  // exactly 1
    out.witness = std::move(witness);
    out.predicted_ratio = Rational(m);
    return out;
}

GeneratedInstance make_snc_lb1(const Rational& s) {
    if (!(s > 1)) throw std::invalid_argument("snc_lb1 needs s > 1");
    const Rational p2 = (s - 1) / (2 * (s + 1));
    const Rational p3 = Rational(1) / (s + 1);
    GeneratedInstance out;
    out.family = "snc_lb1";
    out.instance = sort_canonical({Rational(1, 2), p2, p3}, {Rational(1) / s, Rational(1)});
    // witness: exactly one job of size 1/(s+1) on the slow machine
    Assignment witness;
    witness.machine_of.assign(3, 0);
    for (std::size_t j = 0; j < 3; ++j)
        if (out.instance.jobs[j] == p3) {
            witness.machine_of[j] = 1;
            break;
        }
    out.planted_cover = evaluate(witness, out.instance).cover;  // = 1/(s+1)
    out.witness = std::move(witness);
    out.predicted_ratio = 2 * s / (s + 1);
    return out;
}

GeneratedInstance make_snc_lb2(const Rational& s) {
    if (!(s > Rational(1, 2)) || !(s < 2))
        throw std::invalid_argument("snc_lb2 needs 1/2 < s < 2");
    const Rational third(1, 3);
    const Rational p3 = (2 * s - 1) / (3 * (s + 1));
    const Rational p4 = (2 - s) / (3 * (s + 1));
    GeneratedInstance out;
    out.family = "snc_lb2";
    out.instance = sort_canonical({third, third, p3, p4}, {Rational(1) / s, Rational(1)});
    // witness: {1/3, (2s-1)/(3s+3)} on the fast machine, the rest on the slow one
    Assignment witness;
    witness.machine_of.assign(4, 1);
    bool used_third = false, used_p3 = false;
    for (std::size_t j = 0; j < 4; ++j) {
        if (!used_third && out.instance.jobs[j] == third) {
            witness.machine_of[j] = 0;
            used_third = true;
        } else if (!used_p3 && out.instance.jobs[j] == p3) {
            witness.machine_of[j] = 0;
            used_p3 = true;
        }
    }
    out.planted_cover = evaluate(witness, out.instance).cover;  // = 1/(s+1)
    out.witness = std::move(witness);
    out.predicted_ratio = Rational(3) / (s + 1);
    return out;
}

GeneratedInstance make_ssnc_lb_small(const Rational& s, const Rational& eps) {
    if (!(s >= 1) || s > kPhiStandIn)
        throw std::invalid_argument("ssnc_lb_small needs 1 <= s <= 8/5");
    const Rational big = s / (2 * s + 1);
    if (!(eps > 0) || !(2 * eps <= big))
        throw std::invalid_argument("ssnc_lb_small needs 0 < eps <= s/(2(2s+1))");
    const Rational count = (Rational(1) / (2 * s + 1) + eps) / eps;
    if (denominator(count) != 1)
        throw std::invalid_argument("ssnc_lb_small small-job count must be integral");
    const long k = static_cast<long>(numerator(count));
    const Rational fast_extra = (s * s) / ((s + 1) * (2 * s + 1)) / eps;
    if (denominator(fast_extra) != 1 || numerator(fast_extra) > k)
        throw std::invalid_argument("ssnc_lb_small witness split must be integral");
    const long j_fast = static_cast<long>(numerator(fast_extra));

    std::vector<Rational> jobs{big, big - eps};
    for (long i = 0; i < k; ++i) jobs.push_back(eps);
    GeneratedInstance out;
    out.family = "ssnc_lb_small";
    out.instance = sort_canonical(jobs, {Rational(1) / s, Rational(1)});
    // witness: first big job plus j_fast smalls on the fast machine
    Assignment witness;
    witness.machine_of.assign(out.instance.n(), 1);
    witness.machine_of[0] = 0;
    long placed = 0;
    for (std::size_t j = out.instance.n(); j > 2 && placed < j_fast; --j) {
        witness.machine_of[j - 1] = 0;
        ++placed;
    }
    out.planted_cover = evaluate(witness, out.instance).cover;  // = 1/(s+1)
    out.witness = std::move(witness);
    out.predicted_ratio = (Rational(1) / (s + 1)) / (Rational(1) / (2 * s + 1) + eps);
    return out;
}

GeneratedInstance make_ssnc_lb_large(const Rational& s, const Rational& eps) {
    if (!(eps > 0)) throw std::invalid_argument("ssnc_lb_large needs eps > 0");
    if (!(s * s - s - 1 > 2 * eps * (s + 1) * (s + 1)))
        throw std::invalid_argument("ssnc_lb_large needs s^2 - s - 1 > 2 eps (s+1)^2");
    const Rational sq = (s + 1) * (s + 1);
    const Rational p1 = s * s / sq - eps;
    const Rational p2 = Rational(1) / (s + 1) + eps;
    const Rational p3 = s / sq;
    GeneratedInstance out;
    out.family = "ssnc_lb_large";
    out.instance = sort_canonical({p1, p2, p3}, {Rational(1) / s, Rational(1)});
    Assignment witness;
    witness.machine_of.assign(3, 0);
    for (std::size_t j = 0; j < 3; ++j)
        if (out.instance.jobs[j] == p2) witness.machine_of[j] = 1;
    out.planted_cover = evaluate(witness, out.instance).cover;  // = 1/(s+1) - eps/s
    out.witness = std::move(witness);
    out.predicted_ratio = *out.planted_cover / (s / sq);
    return out;
}

GeneratedInstance make_nonmono3(const Rational& a) {
    if (!(a * a > 2)) throw std::invalid_argument("nonmono3 needs a > sqrt(2)");
    const Rational a2 = a * a, a3 = a * a * a;
    // Document order puts the middle machine first so the bid-raise tie
    // resolves with the slowed machine after its equal-bid partner.
    std::vector<Rational> bids{Rational(1) / a, Rational(1) / a2, Rational(1)};
    GeneratedInstance out;
    out.family = "nonmono3";
    out.instance = sort_canonical({a3, a3 - 1, a2 - 1, a2 - 1, Rational(1)}, bids);
    out.deviant_machine = 1;  // the fastest machine (speed a^2)
    out.deviation_factor = a;
    return out;
}

GeneratedInstance make_round_nonmono(const Rational& b, const Rational& a, const Rational& eps) {
    if (!(b > kPhiStandIn)) throw std::invalid_argument("round_nonmono needs b > 8/5");
    if (!(b < a) || !(a < b + 1)) throw std::invalid_argument("round_nonmono needs b < a < b+1");
    if (!(eps > 0) || !(eps < Rational(1) / b))
        throw std::invalid_argument("round_nonmono needs 0 < eps < 1/b");
    GeneratedInstance out;
    out.family = "round_nonmono";
    out.instance = sort_canonical({(1 + eps) * b, b, b, Rational(1)},
                                  {Rational(1) / a, Rational(1) / a});
    out.deviant_machine = 1;
    out.deviation_factor = a;
    out.round_base = b;
    return out;
}

// Planted two-machine instances whose small jobs coalesce into two
// mega-jobs, keeping the exhaustive stage cheap after the reduction.
GeneratedInstance make_ptas_planted(const GenParams& params, Rng& rng) {
    const long n_large = params.integer("n_large", 12);
    const long n_small_unit = 17;
    const long t = rng.range(8, 20);
    std::vector<Rational> jobs;
    std::vector<int> owner;
    for (long i = 0; i < n_large; ++i) {
        jobs.emplace_back(rng.range(50, 99));
        owner.push_back(i % 2);
    }
    jobs.emplace_back(t);
    owner.push_back(0);
    for (long i = 0; i < n_small_unit; ++i) {
        jobs.emplace_back(Rational(t, n_small_unit));
        owner.push_back(1);
    }
    const std::vector<Rational> bid_grid{Rational(1), Rational(5, 4), Rational(3, 2), Rational(2)};
    const Rational b2 = bid_grid[rng.below(bid_grid.size())];
    GeneratedInstance out;
    out.family = "ptas_planted";
    out.instance = sort_canonical(jobs, {Rational(1), b2});
    Assignment witness;
    witness.machine_of.resize(out.instance.n());
    for (std::size_t sorted = 0; sorted < out.instance.n(); ++sorted) {
        const int id = owner[out.instance.job_input_pos[sorted]];
        witness.machine_of[sorted] = static_cast<int>(out.instance.pos_of(id));
    }
    out.planted_cover = evaluate(witness, out.instance).cover;
    out.witness = std::move(witness);
    return out;
}

}  // namespace

GeneratedInstance gen_adversarial(const GenParams& params, Rng& rng) {
    const std::string& family = params.family;
    if (family == "rr_tight") return make_rr_tight(params.integer("m", 2));
    if (family == "snc_lb1") return make_snc_lb1(params.rational("s", Rational(3)));
    if (family == "snc_lb2") return make_snc_lb2(params.rational("s", Rational(1)));
    if (family == "ssnc_lb_small")
        return make_ssnc_lb_small(params.rational("s", Rational(1)),
                                  params.rational("eps", Rational(1, 30)));
    if (family == "ssnc_lb_large")
        return make_ssnc_lb_large(params.rational("s", Rational(2)),
                                  params.rational("eps", Rational(1, 100)));
    if (family == "nonmono3") return make_nonmono3(params.rational("a", Rational(3, 2)));
    if (family == "round_nonmono")
        return make_round_nonmono(params.rational("b", Rational(13, 8)),
                                  params.rational("a", Rational(2)),
                                  params.rational("eps", Rational(1, 2)));
    if (family == "ptas_planted") return make_ptas_planted(params, rng);
    throw std::invalid_argument("unknown instance family '" + family + "'");
}

GeneratedInstance generate(const GenParams& params, Rng& rng) {
    if (params.family == "random" || params.family == "planted") {
        GenParams p = params;
        if (params.family == "planted") p.kv["planted"] = "1";
        return gen_random(p, rng);
    }
    return gen_adversarial(params, rng);
}

MonotonicityVerdict check_monotone_once(Alg alg, const SolveOptions& options,
                                        const Instance& instance, int machine_id,
                                        const Rational& factor) {
    if (!(factor > 1)) throw std::invalid_argument("bid raise factor must exceed 1");
    MonotonicityVerdict verdict;
    verdict.algorithm = alg_name(alg);
    verdict.instance_doc = serialize_instance(instance);
    verdict.machine_id = machine_id;
    verdict.old_bid = instance.bids[instance.pos_of(machine_id)];
    verdict.new_bid = verdict.old_bid * factor;

    const auto old_works = works_by_id(run_algorithm(alg, instance, options).assignment, instance);
    const Instance raised = instance.with_bid(machine_id, verdict.new_bid);
    const auto new_works = works_by_id(run_algorithm(alg, raised, options).assignment, raised);
    verdict.old_work = old_works[static_cast<std::size_t>(machine_id)];
    verdict.new_work = new_works[static_cast<std::size_t>(machine_id)];
    verdict.violated = verdict.new_work > verdict.old_work;
    return verdict;
}

namespace {

void apply_monotone_defaults(Alg alg, GenParams& params) {
    if (params.family != "random" && params.family != "planted") return;
    switch (alg) {
        case Alg::snc2:
        case Alg::ssnc2:
            params.set_default("m_min", "2");
            params.set_default("m_max", "2");
            params.set_default("n_max", "12");
            break;
        case Alg::ssnc_multi:
            params.set_default("m_min", "2");
            params.set_default("m_max", "3");
            params.set_default("n_max", "9");
            break;
        case Alg::oracle:
            params.set_default("m_min", "2");
            params.set_default("m_max", "3");
            params.set_default("n_max", "8");
            params.set_default("oracle_cap", "300000");
            break;
        case Alg::ptas:
            params.set_default("m_min", "2");
            params.set_default("m_max", "3");
            params.set_default("n_max", "10");
            params.set_default("oracle_cap", "300000");
            break;
        case Alg::fptas:
        case Alg::mechanism:
            params.set_default("m_min", "2");
            params.set_default("m_max", "2");
            params.set_default("n_min", "2");
            params.set_default("n_max", "6");
            params.set_default("size_max", "16");
            params.set_default("size_den", "1");
            params.set_default("bid_max", "3");
            params.set_default("bid_den", "2");
            break;
        default:
            params.set_default("m_min", "2");
            params.set_default("m_max", "5");
            params.set_default("n_max", "12");
            break;
    }
}

void apply_ratio_defaults(Alg alg, GenParams& params) {
    if (params.family != "random" && params.family != "planted") return;
    params.set_default("n_min", "2");
    switch (alg) {
        case Alg::snc2:
        case Alg::ssnc2:
            params.set_default("m_min", "2");
            params.set_default("m_max", "2");
            params.set_default("n_max", "12");
            params.set_default("oracle_cap", "300000");
            break;
        case Alg::fptas:
        case Alg::mechanism:
            params.set_default("m_min", "2");
            params.set_default("m_max", alg == Alg::mechanism ? "2" : "3");
            params.set_default("n_max", alg == Alg::mechanism ? "6" : "8");
            params.set_default("size_den", "1");
            params.set_default("size_max", "16");
            params.set_default("bid_max", "3");
            params.set_default("bid_den", "2");
            params.set_default("oracle_cap", "300000");
            break;
        case Alg::round_robin:
            params.set_default("m_min", "2");
            params.set_default("m_max", "5");
            params.set_default("n_max", "12");
            params.set_default("oracle_cap", "300000");
            break;
        default:
            params.set_default("m_min", "2");
            params.set_default("m_max", "4");
            params.set_default("n_max", "10");
            params.set_default("oracle_cap", "300000");
            break;
    }
}

// Random instances must keep n >= m for ratio runs, otherwise OPT is zero.
void force_feasible(GenParams& params) {
    if (params.family != "random" && params.family != "planted") return;
    const long m_max = params.integer("m_max", 4);
    const long n_min = params.integer("n_min", 1);
    if (n_min < m_max) params.kv["n_min"] = std::to_string(m_max);
}

}  // namespace

MonotoneReport monotonicity_suite(Alg alg, const SolveOptions& options, int trials,
                                  std::uint64_t seed, GenParams params) {
    apply_monotone_defaults(alg, params);
    MonotoneReport report;
    report.algorithm = alg_name(alg);
    report.trials = trials;
    report.seed = seed;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const GeneratedInstance gi = generate(params, rng);
        SolveOptions opts = options;
        if (gi.round_base) opts.round_base = gi.round_base;
        const int machine = gi.deviant_machine
                                ? *gi.deviant_machine
                                : static_cast<int>(rng.below(gi.instance.m()));
        const Rational factor = gi.deviation_factor
                                    ? *gi.deviation_factor
                                    : kRaiseFactors[rng.below(kRaiseFactors.size())];
        MonotonicityVerdict verdict = check_monotone_once(alg, opts, gi.instance, machine, factor);
        if (verdict.violated) report.violations.push_back(std::move(verdict));
    }
    report.pass = report.violations.empty();
    return report;
}

Rational ratio_bound(Alg alg, const Instance& instance, const SolveOptions& options) {
    const Rational m(static_cast<long>(instance.m()));
    switch (alg) {
        case Alg::snc: {
            const Rational eps = options.epsilon.value_or(Rational(1, 10));
            const Rational speed_ratio = instance.bids.back() / instance.bids.front();
            return std::min(m, Rational((2 + eps) * speed_ratio));
        }
        case Alg::snc2: {
            const Rational s = instance.bids[1] / instance.bids[0];
            return std::max(Rational(3 / (s + 1)), Rational(2 * s / (s + 1)));
        }
        case Alg::ssnc2: {
            const Rational s = instance.bids[1] / instance.bids[0];
            return std::min(Rational(1 + s / (s + 1)), Rational(1 + 1 / s));
        }
        case Alg::round_robin:
            return m;
        case Alg::fptas: {
            const Rational eps = options.epsilon.value_or(Rational(1, 4));
            if (!(eps < Rational(1, 2)))
                throw std::invalid_argument("fptas ratio bound needs epsilon < 1/2");
            return Rational(1) / (1 - 2 * eps);
        }
        case Alg::mechanism: {
            const Rational eps = options.epsilon.value_or(Rational(1, 4));
            if (!(eps < Rational(1, 2)))
                throw std::invalid_argument("mechanism ratio bound needs epsilon < 1/2");
            return (1 + eps) * (1 + eps) / (1 - 2 * eps);
        }
        case Alg::ptas: {
            const Rational eps = options.epsilon.value_or(Rational(1, 10));
            if (!(eps < Rational(1, 3)))
                throw std::invalid_argument("ptas ratio bound needs epsilon < 1/3");
            return Rational(1) / (1 - 3 * eps);
        }
        case Alg::oracle:
            return Rational(1);
        case Alg::ssnc_multi:
            throw std::invalid_argument("ssnc-multi has no proven approximation bound");
    }
    throw std::logic_error("unreachable");
}

RatioReport ratio_suite(Alg alg, const SolveOptions& options, int trials, std::uint64_t seed,
                        GenParams params, unsigned long long budget) {
    apply_ratio_defaults(alg, params);
    force_feasible(params);
    RatioReport report;
    report.algorithm = alg_name(alg);
    report.trials = trials;
    report.seed = seed;
    Rng rng(seed);
    bool any = false;
    for (int t = 0; t < trials; ++t) {
        const GeneratedInstance gi = generate(params, rng);
        SolveOptions opts = options;
        if (gi.round_base) opts.round_base = gi.round_base;
        const Rational cover = evaluate(run_algorithm(alg, gi.instance, opts).assignment,
                                        gi.instance).cover;
        const Rational opt = gi.planted_cover
                                 ? *gi.planted_cover
                                 : optimal_cover(gi.instance, BigInt(budget)).opt_cover;
        if (!(cover > 0)) throw std::logic_error("ratio trial produced a zero cover");
        const Rational ratio = opt / cover;
        const Rational bound = ratio_bound(alg, gi.instance, opts);
        if (!any || ratio > report.max_ratio) {
            any = true;
            report.max_ratio = ratio;
            report.bound_at_max = bound;
        }
        if (ratio > bound)
            report.breaches.push_back({serialize_instance(gi.instance), opt, cover, ratio, bound});
    }
    report.pass = report.breaches.empty();
    return report;
}

nlohmann::ordered_json to_json(const MonotonicityVerdict& verdict) {
    return {{"algorithm", verdict.algorithm},
            {"machine_id", verdict.machine_id},
            {"old_bid", to_string(verdict.old_bid)},
            {"new_bid", to_string(verdict.new_bid)},
            {"old_work", to_string(verdict.old_work)},
            {"new_work", to_string(verdict.new_work)},
            {"violated", verdict.violated},
            {"instance", nlohmann::ordered_json::parse(verdict.instance_doc)}};
}

nlohmann::ordered_json to_json(const MonotoneReport& report) {
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) violations.push_back(to_json(v));
    return {{"algorithm", report.algorithm},
            {"trials", report.trials},
            {"seed", report.seed},
            {"violations", std::move(violations)},
            {"pass", report.pass}};
}

nlohmann::ordered_json to_json(const RatioReport& report) {
    nlohmann::ordered_json breaches = nlohmann::ordered_json::array();
    for (const auto& b : report.breaches) {
        breaches.push_back({{"opt", to_string(b.opt)},
                            {"cover", to_string(b.cover)},
                            {"ratio", to_string(b.ratio)},
                            {"bound", to_string(b.bound)},
                            {"instance", nlohmann::ordered_json::parse(b.instance_doc)}});
    }
    return {{"algorithm", report.algorithm},
            {"trials", report.trials},
            {"seed", report.seed},
            {"violations", nlohmann::ordered_json::array()},
            {"max_ratio", to_string(report.max_ratio)},
            {"bound", to_string(report.bound_at_max)},
            {"breaches", std::move(breaches)},
            {"pass", report.pass}};
}

}  // namespace covering
