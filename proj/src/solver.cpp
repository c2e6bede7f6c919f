#include "covering/solver.hpp"

#include "covering/baselines.hpp"
#include "covering/fptas.hpp"
#include "covering/next_cover.hpp"
#include "covering/oracle.hpp"
#include "covering/ptas.hpp"
#include "covering/two_machine.hpp"

#include <stdexcept>

namespace covering {

Alg parse_alg(const std::string& name) {
    if (name == "snc") return Alg::snc;
    if (name == "snc2") return Alg::snc2;
    if (name == "ssnc2") return Alg::ssnc2;
    if (name == "ssnc-multi") return Alg::ssnc_multi;
    if (name == "round-robin") return Alg::round_robin;
    if (name == "ptas") return Alg::ptas;
    if (name == "fptas") return Alg::fptas;
    if (name == "mechanism") return Alg::mechanism;
    if (name == "oracle") return Alg::oracle;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::string alg_name(Alg alg) {
    switch (alg) {
        case Alg::snc: return "snc";
        case Alg::snc2: return "snc2";
        case Alg::ssnc2: return "ssnc2";
        case Alg::ssnc_multi: return "ssnc-multi";
        case Alg::round_robin: return "round-robin";
        case Alg::ptas: return "ptas";
        case Alg::fptas: return "fptas";
        case Alg::mechanism: return "mechanism";
        case Alg::oracle: return "oracle";
    }
    return "?";
}

namespace {

Rational require_epsilon(const SolveOptions& options, const char* alg) {
    if (!options.epsilon)
        throw std::invalid_argument(std::string("--epsilon is required for ") + alg);
    return *options.epsilon;
}

}  // namespace

SolveOutput run_algorithm(Alg alg, const Instance& instance, const SolveOptions& options) {
    SolveOutput out;
    out.trace = nullptr;
    switch (alg) {
        case Alg::snc: {
            const Rational eps = options.epsilon.value_or(Rational(1, 10));
            auto r = snc(instance, eps);
            out.assignment = std::move(r.assignment);
            nlohmann::ordered_json trace;
            trace["lpt_value"] = to_string(r.trace.lpt_value);
            auto& iters = trace["iterations"] = nlohmann::ordered_json::array();
            for (const auto& it : r.trace.iterations) {
                iters.push_back({{"lower", to_string(it.lower)},
                                 {"upper", to_string(it.upper)},
                                 {"guess", to_string(it.guess)},
                                 {"success", it.success}});
            }
            trace["final_lower"] = to_string(r.trace.final_lower);
            out.trace = std::move(trace);
            break;
        }
        case Alg::snc2:
            out.assignment = snc2(instance);
            break;
        case Alg::ssnc2:
            out.assignment = ssnc2(instance);
            break;
        case Alg::ssnc_multi:
            out.assignment = ssnc_multi(instance, options.round_base);
            break;
        case Alg::round_robin:
            out.assignment = round_robin(instance);
            break;
        case Alg::ptas:
            out.assignment = ptas(instance, require_epsilon(options, "ptas"),
                                  BigInt(options.budget));
            break;
        case Alg::fptas: {
            auto r = fptas(instance, require_epsilon(options, "fptas"));
            out.assignment = std::move(r.assignment);
            out.trace = {{"achieved_j", r.achieved_j}, {"search_anomaly", r.search_anomaly}};
            break;
        }
        case Alg::mechanism: {
            auto r = mechanism(instance, require_epsilon(options, "mechanism"));
            out.assignment = std::move(r.assignment);
            nlohmann::ordered_json exps = nlohmann::ordered_json::array();
            for (long e : r.rounded.exponents) exps.push_back(e);
            out.trace = {{"ell", r.rounded.ell},
                         {"exponents", std::move(exps)},
                         {"clamped", r.rounded.clamped},
                         {"candidates", r.candidates},
                         {"single_job_monitor", r.single_job_monitor}};
            break;
        }
        case Alg::oracle: {
            auto r = optimal_cover(instance, BigInt(options.budget));
            out.assignment = std::move(r.assignment);
            out.trace = {{"explored", r.explored.str()}, {"opt_cover", to_string(r.opt_cover)}};
            break;
        }
    }
    return out;
}

nlohmann::ordered_json solve_report(Alg alg, const Instance& instance,
                                    const SolveOutput& output) {
    const CoverReport report = evaluate(output.assignment, instance);
    nlohmann::ordered_json doc;
    doc["algorithm"] = alg_name(alg);
    doc["cover"] = to_string(report.cover);

    // assignment by original job order; machines named by external id
    std::vector<int> by_input(instance.n());
    for (std::size_t sorted = 0; sorted < instance.n(); ++sorted) {
        const int machine_pos = output.assignment.machine_of[sorted];
        by_input[instance.job_input_pos[sorted]] =
            instance.machine_ids[static_cast<std::size_t>(machine_pos)];
    }
    doc["assignment"] = by_input;

    nlohmann::ordered_json works = nlohmann::ordered_json::array();
    nlohmann::ordered_json loads = nlohmann::ordered_json::array();
    std::vector<std::string> work_by_id(instance.m()), load_by_id(instance.m());
    for (std::size_t pos = 0; pos < instance.m(); ++pos) {
        const auto id = static_cast<std::size_t>(instance.machine_ids[pos]);
        work_by_id[id] = to_string(report.work[pos]);
        load_by_id[id] = to_string(report.load[pos]);
    }
    for (const auto& w : work_by_id) works.push_back(w);
    for (const auto& l : load_by_id) loads.push_back(l);
    doc["works"] = std::move(works);
    doc["loads"] = std::move(loads);
    if (!output.trace.is_null()) doc["trace"] = output.trace;
    return doc;
}

}  // namespace covering
