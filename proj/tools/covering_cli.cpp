#include "covering/harness.hpp"
#include "covering/oracle.hpp"
#include "covering/solver.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace covering;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open instance file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::optional<Rational> parse_optional_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_rational(text);
}

// fptas/mechanism demand a unit fraction; catch it here so the message is
// actionable instead of a bare precondition failure.
void validate_epsilon(Alg alg, const std::optional<Rational>& eps) {
    if (!eps) return;
    if ((alg == Alg::fptas || alg == Alg::mechanism) && numerator(*eps) != 1)
        throw std::invalid_argument(
            "--epsilon for fptas/mechanism must be a unit fraction 1/t (got " + to_string(*eps) +
            "); pass e.g. 1/4");
}

SolveOptions default_suite_options(Alg alg, std::optional<Rational> eps,
                                   unsigned long long budget) {
    SolveOptions opts;
    opts.budget = budget;
    if (eps) {
        opts.epsilon = eps;
    } else if (alg == Alg::ptas) {
        opts.epsilon = Rational(9, 10);
    } else if (alg == Alg::fptas || alg == Alg::mechanism) {
        opts.epsilon = Rational(1, 4);
    }
    return opts;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact algorithms for max-min machine covering on related machines"};
    app.require_subcommand(1);

    std::string alg_text, instance_path, gen_params_text, out_path, epsilon_text, round_base_text;
    std::string csv_path, family;
    unsigned long long budget = 2'000'000;
    std::uint64_t seed = 1;
    int trials = 100;

    auto* solve = app.add_subcommand("solve", "run one algorithm on an instance file");
    solve->add_option("--alg", alg_text, "algorithm")->required();
    solve->add_option("--instance", instance_path, "instance document")->required();
    solve->add_option("--epsilon", epsilon_text, "rational accuracy parameter, e.g. 1/10");
    solve->add_option("--budget", budget, "assignment budget for exhaustive stages");
    solve->add_option("--round-base", round_base_text, "job-size rounding base for ssnc-multi");

    auto* monotone = app.add_subcommand("monotone", "single-bid-raise monotonicity suite");
    monotone->add_option("--alg", alg_text, "algorithm")->required();
    monotone->add_option("--trials", trials, "number of trials");
    monotone->add_option("--seed", seed, "rng seed");
    monotone->add_option("--gen-params", gen_params_text, "instance generator parameters");
    monotone->add_option("--epsilon", epsilon_text, "rational accuracy parameter");
    monotone->add_option("--budget", budget, "assignment budget for exhaustive stages");

    auto* ratio = app.add_subcommand("ratio", "approximation-ratio suite against the oracle");
    ratio->add_option("--alg", alg_text, "algorithm")->required();
    ratio->add_option("--trials", trials, "number of trials");
    ratio->add_option("--seed", seed, "rng seed");
    ratio->add_option("--gen-params", gen_params_text, "instance generator parameters");
    ratio->add_option("--epsilon", epsilon_text, "rational accuracy parameter");
    ratio->add_option("--budget", budget, "oracle assignment budget");
    ratio->add_option("--csv", csv_path, "write per-trial rows to this CSV file");

    auto* gen = app.add_subcommand("gen", "write an instance document");
    gen->add_option("--family", family, "instance family")->required();
    gen->add_option("--params", gen_params_text, "family parameters, key=value[,key=value...]");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--out", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (solve->parsed()) {
        const Alg alg = parse_alg(alg_text);
        SolveOptions opts;
        opts.epsilon = parse_optional_rational(epsilon_text);
        validate_epsilon(alg, opts.epsilon);
        opts.budget = budget;
        opts.round_base = parse_optional_rational(round_base_text);
        const Instance instance = parse_instance(read_file(instance_path));
        const SolveOutput output = run_algorithm(alg, instance, opts);
        std::cout << solve_report(alg, instance, output).dump(2) << "\n";
        return 0;
    }

    if (monotone->parsed()) {
        const Alg alg = parse_alg(alg_text);
        const auto eps = parse_optional_rational(epsilon_text);
        validate_epsilon(alg, eps);
        const SolveOptions opts = default_suite_options(alg, eps, budget);
        const MonotoneReport report =
            monotonicity_suite(alg, opts, trials, seed, parse_gen_params(gen_params_text));
        std::cout << to_json(report).dump(2) << "\n";
        return report.pass ? 0 : 1;
    }

    if (ratio->parsed()) {
        const Alg alg = parse_alg(alg_text);
        const auto eps = parse_optional_rational(epsilon_text);
        validate_epsilon(alg, eps);
        const SolveOptions opts = default_suite_options(alg, eps, budget);
        const RatioReport report =
            ratio_suite(alg, opts, trials, seed, parse_gen_params(gen_params_text), budget);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            csv << "algorithm,trials,max_ratio,bound,pass\n";
            csv << report.algorithm << ',' << report.trials << ',' << to_string(report.max_ratio)
                << ',' << to_string(report.bound_at_max) << ',' << (report.pass ? 1 : 0) << "\n";
        }
        std::cout << to_json(report).dump(2) << "\n";
        return report.pass ? 0 : 1;
    }

    if (gen->parsed()) {
        GenParams params = parse_gen_params(gen_params_text);
        params.family = family;
        Rng rng(seed);
        const GeneratedInstance gi = generate(params, rng);
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << serialize_instance(gi.instance) << "\n";
        nlohmann::ordered_json meta;
        meta["family"] = gi.family;
        meta["out"] = out_path;
        if (gi.planted_cover) meta["planted_cover"] = to_string(*gi.planted_cover);
        if (gi.predicted_ratio) meta["predicted_ratio"] = to_string(*gi.predicted_ratio);
        if (gi.deviant_machine) meta["deviant_machine"] = *gi.deviant_machine;
        if (gi.deviation_factor) meta["deviation_factor"] = to_string(*gi.deviation_factor);
        if (gi.round_base) meta["round_base"] = to_string(*gi.round_base);
        std::cout << meta.dump(2) << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const covering::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
