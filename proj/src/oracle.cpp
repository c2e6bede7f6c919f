#include "covering/oracle.hpp"

namespace covering {

OracleResult optimal_cover(const Instance& instance, const BigInt& budget) {
    const std::size_t n = instance.n();
    const std::size_t m = instance.m();
    const BigInt total = pow(BigInt(static_cast<long>(m)), static_cast<unsigned>(n));
    if (total > budget) throw budget_error(total);

    // Loads are tracked as integers: scale every job*bid product by the lcm
    // of all denominators so each step is a pair of integer adds.
    BigInt scale(1);
    for (const auto& p : instance.jobs) scale = lcm(scale, denominator(p));
    BigInt bid_scale(1);
    for (const auto& b : instance.bids) bid_scale = lcm(bid_scale, denominator(b));
    scale *= bid_scale;

    // delta[j][id]: scaled load contribution of job j on machine id.
    std::vector<std::vector<BigInt>> delta(n, std::vector<BigInt>(m));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t id = 0; id < m; ++id) {
            const Rational d = instance.jobs[j] * instance.bids[instance.pos_of(static_cast<int>(id))] * scale;
            delta[j][id] = numerator(d);  // exact by construction of scale
        }
    }

    std::vector<int> digits(n, 0);  // job -> external machine id
    std::vector<BigInt> loads(m, BigInt(0));
    for (std::size_t j = 0; j < n; ++j) loads[0] += delta[j][0];

    auto min_load = [&]() {
        BigInt best = loads[0];
        for (std::size_t i = 1; i < m; ++i)
            if (loads[i] < best) best = loads[i];
        return best;
    };

    BigInt best = min_load();
    std::vector<int> best_digits = digits;
    while (true) {
        // Odometer increment: rightmost digit fastest, so assignments are
        // visited in ascending lexicographic order of the id sequence.
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            const int old = digits[pos];
            loads[static_cast<std::size_t>(old)] -= delta[pos][static_cast<std::size_t>(old)];
            if (old + 1 < static_cast<int>(m)) {
                digits[pos] = old + 1;
                loads[static_cast<std::size_t>(old + 1)] += delta[pos][static_cast<std::size_t>(old + 1)];
                break;
            }
            digits[pos] = 0;
            loads[0] += delta[pos][0];
            if (pos == 0) {
                pos = n;  // wrapped: enumeration complete
                break;
            }
        }
        if (pos == n) break;
        const BigInt cover = min_load();
        if (cover > best) {
            best = cover;
            best_digits = digits;
        }
    }

    OracleResult result;
    result.opt_cover = Rational(best, scale);
    result.explored = total;
    result.assignment.machine_of.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        result.assignment.machine_of[j] = static_cast<int>(instance.pos_of(best_digits[j]));
    return result;
}

Assignment lex_min_optimal(const Instance& instance, const BigInt& budget) {
    return optimal_cover(instance, budget).assignment;
}

}  // namespace covering
