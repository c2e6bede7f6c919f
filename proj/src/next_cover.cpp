#include "covering/next_cover.hpp"

#include "covering/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace covering {

NcOutcome next_cover(const std::vector<Rational>& sorted_jobs, std::size_t m,
                     const Rational& guess) {
    if (m == 0) throw std::invalid_argument("machine count must be positive");
    if (guess < 0) throw std::invalid_argument("guess must be non-negative");
    for (std::size_t j = 1; j < sorted_jobs.size(); ++j)
        if (sorted_jobs[j] > sorted_jobs[j - 1])
            throw std::invalid_argument("jobs must be sorted non-increasing");

    NcOutcome out;
    out.guess = guess;
    out.intervals.assign(m, {sorted_jobs.size(), sorted_jobs.size()});
    std::size_t cursor = 0;
    for (std::size_t machine = 0; machine < m; ++machine) {
        const std::size_t begin = cursor;
        Rational sum(0);
        while (sum < guess && cursor < sorted_jobs.size()) sum += sorted_jobs[cursor++];
        out.intervals[machine] = {begin, cursor};
        if (sum < guess) {
            out.success = false;
            return out;
        }
    }
    out.intervals[m - 1].second = sorted_jobs.size();  // leftovers to machine m
    out.success = true;
    return out;
}

SncResult snc(const Instance& instance, const Rational& epsilon) {
    if (!(epsilon > 0) || !(epsilon < Rational(1, 2)))
        throw std::invalid_argument("epsilon must lie in (0, 1/2)");
    const std::size_t n = instance.n();
    const std::size_t m = instance.m();

    SncResult result;
    result.assignment.machine_of.assign(n, 0);
    if (n < m) {
        result.trace.lpt_value = 0;
        result.trace.final_lower = 0;
        return result;
    }

    const Instance norm = normalize_total(instance);
    const auto lpt = lpt_identical(norm.jobs, m);
    const Rational a_value = lpt.min_sum;
    Rational lower = a_value / 2;
    Rational upper = a_value * 4 / 3;
    result.trace.lpt_value = a_value;

    while (upper - lower > epsilon / 2 * lower) {
        Rational guess = approx_sqrt(upper * lower);
        if (guess <= lower || guess >= upper) guess = (lower + upper) / 2;
        const NcOutcome probe = next_cover(norm.jobs, m, guess);
        result.trace.iterations.push_back({lower, upper, guess, probe.success});
        if (probe.success)
            lower = guess;
        else
            upper = guess;
    }
    result.trace.final_lower = lower;

    const NcOutcome final_run = next_cover(norm.jobs, m, lower);
    if (!final_run.success)
        throw std::logic_error("next_cover failed at a guess it previously satisfied");

    std::vector<Rational> sums(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = final_run.intervals[i].first; j < final_run.intervals[i].second; ++j)
            sums[i] += norm.jobs[j];
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sums[a] > sums[b]; });
    for (std::size_t rank = 0; rank < m; ++rank) {
        const auto [begin, end] = final_run.intervals[order[rank]];
        for (std::size_t j = begin; j < end; ++j)
            result.assignment.machine_of[j] = static_cast<int>(rank);
    }
    return result;
}

}  // namespace covering
