#include "covering/two_machine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace covering {

namespace {

SplitChoice best_split(const std::vector<Rational>& jobs, const Rational& r) {
    if (jobs.size() < 2) throw std::invalid_argument("split requires at least two jobs");
    Rational total(0);
    for (const auto& p : jobs) total += p;
    SplitChoice best;
    Rational best_objective(-1);
    Rational head(0);
    for (std::size_t i = 1; i < jobs.size(); ++i) {
        head += jobs[i - 1];
        const Rational tail = total - head;
        const Rational objective = std::min(Rational(head / r), tail);
        if (objective > best_objective) {
            best_objective = objective;
            best = SplitChoice{i, head, tail, r};
        }
    }
    return best;
}

Assignment assign_two(const Instance& instance, const SplitChoice& choice) {
    Assignment a;
    a.machine_of.resize(instance.n());
    // Larger side to the faster machine (canonical position 0).
    const int head_machine = choice.head_sum >= choice.tail_sum ? 0 : 1;
    for (std::size_t j = 0; j < instance.n(); ++j)
        a.machine_of[j] = j < choice.index ? head_machine : 1 - head_machine;
    return a;
}

// Lexicographic successor of an r-combination of {1..max_value}; false once
// exhausted. Empty combinations have a single (empty) state.
bool next_combination(std::vector<std::size_t>& c, std::size_t max_value) {
    std::size_t i = c.size();
    while (i > 0) {
        --i;
        if (c[i] < max_value - (c.size() - 1 - i)) {
            ++c[i];
            for (std::size_t t = i + 1; t < c.size(); ++t) c[t] = c[t - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

SplitChoice choose_split_snc2(const std::vector<Rational>& sorted_jobs) {
    return best_split(sorted_jobs, Rational(1));
}

SplitChoice choose_split_ssnc2(const std::vector<Rational>& sorted_jobs, const Rational& r) {
    return best_split(sorted_jobs, r);
}

Assignment snc2(const Instance& instance) {
    if (instance.m() != 2) throw std::invalid_argument("snc2 requires exactly two machines");
    if (instance.n() < 2) return Assignment{std::vector<int>(instance.n(), 0)};
    return assign_two(instance, choose_split_snc2(instance.jobs));
}

Assignment ssnc2(const Instance& instance) {
    if (instance.m() != 2) throw std::invalid_argument("ssnc2 requires exactly two machines");
    if (instance.n() < 2) return Assignment{std::vector<int>(instance.n(), 0)};
    const Rational r = instance.bids[1] / instance.bids[0];
    return assign_two(instance, choose_split_ssnc2(instance.jobs, r));
}

Assignment ssnc_multi(const Instance& instance,
                      const std::optional<Rational>& job_rounding_base) {
    const std::size_t n = instance.n();
    const std::size_t m = instance.m();
    Assignment result;
    result.machine_of.assign(n, 0);
    if (n < m) return result;

    std::vector<Rational> objective_sizes = instance.jobs;
    if (job_rounding_base) {
        if (!(*job_rounding_base > 1))
            throw std::invalid_argument("job rounding base must exceed 1");
        for (auto& p : objective_sizes)
            p = rational_pow(*job_rounding_base, least_power_at_least(*job_rounding_base, p));
    }

    // Split tuple: positions 1 <= s_1 < ... < s_{m-1} <= n-1; set k is
    // [s_{k-1}, s_k). Enumerated in lexicographic order so the first best
    // seen wins ties.
    std::vector<std::size_t> splits(m - 1);
    std::iota(splits.begin(), splits.end(), std::size_t{1});
    std::vector<Rational> prefix(n + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] + objective_sizes[j];

    std::vector<std::size_t> best_splits;
    Rational best_objective(-1);
    while (true) {
        Rational objective(-1);
        std::size_t begin = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const std::size_t end = k + 1 < m ? splits[k] : n;
            const Rational load = (prefix[end] - prefix[begin]) * instance.bids[k];
            if (objective < 0 || load < objective) objective = load;
            begin = end;
        }
        if (objective > best_objective) {
            best_objective = objective;
            best_splits = splits;
        }
        if (!next_combination(splits, n - 1)) break;
    }

    std::vector<std::pair<std::size_t, std::size_t>> sets(m);
    std::size_t begin = 0;
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t end = k + 1 < m ? best_splits[k] : n;
        sets[k] = {begin, end};
        begin = end;
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (job_rounding_base) {
        // Re-sort by true sums: the rounded sizes only steer the choice.
        std::vector<Rational> true_sums(m, Rational(0));
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = sets[k].first; j < sets[k].second; ++j)
                true_sums[k] += instance.jobs[j];
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return true_sums[a] > true_sums[b]; });
    }
    for (std::size_t rank = 0; rank < m; ++rank)
        for (std::size_t j = sets[order[rank]].first; j < sets[order[rank]].second; ++j)
            result.machine_of[j] = static_cast<int>(rank);
    return result;
}

}  // namespace covering
