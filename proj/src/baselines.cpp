#include "covering/baselines.hpp"

#include <stdexcept>

namespace covering {

IdenticalSchedule lpt_identical(const std::vector<Rational>& sorted_jobs, std::size_t k) {
    if (k == 0) throw std::invalid_argument("machine count must be positive");
    for (std::size_t j = 1; j < sorted_jobs.size(); ++j)
        if (sorted_jobs[j] > sorted_jobs[j - 1])
            throw std::invalid_argument("jobs must be sorted non-increasing");
    IdenticalSchedule out;
    out.sets.resize(k);
    std::vector<Rational> sums(k, Rational(0));
    for (std::size_t j = 0; j < sorted_jobs.size(); ++j) {
        std::size_t target = 0;
        for (std::size_t i = 1; i < k; ++i)
            if (sums[i] < sums[target]) target = i;
        out.sets[target].push_back(j);
        sums[target] += sorted_jobs[j];
    }
    out.min_sum = sums[0];
    for (std::size_t i = 1; i < k; ++i)
        if (sums[i] < out.min_sum) out.min_sum = sums[i];
    return out;
}

std::vector<std::vector<std::size_t>> list_schedule(const std::vector<Rational>& jobs,
                                                    std::size_t k) {
    if (k == 0) throw std::invalid_argument("set count must be positive");
    std::vector<std::vector<std::size_t>> sets(k);
    std::vector<Rational> sums(k, Rational(0));
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        std::size_t target = 0;
        for (std::size_t i = 1; i < k; ++i)
            if (sums[i] < sums[target]) target = i;
        sets[target].push_back(j);
        sums[target] += jobs[j];
    }
    return sets;
}

Assignment round_robin(const Instance& instance) {
    Assignment a;
    a.machine_of.resize(instance.n());
    for (std::size_t j = 0; j < instance.n(); ++j)
        a.machine_of[j] = static_cast<int>(j % instance.m());
    return a;
}

}  // namespace covering
