#include "covering/ptas.hpp"

#include "covering/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace covering {

BigInt reduction_threshold(std::size_t m, const Rational& epsilon) {
    const Rational raw = Rational(2 * static_cast<long>(m) * static_cast<long>(m)) /
                         (epsilon * epsilon);
    return rational_ceil(raw) + static_cast<long>(m);
}

ReducedJobs reduce_jobs(const std::vector<Rational>& sorted_jobs, std::size_t m,
                        const Rational& epsilon) {
    if (!(epsilon > 0) || !(epsilon < 1))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    for (std::size_t j = 1; j < sorted_jobs.size(); ++j)
        if (sorted_jobs[j] > sorted_jobs[j - 1])
            throw std::invalid_argument("jobs must be sorted non-increasing");

    ReducedJobs out;
    out.delta = reduction_threshold(m, epsilon);
    const std::size_t n = sorted_jobs.size();
    if (BigInt(static_cast<long>(n)) <= out.delta) {
        out.case_tag = ReductionCase::identity;
        out.kept.resize(n);
        std::iota(out.kept.begin(), out.kept.end(), std::size_t{0});
        return out;
    }

    const std::size_t delta = static_cast<std::size_t>(out.delta);
    out.kept.resize(delta);
    std::iota(out.kept.begin(), out.kept.end(), std::size_t{0});

    const Rational a = sorted_jobs[delta];  // largest small job
    Rational total_small(0);
    for (std::size_t j = delta; j < n; ++j) total_small += sorted_jobs[j];

    if (total_small <= a * 3 * static_cast<long>(delta)) {
        out.case_tag = ReductionCase::greedy;
        MegaJob current;
        current.size = 0;
        for (std::size_t j = delta; j < n; ++j) {
            current.members.push_back(j);
            current.size += sorted_jobs[j];
            if (current.size >= a) {
                out.mega.push_back(std::move(current));
                current = MegaJob{};
                current.size = 0;
            }
        }
        if (!current.members.empty()) {
            // Remainder below a merges into the most recent mega-job,
            // keeping every size inside [a, 3a).
            auto& last = out.mega.back();
            last.members.insert(last.members.end(), current.members.begin(),
                                current.members.end());
            last.size += current.size;
        }
    } else {
        out.case_tag = ReductionCase::list_scheduling;
        std::vector<Rational> small(sorted_jobs.begin() + static_cast<long>(delta),
                                    sorted_jobs.end());
        const auto sets = [&] {
            std::vector<std::vector<std::size_t>> s(delta);
            std::vector<Rational> sums(delta, Rational(0));
            for (std::size_t j = 0; j < small.size(); ++j) {
                std::size_t target = 0;
                for (std::size_t i = 1; i < delta; ++i)
                    if (sums[i] < sums[target]) target = i;
                s[target].push_back(j);
                sums[target] += small[j];
            }
            return s;
        }();
        for (const auto& set : sets) {
            MegaJob mega;
            mega.size = 0;
            for (std::size_t local : set) {
                mega.members.push_back(delta + local);
                mega.size += small[local];
            }
            out.mega.push_back(std::move(mega));
        }
    }
    return out;
}

Assignment ptas(const Instance& instance, const Rational& epsilon, const BigInt& oracle_budget) {
    const ReducedJobs reduced = reduce_jobs(instance.jobs, instance.m(), epsilon);

    struct Item {
        Rational size;
        std::size_t key;  // smallest contained sorted-job index
        const MegaJob* mega;
    };
    std::vector<Item> items;
    items.reserve(reduced.kept.size() + reduced.mega.size());
    for (std::size_t j : reduced.kept) items.push_back({instance.jobs[j], j, nullptr});
    for (const auto& mega : reduced.mega)
        items.push_back({mega.size, *std::min_element(mega.members.begin(), mega.members.end()),
                         &mega});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.size != b.size) return a.size > b.size;
        return a.key < b.key;
    });

    std::vector<Rational> reduced_sizes;
    reduced_sizes.reserve(items.size());
    for (const auto& item : items) reduced_sizes.push_back(item.size);
    std::vector<Rational> raw_bids(instance.m());
    std::vector<int> ids(instance.m());
    std::iota(ids.begin(), ids.end(), 0);
    for (std::size_t pos = 0; pos < instance.m(); ++pos)
        raw_bids[static_cast<std::size_t>(instance.machine_ids[pos])] = instance.bids[pos];
    const Instance reduced_instance = sort_canonical(reduced_sizes, std::move(raw_bids),
                                                     std::move(ids));

    const Assignment reduced_assignment = lex_min_optimal(reduced_instance, oracle_budget);

    Assignment out;
    out.machine_of.assign(instance.n(), 0);
    for (std::size_t k = 0; k < items.size(); ++k) {
        const int machine = reduced_assignment.machine_of[k];
        const Item& item = items[k];
        if (item.mega == nullptr) {
            out.machine_of[item.key] = machine;
        } else {
            for (std::size_t j : item.mega->members) out.machine_of[j] = machine;
        }
    }
    return out;
}

}  // namespace covering
