#include "covering/instance.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace covering {

Instance sort_canonical(std::vector<Rational> jobs, std::vector<Rational> bids,
                        std::vector<int> machine_ids) {
    if (jobs.empty()) throw std::invalid_argument("instance needs at least one job");
    if (bids.empty()) throw std::invalid_argument("instance needs at least one machine");
    const std::size_t m = bids.size();
    if (machine_ids.empty()) {
        machine_ids.resize(m);
        std::iota(machine_ids.begin(), machine_ids.end(), 0);
    }
    if (machine_ids.size() != m)
        throw std::invalid_argument("machine_ids length does not match bids");
    {
        std::vector<int> check = machine_ids;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < m; ++i)
            if (check[i] != static_cast<int>(i))
                throw std::invalid_argument("machine_ids must be a permutation of 0..m-1");
    }
    for (const auto& p : jobs)
        if (!(p > 0)) throw std::invalid_argument("non-positive job size");
    for (const auto& b : bids)
        if (!(b > 0)) throw std::invalid_argument("non-positive bid");

    Instance inst;
    const std::size_t n = jobs.size();
    std::vector<std::size_t> jorder(n);
    std::iota(jorder.begin(), jorder.end(), std::size_t{0});
    std::stable_sort(jorder.begin(), jorder.end(),
                     [&](std::size_t a, std::size_t b) { return jobs[a] > jobs[b]; });
    inst.jobs.reserve(n);
    inst.job_input_pos = jorder;
    for (std::size_t j : jorder) inst.jobs.push_back(jobs[j]);

    std::vector<std::size_t> morder(m);
    std::iota(morder.begin(), morder.end(), std::size_t{0});
    std::sort(morder.begin(), morder.end(), [&](std::size_t a, std::size_t b) {
        if (bids[a] != bids[b]) return bids[a] < bids[b];
        return machine_ids[a] < machine_ids[b];
    });
    inst.bids.reserve(m);
    inst.machine_ids.reserve(m);
    inst.pos_of_id.assign(m, -1);
    for (std::size_t pos = 0; pos < m; ++pos) {
        inst.bids.push_back(bids[morder[pos]]);
        inst.machine_ids.push_back(machine_ids[morder[pos]]);
        inst.pos_of_id[static_cast<std::size_t>(machine_ids[morder[pos]])] = static_cast<int>(pos);
    }
    return inst;
}

Instance Instance::with_bid(int machine_id, const Rational& new_bid) const {
    const std::size_t m = bids.size();
    if (machine_id < 0 || static_cast<std::size_t>(machine_id) >= m)
        throw std::invalid_argument("unknown machine id");
    std::vector<Rational> raw(m);
    std::vector<int> ids(m);
    std::iota(ids.begin(), ids.end(), 0);
    for (std::size_t pos = 0; pos < m; ++pos)
        raw[static_cast<std::size_t>(machine_ids[pos])] = bids[pos];
    raw[static_cast<std::size_t>(machine_id)] = new_bid;
    return sort_canonical(jobs, std::move(raw), std::move(ids));
}

Instance parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid instance document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("jobs") || !doc.contains("bids"))
        throw std::invalid_argument("instance document must be an object with jobs and bids");
    if (!doc["jobs"].is_array() || !doc["bids"].is_array())
        throw std::invalid_argument("jobs and bids must be arrays");

    std::vector<Rational> jobs, bids;
    for (const auto& v : doc["jobs"]) {
        if (!v.is_string()) throw std::invalid_argument("job sizes must be rational strings");
        jobs.push_back(parse_rational(v.get<std::string>()));
    }
    for (const auto& v : doc["bids"]) {
        if (!v.is_string()) throw std::invalid_argument("bids must be rational strings");
        bids.push_back(parse_rational(v.get<std::string>()));
    }
    std::vector<int> ids;
    if (doc.contains("machine_ids")) {
        if (!doc["machine_ids"].is_array())
            throw std::invalid_argument("machine_ids must be an array");
        for (const auto& v : doc["machine_ids"]) {
            if (!v.is_number_integer()) throw std::invalid_argument("machine_ids must be integers");
            ids.push_back(v.get<int>());
        }
    }
    return sort_canonical(std::move(jobs), std::move(bids), std::move(ids));
}

std::string serialize_instance(const Instance& instance) {
    nlohmann::ordered_json doc;
    auto& jobs = doc["jobs"] = nlohmann::ordered_json::array();
    for (const auto& p : instance.jobs) jobs.push_back(to_string(p));
    auto& bids = doc["bids"] = nlohmann::ordered_json::array();
    for (const auto& b : instance.bids) bids.push_back(to_string(b));
    auto& ids = doc["machine_ids"] = nlohmann::ordered_json::array();
    for (int id : instance.machine_ids) ids.push_back(id);
    return doc.dump();
}

Instance normalize_total(const Instance& instance) {
    Rational total(0);
    for (const auto& p : instance.jobs) total += p;
    Instance out = instance;
    for (auto& p : out.jobs) p /= total;
    return out;
}

CoverReport evaluate(const Assignment& assignment, const Instance& instance) {
    const std::size_t n = instance.n();
    const std::size_t m = instance.m();
    if (assignment.machine_of.size() != n)
        throw std::invalid_argument("assignment does not match job count");
    CoverReport report;
    report.work.assign(m, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        const int pos = assignment.machine_of[j];
        if (pos < 0 || static_cast<std::size_t>(pos) >= m)
            throw std::invalid_argument("assignment references an unknown machine");
        report.work[static_cast<std::size_t>(pos)] += instance.jobs[j];
    }
    report.load.resize(m);
    for (std::size_t i = 0; i < m; ++i) report.load[i] = report.work[i] * instance.bids[i];
    report.cover = report.load[0];
    for (std::size_t i = 1; i < m; ++i)
        if (report.load[i] < report.cover) report.cover = report.load[i];
    for (std::size_t i = 0; i < m; ++i)
        if (report.load[i] == report.cover) report.bottleneck.push_back(i);
    return report;
}

std::vector<Rational> works_by_id(const Assignment& assignment, const Instance& instance) {
    const auto report = evaluate(assignment, instance);
    std::vector<Rational> by_id(instance.m());
    for (std::size_t pos = 0; pos < instance.m(); ++pos)
        by_id[static_cast<std::size_t>(instance.machine_ids[pos])] = report.work[pos];
    return by_id;
}

}  // namespace covering
