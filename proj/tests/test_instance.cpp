#include "doctest.h"

#include "covering/instance.hpp"
#include "covering/oracle.hpp"

#include <random>

using namespace covering;

namespace {

Assignment make_assignment(std::initializer_list<int> positions) {
    return Assignment{std::vector<int>(positions)};
}

}  // namespace

TEST_SUITE("instance") {

TEST_CASE("parse_instance canonicalizes the document") {
    const Instance inst = parse_instance(R"({"jobs":["1","1/2","1/2"],"bids":["1","1"]})");
    REQUIRE(inst.n() == 3);
    CHECK(inst.jobs == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 2)});
    CHECK(inst.bids == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(inst.machine_ids == std::vector<int>{0, 1});
}

TEST_CASE("decimal sizes convert exactly") {
    const Instance inst = parse_instance(R"({"jobs":["0.3"],"bids":["1"]})");
    CHECK(inst.jobs[0] == Rational(3, 10));
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(parse_instance(R"({"jobs":["-1"],"bids":["1"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"jobs":[],"bids":["1"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"jobs":["1"],"bids":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"jobs":["1"],"bids":["0"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"jobs":["1"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"jobs":["1"],"bids":["1"],"machine_ids":[2]})"),
                    std::invalid_argument);
}

TEST_CASE("job sort is stable and bid ties break by machine id") {
    const Instance inst = sort_canonical({Rational(1), Rational(2), Rational(2)},
                                         {Rational(1), Rational(1)}, {1, 0});
    CHECK(inst.jobs == std::vector<Rational>{Rational(2), Rational(2), Rational(1)});
    CHECK(inst.job_input_pos == std::vector<std::size_t>{1, 2, 0});
    CHECK(inst.machine_ids == std::vector<int>{0, 1});

    const Instance byval = sort_canonical({Rational(1)}, {Rational(2), Rational(1)});
    CHECK(byval.bids == std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(byval.machine_ids == std::vector<int>{1, 0});
}

TEST_CASE("evaluate computes exact works, loads, cover and bottleneck") {
    const Instance inst = sort_canonical({Rational(4), Rational(3)},
                                         {Rational(1, 2), Rational(1)});
    const CoverReport r = evaluate(make_assignment({0, 1}), inst);
    CHECK(r.work == std::vector<Rational>{Rational(4), Rational(3)});
    CHECK(r.load == std::vector<Rational>{Rational(2), Rational(3)});
    CHECK(r.cover == 2);
    CHECK(r.bottleneck == std::vector<std::size_t>{0});
}

TEST_CASE("an empty machine gives cover zero") {
    const Instance inst = sort_canonical({Rational(1), Rational(1)},
                                         {Rational(1), Rational(1)});
    const CoverReport r = evaluate(make_assignment({0, 0}), inst);
    CHECK(r.cover == 0);
    CHECK(r.bottleneck == std::vector<std::size_t>{1});
}

TEST_CASE("split on speeds 4 and 1 is optimal with cover 1/4") {
    const Instance inst = sort_canonical({Rational(1), Rational(1)},
                                         {Rational(1, 4), Rational(1)});
    const CoverReport r = evaluate(make_assignment({0, 1}), inst);
    CHECK(r.cover == Rational(1, 4));
    CHECK(optimal_cover(inst, BigInt(100)).opt_cover == Rational(1, 4));
}

TEST_CASE("evaluate rejects dimension mismatches") {
    const Instance inst = sort_canonical({Rational(1)}, {Rational(1)});
    CHECK_THROWS_AS(evaluate(make_assignment({0, 0}), inst), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(make_assignment({3}), inst), std::invalid_argument);
}

TEST_CASE("normalize_total") {
    const Instance a = sort_canonical({Rational(3), Rational(1)}, {Rational(1)});
    CHECK(normalize_total(a).jobs == std::vector<Rational>{Rational(3, 4), Rational(1, 4)});
    const Instance b = sort_canonical({Rational(1)}, {Rational(1)});
    CHECK(normalize_total(b).jobs == std::vector<Rational>{Rational(1)});
    const Instance c = sort_canonical({Rational(1, 2), Rational(1, 4), Rational(1, 4)},
                                      {Rational(1)});
    CHECK(normalize_total(c).jobs == c.jobs);
}

TEST_CASE("serialize/parse round-trips the canonical form") {
    const Instance inst = sort_canonical(
        {Rational(5, 3), Rational(2)}, {Rational(1, 2), Rational(1, 2), Rational(2)}, {2, 0, 1});
    const Instance again = parse_instance(serialize_instance(inst));
    CHECK(again.jobs == inst.jobs);
    CHECK(again.bids == inst.bids);
    CHECK(again.machine_ids == inst.machine_ids);
}

TEST_CASE("work conservation holds for random assignments") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 8, m = 1 + rng() % 4;
        std::vector<Rational> jobs, bids;
        for (std::size_t j = 0; j < n; ++j)
            jobs.emplace_back(static_cast<long>(rng() % 12) + 1, static_cast<long>(rng() % 3) + 1);
        for (std::size_t i = 0; i < m; ++i)
            bids.emplace_back(static_cast<long>(rng() % 6) + 1, static_cast<long>(rng() % 3) + 1);
        const Instance inst = sort_canonical(jobs, bids);
        Assignment a;
        for (std::size_t j = 0; j < n; ++j)
            a.machine_of.push_back(static_cast<int>(rng() % m));
        const CoverReport r = evaluate(a, inst);
        Rational total_work(0), total_jobs(0);
        for (const auto& w : r.work) total_work += w;
        for (const auto& p : inst.jobs) total_jobs += p;
        CHECK(total_work == total_jobs);
        for (std::size_t i = 0; i < m; ++i) CHECK(r.load[i] == r.work[i] * inst.bids[i]);
    }
}

TEST_CASE("cover is invariant under consistent machine relabeling") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng() % 6, m = 2 + rng() % 3;
        std::vector<Rational> jobs, bids;
        for (std::size_t j = 0; j < n; ++j)
            jobs.emplace_back(static_cast<long>(rng() % 9) + 1);
        for (std::size_t i = 0; i < m; ++i)
            bids.emplace_back(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 2) + 1);
        std::vector<int> ids(m);
        for (std::size_t i = 0; i < m; ++i) ids[i] = static_cast<int>(i);
        std::shuffle(ids.begin(), ids.end(), rng);
        const Instance plain = sort_canonical(jobs, bids);
        const Instance relabeled = sort_canonical(jobs, bids, ids);
        CHECK(optimal_cover(plain, BigInt(1 << 20)).opt_cover ==
              optimal_cover(relabeled, BigInt(1 << 20)).opt_cover);
    }
}

TEST_CASE("scaling jobs or bids scales the cover exactly") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng() % 5, m = 2 + rng() % 2;
        std::vector<Rational> jobs, bids;
        for (std::size_t j = 0; j < n; ++j)
            jobs.emplace_back(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 3) + 1);
        for (std::size_t i = 0; i < m; ++i)
            bids.emplace_back(static_cast<long>(rng() % 4) + 1);
        const Rational c(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 4) + 1);
        const Instance base = sort_canonical(jobs, bids);
        auto scaled_jobs = jobs;
        for (auto& p : scaled_jobs) p *= c;
        auto scaled_bids = bids;
        for (auto& b : scaled_bids) b *= c;
        Assignment a;
        for (std::size_t j = 0; j < n; ++j)
            a.machine_of.push_back(static_cast<int>(rng() % m));
        const Rational cover = evaluate(a, base).cover;
        CHECK(evaluate(a, sort_canonical(scaled_jobs, bids)).cover == cover * c);
        CHECK(evaluate(a, sort_canonical(jobs, scaled_bids)).cover == cover * c);
    }
}

}
