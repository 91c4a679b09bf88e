#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vcr/generators.hpp"
#include "vcr/oracle.hpp"
#include "vcr/seq_schedules.hpp"

using namespace vcr;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

}  // namespace

TEST_CASE("sequential oracle basics") {
    Graph e(2, {{0, 1}});
    auto cp = CoverPair::make(e, {0}, {1});
    CHECK(optimal_sequential_cost(e, cp) == 2);  // must pass through {0,1}

    auto same = CoverPair::make(e, {0}, {0});
    CHECK(optimal_sequential_cost(e, same) == 1);

    Graph c4 = cycle(4);
    CHECK(optimal_sequential_cost(c4, CoverPair::make(c4, {0, 2}, {1, 3})) == 4);
}

TEST_CASE("batch oracle on path pairs meets the pigeonhole bound") {
    // t+1 batches cost at least n(1+1/t); equality for t=1
    auto p3 = gen_path_pair(3);
    CHECK(optimal_batch_cost(p3.graph, p3.pair, 2) == 6);
    CHECK(optimal_batch_cost(p3.graph, p3.pair, 3) >= 5);
    auto same = CoverPair::make(p3.graph, p3.pair.alpha, p3.pair.alpha);
    CHECK(optimal_batch_cost(p3.graph, same, 2) ==
          static_cast<std::int64_t>(p3.pair.alpha.size()));
    for (std::int64_t n : {2, 3, 4}) {
        auto inst = gen_path_pair(n);
        for (int t : {1, 2, 3}) {
            std::int64_t got = optimal_batch_cost(inst.graph, inst.pair, t + 1);
            REQUIRE(got >= 0);
            CHECK(Rational(got) >= Rational(n) * (Rational(1) + Rational(1, t)));
        }
    }
}

TEST_CASE("batch oracle is monotone in the batch budget") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto inst = gen_random_cactus(9, seed);
        std::int64_t prev = -1;
        for (int b : {2, 3, 4, 0}) {  // 0 = unbounded
            std::int64_t cur = optimal_batch_cost(inst.graph, inst.pair, b);
            REQUIRE(cur >= 0);
            if (prev >= 0) CHECK(cur <= prev);
            prev = cur;
        }
        // a sequential schedule is a batch schedule
        CHECK(optimal_batch_cost(inst.graph, inst.pair, 0) <=
              optimal_sequential_cost(inst.graph, inst.pair));
    }
}

TEST_CASE("constructive schedules never beat the unbounded batch oracle") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        CactusOptions opt;
        opt.pad = seed % 2;
        auto inst = gen_random_cactus(11, seed * 7 + 1, opt);
        std::int64_t best = optimal_batch_cost(inst.graph, inst.pair, 0);
        auto check = [&](const Schedule& s) {
            auto res = validate(inst.graph, inst.pair, s);
            REQUIRE(res.ok());
            CHECK(res.metrics.cost >= best);
        };
        check(cactus_schedule(inst.graph, inst.pair));
        check(greedy_schedule(inst.graph, inst.pair));
        check(four_batch_schedule(inst.graph, inst.pair));
    }
}

TEST_CASE("size guards") {
    Graph big(23);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < 23; ++i) e.push_back({i, i + 1});
    Graph path23(23, e);
    NodeSet odd;
    for (int i = 1; i < 23; i += 2) odd.push_back(i);
    auto cp = CoverPair::make(path23, odd, odd);
    CHECK_THROWS_AS(optimal_sequential_cost(path23, cp), InstanceTooLarge);
    CHECK_THROWS_AS(optimal_batch_cost(path23, cp, 2), InstanceTooLarge);
}
