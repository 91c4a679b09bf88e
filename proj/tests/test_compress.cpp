#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vcr/compress.hpp"
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

// node -> batch index of its single move of the given kind, -1 if none
std::vector<int> move_batch_of(const Schedule& s, int n, bool additions) {
    std::vector<int> pos(n, -1);
    for (int i = 0; i < s.stored_batches(); ++i)
        for (int v : s.batch(i)) {
            bool was_in = set_contains(s.covers[i], v);
            if (was_in != additions) pos[v] = i;
        }
    return pos;
}

// nodes moved, in schedule order
std::vector<int> move_sequence(const Schedule& s, bool additions) {
    std::vector<int> seq;
    for (int i = 0; i < s.stored_batches(); ++i)
        for (int v : s.batch(i)) {
            bool was_in = set_contains(s.covers[i], v);
            if (was_in != additions) seq.push_back(v);
        }
    return seq;
}

}  // namespace

TEST_CASE("derive_eta_c restates the measured cost") {
    Graph c4 = cycle(4);
    auto cp = CoverPair::make(c4, {0, 2}, {1, 3});
    auto s = cactus_schedule(c4, cp);
    auto [eta, c] = derive_eta_c(c4, cp, s);
    CHECK(eta == Rational(1));
    CHECK(c == 2);

    Schedule trivial{{{0, 2}, {0, 1, 2, 3}, {1, 3}}};
    auto [eta2, c2] = derive_eta_c(c4, cp, trivial);
    CHECK(eta2 == Rational(1));
    CHECK(c2 == 2);  // |alpha| + |B| - M = 2+2-2

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto scp = CoverPair::make(star, {0}, {1, 2, 3});
    auto [eta3, c3] = derive_eta_c(star, scp, greedy_schedule(star, scp));
    CHECK(eta3 == Rational(1));
    CHECK(c3 == 1);  // greedy star cost 4, M = 3
}

TEST_CASE("compress C4 with eps=1 reproduces the two-batch layout") {
    Graph c4 = cycle(4);
    auto cp = CoverPair::make(c4, {0, 2}, {1, 3});
    auto s = cactus_schedule(c4, cp);
    CompressionParams params;
    params.epsilon = Rational(1);
    params.eta = Rational(1);
    params.c = 2;
    auto out = compress(c4, cp, s, params);
    auto res = validate(c4, cp, out);
    REQUIRE(res.ok());
    CHECK(res.metrics.length == 2);
    CHECK(res.metrics.cost == 4);
    // s=2, r=4 >= |B|, so the first batch adds all of B
    CHECK(out.covers[1] == NodeSet{0, 1, 2, 3});
}

TEST_CASE("compress with |B| = 0 is a single removal batch") {
    Graph g(3, {{0, 1}, {1, 2}});
    auto cp = CoverPair::make(g, {0, 1, 2}, {1});
    Schedule seq{{{0, 1, 2}, {1, 2}, {1}}};
    CompressionParams params;
    params.epsilon = Rational(1, 2);
    auto [eta, c] = derive_eta_c(g, cp, seq);
    params.eta = eta;
    params.c = c;
    auto out = compress(g, cp, seq, params);
    CHECK(out.covers.size() == 2);
    CHECK(validate(g, cp, out).ok());
}

TEST_CASE("compress P10 path pair at eps=1/2") {
    auto inst = gen_path_pair(5);
    auto s = cactus_schedule(inst.graph, inst.pair);
    auto [eta, c] = derive_eta_c(inst.graph, inst.pair, s);
    CHECK(c <= 1);
    CompressionParams params{Rational(1, 2), eta, c};
    auto out = compress(inst.graph, inst.pair, s, params);
    auto res = validate(inst.graph, inst.pair, out);
    REQUIRE(res.ok());
    CHECK(res.metrics.length <= 4);
    // cost <= 1.5M + c + 1 <= 1.5M + 2
    CHECK(Rational(res.metrics.cost) <= Rational(3, 2) * Rational(inst.pair.M) + Rational(2));
}

TEST_CASE("compress rejects bad inputs") {
    Graph c4 = cycle(4);
    auto cp = CoverPair::make(c4, {0, 2}, {1, 3});
    Schedule batchy{{{0, 2}, {0, 1, 2, 3}, {1, 3}}};
    CompressionParams params;
    CHECK_THROWS_AS(compress(c4, cp, batchy, params), InputNotSequential);

    auto s = cactus_schedule(c4, cp);
    CompressionParams lying{Rational(1), Rational(1), 0};  // cost 4 > M+0
    CHECK_THROWS_AS(compress(c4, cp, s, lying), CertificateInvalid);

    // non-monotone sequential input
    Graph e(2, {{0, 1}});
    auto ecp = CoverPair::make(e, {0}, {1});
    Schedule wobble{{{0}, {0, 1}, {0}, {0, 1}, {1}}};
    REQUIRE(validate(e, ecp, wobble).ok());
    CompressionParams p2{Rational(1), Rational(2), 0};
    CHECK_THROWS_AS(compress(e, ecp, wobble, p2), InputNotMonotone);
}

TEST_CASE("compression invariants across random cactus cores and epsilons") {
    const Rational epsilons[] = {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)};
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        CactusOptions opt;
        opt.pad = seed % 3 == 0 ? 4 : 0;
        auto inst = gen_random_cactus(50, seed, opt);
        auto s = cactus_schedule(inst.graph, inst.pair);
        auto [eta, c] = derive_eta_c(inst.graph, inst.pair, s);
        for (const auto& eps : epsilons) {
            CompressionParams params{eps, eta, c};
            auto out = compress(inst.graph, inst.pair, s, params);
            auto res = validate(inst.graph, inst.pair, out);
            REQUIRE(res.ok());
            CHECK(res.metrics.monotone);
            CHECK(res.metrics.length <= 2 * (Rational(1) / eps).ceil());
            // cost <= floor((eta+eps) M) + c + 1, exact arithmetic
            std::int64_t bound = ((eta + eps) * Rational(inst.pair.M)).floor() + c + 1;
            CHECK(res.metrics.cost <= bound);
            // every node moves in the output exactly as often as in the input
            std::vector<int> in_flips(inst.graph.node_count(), 0),
                out_flips(inst.graph.node_count(), 0);
            for (int i = 0; i < s.stored_batches(); ++i)
                for (int v : s.batch(i)) ++in_flips[v];
            for (int i = 0; i < out.stored_batches(); ++i)
                for (int v : out.batch(i)) ++out_flips[v];
            CHECK(in_flips == out_flips);
            // relative order within removals and within additions is preserved:
            // earlier input moves land in no-later output batches
            for (bool adds : {false, true}) {
                auto in_seq = move_sequence(s, adds);
                auto out_pos = move_batch_of(out, inst.graph.node_count(), adds);
                for (std::size_t k = 0; k + 1 < in_seq.size(); ++k) {
                    REQUIRE(out_pos[in_seq[k]] >= 0);
                    CHECK(out_pos[in_seq[k]] <= out_pos[in_seq[k + 1]]);
                }
            }
        }
    }
}

TEST_CASE("compression never beats the oracle on path pairs") {
    for (std::int64_t n : {2, 3, 4}) {
        auto inst = gen_path_pair(n);
        auto s = cactus_schedule(inst.graph, inst.pair);
        auto [eta, c] = derive_eta_c(inst.graph, inst.pair, s);
        for (int t : {1, 2, 3}) {
            // lower bound: any (t+1)-batch schedule costs >= n(1+1/t)
            std::int64_t opt = optimal_batch_cost(inst.graph, inst.pair, t + 1);
            REQUIRE(opt >= 0);
            CHECK(Rational(opt) >= Rational(n) * (Rational(1) + Rational(1, t)));
            Rational eps(2, t + 1);
            if (eps > Rational(1)) eps = Rational(1);
            CompressionParams params{eps, eta, c};
            auto out = compress(inst.graph, inst.pair, s, params);
            auto res = validate(inst.graph, inst.pair, out);
            REQUIRE(res.ok());
            if (res.metrics.length <= t + 1) CHECK(res.metrics.cost >= opt);
        }
    }
}
