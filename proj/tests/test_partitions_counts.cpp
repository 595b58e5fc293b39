#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <vector>

#include "evengraphs/count_engine.hpp"
#include "evengraphs/oracle.hpp"
#include "evengraphs/partitions.hpp"

using namespace evengraphs;

namespace {

// Independent oracle: p(n) by the classic recurrence
// p(n) = sum_k p(n-k) over parts, via the restricted-count DP.
long long partition_count_oracle(int n) {
    std::vector<std::vector<long long>> p(
        static_cast<std::size_t>(n + 1), std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
    for (int k = 0; k <= n; ++k) p[0][static_cast<std::size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)];
            if (m >= k)
                p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] +=
                    p[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)];
        }
    return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

std::vector<std::vector<int>> collect_partitions(int n) {
    std::vector<std::vector<int>> out;
    for_each_partition(n, [&](const std::vector<int>& parts) { out.push_back(parts); });
    return out;
}

} // namespace

TEST_CASE("partition stream") {
    CHECK(collect_partitions(1) == std::vector<std::vector<int>>{{1}});
    CHECK(collect_partitions(4) ==
          std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(collect_partitions(10).size() == 42);
    for (int n = 1; n <= 20; ++n)
        CHECK(static_cast<long long>(collect_partitions(n).size()) ==
              partition_count_oracle(n));
}

TEST_CASE("class sizes over all partitions sum to n!") {
    for (int n = 1; n <= 25; ++n) {
        BigCount sum = 0;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            sum += CycleType::from_parts(n, parts).class_size();
        });
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("graph counts") {
    CHECK(count_graphs(1) == 1);
    // oracle: brute-force isomorphism classes
    CHECK(count_graphs(3) == brute_counts(3).graphs);
    CHECK(count_graphs(3) == 4);
    CHECK(count_graphs(4) == brute_counts(4).graphs);
    CHECK(count_graphs(4) == 11);
}

TEST_CASE("tournament counts") {
    CHECK(count_tournaments(4) == 4);
    CHECK(count_tournaments(1) == 1);
    CHECK(count_tournaments(3) == brute_counts(3).tournaments);
    CHECK(count_tournaments(3) == 2);
}

TEST_CASE("odd graph counts") {
    CHECK(count_odd_graphs(1) == 0);
    CHECK(count_odd_graphs(2) == brute_counts(2).odd_graphs);
    CHECK(count_odd_graphs(2) == 1);
    CHECK(count_odd_graphs(4) == brute_counts(4).odd_graphs);
    CHECK(count_odd_graphs(4) == 7);
}

TEST_CASE("even graph counts") {
    CHECK(count_even_graphs(4) == 4);
    CHECK(count_even_graphs(2) == 1);
    CHECK(count_even_graphs(1) == 1);
}

TEST_CASE("identity report") {
    const CountReport r4 = verify_identity(4);
    CHECK(r4.graphs == 11);
    CHECK(r4.tournaments == 4);
    CHECK(r4.odd_graphs == 7);
    CHECK(r4.even_graphs == 4);
    CHECK(r4.identity_holds);

    const CountReport r1 = verify_identity(1);
    CHECK(r1.graphs == 1);
    CHECK(r1.tournaments == 1);
    CHECK(r1.odd_graphs == 0);
    CHECK(r1.even_graphs == 1);
    CHECK(r1.identity_holds);

    const CountReport r3 = verify_identity(3);
    CHECK(r3.graphs == 4);
    CHECK(r3.tournaments == 2);
    CHECK(r3.odd_graphs == 2);
    CHECK(r3.even_graphs == 2);
    CHECK(r3.identity_holds);
}

TEST_CASE("identity holds and counts are monotone over a table") {
    BigCount prev_graphs = 0, prev_tournaments = 0, prev_odd = 0, prev_even = 0;
    for (int n = 1; n <= 25; ++n) {
        const CountReport r = verify_identity(n);
        REQUIRE(r.identity_holds);
        if (n >= 2) REQUIRE(r.even_graphs == r.tournaments);
        REQUIRE(r.graphs >= prev_graphs);
        REQUIRE(r.tournaments >= prev_tournaments);
        REQUIRE(r.odd_graphs >= prev_odd);
        REQUIRE(r.even_graphs >= prev_even);
        prev_graphs = r.graphs;
        prev_tournaments = r.tournaments;
        prev_odd = r.odd_graphs;
        prev_even = r.even_graphs;
    }
}

TEST_CASE("count cache round trip") {
    CountCache cache;
    cache.store(4, CountKind::Graphs, BigCount(11));
    cache.store(4, CountKind::Tournaments, BigCount(4));
    cache.store(3, CountKind::OddGraphs, BigCount(2));
    std::ostringstream saved;
    cache.save(saved);
    CHECK(saved.str() == "3\todd\t2\n4\tgraphs\t11\n4\ttournaments\t4\n");

    CountCache reloaded;
    std::istringstream in(saved.str());
    reloaded.load(in);
    CHECK(reloaded.lookup(4, CountKind::Graphs) == BigCount(11));
    CHECK(reloaded.lookup(3, CountKind::OddGraphs) == BigCount(2));
    CHECK(!reloaded.lookup(5, CountKind::Graphs));
}

TEST_CASE("count cache rejects malformed input") {
    CountCache cache;
    std::istringstream unknown_kind("4\tdigraphs\t218\n");
    CHECK_THROWS_WITH(cache.load(unknown_kind),
                      Catch::Matchers::ContainsSubstring("unknown kind"));
    std::istringstream missing_field("4\tgraphs\n");
    CHECK_THROWS(cache.load(missing_field));
    std::istringstream bad_n("x\tgraphs\t11\n");
    CHECK_THROWS(cache.load(bad_n));
}

TEST_CASE("cache-aware counting computes on miss and reuses hits") {
    CountCache cache;
    CHECK(count_with_cache(5, CountKind::Graphs, cache) == 34);
    cache.store(5, CountKind::Tournaments, BigCount(999)); // a hit wins, even if planted
    CHECK(count_with_cache(5, CountKind::Tournaments, cache) == 999);
}
