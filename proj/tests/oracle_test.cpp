#include "mss/oracle.hpp"

#include <random>

#include "gtest/gtest.h"
#include "mss/error.hpp"

namespace mss {
namespace {

TEST(OracleTest, BruteSubsetSums) {
  ResidueMultiset x(8);
  for (Residue v : {1, 3, 6}) x.add(v);
  EXPECT_EQ(oracle::brute_subset_sums(x), (std::set<Residue>{0, 1, 2, 3, 4, 6, 7}));
  EXPECT_EQ(oracle::brute_subset_sums(ResidueMultiset(5)), std::set<Residue>{0});
  ResidueMultiset one(1);
  one.add(0);
  EXPECT_EQ(oracle::brute_subset_sums(one), std::set<Residue>{0});
  ResidueMultiset big(100);
  big.add(1, 25);
  EXPECT_THROW(oracle::brute_subset_sums(big), GuardExceededError);
}

TEST(OracleTest, BellmanNaive) {
  ResidueMultiset x(8);
  for (Residue v : {1, 3, 6}) x.add(v);
  const std::vector<std::optional<Residue>> want = {0, 1, 6, 3, 3, std::nullopt, 6, 6};
  EXPECT_EQ(oracle::bellman_naive(x).witnesses(), want);
  EXPECT_EQ(oracle::bellman_naive(ResidueMultiset(5)).present_residues(), std::vector<Residue>{0});
  ResidueMultiset huge(std::uint64_t{1} << 40);
  huge.add(1, 10);
  EXPECT_THROW(oracle::bellman_naive(huge), GuardExceededError);
}

TEST(OracleTest, SubsetOraclesAgree) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t m = 1 + rng() % 48;
    ResidueMultiset x(m);
    const std::size_t n = rng() % 13;
    for (std::size_t i = 0; i < n; ++i) x.add(rng() % m);
    const auto sums = oracle::brute_subset_sums(x);
    const auto table = oracle::bellman_naive(x);
    ASSERT_EQ(table.present_residues(), std::vector<Residue>(sums.begin(), sums.end()));
    for (Residue s : sums) {
      const auto chain = recover_subset(table, s);
      ASSERT_TRUE(chain);
      Residue total = 0;
      for (Residue w : *chain) total = (total + w) % m;
      ASSERT_EQ(total, s);
    }
  }
}

TEST(OracleTest, ApnpBrute) {
  EdgeList g{3, {{1, 2, 1}, {0, 1, 2}}};
  const PathMatrix p = oracle::apnp_brute(g);
  EXPECT_EQ(p.parent(0, 1), 0u);
  EXPECT_EQ(p.parent(0, 2), std::nullopt);
  EXPECT_EQ(p.parent(2, 0), 1u);
  EXPECT_EQ(p.parent(2, 1), 2u);
  EXPECT_EQ(p.parent(1, 0), 1u);
  EXPECT_EQ(p.parent(1, 2), 1u);
  EXPECT_EQ(oracle::apnp_brute(EdgeList{4, {}}), PathMatrix(4));
  EXPECT_THROW(oracle::apnp_brute(EdgeList{65, {}}), GuardExceededError);
}

// Presence in apnp_brute matches the exhaustive walk search on random
// graphs, and the walk search finds the first edge index directly.
TEST(OracleTest, GraphOraclesAgree) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t n = 1 + rng() % 8;
    EdgeList g{n, {}};
    const std::size_t k = n > 1 ? rng() % (3 * n) : 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex u = rng() % n;
      const Vertex v = (u + 1 + rng() % (n - 1)) % n;
      g.edges.push_back({u, v, static_cast<std::int64_t>(i)});
    }
    const PathMatrix p = oracle::apnp_brute(g);
    const auto first = oracle::first_discovery(g);
    // Replay edge by edge: a pair appears in a prefix iff its first edge is
    // inside that prefix.
    for (std::size_t cut = 0; cut <= k; ++cut) {
      EdgeList prefix{n, std::vector<Edge>(g.edges.begin(), g.edges.begin() + cut)};
      const PathMatrix q = oracle::apnp_brute(prefix);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (u != v) ASSERT_EQ(q.present(u, v), first[u][v] && *first[u][v] < cut);
    }
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v) ASSERT_EQ(p.present(u, v), first[u][v].has_value());
  }
}

}  // namespace
}  // namespace mss
