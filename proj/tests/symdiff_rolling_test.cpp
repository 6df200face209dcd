#include "mss/symdiff_rolling.hpp"

#include <bit>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "mss/error.hpp"
#include "mss/modular_arith.hpp"

namespace mss {
namespace {

struct Fixture {
  Fixture(std::uint64_t m, std::uint64_t p, std::uint64_t r) : tree(m, p, r), table(m) {
    tree.set_bit(0);
    tree.set_bit(m);
  }
  void insert(Residue s, Residue w) {
    table.record(s, w);
    tree.set_bit(s);
    tree.set_bit(s + tree.modulus());
  }
  HashPrefixTree tree;
  SumTable table;
};

TEST(SumTableTest, RecordAndRecover) {
  SumTable t(8);
  EXPECT_TRUE(t.present(0));
  EXPECT_EQ(t.witness(0), 0u);
  EXPECT_EQ(t.attainable_count(), 1u);
  t.record(1, 1);
  t.record(3, 3);
  t.record(4, 3);
  for (Residue s : {2, 6, 7}) t.record(s, 6);
  const std::vector<std::optional<Residue>> want = {0, 1, 6, 3, 3, std::nullopt, 6, 6};
  EXPECT_EQ(t.witnesses(), want);
  EXPECT_EQ(recover_subset(t, 7), (std::vector<Residue>{1, 6}));
  EXPECT_EQ(recover_subset(t, 2), (std::vector<Residue>{1, 3, 6}));
  EXPECT_EQ(recover_subset(t, 5), std::nullopt);
  EXPECT_EQ(recover_subset(t, 0), std::vector<Residue>{});
  EXPECT_THROW(recover_subset(t, 8), IndexError);
}

TEST(SumTableTest, CyclicWitnessesAreRejected) {
  SumTable t(6);
  t.assign(2, 4);
  t.assign(4, 2);
  EXPECT_EQ(recover_subset(t, 2), std::nullopt);
  t.assign(3, 0);
  EXPECT_EQ(recover_subset(t, 3), std::nullopt);
}

TEST(FindNewSumsTest, Examples) {
  Fixture f(8, kDefaultPrime, 987654321);
  EXPECT_EQ(find_new_sums(0, 8, 1, f.tree, f.table).new_sums, std::vector<Residue>{1});

  f.insert(1, 1);
  f.insert(3, 3);
  f.insert(4, 3);
  EXPECT_EQ(find_new_sums(0, 8, 6, f.tree, f.table).new_sums, (std::vector<Residue>{2, 6, 7}));
  EXPECT_EQ(find_new_sums(0, 4, 6, f.tree, f.table).new_sums, (std::vector<Residue>{2}));

  EXPECT_THROW(find_new_sums(0, 9, 1, f.tree, f.table), IndexError);
  EXPECT_THROW(find_new_sums(3, 3, 1, f.tree, f.table), IndexError);
}

TEST(FindNewSumsTest, FullSetPrunesAtTheRoot) {
  Fixture f(64, kDefaultPrime, 55555);
  for (Residue s = 1; s < 64; ++s) f.insert(s, 1);
  const auto r = find_new_sums(0, 64, 17, f.tree, f.table);
  EXPECT_TRUE(r.new_sums.empty());
  EXPECT_EQ(r.nodes_visited, 1u);
}

// Random sets against direct set arithmetic, with the node-count bound.
TEST(FindNewSumsTest, RandomSetsMatchSetArithmetic) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t m = 1 + rng() % 48;
    const bool tiny = trial % 4 == 3;
    const std::uint64_t p = tiny ? 97 : kDefaultPrime;
    Fixture f(m, p, rng() % p);
    std::set<Residue> s = {0};
    for (Residue v = 1; v < m; ++v) {
      if (rng() % 2) {
        f.insert(v, v);
        s.insert(v);
      }
    }
    const Residue x = rng() % m;
    std::vector<Residue> want;
    std::uint64_t diff = 0;
    for (Residue v = 0; v < m; ++v) {
      const bool here = s.count(v), shifted = s.count((v + m - x) % m);
      if (here != shifted) ++diff;
      if (shifted && !here) want.push_back(v);
    }
    const auto got = find_new_sums(0, m, x, f.tree, f.table);
    if (tiny) {
      ASSERT_TRUE(std::includes(want.begin(), want.end(), got.new_sums.begin(), got.new_sums.end()));
    } else {
      ASSERT_EQ(got.new_sums, want);
    }
    const std::uint64_t depth = std::bit_width(m - 1) + 1;
    ASSERT_LE(got.nodes_visited, 2 * (diff * depth + 1));
  }
}

}  // namespace
}  // namespace mss
