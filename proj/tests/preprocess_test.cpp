#include <random>
#include <set>

#include "gtest/gtest.h"
#include "mss/error.hpp"
#include "mss/residue_multiset.hpp"

namespace mss {
namespace {

// Subset sums by enumeration, kept local so these tests do not lean on the
// oracle module.
std::set<Residue> enumerate_sums(const ResidueMultiset& x) {
  const auto e = x.elements();
  std::set<Residue> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.size()); ++mask) {
    Residue s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (mask >> i & 1) s = (s + e[i]) % x.modulus();
    out.insert(s);
  }
  return out;
}

ResidueMultiset make(std::uint64_t m, std::initializer_list<std::pair<Residue, std::uint64_t>> c) {
  ResidueMultiset x(m);
  for (auto [r, k] : c) x.add(r, k);
  return x;
}

TEST(CanonicalizeTest, ReducesModM) {
  const std::int64_t raw[] = {9, -1, 3};
  EXPECT_EQ(canonicalize(raw, 8), make(8, {{1, 1}, {7, 1}, {3, 1}}));
  EXPECT_TRUE(canonicalize({}, 5).empty());
  const std::int64_t fours[] = {4, 4, 12};
  EXPECT_EQ(canonicalize(fours, 8), make(8, {{4, 3}}));
  EXPECT_THROW(canonicalize(fours, 0), InvalidModulusError);
  EXPECT_EQ(reduce_mod(INT64_MIN, 3), 1u);
}

TEST(ResidueMultisetTest, CountsAndOrder) {
  ResidueMultiset x(10);
  x.add(7);
  x.add(2, 3);
  x.remove(2);
  EXPECT_EQ(x.cardinality(), 3u);
  EXPECT_EQ(x.multiplicity(2), 2u);
  EXPECT_EQ(x.multiplicity(5), 0u);
  EXPECT_EQ(x.elements(), (std::vector<Residue>{2, 2, 7}));
  EXPECT_TRUE(x.contains(make(10, {{2, 1}})));
  EXPECT_FALSE(x.contains(make(10, {{2, 3}})));
  EXPECT_THROW(ResidueMultiset(0), InvalidModulusError);
}

TEST(PreprocessingCheckTest, Examples) {
  auto a = make(10, {{2, 4}});
  preprocessing_check(a, 2);
  EXPECT_EQ(a, make(10, {{2, 2}, {4, 1}}));

  auto b = make(7, {{3, 2}});
  preprocessing_check(b, 3);
  EXPECT_EQ(b, make(7, {{3, 2}}));

  auto c = make(6, {{0, 5}});
  preprocessing_check(c, 0);
  EXPECT_EQ(c, make(6, {{0, 2}}));
}

TEST(PreprocessTest, Examples) {
  EXPECT_EQ(preprocess(make(10, {{2, 4}})), make(10, {{2, 2}, {4, 1}}));
  EXPECT_TRUE(preprocess(ResidueMultiset(3)).empty());
  const auto y = preprocess(make(4, {{1, 7}}));
  for (auto [r, k] : y.counts()) EXPECT_LE(k, 2u);
  EXPECT_EQ(enumerate_sums(y), (std::set<Residue>{0, 1, 2, 3}));
}

TEST(PreprocessTest, LongDoublingChainDoesNotRecurse) {
  // 2^20 copies of 1 collapse through a doubling chain 20 levels deep; a
  // huge modulus keeps every doubled value distinct.
  ResidueMultiset x(std::uint64_t{1} << 40);
  x.add(1, std::uint64_t{1} << 20);
  const auto y = preprocess(x);
  for (auto [r, k] : y.counts()) EXPECT_LE(k, 2u);
  EXPECT_LE(y.cardinality(), 21u * 2);
}

TEST(PreprocessTest, RandomInstancesKeepInvariants) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t m = 1 + rng() % 48;
    const std::size_t n = rng() % 13;
    ResidueMultiset x(m);
    // Few distinct values so multiplicities >= 3 are common.
    const std::uint64_t pool = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) x.add((rng() % pool) * (1 + rng() % 3) % m);
    const auto y = preprocess(x);
    const auto sums = enumerate_sums(x);
    ASSERT_EQ(enumerate_sums(y), sums);
    for (auto [r, k] : y.counts()) ASSERT_LE(k, 2u);
    ASSERT_LE(y.cardinality(), x.cardinality());
    ASSERT_LE(y.cardinality(), 2 * sums.size());
    ASSERT_EQ(preprocess(y), y);
  }
}

}  // namespace
}  // namespace mss
