#include "mss/bitstring_lcp.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "mss/error.hpp"

namespace mss {
namespace {

std::uint64_t naive_lcp(const std::vector<char>& z, std::uint64_t i, std::uint64_t j) {
  std::uint64_t l = 0;
  while (i + l < z.size() && j + l < z.size() && z[i + l] == z[j + l]) ++l;
  return l;
}

TEST(RunLengthBitStringLcpTest, EncodingOfExampleString) {
  RunLengthBitStringLcp z(8);
  for (std::uint64_t i : {0, 4, 5}) z.add(i);
  using R = RunLengthBitStringLcp;
  const std::vector<Symbol> want = {R::kOne, R::zero_run(3), R::kOne, R::zero_run(0),
                                    R::kOne, R::zero_run(2)};
  EXPECT_EQ(z.compressed(), want);
}

TEST(RunLengthBitStringLcpTest, EncodingHasNoEmptyRunsAtTheEnds) {
  RunLengthBitStringLcp z(3);
  z.add(0);
  z.add(2);
  using R = RunLengthBitStringLcp;
  EXPECT_EQ(z.compressed(), (std::vector<Symbol>{R::kOne, R::zero_run(1), R::kOne}));
  z.add(1);
  EXPECT_EQ(z.compressed(), (std::vector<Symbol>{R::kOne, R::zero_run(0), R::kOne,
                                                 R::zero_run(0), R::kOne}));
}

// Decodes C(z) back into z, checking the alternation rules on the way.
TEST(RunLengthBitStringLcpTest, EncodingStaysWellFormed) {
  using R = RunLengthBitStringLcp;
  std::mt19937_64 rng(12);
  for (std::uint64_t m : {1, 2, 9, 50}) {
    R z(m);
    std::vector<char> mirror(m, 0);
    for (int k = 0; k < 80; ++k) {
      const std::uint64_t i = rng() % m;
      z.add(i);
      mirror[i] = 1;
      const auto c = z.compressed();
      std::vector<char> decoded;
      for (std::size_t t = 0; t < c.size(); ++t) {
        if (t > 0) ASSERT_NE(R::is_zero_run(c[t]), R::is_zero_run(c[t - 1]));
        if (R::is_zero_run(c[t])) {
          ASSERT_TRUE(R::run_length(c[t]) > 0 || (t > 0 && t + 1 < c.size()));
          decoded.insert(decoded.end(), R::run_length(c[t]), 0);
        } else {
          ASSERT_EQ(c[t], R::kOne);
          decoded.push_back(1);
        }
      }
      ASSERT_EQ(decoded, mirror);
    }
  }
}

class BitStringLcpTest : public ::testing::TestWithParam<std::pair<LcpVariant, PrefixSearch>> {
 protected:
  std::unique_ptr<BitStringLcp> make(std::uint64_t m) {
    return make_bitstring_lcp(m, GetParam().first, GetParam().second);
  }
};

TEST_P(BitStringLcpTest, SmallExample) {
  auto z = make(8);
  EXPECT_EQ(z->lcp(2, 5), 3u);
  z->add(3);
  EXPECT_EQ(z->lcp(0, 1), 2u);
  EXPECT_TRUE(z->get(3));
  EXPECT_FALSE(z->get(2));
  EXPECT_EQ(z->lcp(4, 4), 4u);
}

TEST_P(BitStringLcpTest, MatchesNaiveMirror) {
  std::mt19937_64 rng(11);
  for (std::uint64_t m : {1, 2, 5, 17, 300, 4096}) {
    auto z = make(m);
    std::vector<char> mirror(m, 0);
    const int ops = GetParam().second == PrefixSearch::kBisect ? 600 : 3000;
    for (int k = 0; k < ops; ++k) {
      if (rng() % 3 == 0) {
        // Cluster some updates so long runs of ones appear too.
        const std::uint64_t i = rng() % 2 ? rng() % m : (rng() % std::min<std::uint64_t>(m, 8));
        z->add(i);
        mirror[i] = 1;
      } else {
        const std::uint64_t i = rng() % m, j = rng() % m;
        ASSERT_EQ(z->lcp(i, j), naive_lcp(mirror, i, j)) << "m=" << m << " i=" << i << " j=" << j;
      }
    }
    for (std::uint64_t i = 0; i < m; ++i) ASSERT_EQ(z->get(i), mirror[i] != 0);
  }
}

TEST_P(BitStringLcpTest, RejectsOutOfRange) {
  auto z = make(4);
  EXPECT_THROW(z->add(4), IndexError);
  EXPECT_THROW(z->lcp(0, 4), IndexError);
  EXPECT_THROW(z->get(9), IndexError);
  EXPECT_THROW(make(0), InvalidParameterError);
}

INSTANTIATE_TEST_SUITE_P(
    AllVariants, BitStringLcpTest,
    ::testing::Values(std::pair{LcpVariant::kPlain, PrefixSearch::kTreeWalk},
                      std::pair{LcpVariant::kPlain, PrefixSearch::kBisect},
                      std::pair{LcpVariant::kRunLength, PrefixSearch::kTreeWalk},
                      std::pair{LcpVariant::kRunLength, PrefixSearch::kBisect}));

TEST(RunLengthBitStringLcpTest, StateIndependentOfLength) {
  RunLengthBitStringLcp z(std::uint64_t{1} << 40);
  z.add(5);
  z.add(std::uint64_t{1} << 39);
  EXPECT_EQ(z.lcp(0, 1), 4u);
  EXPECT_EQ(z.lcp(6, 7), (std::uint64_t{1} << 39) - 7);
  EXPECT_EQ(z.compressed().size(), 5u);
}

}  // namespace
}  // namespace mss
