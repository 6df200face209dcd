#include "mss/instance_io.hpp"

#include "gtest/gtest.h"
#include "mss/error.hpp"

namespace mss {
namespace {

TEST(ParseIntegersTest, Valid) {
  EXPECT_EQ(parse_integers("1 3 6"), (std::vector<std::int64_t>{1, 3, 6}));
  EXPECT_EQ(parse_integers(" -4\n\t+7 \r\n\n9\n"), (std::vector<std::int64_t>{-4, 7, 9}));
  EXPECT_TRUE(parse_integers("").empty());
}

TEST(ParseIntegersTest, ReportsPosition) {
  try {
    parse_integers("1 2\n 3 4x 5");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 4u);
  }
  EXPECT_THROW(parse_integers("99999999999999999999"), ParseError);
  EXPECT_THROW(parse_integers("-"), ParseError);
  EXPECT_THROW(parse_integers("1.5"), ParseError);
}

TEST(ParseEdgesTest, Lines) {
  EXPECT_EQ(parse_edges("1 2 1\n\n0 1 2\n"), (std::vector<Edge>{{1, 2, 1}, {0, 1, 2}}));
  EXPECT_THROW(parse_edges("1 2\n"), ParseError);
  EXPECT_THROW(parse_edges("1 2 3 4\n"), ParseError);
  EXPECT_THROW(parse_edges("-1 2 3\n"), ParseError);
}

TEST(GenerateTest, Distributions) {
  EXPECT_EQ(generate_instance(1000, 50, Distribution::kUniform, 3),
            generate_instance(1000, 50, Distribution::kUniform, 3));
  EXPECT_NE(generate_instance(1000, 50, Distribution::kUniform, 3),
            generate_instance(1000, 50, Distribution::kUniform, 4));
  for (auto v : generate_instance(17, 100, Distribution::kUniform, 1)) {
    EXPECT_GE(v, 0);
    EXPECT_LT(v, 17);
  }
  const auto single = generate_instance(1 << 20, 200, Distribution::kSingleResidue, 1);
  EXPECT_EQ(single, std::vector<std::int64_t>(200, 8192));
  EXPECT_EQ(generate_instance(12, 5, Distribution::kSingleResidue, 1),
            std::vector<std::int64_t>(5, 3));
  const auto arith = generate_instance(101, 4, Distribution::kArithmetic, 2);
  for (int i = 1; i < 4; ++i) EXPECT_EQ(arith[i], (arith[0] * (i + 1)) % 101);
  EXPECT_EQ(parse_distribution("single-residue"), Distribution::kSingleResidue);
  EXPECT_EQ(parse_distribution("gauss"), std::nullopt);
  EXPECT_THROW(generate_instance(0, 1, Distribution::kUniform, 1), InvalidModulusError);
}

}  // namespace
}  // namespace mss
