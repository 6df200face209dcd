#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mss/apnp.hpp"
#include "mss/residue_multiset.hpp"

namespace mss {

// Whitespace-separated signed integers. Throws ParseError naming the
// 1-based line and column of the first bad token.
std::vector<std::int64_t> parse_integers(std::string_view text);

// One "u v w" triple per line; blank lines are skipped.
std::vector<Edge> parse_edges(std::string_view text);

enum class Distribution { kUniform, kSingleResidue, kArithmetic };

std::optional<Distribution> parse_distribution(std::string_view name);

// Reproducible instance of `count` residues mod m.
//   uniform:        independent uniform residues.
//   single-residue: `count` copies of m / k, k the largest divisor of m not
//                   above `count`, so the attainable set has k elements.
//   arithmetic:     (i + 1) * step mod m for a random step.
std::vector<std::int64_t> generate_instance(std::uint64_t m, std::uint64_t count,
                                            Distribution dist, std::uint64_t seed);

std::string read_file(const std::string& path);

}  // namespace mss
