#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mss/bitstring_lcp.hpp"
#include "mss/residue_multiset.hpp"
#include "mss/sum_table.hpp"

namespace mss {

enum class Engine { kRollingHash, kDynString, kNaive };

std::string_view engine_name(Engine engine);
// Accepts "rolling", "dynstring" and "naive".
std::optional<Engine> parse_engine(std::string_view name);

// Called once per element of the Bellman iteration, after the new sums are
// known and before they are recorded. `work` is the number of recursion
// nodes (rolling hash), LCP queries (dynamic strings) or scanned residues
// (naive).
struct StepInfo {
  Residue x;
  std::span<const Residue> new_sums;
  std::uint64_t work;
};

struct SolveOptions {
  Engine engine = Engine::kRollingHash;
  // Drawn from std::random_device when absent; the report carries the value
  // actually used.
  std::optional<std::uint64_t> seed;
  // Hash prime override for the rolling-hash engine.
  std::optional<std::uint64_t> prime;
  LcpVariant lcp_variant = LcpVariant::kRunLength;
  std::function<void(const StepInfo&)> on_step;
};

struct SolveReport {
  std::uint64_t attainable_count = 1;
  Engine engine = Engine::kRollingHash;
  std::optional<std::uint64_t> seed;
  std::chrono::nanoseconds elapsed{0};
  std::optional<bool> verified;
};

struct SolveResult {
  SumTable table;
  SolveReport report;
};

// Preprocesses X, then runs S^i = S^{i-1} u (S^{i-1} + x_i) over its elements
// in ascending order, recording for each new sum the element that created
// it.
SolveResult solve(const ResidueMultiset& x, const SolveOptions& options = {});

// Re-solves independently (exactly when n * m is small enough) and compares
// present sets, then checks that every witness chain reaches 0, sums to its residue and
// uses a sub-multiset of the preprocessed input.
bool verify_solution(const ResidueMultiset& x, const SumTable& table);

}  // namespace mss
