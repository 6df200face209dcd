#pragma once

#include <cstdint>
#include <vector>

#include "mss/hash_prefix_tree.hpp"
#include "mss/sum_table.hpp"

namespace mss {

struct SymDiffResult {
  // ((S + x) \ S) intersected with [a, b), strictly increasing.
  std::vector<Residue> new_sums;
  // Recursion nodes visited, including pruned ones.
  std::uint64_t nodes_visited = 0;
};

// Output-sensitive enumeration of the sums that adding x creates, by
// bisecting [a, b) and pruning every window whose shifted and unshifted
// hashes agree. Leaves are classified against the exact table, so the result
// is always a subset of the true new sums; a hash collision can only hide
// one. `tree` must encode the doubled indicator of the sums present in
// `table`.
SymDiffResult find_new_sums(std::uint64_t a, std::uint64_t b, Residue x,
                            const HashPrefixTree& tree, const SumTable& table);

}  // namespace mss
