#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mss/apnp.hpp"
#include "mss/residue_multiset.hpp"
#include "mss/sum_table.hpp"

// Slow, obviously-correct references for differential testing. Nothing here
// calls into the fast engines.
namespace mss::oracle {

inline constexpr std::uint64_t kMaxEnumerated = 24;
inline constexpr std::uint64_t kMaxBellmanWork = std::uint64_t{1} << 32;
inline constexpr std::uint64_t kMaxGraphVertices = 64;

// Enumerates all 2^|X| sub-multisets. Throws GuardExceededError above
// kMaxEnumerated elements.
std::set<Residue> brute_subset_sums(const ResidueMultiset& x);

// Textbook O(nm) Bellman iteration over the raw (unpreprocessed) elements in
// ascending order. Throws GuardExceededError when n * m > kMaxBellmanWork.
SumTable bellman_naive(const ResidueMultiset& x);

// Processes edges in the given order; after each edge (a, b) every source
// that reaches exactly one endpoint gains the other, with that endpoint as
// parent. Throws GuardExceededError above kMaxGraphVertices.
PathMatrix apnp_brute(const EdgeList& edges);

// first_edge[u][v]: index into edges.edges of the edge that made v reachable
// from u (nullopt if never; diagonal stays nullopt). Computed by exhaustive
// search over non-decreasing walks, independently of apnp_brute.
std::vector<std::vector<std::optional<std::size_t>>> first_discovery(const EdgeList& edges);

}  // namespace mss::oracle
