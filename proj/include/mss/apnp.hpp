#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>


namespace mss {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  std::int64_t weight;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected edges sorted by strictly increasing weight.
struct EdgeList {
  std::uint32_t n = 0;
  std::vector<Edge> edges;
};

// Sorts by weight. Throws InvalidEdgeError for self-loops or endpoints
// outside [0, n) and DistinctWeightsRequiredError if two edges tie.
EdgeList prepare_edges(std::vector<Edge> raw, std::uint32_t n);

// entry(u, v) is the vertex before v on the chosen non-decreasing path from
// u, or nullopt if v is unreachable from u. entry(u, u) = u.
class PathMatrix {
 public:
  explicit PathMatrix(std::uint32_t n);

  std::uint32_t size() const { return n_; }
  std::optional<Vertex> parent(Vertex u, Vertex v) const;
  bool present(Vertex u, Vertex v) const { return cells_[index(u, v)] != kAbsent; }
  void set(Vertex u, Vertex v, Vertex parent) { cells_[index(u, v)] = parent; }

  friend bool operator==(const PathMatrix&, const PathMatrix&) = default;

 private:
  static constexpr Vertex kAbsent = ~Vertex{0};
  std::size_t index(Vertex u, Vertex v) const { return std::size_t{u} * n_ + v; }

  std::uint32_t n_;
  std::vector<Vertex> cells_;
};

struct NewPath {
  Vertex source;
  Vertex target;
  Vertex parent;
  friend bool operator==(const NewPath&, const NewPath&) = default;
};

// For every vertex v, a hash tree over the set R^v of vertices that reach v:
// leaf u holds r^u when u reaches v. Trees are flat arrays of 2N slots with
// the root at 1 and leaf u at N + u.
class ApnpState {
 public:
  ApnpState(std::uint32_t n, std::uint64_t p, std::uint64_t r);

  // The prime used when none is forced: the reference constant for
  // n <= 2^13, 2^61 - 1 above.
  static std::uint64_t default_prime(std::uint32_t n);

  std::uint32_t size() const { return n_; }
  const PathMatrix& paths() const { return path_; }

  // Pairs newly connected by edge (a, b): (u, a, b) for u reaching b only,
  // (u, b, a) for u reaching a only. Descends both trees where their hashes
  // differ; a collision can hide a pair but never invent one.
  std::vector<NewPath> find_new_paths(Vertex a, Vertex b) const;
  // Records the path and adds r^source to the target's tree.
  void add_new_path(const NewPath& path);

  // Recomputes every internal node; true if all match.
  bool consistent() const;
  std::uint64_t node(Vertex v, std::size_t k) const { return tree_[v * 2 * leaves_ + k]; }

 private:
  std::uint32_t n_;
  std::size_t leaves_;
  std::uint64_t p_;
  std::vector<std::uint64_t> powers_;
  std::vector<std::uint64_t> tree_;
  PathMatrix path_;
};

// Processes edges in increasing weight; the first edge that connects u to v
// fixes entry(u, v). A random base is drawn from `seed`.
PathMatrix all_pairs_non_decreasing_paths(const EdgeList& edges, std::uint64_t seed,
                                          std::optional<std::uint64_t> prime = std::nullopt);

// Vertex sequence from u to v, or nullopt if absent or the parent chain is
// broken.
std::optional<std::vector<Vertex>> recover_path(const PathMatrix& path, Vertex u, Vertex v);

}  // namespace mss
