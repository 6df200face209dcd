#include "mss/oracle.hpp"

#include "mss/error.hpp"

namespace mss::oracle {

std::set<Residue> brute_subset_sums(const ResidueMultiset& x) {
  const std::uint64_t m = x.modulus();
  const std::vector<Residue> elems = x.elements();
  if (elems.size() > kMaxEnumerated) throw GuardExceededError("too many elements to enumerate");
  std::set<Residue> sums;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << elems.size()); ++mask) {
    Residue s = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (mask >> i & 1) s = (s + elems[i]) % m;
    }
    sums.insert(s);
  }
  return sums;
}

SumTable bellman_naive(const ResidueMultiset& x) {
  const std::uint64_t m = x.modulus();
  const std::vector<Residue> elems = x.elements();
  if (!elems.empty() && m > kMaxBellmanWork / elems.size())
    throw GuardExceededError("instance too large for the quadratic reference");
  std::vector<std::optional<Residue>> witness(m);
  witness[0] = 0;
  for (Residue e : elems) {
    std::vector<std::optional<Residue>> next = witness;
    for (Residue s = 0; s < m; ++s) {
      if (witness[s] && !witness[(s + e) % m]) next[(s + e) % m] = e;
    }
    witness = std::move(next);
  }
  SumTable table(m);
  for (Residue s = 1; s < m; ++s) table.assign(s, witness[s]);
  return table;
}

PathMatrix apnp_brute(const EdgeList& edges) {
  const std::uint32_t n = edges.n;
  if (n > kMaxGraphVertices) throw GuardExceededError("too many vertices for the reference");
  std::vector<std::vector<int>> parent(n, std::vector<int>(n, -1));
  for (std::uint32_t u = 0; u < n; ++u) parent[u][u] = static_cast<int>(u);
  for (const Edge& e : edges.edges) {
    for (std::uint32_t src = 0; src < n; ++src) {
      const bool to_u = parent[src][e.u] >= 0;
      const bool to_v = parent[src][e.v] >= 0;
      if (to_u && !to_v) parent[src][e.v] = static_cast<int>(e.u);
      if (to_v && !to_u) parent[src][e.u] = static_cast<int>(e.v);
    }
  }
  PathMatrix out(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      if (u != v && parent[u][v] >= 0) out.set(u, v, static_cast<Vertex>(parent[u][v]));
    }
  }
  return out;
}

std::vector<std::vector<std::optional<std::size_t>>> first_discovery(const EdgeList& edges) {
  const std::uint32_t n = edges.n;
  if (n > kMaxGraphVertices) throw GuardExceededError("too many vertices for the reference");
  const std::size_t k = edges.edges.size();
  std::vector<std::vector<std::optional<std::size_t>>> best(
      n, std::vector<std::optional<std::size_t>>(n));
  for (std::uint32_t src = 0; src < n; ++src) {
    // State (vertex, index of the last edge + 1); edges must be taken in
    // strictly increasing index order.
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(k + 1, false));
    std::vector<std::pair<std::uint32_t, std::size_t>> stack = {{src, 0}};
    seen[src][0] = true;
    while (!stack.empty()) {
      const auto [at, next] = stack.back();
      stack.pop_back();
      for (std::size_t i = next; i < k; ++i) {
        const Edge& e = edges.edges[i];
        if (e.u != at && e.v != at) continue;
        const std::uint32_t to = e.u == at ? e.v : e.u;
        if (to != src && (!best[src][to] || *best[src][to] > i)) best[src][to] = i;
        if (!seen[to][i + 1]) {
          seen[to][i + 1] = true;
          stack.push_back({to, i + 1});
        }
      }
    }
  }
  return best;
}

}  // namespace mss::oracle
