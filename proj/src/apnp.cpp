#include "mss/apnp.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "mss/error.hpp"
#include "mss/modular_arith.hpp"

namespace mss {

EdgeList prepare_edges(std::vector<Edge> raw, std::uint32_t n) {
  for (const Edge& e : raw) {
    if (e.u >= n || e.v >= n) throw InvalidEdgeError("edge endpoint out of range");
    if (e.u == e.v) throw InvalidEdgeError("self-loop");
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Edge& a, const Edge& b) { return a.weight < b.weight; });
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i].weight == raw[i - 1].weight) throw DistinctWeightsRequiredError();
  }
  return EdgeList{n, std::move(raw)};
}

PathMatrix::PathMatrix(std::uint32_t n) : n_(n), cells_(std::size_t{n} * n, kAbsent) {
  for (Vertex u = 0; u < n; ++u) set(u, u, u);
}

std::optional<Vertex> PathMatrix::parent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw IndexError("vertex out of range");
  const Vertex p = cells_[index(u, v)];
  if (p == kAbsent) return std::nullopt;
  return p;
}

ApnpState::ApnpState(std::uint32_t n, std::uint64_t p, std::uint64_t r)
    : n_(n), leaves_(std::bit_ceil(std::max<std::size_t>(n, 1))), p_(p), path_(n) {
  if (!is_prime(p)) throw InvalidParameterError("hash modulus is not prime");
  if (r >= p) throw InvalidParameterError("hash base must lie in [0, p)");
  powers_.resize(n);
  std::uint64_t power = 1 % p;
  for (Vertex u = 0; u < n; ++u) {
    powers_[u] = power;
    power = mul_mod(power, r, p);
  }
  tree_.assign(std::size_t{n} * 2 * leaves_, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t* t = &tree_[std::size_t{v} * 2 * leaves_];
    for (std::size_t k = leaves_ + v; k >= 1; k /= 2) t[k] = add_mod(t[k], powers_[v], p_);
  }
}

std::uint64_t ApnpState::default_prime(std::uint32_t n) {
  return n <= (1u << 13) ? kDefaultPrime : kLargePrime;
}

std::vector<NewPath> ApnpState::find_new_paths(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) throw InvalidEdgeError("invalid edge endpoints");
  const std::uint64_t* ta = &tree_[std::size_t{a} * 2 * leaves_];
  const std::uint64_t* tb = &tree_[std::size_t{b} * 2 * leaves_];
  std::vector<NewPath> out;
  std::vector<std::size_t> stack = {1};
  while (!stack.empty()) {
    const std::size_t k = stack.back();
    stack.pop_back();
    if (ta[k] == tb[k]) continue;
    if (k >= leaves_) {
      const Vertex u = static_cast<Vertex>(k - leaves_);
      if (!path_.present(u, a)) {
        out.push_back({u, a, b});
      } else {
        out.push_back({u, b, a});
      }
      continue;
    }
    // Right child first so leaves come out in increasing order.
    stack.push_back(2 * k + 1);
    stack.push_back(2 * k);
  }
  return out;
}

void ApnpState::add_new_path(const NewPath& path) {
  path_.set(path.source, path.target, path.parent);
  std::uint64_t* t = &tree_[std::size_t{path.target} * 2 * leaves_];
  const std::uint64_t value = powers_[path.source];
  for (std::size_t k = leaves_ + path.source; k >= 1; k /= 2) t[k] = add_mod(t[k], value, p_);
}

bool ApnpState::consistent() const {
  for (Vertex v = 0; v < n_; ++v) {
    for (std::size_t k = 1; k < leaves_; ++k) {
      if (node(v, k) != add_mod(node(v, 2 * k), node(v, 2 * k + 1), p_)) return false;
    }
    for (Vertex u = 0; u < leaves_; ++u) {
      const bool set = u < n_ && path_.present(u, v);
      if (node(v, leaves_ + u) != (set ? powers_[u] : 0)) return false;
    }
  }
  return true;
}

PathMatrix all_pairs_non_decreasing_paths(const EdgeList& edges, std::uint64_t seed,
                                          std::optional<std::uint64_t> prime) {
  const std::uint64_t p = prime.value_or(ApnpState::default_prime(edges.n));
  std::mt19937_64 rng(seed);
  const std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng);
  ApnpState state(edges.n, p, r);
  for (const Edge& e : edges.edges) {
    for (const NewPath& found : state.find_new_paths(e.u, e.v)) state.add_new_path(found);
  }
  return state.paths();
}

std::optional<std::vector<Vertex>> recover_path(const PathMatrix& path, Vertex u, Vertex v) {
  if (u >= path.size() || v >= path.size()) throw IndexError("vertex out of range");
  std::vector<Vertex> out = {v};
  while (v != u) {
    const auto p = path.parent(u, v);
    if (!p || out.size() > path.size()) return std::nullopt;
    v = *p;
    out.push_back(v);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace mss
