#include "mss/residue_multiset.hpp"

#include <cassert>
#include <stdexcept>

#include "mss/error.hpp"

namespace mss {

ResidueMultiset::ResidueMultiset(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw InvalidModulusError();
}

std::uint64_t ResidueMultiset::multiplicity(Residue x) const {
  auto it = counts_.find(x);
  return it == counts_.end() ? 0 : it->second;
}

void ResidueMultiset::add(Residue x, std::uint64_t copies) {
  if (x >= modulus_) throw IndexError("residue out of range");
  if (copies == 0) return;
  counts_[x] += copies;
  cardinality_ += copies;
}

void ResidueMultiset::remove(Residue x, std::uint64_t copies) {
  auto it = counts_.find(x);
  if (it == counts_.end() || it->second < copies)
    throw IndexError("removing more copies than present");
  it->second -= copies;
  cardinality_ -= copies;
  if (it->second == 0) counts_.erase(it);
}

std::vector<Residue> ResidueMultiset::elements() const {
  std::vector<Residue> out;
  out.reserve(cardinality_);
  for (auto [x, k] : counts_) out.insert(out.end(), k, x);
  return out;
}

bool ResidueMultiset::contains(const ResidueMultiset& sub) const {
  if (sub.modulus_ != modulus_) return false;
  for (auto [x, k] : sub.counts_)
    if (multiplicity(x) < k) return false;
  return true;
}

Residue reduce_mod(std::int64_t v, std::uint64_t m) {
  if (m == 0) throw InvalidModulusError();
  if (v >= 0) return static_cast<std::uint64_t>(v) % m;
  // -(v + 1) never overflows, and maps -1 -> 0, -2 -> 1, ...
  std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % m;
  return m - 1 - r;
}

ResidueMultiset canonicalize(std::span<const std::int64_t> raw, std::uint64_t m) {
  ResidueMultiset out(m);
  for (std::int64_t v : raw) out.add(reduce_mod(v, m));
  return out;
}

namespace {

Residue double_mod(Residue x, std::uint64_t m) {
  // x < m, so x + x cannot wrap unless m > 2^63; handle that case explicitly.
  return x >= m - x ? x - (m - x) : x + x;
}

}  // namespace

void preprocessing_check(ResidueMultiset& set, Residue x) {
  const std::uint64_t m = set.modulus();
  std::vector<Residue> stack{x};
  while (!stack.empty()) {
    Residue y = stack.back();
    stack.pop_back();
    if (set.multiplicity(y) < 3) continue;
    set.remove(y, 2);
    Residue twice = double_mod(y, m);
    set.add(twice);
    // Same visiting order as the recursive formulation: y first, then 2y.
    stack.push_back(twice);
    stack.push_back(y);
  }
}

ResidueMultiset preprocess(const ResidueMultiset& set) {
  ResidueMultiset out = set;
  std::vector<Residue> distinct;
  distinct.reserve(set.counts().size());
  for (auto [x, k] : set.counts()) distinct.push_back(x);
  for (Residue x : distinct) preprocessing_check(out, x);
  return out;
}

}  // namespace mss
