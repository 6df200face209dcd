#include "mss/sum_table.hpp"

#include <algorithm>
#include <cassert>

#include "mss/error.hpp"

namespace mss {

SumTable::SumTable(std::uint64_t m) : m_(m) {
  if (m == 0) throw InvalidModulusError();
  slots_ = LazyArray<std::uint64_t>(m);
  record(0, 0);
}

std::optional<Residue> SumTable::witness(Residue s) const {
  if (s >= m_) throw IndexError("sum out of range");
  const std::uint64_t slot = slots_.get(s);
  if (slot == 0) return std::nullopt;
  return slot - 1;
}

void SumTable::record(Residue s, Residue x) {
  if (s >= m_) throw IndexError("sum out of range");
  assert(slots_.get(s) == 0);
  slots_.ref(s) = x + 1;
  ++count_;
}

void SumTable::assign(Residue s, std::optional<Residue> w) {
  if (s >= m_) throw IndexError("sum out of range");
  if (slots_.get(s) != 0) --count_;
  slots_.ref(s) = w ? *w + 1 : 0;
  if (w) ++count_;
}

std::vector<Residue> SumTable::present_residues() const {
  std::vector<Residue> out;
  out.reserve(count_);
  for (Residue s = 0; s < m_; ++s)
    if (slots_.get(s) != 0) out.push_back(s);
  return out;
}

std::vector<std::optional<Residue>> SumTable::witnesses() const {
  std::vector<std::optional<Residue>> out(m_);
  for (Residue s = 0; s < m_; ++s) out[s] = witness(s);
  return out;
}

bool operator==(const SumTable& a, const SumTable& b) {
  if (a.m_ != b.m_ || a.count_ != b.count_) return false;
  for (Residue s = 0; s < a.m_; ++s)
    if (a.slots_.get(s) != b.slots_.get(s)) return false;
  return true;
}

std::optional<std::vector<Residue>> recover_subset(const SumTable& table, Residue t) {
  const std::uint64_t m = table.modulus();
  if (t >= m) throw IndexError("target out of range");
  std::vector<Residue> chain;
  Residue s = t;
  // Each step moves to a sum attained strictly earlier, so a valid chain has
  // fewer than attainable_count() links; anything longer is a cycle.
  while (s != 0) {
    auto w = table.witness(s);
    if (!w || *w >= m || chain.size() >= table.attainable_count()) return std::nullopt;
    chain.push_back(*w);
    s = s >= *w ? s - *w : s + (m - *w);
  }
  if (!table.present(0)) return std::nullopt;
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace mss
