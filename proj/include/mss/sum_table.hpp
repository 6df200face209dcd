#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mss/residue_multiset.hpp"
#include "mss/lazy_array.hpp"

namespace mss {

// Attainable sums with reconstruction pointers: witness(s) is the element
// whose addition first produced s, so s - witness(s) was attainable earlier.
// Index 0 is always present with witness 0.
class SumTable {
 public:
  explicit SumTable(std::uint64_t m);

  std::uint64_t modulus() const { return m_; }
  std::uint64_t attainable_count() const { return count_; }

  bool present(Residue s) const { return slots_.get(s) != 0; }
  std::optional<Residue> witness(Residue s) const;

  // Records a newly attained sum. s must be absent.
  void record(Residue s, Residue x);

  // Unchecked overwrite, for loading serialized tables.
  void assign(Residue s, std::optional<Residue> w);

  // O(m) scan.
  std::vector<Residue> present_residues() const;
  std::vector<std::optional<Residue>> witnesses() const;

  friend bool operator==(const SumTable& a, const SumTable& b);

 private:
  std::uint64_t m_;
  std::uint64_t count_ = 0;
  // witness + 1, or 0 when absent.
  LazyArray<std::uint64_t> slots_;
};

// Follows witnesses from t back to 0. Returns the elements in the order they
// were added (earliest first), or nullopt if t is absent or the chain breaks.
std::optional<std::vector<Residue>> recover_subset(const SumTable& table, Residue t);

}  // namespace mss
