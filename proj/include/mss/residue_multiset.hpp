#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace mss {

using Residue = std::uint64_t;

// A multiset over Z_m stored as residue -> multiplicity. Absent residues have
// multiplicity zero; stored multiplicities are always >= 1.
class ResidueMultiset {
 public:
  explicit ResidueMultiset(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t cardinality() const { return cardinality_; }
  bool empty() const { return cardinality_ == 0; }

  std::uint64_t multiplicity(Residue x) const;
  void add(Residue x, std::uint64_t copies = 1);
  void remove(Residue x, std::uint64_t copies = 1);

  const std::map<Residue, std::uint64_t>& counts() const { return counts_; }

  // Ascending residues, duplicates adjacent. This is the order every solver
  // engine feeds elements into the Bellman iteration.
  std::vector<Residue> elements() const;

  bool contains(const ResidueMultiset& sub) const;

  friend bool operator==(const ResidueMultiset&, const ResidueMultiset&) = default;

 private:
  std::uint64_t modulus_;
  std::uint64_t cardinality_ = 0;
  std::map<Residue, std::uint64_t> counts_;
};

// Reduces arbitrary integers modulo m. Throws InvalidModulusError for m == 0.
ResidueMultiset canonicalize(std::span<const std::int64_t> raw, std::uint64_t m);

Residue reduce_mod(std::int64_t v, std::uint64_t m);

// One exhaustive application of the doubling rule rooted at x: while some
// residue has three or more copies, two of them are replaced by their sum.
// Runs on an explicit work stack; the recursion depth is otherwise unbounded.
void preprocessing_check(ResidueMultiset& set, Residue x);

// Returns Y with the same attainable set, multiplicities <= 2 and
// |Y| <= min(|X|, 2|X*|). Distinct residues are visited in ascending order.
ResidueMultiset preprocess(const ResidueMultiset& set);

}  // namespace mss
