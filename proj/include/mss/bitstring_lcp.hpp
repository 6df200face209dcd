#pragma once

#include <cstdint>
#include <ext/pb_ds/assoc_container.hpp>
#include <ext/pb_ds/tree_policy.hpp>
#include <functional>
#include <memory>
#include <vector>

#include "mss/dyn_strings.hpp"

namespace mss {

// Ordered set of positions with O(log n) rank and select.
class RankSelectSet {
 public:
  bool insert(std::uint64_t v) { return tree_.insert(v).second; }
  bool contains(std::uint64_t v) const { return tree_.find(v) != tree_.end(); }
  std::uint64_t size() const { return tree_.size(); }
  // Number of stored values strictly below v.
  std::uint64_t rank(std::uint64_t v) const { return tree_.order_of_key(v); }
  // k-th smallest stored value, 0-based.
  std::uint64_t select(std::uint64_t k) const { return *tree_.find_by_order(k); }

 private:
  __gnu_pbds::tree<std::uint64_t, __gnu_pbds::null_type, std::less<std::uint64_t>,
                   __gnu_pbds::rb_tree_tag, __gnu_pbds::tree_order_statistics_node_update>
      tree_;
};

enum class LcpVariant { kPlain, kRunLength };

// How the longest common prefix of two family strings is searched for.
enum class PrefixSearch {
  // Top-down walk over both parse trees.
  kTreeWalk,
  // Doubling then bisection over Split + Equal.
  kBisect,
};

// A 0/1 string z of length m, initially all zeros, under Add(i) (z[i] := 1)
// and LCP(i, j) (longest common prefix of z[i..] and z[j..]).
class BitStringLcp {
 public:
  virtual ~BitStringLcp() = default;

  virtual std::uint64_t size() const = 0;
  virtual bool get(std::uint64_t i) const = 0;
  // Setting a position that is already 1 is a no-op.
  virtual void add(std::uint64_t i) = 0;
  virtual std::uint64_t lcp(std::uint64_t i, std::uint64_t j) = 0;
};

// Stores z itself in a string family.
class PlainBitStringLcp final : public BitStringLcp {
 public:
  explicit PlainBitStringLcp(std::uint64_t m, PrefixSearch search = PrefixSearch::kTreeWalk);

  std::uint64_t size() const override { return m_; }
  bool get(std::uint64_t i) const override;
  void add(std::uint64_t i) override;
  std::uint64_t lcp(std::uint64_t i, std::uint64_t j) override;

  const StringFamily& family() const { return family_; }
  StringHandle string() const { return z_; }

 private:
  std::uint64_t m_;
  PrefixSearch search_;
  StringFamily family_;
  StringHandle one_;
  StringHandle z_;
};

// Stores the run-length form C(z): every maximal block of zeros becomes one
// symbol (0, L), with (0, 0) between adjacent ones. State size and work
// depend on the number of ones, not on m.
class RunLengthBitStringLcp final : public BitStringLcp {
 public:
  explicit RunLengthBitStringLcp(std::uint64_t m,
                                 PrefixSearch search = PrefixSearch::kTreeWalk);

  static constexpr Symbol kOne = 1;
  static constexpr Symbol zero_run(std::uint64_t length) { return 2 + length; }
  static constexpr bool is_zero_run(Symbol s) { return s >= 2; }
  static constexpr std::uint64_t run_length(Symbol s) { return s - 2; }

  std::uint64_t size() const override { return m_; }
  bool get(std::uint64_t i) const override;
  void add(std::uint64_t i) override;
  std::uint64_t lcp(std::uint64_t i, std::uint64_t j) override;

  std::vector<Symbol> compressed() const { return family_.materialize(encoded_); }
  const StringFamily& family() const { return family_; }

 private:
  // 1 if the encoding starts with a zero run, 0 if z[0] = 1.
  std::uint64_t lead() const;
  // Index in C(z) of the zero run covering zero position i.
  std::uint64_t run_index(std::uint64_t rank) const;
  // C(z[i..]).
  StringHandle suffix_encoding(std::uint64_t i);
  // Number of positions of z[i..] covered by the first `symbols` symbols of
  // C(z[i..]).
  std::uint64_t covered_length(std::uint64_t i, std::uint64_t symbols) const;

  std::uint64_t m_;
  PrefixSearch search_;
  StringFamily family_;
  RankSelectSet ones_;
  StringHandle encoded_;
};

std::unique_ptr<BitStringLcp> make_bitstring_lcp(std::uint64_t m, LcpVariant variant,
                                                 PrefixSearch search = PrefixSearch::kTreeWalk);

}  // namespace mss
