#pragma once

#include <cstdint>

#include "mss/lazy_array.hpp"

namespace mss {

// Karp-Rabin weighted prefix sums over the doubled characteristic vector
// z[0..2m) of a set S subset of Z_m: prefix(t) = sum_{i<t} z_i r^i (mod p).
// Fenwick layout; point updates and prefix queries touch O(log m) cells.
//
// Storage is lazily materialized, so constructing a tree for a huge m and
// touching only a few positions costs time proportional to the touched part.
class HashPrefixTree {
 public:
  // Throws WeakPrimeError if p <= 2m, InvalidParameterError if p is not
  // prime or r >= p, InvalidModulusError if m == 0.
  HashPrefixTree(std::uint64_t m, std::uint64_t p, std::uint64_t r);

  // The prime used when the caller does not force one: the reference constant
  // for m <= 2^20, 2^61 - 1 above that.
  static std::uint64_t default_prime(std::uint64_t m);

  std::uint64_t modulus() const { return m_; }
  std::uint64_t prime() const { return p_; }
  std::uint64_t base() const { return r_; }
  std::uint64_t size() const { return 2 * m_; }

  // Adds r^i to every prefix covering i. Position i must currently be 0.
  void set_bit(std::uint64_t i);

  std::uint64_t prefix(std::uint64_t t) const;

  // r^i mod p for i in [0, 2m], by fast exponentiation.
  std::uint64_t power(std::uint64_t i) const;

  // Compares the hash of (S + x) restricted to [a, b) with that of S on
  // [a, b). A false answer is always exact; true may be a collision.
  bool window_hashes_equal(std::uint64_t a, std::uint64_t b, std::uint64_t x) const;

  // Same comparison given already-evaluated prefixes and
  // shift_power = power(m - x):
  //   (f(m+b-x) - f(m+a-x)) == r^{m-x} (f(b) - f(a)).
  bool hashes_equal(std::uint64_t fa, std::uint64_t fb, std::uint64_t fa_shift,
                    std::uint64_t fb_shift, std::uint64_t shift_power) const;

 private:
  std::uint64_t m_;
  std::uint64_t p_;
  std::uint64_t r_;
  LazyArray<std::uint64_t> tree_;
#ifndef NDEBUG
  LazyArray<std::uint64_t> bits_;
#endif
};

}  // namespace mss
