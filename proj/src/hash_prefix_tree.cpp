#include "mss/hash_prefix_tree.hpp"

#include <cassert>

#include "mss/error.hpp"
#include "mss/modular_arith.hpp"

namespace mss {

HashPrefixTree::HashPrefixTree(std::uint64_t m, std::uint64_t p, std::uint64_t r)
    : m_(m), p_(p), r_(r) {
  if (m == 0) throw InvalidModulusError();
  if (m > (1ULL << 61)) throw InvalidParameterError("modulus too large for hashing");
  if (p <= 2 * m) throw WeakPrimeError("hash prime must exceed twice the modulus");
  if (!is_prime(p)) throw InvalidParameterError("hash modulus is not prime");
  if (r >= p) throw InvalidParameterError("hash base must lie in [0, p)");
  tree_ = LazyArray<std::uint64_t>(2 * m);
#ifndef NDEBUG
  bits_ = LazyArray<std::uint64_t>((2 * m + 63) / 64);
#endif
}

std::uint64_t HashPrefixTree::default_prime(std::uint64_t m) {
  return m <= (1ULL << 20) ? kDefaultPrime : kLargePrime;
}

std::uint64_t HashPrefixTree::power(std::uint64_t i) const {
  if (i > 2 * m_) throw IndexError("power index out of range");
  return pow_mod(r_, i, p_);
}

void HashPrefixTree::set_bit(std::uint64_t i) {
  if (i >= 2 * m_) throw IndexError("bit index out of range");
#ifndef NDEBUG
  assert((bits_.get(i / 64) >> (i % 64) & 1) == 0 && "position already set");
  bits_.ref(i / 64) |= 1ULL << (i % 64);
#endif
  const std::uint64_t v = power(i);
  const std::uint64_t n = 2 * m_;
  for (std::uint64_t k = i + 1; k <= n; k += k & (~k + 1)) {
    tree_.ref(k - 1) = add_mod(tree_.get(k - 1), v, p_);
  }
}

std::uint64_t HashPrefixTree::prefix(std::uint64_t t) const {
  if (t > 2 * m_) throw IndexError("prefix length out of range");
  std::uint64_t sum = 0;
  for (; t > 0; t &= t - 1) sum = add_mod(sum, tree_.get(t - 1), p_);
  return sum;
}

bool HashPrefixTree::hashes_equal(std::uint64_t fa, std::uint64_t fb,
                                  std::uint64_t fa_shift, std::uint64_t fb_shift,
                                  std::uint64_t shift_power) const {
  const std::uint64_t lhs = sub_mod(fb_shift, fa_shift, p_);
  const std::uint64_t rhs = mul_mod(shift_power, sub_mod(fb, fa, p_), p_);
  return lhs == rhs;
}

bool HashPrefixTree::window_hashes_equal(std::uint64_t a, std::uint64_t b,
                                         std::uint64_t x) const {
  if (a > b || b > m_ || x >= m_) throw IndexError("window out of range");
  return hashes_equal(prefix(a), prefix(b), prefix(m_ + a - x), prefix(m_ + b - x),
                      power(m_ - x));
}

}  // namespace mss
