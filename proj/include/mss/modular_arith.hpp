#pragma once

#include <cstdint>

namespace mss {

// Prime used by the reference implementation; p^2 < 2^63.
inline constexpr std::uint64_t kDefaultPrime = 1234567891ULL;
// 2^61 - 1, used once the default prime is too small for the failure bound.
inline constexpr std::uint64_t kLargePrime = (1ULL << 61) - 1;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p <= 0xFFFFFFFFULL) return (a * b) % p;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= p - b ? a - (p - b) : a + b;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace mss
