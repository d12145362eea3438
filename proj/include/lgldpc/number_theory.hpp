#pragma once

#include <cstdint>
#include <vector>

namespace lgldpc {

// Integer solution of a^2 + b^2 + c^2 + d^2 = p, normalized so that a > 0 is
// odd and b, c, d are even. For p = 1 (mod 4) there are exactly p + 1 such
// solutions and they form the generator set of the (p+1)-regular Cayley
// graphs built in lps.cpp.
struct QuaternionSolution {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  QuaternionSolution conjugate() const { return {a, -b, -c, -d}; }

  friend bool operator==(const QuaternionSolution&, const QuaternionSolution&) = default;
  friend auto operator<=>(const QuaternionSolution&, const QuaternionSolution&) = default;
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;
std::uint64_t isqrt_u64(std::uint64_t n) noexcept;

// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n) noexcept;

// Legendre symbol (a|q) in {-1, 0, +1}; q must be an odd prime.
int legendre(std::int64_t a, std::uint64_t q);

// Canonical (smaller) square root of -1 modulo a prime q = 1 (mod 4).
std::uint64_t sqrt_minus_one(std::uint64_t q);

// All p + 1 normalized solutions for a prime p = 1 (mod 4), sorted
// lexicographically on (a, b, c, d).
std::vector<QuaternionSolution> quaternion_solutions(std::uint64_t p);

}  // namespace lgldpc
