#include "lgldpc/number_theory.hpp"

#include <algorithm>

#include "lgldpc/error.hpp"

namespace lgldpc {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t isqrt_u64(std::uint64_t n) noexcept {
  if (n == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) noexcept {
  std::uint64_t x = powmod_u64(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set decides primality for every n < 2^64 (Sinclair).
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (!miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

int legendre(std::int64_t a, std::uint64_t q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q))
    raise(ErrorCode::invalid_argument, "legendre symbol needs an odd prime modulus, got " + std::to_string(q));
  std::int64_t qm = static_cast<std::int64_t>(q);
  std::int64_t r = a % qm;
  if (r < 0) r += qm;
  if (r == 0) return 0;
  std::uint64_t e = powmod_u64(static_cast<std::uint64_t>(r), (q - 1) / 2, q);
  return e == 1 ? 1 : -1;
}

std::uint64_t sqrt_minus_one(std::uint64_t q) {
  if (!is_prime(q) || q % 4 != 1)
    raise(ErrorCode::unsupported_modulus,
          "square root of -1 requires a prime q = 1 (mod 4), got " + std::to_string(q));
  // x = n^((q-1)/4) for any quadratic non-residue n.
  for (std::uint64_t n = 2; n < q; ++n) {
    if (powmod_u64(n, (q - 1) / 2, q) == q - 1) {
      std::uint64_t x = powmod_u64(n, (q - 1) / 4, q);
      return std::min(x, q - x);
    }
  }
  raise(ErrorCode::internal_inconsistency, "no quadratic non-residue found mod " + std::to_string(q));
}

std::vector<QuaternionSolution> quaternion_solutions(std::uint64_t p) {
  if (!is_prime(p) || p % 4 != 1)
    raise(ErrorCode::unsupported_prime,
          "quaternion generators require a prime p = 1 (mod 4), got " + std::to_string(p));
  if (p > (1ULL << 20))
    raise(ErrorCode::size_limit, "quaternion enumeration capped at p <= 2^20");

  const std::int64_t sp = static_cast<std::int64_t>(p);
  std::vector<QuaternionSolution> out;
  out.reserve(p + 1);
  // p = 1 (mod 4) forces exactly one odd coordinate, normalized here to be a > 0.
  for (std::int64_t a = 1; a * a <= sp; a += 2) {
    std::int64_t ra = sp - a * a;
    std::int64_t bmax = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(ra)));
    for (std::int64_t b = -(bmax & ~1LL); b <= bmax; b += 2) {
      std::int64_t rb = ra - b * b;
      std::int64_t cmax = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(rb)));
      for (std::int64_t c = -(cmax & ~1LL); c <= cmax; c += 2) {
        std::int64_t rc = rb - c * c;
        std::int64_t d = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(rc)));
        if (d * d != rc || (d & 1)) continue;
        out.push_back({a, b, c, d});
        if (d != 0) out.push_back({a, b, c, -d});
      }
    }
  }
  std::sort(out.begin(), out.end());
  if (out.size() != p + 1)
    raise(ErrorCode::internal_inconsistency,
          "expected " + std::to_string(p + 1) + " quaternion solutions for p = " + std::to_string(p) +
              ", found " + std::to_string(out.size()));
  return out;
}

}  // namespace lgldpc
