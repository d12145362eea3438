#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lgldpc {

// Exact rational on 64-bit numerator/denominator, always kept reduced with a
// positive denominator. Degree-distribution bookkeeping (irregular-build
// block sizes, design rates) must be exact integer arithmetic, so
// coefficients are carried as rationals and only converted to double at
// evaluation time. Intermediate products go through __int128; anything that
// would leave the 64-bit range throws.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose

  static Rational parse(std::string_view text);  // "3/4", "0.25", "1"

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;  // "num/den", or "num" when den == 1

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t lcm_u64_checked(std::uint64_t a, std::uint64_t b);  // throws on overflow

}  // namespace lgldpc
