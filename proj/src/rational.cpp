#include "lgldpc/rational.hpp"

#include <cstdlib>

#include "lgldpc/error.hpp"

namespace lgldpc {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* ctx) {
  if (v > INT64_MAX || v < INT64_MIN)
    raise(ErrorCode::size_limit, std::string("rational overflow in ") + ctx);
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm_u64_checked(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t g = gcd_u64(a, b);
  std::uint64_t q = a / g;
  if (q > UINT64_MAX / b) raise(ErrorCode::size_limit, "lcm overflow");
  return q * b;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) raise(ErrorCode::invalid_argument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::uint64_t g = gcd_u64(static_cast<std::uint64_t>(num < 0 ? -num : num),
                            static_cast<std::uint64_t>(den));
  if (g > 1) {
    num /= static_cast<std::int64_t>(g);
    den /= static_cast<std::int64_t>(g);
  }
  num_ = num;
  den_ = den;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) raise(ErrorCode::parse_error, "empty rational literal");
  bool neg = false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    i = 1;
  }
  i128 num = 0;
  i128 den = 1;
  bool seen_digit = false, seen_dot = false, seen_slash = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      if (num > i128(INT64_MAX) || den > i128(INT64_MAX))
        raise(ErrorCode::parse_error, "rational literal out of range: " + std::string(text));
    } else if (c == '.' && !seen_dot && !seen_slash) {
      seen_dot = true;
    } else if (c == '/' && !seen_slash && !seen_dot && seen_digit) {
      seen_slash = true;
      Rational d = Rational::parse(text.substr(i + 1));
      if (!d.is_integer() || d.num() <= 0)
        raise(ErrorCode::parse_error, "bad denominator in: " + std::string(text));
      den = d.num();
      break;
    } else {
      raise(ErrorCode::parse_error, "bad rational literal: " + std::string(text));
    }
  }
  if (!seen_digit) raise(ErrorCode::parse_error, "bad rational literal: " + std::string(text));
  std::int64_t n = narrow(neg ? -num : num, "parse");
  return Rational(n, narrow(den, "parse"));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
  i128 d = i128(den_) * o.den_;
  // reduce in 128-bit before narrowing
  i128 x = n < 0 ? -n : n, y = d;
  while (y != 0) {
    i128 t = x % y;
    x = y;
    y = t;
  }
  i128 g = x == 0 ? 1 : x;
  return Rational(narrow(n / g, "add"), narrow(d / g, "add"));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num_, o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  // cross-reduce first to keep intermediates small
  Rational a(num_, o.den_ == 0 ? 1 : o.den_);
  Rational b(o.num_, den_);
  i128 n = i128(a.num_) * b.num_;
  i128 d = i128(a.den_) * b.den_;
  return Rational(narrow(n, "mul"), narrow(d, "mul"));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) raise(ErrorCode::invalid_argument, "rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return i128(num_) * o.den_ < i128(o.num_) * den_;
}

}  // namespace lgldpc
