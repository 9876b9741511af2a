#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "ineq/error.hpp"

namespace ineq {

namespace detail {

using i128 = __int128;

inline std::int64_t narrow(i128 v) {
  if (v > i128(std::numeric_limits<std::int64_t>::max()) ||
      v < i128(std::numeric_limits<std::int64_t>::min()))
    fail(Err::overflow, "rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

// Exact rational with checked 64-bit numerator/denominator. Always reduced,
// denominator > 0. Arithmetic uses 128-bit intermediates and throws
// Err::overflow rather than wrapping.
class Rat {
public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  static Rat make(detail::i128 n, detail::i128 d) {
    if (d == 0) fail(Err::invalid_argument, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rat r;
    r.num_ = detail::narrow(n);
    r.den_ = detail::narrow(d);
    return r;
  }

  // "a/b", "a", optional leading '-'
  static Rat parse(const std::string& s);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    using detail::i128;
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    using detail::i128;
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    using detail::i128;
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) fail(Err::invalid_argument, "rational division by zero");
    using detail::i128;
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return detail::i128(a.num_) * b.den_ < detail::i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
  std::int64_t num_;
  std::int64_t den_;
};

inline Rat Rat::parse(const std::string& s) {
  auto bad = [&] { fail(Err::parse, "bad rational literal: \"" + s + "\""); };
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  auto parse_int = [&](const std::string& t) -> std::int64_t {
    if (t.empty() || (t.size() == 1 && (t[0] == '-' || t[0] == '+'))) bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    detail::i128 v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') bad();
      v = v * 10 + (t[i] - '0');
      if (v > detail::i128(std::numeric_limits<std::int64_t>::max())) bad();
    }
    std::int64_t r = static_cast<std::int64_t>(v);
    return t[0] == '-' ? -r : r;
  };
  if (slash == std::string::npos) return Rat(parse_int(s));
  return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace ineq
