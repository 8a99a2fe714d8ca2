#ifndef HGMAN_RATIONAL_HPP
#define HGMAN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "hgman/errors.hpp"

namespace hgman {

using Integer = mpz_class;

/// Exact rational scalar. Invariants: always in lowest terms, denominator
/// strictly positive. All arithmetic is exact; there is no rounding anywhere
/// in this library.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw ShapeError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ShapeError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "p", "-p", "p/q" or "-p/q" (q may carry a sign; result is
  /// canonicalized). Throws ParseError on anything else.
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ShapeError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) {  return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational Rational::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!digits_ok(num_part))
    throw ParseError("bad rational literal: \"" + std::string(text) + "\"");
  Integer num(std::string(num_part), 10);
  if (slash == std::string_view::npos) return Rational(num);
  std::string_view den_part = text.substr(slash + 1);
  if (!digits_ok(den_part))
    throw ParseError("bad rational literal: \"" + std::string(text) + "\"");
  Integer den(std::string(den_part), 10);
  if (den == 0)
    throw ParseError("zero denominator in rational literal: \"" + std::string(text) + "\"");
  return Rational(num, den);
}

}  // namespace hgman

#endif
