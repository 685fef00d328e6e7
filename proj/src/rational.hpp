#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace nswopt {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational number. Thin wrapper over cpp_rational that adds the "p/q"
// text format used by the JSON schema and a log helper for the solvers'
// log-domain arithmetic. Always kept in canonical reduced form (the backend
// normalizes on every operation).
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : v_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) : v_(BigInt(num), BigInt(den)) {
    if (den == 0) throw InputError("rational with zero denominator");
  }
  explicit Rational(BigRat value) : v_(std::move(value)) {}

  // Accepts "p", "p/q", optional leading '-'.
  static Rational parse(const std::string& text);

  const BigRat& raw() const { return v_; }
  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_negative() const { return v_ < 0; }
  int sign() const { return v_.sign(); }

  std::string str() const;       // "p" or "p/q"
  double to_double() const { return v_.convert_to<double>(); }

  // Natural log; requires a strictly positive value. Exact arguments, double
  // result: ln(num) - ln(den) with scaling so huge integers stay finite.
  double ln() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
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
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  BigRat v_ = 0;
};

// ln of a positive BigInt, finite even far beyond double range.
double ln_big(const BigInt& x);

}  // namespace nswopt
