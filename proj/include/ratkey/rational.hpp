#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "ratkey/bigint.hpp"

namespace ratkey {

/// Exact reduced fraction. Denominator is kept strictly positive, the
/// sign lives on the numerator, and gcd(|num|, den) == 1 always holds.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce();
  }
  explicit Rational(BigInt integer) : num_(std::move(integer)), den_(1) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Rational reciprocal() const {
    if (num_ == 0) throw std::domain_error("reciprocal of zero");
    return Rational(den_, num_);
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;  // both reduced
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const BigInt lhs = x.num_ * y.den_;
    const BigInt rhs = y.num_ * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return num_.str() + "/" + den_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  void reduce() {
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace ratkey
