#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <string>

namespace toricap {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Global comparison tolerance for inexact (binary64) quantities.
/// Overridable via set_tolerance / the TORICAP_TOLERANCE env var in the CLI.
double tolerance();
void set_tolerance(double tol);

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);  // "n" or "n/d", throws ParseError

/// True when r is the square of a rational; root receives that square root.
bool rational_sqrt(const Rat& r, Rat& root);

/// A nonnegative quantity that is either an exact rational or a binary64
/// approximation. Sums of exact values stay exact; anything touching an
/// inexact value degrades to binary64. Comparisons between inexact values
/// use the global tolerance for equality.
class Value {
 public:
  Value() : exact_(true), rat_(0), dbl_(0.0) {}

  static Value exact(Rat r) {
    Value v;
    v.exact_ = true;
    v.dbl_ = static_cast<double>(r);
    v.rat_ = std::move(r);
    return v;
  }
  static Value approx(double d) {
    Value v;
    v.exact_ = false;
    v.rat_ = 0;
    v.dbl_ = d;
    return v;
  }

  bool is_exact() const { return exact_; }
  const Rat& rat() const { return rat_; }
  double dbl() const { return dbl_; }

  Value operator+(const Value& o) const {
    if (exact_ && o.exact_) return exact(rat_ + o.rat_);
    return approx(dbl_ + o.dbl_);
  }
  Value operator-(const Value& o) const {
    if (exact_ && o.exact_) return exact(rat_ - o.rat_);
    return approx(dbl_ - o.dbl_);
  }
  Value operator*(const Value& o) const {
    if (exact_ && o.exact_) return exact(rat_ * o.rat_);
    return approx(dbl_ * o.dbl_);
  }
  Value operator/(const Value& o) const {
    if (exact_ && o.exact_) return exact(rat_ / o.rat_);
    return approx(dbl_ / o.dbl_);
  }
  Value& operator+=(const Value& o) { return *this = *this + o; }

  Value scaled(const Rat& mu) const {
    if (exact_) return exact(rat_ * mu);
    return approx(dbl_ * static_cast<double>(mu));
  }

  /// Equality: exact when both sides are exact, tolerance-based otherwise.
  bool eq(const Value& o) const {
    if (exact_ && o.exact_) return rat_ == o.rat_;
    double scale = std::max({1.0, std::fabs(dbl_), std::fabs(o.dbl_)});
    return std::fabs(dbl_ - o.dbl_) <= tolerance() * scale;
  }
  bool lt(const Value& o) const {
    if (exact_ && o.exact_) return rat_ < o.rat_;
    return !eq(o) && dbl_ < o.dbl_;
  }
  bool le(const Value& o) const { return !o.lt(*this); }

  /// "n/d" (or "n") for exact values, shortest round-trip decimal otherwise.
  std::string str() const;

 private:
  bool exact_;
  Rat rat_;
  double dbl_;
};

}  // namespace toricap
