// Copyright 2026 The pcflib authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCF_INTERVAL_HPP_
#define PCF_INTERVAL_HPP_

#include <string>

#include "pcf/exactnum.hpp"

namespace pcf {

/// Closed interval [lo, hi] * 2^-prec with integer endpoints. All operations
/// round outward, so an Interval computed from enclosures of exact values
/// always contains the exact result.
class Interval {
 public:
  Interval() : lo_(0), hi_(0), prec_(0) {}
  Interval(Int lo, Int hi, int prec);

  static Interval point(const Int& n, int prec);
  static Interval of_rational(const Rational& r, int prec);

  const Int& lo_raw() const { return lo_; }
  const Int& hi_raw() const { return hi_; }
  int prec() const { return prec_; }
  Rational lo() const;
  Rational hi() const;
  Rational width() const;
  Rational midpoint() const;

  bool is_point() const { return lo_ == hi_; }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
  bool contains(const Rational& v) const;
  /// +1 / -1 when the whole interval is strictly positive / negative, else 0.
  int known_sign() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  /// sqrt over [max(lo,0), hi]; requires hi >= 0.
  Interval sqrt() const;

  Interval hull(const Interval& b) const;
  /// Rounds outward onto a coarser grid (no-op if p >= prec).
  Interval rounded(int p) const;

 private:
  Int lo_, hi_;
  int prec_;
};

struct ComplexInterval {
  Interval re, im;

  bool is_real_point_zero_im() const { return im.is_point() && im.lo_raw() == 0; }
  Interval norm2() const { return re * re + im * im; }
  Rational width() const;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

  ComplexInterval operator-() const { return {-re, -im}; }
  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
};

/// Principal square root. Exact-realness must be decided by the caller via
/// the `known_real` flag (with `real_sign` the exact sign); otherwise im must
/// not straddle zero, or a crude (still rigorous) hull is returned.
ComplexInterval csqrt(const ComplexInterval& z, bool known_real, int real_sign);

/// Rigorous enclosure of the embedded value of x. The result's width is
/// O(2^-precision_bits); dyadic rationals come back as exact points.
ComplexInterval complex_eval(const RingElem& x, int precision_bits);

/// Decimal rendering with `sig_digits` significant digits (the last digit may
/// be off by one ulp). Real values print as plain decimals, complex ones as
/// "a+bi". Exact forms should accompany this approximation in any output.
std::string decimal_string(const RingElem& x, int sig_digits);

}  // namespace pcf

#endif  // PCF_INTERVAL_HPP_
