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

#ifndef PCF_EXACTNUM_HPP_
#define PCF_EXACTNUM_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace pcf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic that is undefined in the supported rings: division by zero,
/// exact sign of a complex-embedded value, sqrt leaving the tower, ...
struct DomainError : Error {
  using Error::Error;
};

/// Two operands live in quadratic extensions that cannot be reconciled.
struct TowerMismatchError : DomainError {
  using DomainError::DomainError;
};

struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

enum class Cmp { less, equal, greater };

/// a + b*sqrt(d) with rational a, b and squarefree integer d.
/// d == 0 encodes a plain rational (then b == 0). sqrt(d) denotes the
/// positive real root for d > 0 and i*sqrt(|d|) for d < 0.
struct QuadElem {
  Rational a;
  Rational b;
  std::int64_t d = 0;
};

/// c0 + c1*sqrt(delta), one quadratic level above the base field shared by
/// c0, c1 and delta. Canonical values satisfy c1 != 0 and delta not of the
/// form (square in base) or (rational square)*(square in base); RingElem's
/// factory collapses those. sqrt(delta) is the positive real root when the
/// embedded delta is positive, i*sqrt(|delta|) when it is negative, and the
/// principal branch otherwise.
struct TowerElem {
  QuadElem c0;
  QuadElem c1;
  QuadElem delta;
};

struct detail_access;

/// Exact element of Q, Q(sqrt d), or one quadratic tower level above.
/// Immutable after construction; arithmetic is exact field arithmetic and
/// throws TowerMismatchError when operands cannot live in one tower.
class RingElem {
 public:
  RingElem() : v_(QuadElem{}) {}
  RingElem(long long n) : v_(QuadElem{Rational(n), Rational(0), 0}) {}
  RingElem(int n) : RingElem(static_cast<long long>(n)) {}
  RingElem(Rational r) : v_(QuadElem{std::move(r), Rational(0), 0}) {}
  RingElem(Int n) : v_(QuadElem{Rational(std::move(n)), Rational(0), 0}) {}

  /// a + b*sqrt(d); validates that d is squarefree, nonzero and != 1.
  static RingElem quad(Rational a, Rational b, std::int64_t d);

  /// c0 + c1*sqrt(delta); collapses square radicands and rational-square
  /// multiples so equal values get one canonical representation.
  static RingElem tower(const RingElem& c0, const RingElem& c1,
                        const RingElem& delta);

  /// Exact square root, extending to a quadratic or tower element as needed.
  /// Follows the sign conventions documented on QuadElem/TowerElem.
  static RingElem sqrt_of(const RingElem& x);

  bool is_rational() const;
  bool is_quad() const;
  bool is_tower() const;
  bool is_base() const { return !is_tower(); }

  const Rational& rat() const;       // requires is_rational()
  const QuadElem& base() const;      // requires is_base()
  const TowerElem& tower_ref() const;  // requires is_tower()

  /// Radicand of the base field (0 for Q). For towers this is the d shared
  /// by c0, c1 and delta.
  std::int64_t base_d() const;

  bool is_zero() const;
  bool is_one() const;

  /// True when the embedded value is a real number.
  bool is_real() const;

  RingElem operator-() const;
  RingElem inverse() const;  // throws DomainError on zero

  friend RingElem operator+(const RingElem& x, const RingElem& y);
  friend RingElem operator-(const RingElem& x, const RingElem& y);
  friend RingElem operator*(const RingElem& x, const RingElem& y);
  friend RingElem operator/(const RingElem& x, const RingElem& y);
  RingElem& operator+=(const RingElem& y) { return *this = *this + y; }
  RingElem& operator-=(const RingElem& y) { return *this = *this - y; }
  RingElem& operator*=(const RingElem& y) { return *this = *this * y; }
  RingElem& operator/=(const RingElem& y) { return *this = *this / y; }

  /// Semantic equality of the embedded values (exact).
  bool operator==(const RingElem& y) const;
  bool operator!=(const RingElem& y) const { return !(*this == y); }

  /// Exact sign under the fixed real embedding; throws DomainError when the
  /// value is not real.
  int sign() const;

  /// Exact comparison of |x| against 1. Real values go through sign();
  /// complex quadratic values and towers with negative radicand over a real
  /// base compare the rational/base norm |x|^2 against 1. Towers over an
  /// imaginary quadratic base are unsupported.
  Cmp abs_cmp_one() const;

  /// |x|^2 as an element of the maximal real-embeddable subfield, when that
  /// is expressible (see abs_cmp_one). Throws otherwise.
  RingElem abs_square() const;

  /// Canonical textual form, e.g. "-7/5", "1+sqrt(2)", "1/2-3/4*sqrt(-1)",
  /// "sqrt(2+sqrt(2))". parse_elem() reads this back.
  std::string str() const;

 private:
  explicit RingElem(QuadElem q) : v_(std::move(q)) {}
  explicit RingElem(TowerElem t) : v_(std::move(t)) {}
  friend struct detail_access;

  std::variant<QuadElem, TowerElem> v_;
};

inline RingElem operator+(const RingElem& x, long long n) { return x + RingElem(n); }
inline RingElem operator-(const RingElem& x, long long n) { return x - RingElem(n); }

// Internal factories (canonicalizing); prefer RingElem::quad / RingElem::tower.
RingElem make_base_elem(Rational a, Rational b, std::int64_t d);
RingElem make_tower_elem(const QuadElem& c0, const QuadElem& c1,
                         const QuadElem& delta);

/// True when x is integral over Z in its ring: an integer, or a+b*sqrt(d)
/// with a, b integers, or both half-integers when d = 1 mod 4. Towers check
/// their coordinates recursively.
bool is_ring_integer(const RingElem& x);

/// Deterministic total order on representations (not a numeric order); used
/// only for tie-breaking and stable output.
int compare_repr(const RingElem& x, const RingElem& y);

/// n = s^2*f with f squarefree (sign kept on f); n != 0. Complete for
/// |n| <= 10^10; larger inputs may keep a square of a prime > 10^5 in f.
void split_square(const Int& n, Int& s, Int& f);

}  // namespace pcf

#endif  // PCF_EXACTNUM_HPP_
