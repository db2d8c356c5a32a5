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

#ifndef PCF_MATRIX2_HPP_
#define PCF_MATRIX2_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pcf/cfcore.hpp"
#include "pcf/exactnum.hpp"

namespace pcf {

struct Mat2 {
  RingElem m11, m12, m21, m22;

  static Mat2 ident() { return {RingElem(1), RingElem(0), RingElem(0), RingElem(1)}; }
  /// D(x) = [[x,1],[1,0]], the partial-quotient building block.
  static Mat2 d(const RingElem& x) {
    return {x, RingElem(1), RingElem(1), RingElem(0)};
  }

  RingElem det() const { return m11 * m22 - m12 * m21; }
  RingElem trace() const { return m11 + m22; }
  bool operator==(const Mat2& o) const {
    return m11 == o.m11 && m12 == o.m12 && m21 == o.m21 && m22 == o.m22;
  }
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-() const { return {-m11, -m12, -m21, -m22}; }
  Mat2 scaled(const RingElem& c) const { return {c * m11, c * m12, c * m21, c * m22}; }
  Mat2 inverse() const;  // requires det != 0
  Mat2 pow(unsigned n) const;

  bool is_identity() const { return *this == ident(); }
  std::string str() const;
};

/// A*X^2 + B*X + C; the zero polynomial is allowed (Roots = P^1).
struct QuadPoly {
  RingElem A, B, C;

  bool is_zero() const { return A.is_zero() && B.is_zero() && C.is_zero(); }
  int degree() const;  // -1 for the zero polynomial
  bool operator==(const QuadPoly& o) const { return A == o.A && B == o.B && C == o.C; }
  QuadPoly scaled(const RingElem& c) const { return {c * A, c * B, c * C}; }
  std::string str() const;
};

/// Point of P^1 in canonical coordinates: (v, 1) for finite v, (1, 0) for
/// the point at infinity.
class ProjPoint {
 public:
  ProjPoint() : p_(1), q_(0) {}  // infinity
  ProjPoint(const RingElem& p, const RingElem& q);
  static ProjPoint infinity() { return ProjPoint(); }
  static ProjPoint of(const RingElem& v) { return ProjPoint(v, RingElem(1)); }

  bool is_infinity() const { return q_.is_zero(); }
  const RingElem& value() const;  // requires finite
  const RingElem& p() const { return p_; }
  const RingElem& q() const { return q_; }

  bool operator==(const ProjPoint& o) const;
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string str() const;

 private:
  RingElem p_, q_;
};

struct RootPair {
  enum class Kind { two_roots, double_root, zero_poly };
  Kind kind = Kind::zero_poly;
  std::vector<ProjPoint> roots;  // 2 (deterministic order), 1, or 0 entries
};

/// M([c1,...,cn]) = D(c1)...D(cn); constant on rewriting classes,
/// det = (-1)^length.
Mat2 mat_of_fcf(const Fcf& f);
Mat2 mat_of_fcf(const FcfClass& f);

/// Linear fractional action of m on P^1; requires det(m) != 0.
ProjPoint mobius(const Mat2& m, const ProjPoint& beta);

/// Quad(M) = m21*X^2 + (m22 - m11)*X - m12; its roots are the fixed points.
QuadPoly quad(const Mat2& m);

/// Exact roots with the P^1 conventions: deg 1 adds infinity as a simple
/// root, deg 0 (nonzero) has a double root at infinity. Non-square
/// discriminants extend into a quadratic or tower element.
RootPair roots(const QuadPoly& q);

/// Eigenvalue of m at a fixed point beta (checked): m21*beta + m22,
/// with lambda(inf) = m11.
RingElem eigen_at(const Mat2& m, const ProjPoint& beta);

struct LinearRelation {
  RingElem kappa, lambda, mu;  // kappa*B = lambda*A + mu*I
};

/// Finds (kappa, lambda) != (0,0) with kappa*Quad(B) = lambda*Quad(A) and the
/// mu completing kappa*B = lambda*A + mu*I; nullopt when the Quads are
/// linearly independent. kappa is normalized to 1 when possible.
std::optional<LinearRelation> quad_linear_relation(const Mat2& a, const Mat2& b);

bool is_scalar(const Mat2& m);
/// m in T(beta): m fixes beta.
bool stabilizer_membership(const Mat2& m, const ProjPoint& beta);
/// m in G(Q): Quad(m) = lambda*Q for some lambda (lambda = 0 iff m scalar).
bool group_of_quad_membership(const Mat2& m, const QuadPoly& q);

struct PowerLimit {
  enum class Kind { converges, divergent, ambiguous };
  Kind kind = Kind::divergent;
  ProjPoint limit;         // meaningful when converges
  bool magnitude_tie = false;  // equal-magnitude eigenvalue case
};

/// lim_{n->inf} m^n beta per the four-case classification: double root,
/// scalar, eigenvalue-magnitude gap, equal distinct magnitudes. All case
/// decisions are exact; `ambiguous` is only possible for towers over an
/// imaginary quadratic base.
PowerLimit power_limit(const Mat2& m, const ProjPoint& beta);

/// Exactly one of: +1 (|first eigenvalue| greater), -1 (smaller), 0 (equal
/// magnitudes). Roots must be the two distinct fixed points of m.
int eigen_magnitude_cmp(const Mat2& m, const ProjPoint& beta1, const ProjPoint& beta2);

/// True iff the two eigenvalues of m have equal magnitude, decided exactly
/// via rho = (tr^2 - 2 det)/det: equal iff rho is real and -2 <= rho <= 2.
/// Excludes the double-root case (rho = 2) by assumption.
bool equal_eigen_magnitudes(const Mat2& m);

}  // namespace pcf

#endif  // PCF_MATRIX2_HPP_
