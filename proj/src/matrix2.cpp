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

#include "pcf/matrix2.hpp"

#include <utility>

#include "pcf/interval.hpp"

namespace pcf {

Mat2 Mat2::operator*(const Mat2& o) const {
  return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
          m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
}

Mat2 Mat2::inverse() const {
  RingElem dt = det();
  if (dt.is_zero()) throw DomainError("singular matrix");
  RingElem di = dt.inverse();
  return {m22 * di, -m12 * di, -m21 * di, m11 * di};
}

Mat2 Mat2::pow(unsigned n) const {
  Mat2 r = ident();
  Mat2 b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

std::string Mat2::str() const {
  return "[[" + m11.str() + "," + m12.str() + "],[" + m21.str() + "," +
         m22.str() + "]]";
}

int QuadPoly::degree() const {
  if (!A.is_zero()) return 2;
  if (!B.is_zero()) return 1;
  if (!C.is_zero()) return 0;
  return -1;
}

std::string QuadPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  auto term = [&s](const RingElem& c, const std::string& x) {
    if (c.is_zero()) return;
    std::string cs = c.str();
    if (!s.empty() && cs[0] != '-') s += "+";
    if (x.empty()) {
      s += cs;
    } else if (c.is_one()) {
      s += x;
    } else if ((-c).is_one()) {
      s += "-" + x;
    } else {
      bool composite = cs.find('+') != std::string::npos ||
                       cs.find('-', 1) != std::string::npos;
      s += (composite ? "(" + cs + ")" : cs) + "*" + x;
    }
  };
  term(A, "X^2");
  term(B, "X");
  term(C, "");
  return s;
}

ProjPoint::ProjPoint(const RingElem& p, const RingElem& q) {
  if (p.is_zero() && q.is_zero())
    throw DomainError("projective point needs a nonzero coordinate");
  if (q.is_zero()) {
    p_ = RingElem(1);
    q_ = RingElem(0);
  } else {
    p_ = p / q;
    q_ = RingElem(1);
  }
}

const RingElem& ProjPoint::value() const {
  if (is_infinity()) throw DomainError("value of the point at infinity");
  return p_;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
  return p_ == o.p_;
}

std::string ProjPoint::str() const { return is_infinity() ? "inf" : p_.str(); }

Mat2 mat_of_fcf(const Fcf& f) {
  Mat2 m = Mat2::ident();
  for (const RingElem& c : f.quotients()) m = m * Mat2::d(c);
  return m;
}

Mat2 mat_of_fcf(const FcfClass& f) { return mat_of_fcf(f.reduced()); }

ProjPoint mobius(const Mat2& m, const ProjPoint& beta) {
  if (m.det().is_zero()) throw DomainError("singular matrix");
  return ProjPoint(m.m11 * beta.p() + m.m12 * beta.q(),
                   m.m21 * beta.p() + m.m22 * beta.q());
}

QuadPoly quad(const Mat2& m) { return {m.m21, m.m22 - m.m11, -m.m12}; }

RootPair roots(const QuadPoly& q) {
  RootPair out;
  switch (q.degree()) {
    case -1:
      out.kind = RootPair::Kind::zero_poly;
      return out;
    case 0:
      out.kind = RootPair::Kind::double_root;
      out.roots.push_back(ProjPoint::infinity());
      return out;
    case 1:
      out.kind = RootPair::Kind::two_roots;
      out.roots.push_back(ProjPoint::of(-q.C / q.B));
      out.roots.push_back(ProjPoint::infinity());
      return out;
    default:
      break;
  }
  RingElem disc = q.B * q.B - RingElem(4) * q.A * q.C;
  RingElem twoA = RingElem(2) * q.A;
  if (disc.is_zero()) {
    out.kind = RootPair::Kind::double_root;
    out.roots.push_back(ProjPoint::of(-q.B / twoA));
    return out;
  }
  RingElem s = RingElem::sqrt_of(disc);
  out.kind = RootPair::Kind::two_roots;
  out.roots.push_back(ProjPoint::of((-q.B + s) / twoA));
  out.roots.push_back(ProjPoint::of((-q.B - s) / twoA));
  return out;
}

RingElem eigen_at(const Mat2& m, const ProjPoint& beta) {
  if (quad(m).is_zero()) {
    return beta.is_infinity() ? m.m11 : m.m22;  // scalar matrix
  }
  if (!(mobius(m, beta) == beta))
    throw DomainError("beta is not a fixed point of the matrix");
  if (beta.is_infinity()) return m.m11;
  return m.m21 * beta.value() + m.m22;
}

std::optional<LinearRelation> quad_linear_relation(const Mat2& a, const Mat2& b) {
  QuadPoly qa = quad(a), qb = quad(b);
  RingElem kappa, lambda;
  if (qa.is_zero() && qb.is_zero()) {
    kappa = RingElem(1);
    lambda = RingElem(1);
  } else if (qa.is_zero()) {
    kappa = RingElem(0);
    lambda = RingElem(1);
  } else {
    const RingElem* ca[3] = {&qa.A, &qa.B, &qa.C};
    const RingElem* cb[3] = {&qb.A, &qb.B, &qb.C};
    int i = 0;
    while (ca[i]->is_zero()) ++i;
    RingElem ratio = *cb[i] / *ca[i];  // qb = ratio*qa if dependent
    for (int j = 0; j < 3; ++j) {
      if (!(*cb[j] == ratio * *ca[j])) return std::nullopt;
    }
    kappa = RingElem(1);
    lambda = ratio;
  }
  Mat2 diff{kappa * b.m11 - lambda * a.m11, kappa * b.m12 - lambda * a.m12,
            kappa * b.m21 - lambda * a.m21, kappa * b.m22 - lambda * a.m22};
  RingElem mu = diff.m11;
  if (!(diff.m12.is_zero() && diff.m21.is_zero() && diff.m22 == mu))
    throw Error("internal: Quad proportionality without a matrix relation");
  return LinearRelation{kappa, lambda, mu};
}

bool is_scalar(const Mat2& m) {
  return m.m12.is_zero() && m.m21.is_zero() && m.m11 == m.m22;
}

bool stabilizer_membership(const Mat2& m, const ProjPoint& beta) {
  return mobius(m, beta) == beta;
}

bool group_of_quad_membership(const Mat2& m, const QuadPoly& q) {
  QuadPoly qm = quad(m);
  if (qm.is_zero()) return true;  // lambda = 0
  if (q.is_zero()) return false;
  const RingElem* cq[3] = {&q.A, &q.B, &q.C};
  const RingElem* cm[3] = {&qm.A, &qm.B, &qm.C};
  int i = 0;
  while (cq[i]->is_zero()) ++i;
  RingElem lambda = *cm[i] / *cq[i];
  for (int j = 0; j < 3; ++j)
    if (!(*cm[j] == lambda * *cq[j])) return false;
  return true;
}

bool equal_eigen_magnitudes(const Mat2& m) {
  RingElem dt = m.det();
  if (dt.is_zero()) throw DomainError("singular matrix");
  RingElem tr = m.trace();
  RingElem rho = (tr * tr - RingElem(2) * dt) / dt;
  if (!rho.is_real()) return false;
  return (rho + RingElem(2)).sign() >= 0 && (rho - RingElem(2)).sign() <= 0;
}

int eigen_magnitude_cmp(const Mat2& m, const ProjPoint& beta1,
                        const ProjPoint& beta2) {
  if (equal_eigen_magnitudes(m)) return 0;
  RingElem l1 = eigen_at(m, beta1);
  RingElem l2 = eigen_at(m, beta2);
  bool exact1 = !(l1.is_tower() && l1.base_d() < 0);
  bool exact2 = !(l2.is_tower() && l2.base_d() < 0);
  if (exact1 && exact2) {
    RingElem diff = l1.abs_square() - l2.abs_square();
    return diff.sign();
  }
  // Towers over an imaginary base: the gap is certain (rho test above), so
  // enclosure refinement terminates.
  for (int w = 64; w <= (1 << 20); w *= 2) {
    Interval n1 = complex_eval(l1, w).norm2();
    Interval n2 = complex_eval(l2, w).norm2();
    if (n1.lo() > n2.hi()) return 1;
    if (n2.lo() > n1.hi()) return -1;
  }
  throw DomainError("eigenvalue magnitude comparison is numerically ambiguous");
}

PowerLimit power_limit(const Mat2& m, const ProjPoint& beta) {
  if (m.det().is_zero()) throw DomainError("singular matrix");
  PowerLimit out;
  QuadPoly qp = quad(m);
  if (qp.is_zero()) {  // scalar: every point is fixed
    out.kind = PowerLimit::Kind::converges;
    out.limit = beta;
    return out;
  }
  RootPair rp;
  try {
    rp = roots(qp);
  } catch (const DomainError&) {
    out.kind = PowerLimit::Kind::ambiguous;
    return out;
  }
  if (rp.kind == RootPair::Kind::double_root) {
    out.kind = PowerLimit::Kind::converges;
    out.limit = rp.roots[0];
    return out;
  }
  const ProjPoint& r1 = rp.roots[0];
  const ProjPoint& r2 = rp.roots[1];
  if (equal_eigen_magnitudes(m)) {
    out.magnitude_tie = true;
    if (beta == r1 || beta == r2) {
      out.kind = PowerLimit::Kind::converges;
      out.limit = beta;
    } else {
      out.kind = PowerLimit::Kind::divergent;
    }
    return out;
  }
  int cmp;
  try {
    cmp = eigen_magnitude_cmp(m, r1, r2);
  } catch (const DomainError&) {
    out.kind = PowerLimit::Kind::ambiguous;
    return out;
  }
  const ProjPoint& plus = cmp > 0 ? r1 : r2;
  const ProjPoint& minus = cmp > 0 ? r2 : r1;
  out.kind = PowerLimit::Kind::converges;
  out.limit = (beta == minus) ? minus : plus;
  return out;
}

}  // namespace pcf
