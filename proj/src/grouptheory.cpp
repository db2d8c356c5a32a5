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

#include "pcf/grouptheory.hpp"

#include <utility>

namespace pcf {

KernelCertificate certify(const Fcf& word) {
  KernelCertificate cert{word, mat_of_fcf(word), KernelCertificate::Verdict::nontrivial};
  if (cert.image.is_identity()) {
    cert.verdict = KernelCertificate::Verdict::identity;
  } else if ((-cert.image).is_identity()) {
    cert.verdict = KernelCertificate::Verdict::negative_identity;
  }
  return cert;
}

FcfClass c_element(const RingElem& a) {
  if (a.is_zero()) throw DomainError("c(a) needs invertible a");
  return reduce(Fcf({a, -a.inverse(), a}));
}

bool verify_k_generators(const RingElem& a, const RingElem& b, const RingElem& x) {
  if (a.is_zero() || b.is_zero()) throw DomainError("units required");
  FcfClass c1 = c_element(RingElem(1));
  if (!mat_of_fcf(star(c1, c1)).is_identity()) return false;

  FcfClass w2 = star(star(c_element(a), c_element(b)),
                     star(c_element((a * b).inverse()), c1));
  if (!mat_of_fcf(w2).is_identity()) return false;

  // D(x) c(a) D(0) D(a^2 x) D(0) c(-a)
  FcfClass w3 = reduce(Fcf({x}));
  w3 = star(w3, c_element(a));
  w3 = star(w3, reduce(Fcf({RingElem(0)})));
  w3 = star(w3, reduce(Fcf({a * a * x})));
  w3 = star(w3, reduce(Fcf({RingElem(0)})));
  w3 = star(w3, c_element(-a));
  return mat_of_fcf(w3).is_identity();
}

KernelCertificate six_term_kernel(const RingElem& x, SixTermVariant variant,
                                  const RingElem& alpha) {
  if (x.is_zero()) throw DomainError("six-term words need invertible x");
  std::vector<RingElem> w;
  switch (variant) {
    case SixTermVariant::inverse: {
      RingElem xi = x.inverse();
      w = {x, -xi, x, xi, -x, xi};
      break;
    }
    case SixTermVariant::four: {
      RingElem xi = x.inverse();
      w = {x, RingElem(-4) * xi, x, RingElem(-2) * xi, RingElem(2) * x,
           RingElem(-2) * xi};
      break;
    }
    case SixTermVariant::three: {
      RingElem t = RingElem(-3) * x.inverse();
      w = {x, t, x, t, x, t};
      break;
    }
    case SixTermVariant::alpha: {
      if (alpha.is_zero()) throw DomainError("six-term words need invertible alpha");
      RingElem ai = alpha.inverse();
      w = {x, alpha, -ai, x * alpha * alpha, ai, -alpha};
      break;
    }
  }
  return certify(Fcf(std::move(w)));
}

namespace {

FcfClass cls(std::initializer_list<long long> xs) { return reduce(Fcf(xs)); }

FcfClass pow_cls(const FcfClass& a, unsigned n) {
  FcfClass r = FcfClass::identity();
  for (unsigned i = 0; i < n; ++i) r = star(r, a);
  return r;
}

}  // namespace

AmalgamReport amalgam_relations() {
  AmalgamReport rep;
  FcfClass alpha = cls({1, -1});
  FcfClass beta = cls({1, -1, 1, 0});
  Mat2 ma = mat_of_fcf(alpha);
  Mat2 mb = mat_of_fcf(beta);
  rep.alpha_matrix_ok =
      ma == Mat2{RingElem(0), RingElem(1), RingElem(-1), RingElem(1)};
  rep.beta_matrix_ok =
      mb == Mat2{RingElem(0), RingElem(1), RingElem(-1), RingElem(0)};

  FcfClass c1 = c_element(RingElem(1));
  FcfClass cm1 = c_element(RingElem(-1));
  rep.alpha3_is_c1_cm1 = pow_cls(alpha, 3) == star(c1, cm1);
  rep.beta2_is_c1_cm1_inv = pow_cls(beta, 2) == star(c1, inverse(cm1));

  rep.alpha6_identity = ma.pow(6).is_identity();
  rep.alpha3beta2_identity = (ma.pow(3) * mb.pow(2)).is_identity();
  rep.beta4_identity = mb.pow(4).is_identity();

  // M(alpha^3) = M(c(1) c(-1)) = diag(1,-1) diag(-1,1) = -I
  rep.alpha3_is_c1_cm1 =
      rep.alpha3_is_c1_cm1 && (-mat_of_fcf(pow_cls(alpha, 3))).is_identity();

  rep.u_minus1_ok = star(inverse(beta), alpha) == cls({-1, 0});
  rep.l_minus1_ok = star(inverse(beta), pow_cls(alpha, 2)) == cls({0, -1});

  rep.k_identities_ok = true;
  for (long long xi = -4; xi <= 4; ++xi) {
    RingElem x(xi);
    FcfClass xcls = reduce(Fcf({x}));
    FcfClass lhs = star(star(c1, c1), inverse(xcls));
    lhs = star(lhs, reduce(Fcf({x - RingElem(1), RingElem(1), RingElem(-1),
                                x - RingElem(1), RingElem(1), RingElem(-1)})));
    lhs = star(lhs, xcls);
    FcfClass rhs = star(inverse(xcls),
                        reduce(Fcf({x, RingElem(1), RingElem(-1), x,
                                    RingElem(1), RingElem(-1)})));
    rhs = star(rhs, xcls);
    if (!(lhs == rhs)) rep.k_identities_ok = false;
  }
  return rep;
}

}  // namespace pcf
