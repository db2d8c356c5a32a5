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

#ifndef PCF_GROUPTHEORY_HPP_
#define PCF_GROUPTHEORY_HPP_

#include <vector>

#include "pcf/cfcore.hpp"
#include "pcf/matrix2.hpp"

namespace pcf {

/// A word together with its exact matrix image and the +-I verdict.
struct KernelCertificate {
  enum class Verdict { identity, negative_identity, nontrivial };

  Fcf word;
  Mat2 image;
  Verdict verdict;
};

KernelCertificate certify(const Fcf& word);

/// c(a) = |[a, -1/a, a]|, mapping to diag(a, -1/a). Requires a != 0.
FcfClass c_element(const RingElem& a);

/// Checks the three defining families of K(O) at (a, b, x): c(1)^2,
/// c(a) c(b) c(1/(ab)) c(1), and D(x) c(a) D(0) D(a^2 x) D(0) c(-a) all map
/// to the identity matrix.
bool verify_k_generators(const RingElem& a, const RingElem& b, const RingElem& x);

enum class SixTermVariant { inverse, four, three, alpha };

/// The six-term kernel words built from w = -x - z - xyz with xy = aw,
/// yz = bw:
///   inverse: [x, -1/x, x,  1/x, -x,  1/x]
///   four:    [x, -4/x, x, -2/x, 2x, -2/x]
///   three:   [x, -3/x, x, -3/x, x, -3/x]
///   alpha:   [x, alpha, -1/alpha, x*alpha^2, 1/alpha, -alpha]
/// Requires the needed inverses to exist (nonzero x, alpha).
KernelCertificate six_term_kernel(const RingElem& x, SixTermVariant variant,
                                  const RingElem& alpha = RingElem(1));

/// Exact verification of the amalgam generators alpha = |[1,-1]| and
/// beta = |[1,-1,1,0]| over Z: their matrix images, the relations
/// alpha^6 = alpha^3 beta^2 = beta^4 = 1 in the image, the normal-form
/// identities U(-1) = beta^-1 alpha and L(-1) = beta^-1 alpha^2, and the
/// conjugation identities behind K(Z) for sampled x.
struct AmalgamReport {
  bool alpha_matrix_ok = false;      // M(alpha) = [[0,1],[-1,1]]
  bool beta_matrix_ok = false;       // M(beta) = [[0,1],[-1,0]]
  bool alpha3_is_c1_cm1 = false;     // alpha^3 = c(1) c(-1) as classes
  bool beta2_is_c1_cm1_inv = false;  // beta^2 = c(1) c(-1)^-1 as classes
  bool alpha6_identity = false;      // M(alpha)^6 = I
  bool alpha3beta2_identity = false; // M(alpha)^3 M(beta)^2 = I
  bool beta4_identity = false;       // M(beta)^4 = I
  bool u_minus1_ok = false;          // beta^-1 alpha has normal form [-1,0]
  bool l_minus1_ok = false;          // beta^-1 alpha^2 has normal form [0,-1]
  bool k_identities_ok = false;      // c(1)^2 [x]^-1 [x-1,1,-1,x-1,1,-1] [x]
                                     //   = [x]^-1 [x,1,-1,x,1,-1] [x]
  bool all_ok() const {
    return alpha_matrix_ok && beta_matrix_ok && alpha3_is_c1_cm1 &&
           beta2_is_c1_cm1_inv && alpha6_identity && alpha3beta2_identity &&
           beta4_identity && u_minus1_ok && l_minus1_ok && k_identities_ok;
  }
};

AmalgamReport amalgam_relations();

}  // namespace pcf

#endif  // PCF_GROUPTHEORY_HPP_
