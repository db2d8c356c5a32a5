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

#ifndef PCF_TESTS_PAPER_EXAMPLES_HPP_
#define PCF_TESTS_PAPER_EXAMPLES_HPP_

#include "pcf/pcf.hpp"
#include "testutil.hpp"

namespace pcf::testutil {

// The five golden periodic continued fractions used across the suites.
inline Pcf p1() { return Pcf({1}, {2}); }
inline Pcf p2() { return Pcf({1}, {2, 2, 2}); }
inline Pcf p3() { return Pcf({2}, {-2, 4}); }
// The star-product class: p1 * p3 = |[1; 3,-2,3]|.
inline Pcf p4() { return Pcf({1}, {3, -2, 3}); }

inline Pcf p5() {
  return Pcf({q(442, 312)}, {q(-298532, 211094), q(884, 624)});
}

inline Mat2 e1_golden() {
  return Mat2{RingElem(1), RingElem(2), RingElem(1), RingElem(1)};
}
inline Mat2 e2_golden() {
  return Mat2{RingElem(7), RingElem(10), RingElem(5), RingElem(7)};
}
inline Mat2 e3_golden() {
  return Mat2{RingElem(-3), RingElem(-4), RingElem(-2), RingElem(-3)};
}
inline Mat2 e4_golden() {
  return Mat2{RingElem(-7), RingElem(-10), RingElem(-5), RingElem(-7)};
}
inline Mat2 e5_golden() {
  return Mat2{q(-228487, 161564), q(-174876, 123656), q(-298532, 211094),
              q(-228487, 161564)};
}

// beta = sqrt(2 + sqrt 2), the limit of P5.
inline RingElem beta5() { return RingElem::sqrt_of(RingElem(2) + sqrt2()); }

}  // namespace pcf::testutil

#endif  // PCF_TESTS_PAPER_EXAMPLES_HPP_
