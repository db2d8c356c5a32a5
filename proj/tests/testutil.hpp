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

#ifndef PCF_TESTS_TESTUTIL_HPP_
#define PCF_TESTS_TESTUTIL_HPP_

#include <random>
#include <vector>

#include "pcf/cfcore.hpp"
#include "pcf/exactnum.hpp"
#include "pcf/matrix2.hpp"

namespace pcf::testutil {

inline RingElem sqrt2() { return RingElem::quad(Rational(0), Rational(1), 2); }

inline RingElem q(long long a, long long b, std::int64_t d = 2) {
  return RingElem::quad(Rational(a), Rational(b), d);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long long int_in(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(g_);
  }

  Rational rational(int height) {
    return Rational(int_in(-height, height), int_in(1, height));
  }

  Rational nonzero_rational(int height) {
    Rational r = rational(height);
    while (r == 0) r = rational(height);
    return r;
  }

  RingElem elem(int height, std::int64_t d) {
    if (d == 0 || int_in(0, 2) == 0) return RingElem(rational(height));
    return RingElem::quad(rational(height), rational(height), d);
  }

  std::vector<RingElem> int_word(std::size_t min_len, std::size_t max_len,
                                 long long height) {
    std::size_t n = static_cast<std::size_t>(int_in(min_len, max_len));
    std::vector<RingElem> w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w.emplace_back(int_in(-height, height));
    return w;
  }

  std::mt19937_64& gen() { return g_; }

 private:
  std::mt19937_64 g_;
};

// Independent matrix product oracle: a plain left fold over 2x2 arrays,
// sharing nothing with mat_of_fcf.
inline Mat2 fold_product_oracle(const std::vector<RingElem>& word) {
  RingElem a(1), b(0), c(0), d(1);
  for (const RingElem& x : word) {
    // [[a,b],[c,d]] * [[x,1],[1,0]]
    RingElem na = a * x + b, nb = a;
    RingElem nc = c * x + d, nd = c;
    a = na; b = nb; c = nc; d = nd;
  }
  return Mat2{a, b, c, d};
}

}  // namespace pcf::testutil

#endif  // PCF_TESTS_TESTUTIL_HPP_
