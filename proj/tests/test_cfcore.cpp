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

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "pcf/cfcore.hpp"
#include "pcf/matrix2.hpp"
#include "testutil.hpp"

using namespace pcf;
using testutil::Rng;

namespace {

Fcf fcf(std::initializer_list<long long> xs) { return Fcf(xs); }

// All maximal rewrite sequences, for exhaustive confluence checking.
void all_reductions(const std::vector<RingElem>& w, std::set<std::string>& out) {
  bool any = false;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (!w[i].is_zero()) continue;
    any = true;
    std::vector<RingElem> next;
    next.reserve(w.size() - 2);
    next.insert(next.end(), w.begin(), w.begin() + i - 1);
    next.push_back(w[i - 1] + w[i + 1]);
    next.insert(next.end(), w.begin() + i + 2, w.end());
    all_reductions(next, out);
  }
  if (!any) out.insert(Fcf(w).str());
}

}  // namespace

TEST_CASE("reduce golden examples") {
  CHECK(reduce(fcf({0, -2, 0, 2, 0, 3, 0, 5})).reduced() == fcf({0, 8}));
  CHECK(reduce(fcf({5})).reduced() == fcf({5}));
  CHECK(reduce(fcf({1, 0, -1, 0})).reduced() == fcf({0, 0}));
  // [1,0,-1,0] is the identity class: its matrix image is I
  CHECK(mat_of_fcf(fcf({1, 0, -1, 0})).is_identity());
  CHECK(reduce(fcf({3, 0, -3, 4, 0, 1, 0, -5, 0, -4, 3, 0, -3, 0})).reduced() ==
        fcf({0, -4}));
}

TEST_CASE("star and inverse") {
  FcfClass a = reduce(fcf({1, 2}));
  CHECK(star(a, FcfClass::identity()) == a);
  CHECK(star(FcfClass::identity(), a) == a);
  CHECK(star(reduce(fcf({3})), reduce(fcf({0, 5}))).reduced() == fcf({8}));
  // |[x]| * |[0,-x,0]| = identity
  for (long long x : {-3LL, 1LL, 7LL}) {
    FcfClass xs = reduce(Fcf({RingElem(x)}));
    CHECK(star(xs, inverse(xs)) == FcfClass::identity());
    CHECK(inverse(xs).reduced() == Fcf({RingElem(0), RingElem(-x), RingElem(0)}));
  }
  CHECK(inverse(reduce(fcf({1, 2}))).reduced() == fcf({0, -2, -1, 0}));
  CHECK(inverse(FcfClass::identity()) == FcfClass::identity());
}

TEST_CASE("parity and det character") {
  CHECK(reduce(fcf({1, 2})).parity() == 0);
  CHECK(reduce(fcf({1, 2})).det_char() == 1);
  CHECK(reduce(fcf({5})).parity() == 1);
  CHECK(reduce(fcf({5})).det_char() == -1);
  CHECK(reduce(fcf({0, -2, 0, 2, 0, 3, 0, 5})).parity() == 0);
}

TEST_CASE("free word image") {
  // [x,0,y] -> (x+y) j
  FreeWord w = to_free_word(fcf({3, 0, 4}));
  REQUIRE(w.letters().size() == 2);
  CHECK(!w.letters()[0].is_j);
  CHECK(w.letters()[0].value == RingElem(7));
  CHECK(w.letters()[1].is_j);

  // [0,8] -> j 8 j
  FreeWord v = to_free_word(fcf({0, 8}));
  REQUIRE(v.letters().size() == 3);
  CHECK(v.letters()[0].is_j);
  CHECK(v.letters()[1].value == RingElem(8));
  CHECK(v.letters()[2].is_j);

  // [1,2] -> 1 j 2 j
  CHECK(to_free_word(fcf({1, 2})).letters().size() == 4);
  CHECK(to_free_word(fcf({0, 0})).empty());
}

TEST_CASE("convergents") {
  auto c1 = convergents(fcf({2}));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].first == RingElem(2));
  CHECK(c1[0].second == RingElem(1));

  auto c2 = convergents(fcf({1, 2}));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0] == std::make_pair(RingElem(1), RingElem(1)));
  CHECK(c2[1] == std::make_pair(RingElem(3), RingElem(2)));

  auto c3 = convergents(fcf({0, 8}));
  CHECK(c3[0] == std::make_pair(RingElem(0), RingElem(1)));
  CHECK(c3[1] == std::make_pair(RingElem(1), RingElem(8)));
}

TEST_CASE("exhaustive confluence up to length 6") {
  // Every maximal rewrite order reaches the same reduced word.
  std::vector<std::vector<RingElem>> words;
  std::function<void(std::vector<RingElem>&)> gen = [&](std::vector<RingElem>& w) {
    if (w.size() >= 3) words.push_back(w);
    if (w.size() == 6) return;
    for (long long v : {-1LL, 0LL, 1LL}) {
      w.emplace_back(v);
      gen(w);
      w.pop_back();
    }
  };
  std::vector<RingElem> w;
  gen(w);
  for (const auto& word : words) {
    std::set<std::string> reduced;
    all_reductions(word, reduced);
    CHECK(reduced.size() == 1);
    CHECK(*reduced.begin() == reduce_word(Fcf(word)).str());
  }
}

TEST_CASE("randomized confluence via free words") {
  Rng rng(0xc0ffee01);
  for (int rep = 0; rep < 10000; ++rep) {
    Fcf f(rng.int_word(1, 12, 4));
    Fcf r = reduce_word(f);
    CHECK(r.is_reduced());
    CHECK(to_free_word(f) == to_free_word(r));
    // parity invariance
    CHECK(f.length() % 2 == r.length() % 2);
  }
}

TEST_CASE("class equality iff equal free words") {
  Rng rng(0xc0ffee02);
  for (int rep = 0; rep < 4000; ++rep) {
    Fcf f(rng.int_word(1, 7, 2));
    Fcf g(rng.int_word(1, 7, 2));
    bool same_class = reduce(f) == reduce(g);
    bool same_word = to_free_word(f) == to_free_word(g);
    CHECK(same_class == same_word);
  }
}

TEST_CASE("group axioms on random classes") {
  Rng rng(0xc0ffee03);
  for (int rep = 0; rep < 4000; ++rep) {
    FcfClass a = reduce(Fcf(rng.int_word(1, 8, 5)));
    FcfClass b = reduce(Fcf(rng.int_word(1, 8, 5)));
    FcfClass c = reduce(Fcf(rng.int_word(1, 8, 5)));
    CHECK(star(star(a, b), c) == star(a, star(b, c)));
    CHECK(star(a, FcfClass::identity()) == a);
    CHECK(star(a, inverse(a)) == FcfClass::identity());
    CHECK(star(inverse(a), a) == FcfClass::identity());
  }
}

TEST_CASE("even-parity classes factor into U and L generators") {
  Rng rng(0xc0ffee04);
  for (int rep = 0; rep < 1000; ++rep) {
    std::vector<RingElem> w = rng.int_word(2, 8, 4);
    if (w.size() % 2 == 1) w.emplace_back(0);
    FcfClass cls = reduce(Fcf(w));
    REQUIRE(cls.parity() == 0);
    // Walk the free word: letters split into U(x) = x and L(y) = j y j.
    FcfClass rebuilt = FcfClass::identity();
    FreeWord fw = to_free_word(cls.reduced());
    const auto& letters = fw.letters();
    std::size_t i = 0;
    while (i < letters.size()) {
      if (!letters[i].is_j) {
        // U(x) = [x, 0]
        rebuilt = star(rebuilt, reduce(Fcf({letters[i].value, RingElem(0)})));
        ++i;
      } else {
        // j y j = L(y) = [0, y]; an even word cannot end in a bare j.
        REQUIRE(i + 2 < letters.size());
        REQUIRE(letters[i + 2].is_j);
        rebuilt = star(rebuilt, reduce(Fcf({RingElem(0), letters[i + 1].value})));
        i += 3;
      }
    }
    CHECK(rebuilt == cls);
  }
}

TEST_CASE("words of length 1 and 2 are reduced") {
  CHECK(fcf({0}).is_reduced());
  CHECK(fcf({0, 0}).is_reduced());
  CHECK(reduce_word(fcf({0, 0})) == fcf({0, 0}));
  CHECK_THROWS_AS(Fcf(std::vector<RingElem>{}), DomainError);
}

TEST_CASE("tower partial quotients are rejected") {
  RingElem beta = RingElem::sqrt_of(RingElem(2) + testutil::sqrt2());
  CHECK_THROWS_AS(Fcf({beta}), DomainError);
}
