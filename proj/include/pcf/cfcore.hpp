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

#ifndef PCF_CFCORE_HPP_
#define PCF_CFCORE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pcf/exactnum.hpp"

namespace pcf {

/// Finite continued fraction [c1, ..., cn]: a formal word of partial
/// quotients (length >= 1, no tower elements, one common field).
class Fcf {
 public:
  explicit Fcf(std::vector<RingElem> quotients);
  Fcf(std::initializer_list<long long> quotients);

  const std::vector<RingElem>& quotients() const { return q_; }
  std::size_t length() const { return q_.size(); }
  const RingElem& operator[](std::size_t i) const { return q_[i]; }

  bool operator==(const Fcf& other) const;
  bool is_reduced() const;  // no interior zeros

  std::string str() const;

 private:
  std::vector<RingElem> q_;
};

/// Word [c1,...,cn][c1',...,cm'] -> [c1,...,cn,c1',...,cm'].
Fcf concat(const Fcf& f, const Fcf& g);

/// One rewriting class: D(x)D(0)D(y) = D(x+y). Values are kept in normal
/// form (the unique reduced representative).
class FcfClass {
 public:
  explicit FcfClass(const Fcf& representative);

  static FcfClass identity();  // class of [0,0]

  const Fcf& reduced() const { return reduced_; }
  bool operator==(const FcfClass& other) const { return reduced_ == other.reduced_; }

  /// Word-length parity (invariant under rewriting).
  int parity() const { return static_cast<int>(reduced_.length() % 2); }
  /// (-1)^parity = det of the matrix image.
  int det_char() const { return parity() == 0 ? 1 : -1; }

 private:
  Fcf reduced_;
};

/// Repeatedly applies the rewriting relation (leftmost interior zero first)
/// until no interior zero remains; the fixed point is unique.
Fcf reduce_word(const Fcf& f);

FcfClass reduce(const Fcf& f);
FcfClass star(const FcfClass& f, const FcfClass& g);
FcfClass inverse(const FcfClass& f);  // class of [0,-cn,...,-c1,0]

/// Image in Z/2Z * O, as a canonically reduced alternating word. Letters are
/// either the order-2 generator j or a nonzero element of O.
class FreeWord {
 public:
  struct Letter {
    bool is_j = false;
    RingElem value;  // meaningful when !is_j (always nonzero)
  };

  FreeWord() = default;

  void push_j();
  void push_elem(const RingElem& x);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  bool operator==(const FreeWord& other) const;

  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

/// D(c1)...D(cn) -> c1 j c2 j ... cn j, reduced in the free product.
/// Two words are equivalent iff their images are equal.
FreeWord to_free_word(const Fcf& f);

/// Convergents (p_k, q_k), k = 1..n, from the identity-initialized matrix
/// recurrence; the value of f is p_n/q_n in P^1.
std::vector<std::pair<RingElem, RingElem>> convergents(const Fcf& f);

}  // namespace pcf

#endif  // PCF_CFCORE_HPP_
