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

#ifndef PCF_PCF_HPP_
#define PCF_PCF_HPP_

#include <string>
#include <variant>
#include <vector>

#include "pcf/cfcore.hpp"
#include "pcf/exactnum.hpp"
#include "pcf/matrix2.hpp"

namespace pcf {

/// Periodic continued fraction [b1,...,bN; a1,...,ak] of explicit type
/// (N, k): N initial quotients, k repeating ones (k >= 1). The type is part
/// of the data, never inferred.
class Pcf {
 public:
  Pcf(std::vector<RingElem> initial, std::vector<RingElem> repeating);
  Pcf(std::initializer_list<long long> initial,
      std::initializer_list<long long> repeating);

  const std::vector<RingElem>& initial() const { return initial_; }
  const std::vector<RingElem>& repeating() const { return repeating_; }
  std::size_t n() const { return initial_.size(); }
  std::size_t k() const { return repeating_.size(); }

  /// Quotient c_i of the underlying infinite continued fraction, i >= 1.
  const RingElem& quotient(std::size_t i) const;

  /// Same sequence of partial quotients (ignores the types).
  bool cf_equal(const Pcf& other) const;
  /// Same sequence and the same period k.
  bool k_equal(const Pcf& other) const { return k() == other.k() && cf_equal(other); }
  /// Same sequence and the same type (N, k).
  bool operator==(const Pcf& other) const {
    return n() == other.n() && k() == other.k() && cf_equal(other);
  }

  /// Galois dual [b1,...,bN,0; -ak,...,-a1]; represents the class inverse.
  Pcf galois_dual() const;

  std::string str() const;

 private:
  std::vector<RingElem> initial_, repeating_;
};

/// S_F: [b1..bN; a1..ak] -> [b1..bN, a1..ak, 0, -bN..-b1, 0] (plain
/// [a1..ak] when N = 0).
Fcf unfold(const Pcf& p);

/// S_R: purely periodic refold of a finite word.
Pcf fold_rcf(const Fcf& f);

/// Class of a PCF under the rewriting equivalence, held as its unique
/// reduced purely periodic normal form.
class PcfClass {
 public:
  explicit PcfClass(const Pcf& p);

  static PcfClass identity();  // class of [; 0,0]

  /// The normal form: type (0, k) with S_F of it reduced.
  const Pcf& reduced_rcf() const { return rcf_; }
  bool operator==(const PcfClass& other) const {
    return rcf_ == other.rcf_;
  }

 private:
  Pcf rcf_;
};

PcfClass normal_form(const Pcf& p);
PcfClass star(const PcfClass& p, const PcfClass& q);
PcfClass inverse(const PcfClass& p);

/// Product of two type-(1,k) PCFs as a type-(1, k+k') representative:
/// [b1; a1,...,a_{k-1}, a_k + b1' - b1, a1',...,a'_{k'-1}, a'_{k'} - b1' + b1].
Pcf type1_star(const Pcf& p, const Pcf& q);

/// E(P) = M(S_F(P)); constant on equivalence classes and under k-equal
/// retyping.
Mat2 e_matrix(const Pcf& p);

/// Quad(E(P)).
QuadPoly quad_of(const Pcf& p);

/// M_m(P) = M of the first m partial quotients (m >= 0).
Mat2 partial_matrix(const Pcf& p, std::size_t m);

/// Convergent C_m(P) in P^1 (m >= 1).
ProjPoint convergent(const Pcf& p, std::size_t m);

struct CharacterValue {
  ProjPoint root;
  RingElem value;
  bool is_unit_norm;  // product over all roots equals det(E) in {+1,-1}
};

/// Eigenvalue character values of E(P) at each fixed point; verifies the
/// product is det(E(P)) exactly. Scalar E yields one entry.
std::vector<CharacterValue> characters(const Pcf& p);

/// Membership targets for the E-image subgroups.
struct TargetRoot { ProjPoint beta; };
struct TargetQuad { QuadPoly q; };
struct TargetMatrix { Mat2 a; };
struct TargetPcf { Pcf p0; };
using MembershipTarget = std::variant<TargetRoot, TargetQuad, TargetMatrix, TargetPcf>;

/// T(beta)/G(Q) membership of E(p); matrix and PCF targets reduce to the
/// Quad form.
bool pcf_subgroup_membership(const Pcf& p, const MembershipTarget& target);

}  // namespace pcf

#endif  // PCF_PCF_HPP_
