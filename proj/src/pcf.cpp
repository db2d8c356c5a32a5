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

#include "pcf/pcf.hpp"

#include <utility>

namespace pcf {

Pcf::Pcf(std::vector<RingElem> initial, std::vector<RingElem> repeating)
    : initial_(std::move(initial)), repeating_(std::move(repeating)) {
  if (repeating_.empty())
    throw DomainError("a periodic continued fraction needs k >= 1");
  for (const RingElem& c : initial_)
    if (c.is_tower()) throw DomainError("partial quotients must lie in the base field");
  for (const RingElem& c : repeating_)
    if (c.is_tower()) throw DomainError("partial quotients must lie in the base field");
  RingElem acc(0);
  for (const RingElem& c : initial_) acc = acc + c;
  for (const RingElem& c : repeating_) acc = acc + c;
}

Pcf::Pcf(std::initializer_list<long long> initial,
         std::initializer_list<long long> repeating)
    : Pcf(std::vector<RingElem>(initial.begin(), initial.end()),
          std::vector<RingElem>(repeating.begin(), repeating.end())) {}

const RingElem& Pcf::quotient(std::size_t i) const {
  if (i == 0) throw DomainError("quotients are indexed from 1");
  if (i <= initial_.size()) return initial_[i - 1];
  return repeating_[(i - initial_.size() - 1) % repeating_.size()];
}

bool Pcf::cf_equal(const Pcf& other) const {
  // Two eventually periodic sequences agree iff they agree on a prefix of
  // length max(N, N') + lcm-bounded period window; comparing through
  // max(N,N') + k*k' quotients is sufficient.
  std::size_t bound = std::max(n(), other.n()) + k() * other.k();
  for (std::size_t i = 1; i <= bound; ++i)
    if (!(quotient(i) == other.quotient(i))) return false;
  return true;
}

Pcf Pcf::galois_dual() const {
  std::vector<RingElem> init = initial_;
  init.emplace_back(0);
  std::vector<RingElem> rep;
  rep.reserve(repeating_.size());
  for (auto it = repeating_.rbegin(); it != repeating_.rend(); ++it)
    rep.push_back(-*it);
  return Pcf(std::move(init), std::move(rep));
}

std::string Pcf::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < initial_.size(); ++i) {
    if (i) s += ",";
    s += initial_[i].str();
  }
  s += "; ";
  for (std::size_t i = 0; i < repeating_.size(); ++i) {
    if (i) s += ",";
    s += repeating_[i].str();
  }
  return s + "]";
}

Fcf unfold(const Pcf& p) {
  std::vector<RingElem> w;
  if (p.n() == 0) {
    w = p.repeating();
    return Fcf(std::move(w));
  }
  w.reserve(2 * p.n() + p.k() + 2);
  w.insert(w.end(), p.initial().begin(), p.initial().end());
  w.insert(w.end(), p.repeating().begin(), p.repeating().end());
  w.emplace_back(0);
  for (auto it = p.initial().rbegin(); it != p.initial().rend(); ++it)
    w.push_back(-*it);
  w.emplace_back(0);
  return Fcf(std::move(w));
}

Pcf fold_rcf(const Fcf& f) {
  return Pcf(std::vector<RingElem>{}, f.quotients());
}

PcfClass::PcfClass(const Pcf& p)
    : rcf_(fold_rcf(reduce_word(unfold(p)))) {}

PcfClass PcfClass::identity() {
  return PcfClass(Pcf(std::vector<RingElem>{}, {RingElem(0), RingElem(0)}));
}

PcfClass normal_form(const Pcf& p) { return PcfClass(p); }

PcfClass star(const PcfClass& p, const PcfClass& q) {
  Fcf w = concat(unfold(p.reduced_rcf()), unfold(q.reduced_rcf()));
  return PcfClass(fold_rcf(w));
}

PcfClass inverse(const PcfClass& p) {
  return PcfClass(p.reduced_rcf().galois_dual());
}

Pcf type1_star(const Pcf& p, const Pcf& q) {
  if (p.n() != 1 || q.n() != 1)
    throw DomainError("type1_star needs two PCFs of type (1,k)");
  const RingElem& b1 = p.initial()[0];
  const RingElem& b1p = q.initial()[0];
  std::vector<RingElem> rep = p.repeating();
  rep.back() = rep.back() + b1p - b1;
  for (std::size_t i = 0; i < q.k(); ++i) rep.push_back(q.repeating()[i]);
  rep.back() = rep.back() - b1p + b1;
  return Pcf(std::vector<RingElem>{b1}, std::move(rep));
}

Mat2 e_matrix(const Pcf& p) { return mat_of_fcf(unfold(p)); }

QuadPoly quad_of(const Pcf& p) { return quad(e_matrix(p)); }

Mat2 partial_matrix(const Pcf& p, std::size_t m) {
  Mat2 r = Mat2::ident();
  for (std::size_t i = 1; i <= m; ++i) r = r * Mat2::d(p.quotient(i));
  return r;
}

ProjPoint convergent(const Pcf& p, std::size_t m) {
  if (m == 0) throw DomainError("convergents are indexed from 1");
  Mat2 r = partial_matrix(p, m);
  return ProjPoint(r.m11, r.m21);
}

std::vector<CharacterValue> characters(const Pcf& p) {
  Mat2 e = e_matrix(p);
  RingElem dt = e.det();
  std::vector<CharacterValue> out;
  QuadPoly qp = quad(e);
  if (qp.is_zero()) {
    // Scalar matrix: one character value, the scalar itself.
    out.push_back(CharacterValue{ProjPoint::infinity(), e.m11,
                                 e.m11 * e.m11 == dt});
    return out;
  }
  RootPair rp = roots(qp);
  if (rp.kind == RootPair::Kind::double_root) {
    RingElem lam = eigen_at(e, rp.roots[0]);
    out.push_back(CharacterValue{rp.roots[0], lam, lam * lam == dt});
    return out;
  }
  RingElem l1 = eigen_at(e, rp.roots[0]);
  RingElem l2 = eigen_at(e, rp.roots[1]);
  bool unit = l1 * l2 == dt;
  out.push_back(CharacterValue{rp.roots[0], l1, unit});
  out.push_back(CharacterValue{rp.roots[1], l2, unit});
  return out;
}

bool pcf_subgroup_membership(const Pcf& p, const MembershipTarget& target) {
  Mat2 e = e_matrix(p);
  if (const auto* r = std::get_if<TargetRoot>(&target))
    return stabilizer_membership(e, r->beta);
  if (const auto* q = std::get_if<TargetQuad>(&target))
    return group_of_quad_membership(e, q->q);
  if (const auto* a = std::get_if<TargetMatrix>(&target))
    return group_of_quad_membership(e, quad(a->a));
  const auto& p0 = std::get<TargetPcf>(target);
  return group_of_quad_membership(e, quad(e_matrix(p0.p0)));
}

}  // namespace pcf
