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

#include "pcf/cfcore.hpp"

#include <utility>

namespace pcf {

Fcf::Fcf(std::vector<RingElem> quotients) : q_(std::move(quotients)) {
  if (q_.empty()) throw DomainError("a continued fraction word needs at least one partial quotient");
  for (const RingElem& c : q_) {
    if (c.is_tower())
      throw DomainError("partial quotients must lie in the base field");
  }
  // One common field (throws on a mismatch).
  RingElem acc(0);
  for (const RingElem& c : q_) acc = acc + c;
}

Fcf::Fcf(std::initializer_list<long long> quotients)
    : Fcf(std::vector<RingElem>(quotients.begin(), quotients.end())) {}

bool Fcf::operator==(const Fcf& other) const {
  if (q_.size() != other.q_.size()) return false;
  for (std::size_t i = 0; i < q_.size(); ++i)
    if (!(q_[i] == other.q_[i])) return false;
  return true;
}

bool Fcf::is_reduced() const {
  for (std::size_t i = 1; i + 1 < q_.size(); ++i)
    if (q_[i].is_zero()) return false;
  return true;
}

std::string Fcf::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (i) s += ",";
    s += q_[i].str();
  }
  return s + "]";
}

Fcf concat(const Fcf& f, const Fcf& g) {
  std::vector<RingElem> q = f.quotients();
  q.insert(q.end(), g.quotients().begin(), g.quotients().end());
  return Fcf(std::move(q));
}

Fcf reduce_word(const Fcf& f) {
  std::vector<RingElem> q = f.quotients();
  std::size_t i = 1;
  while (q.size() > 2 && i + 1 < q.size()) {
    if (!q[i].is_zero()) {
      ++i;
      continue;
    }
    RingElem merged = q[i - 1] + q[i + 1];
    q.erase(q.begin() + i, q.begin() + i + 2);
    q[i - 1] = std::move(merged);
    // The merge can expose a new interior zero one slot to the left.
    i = i >= 2 ? i - 2 : 1;
    if (i == 0) i = 1;
  }
  return Fcf(std::move(q));
}

FcfClass::FcfClass(const Fcf& representative) : reduced_(reduce_word(representative)) {}

FcfClass FcfClass::identity() { return FcfClass(Fcf({0, 0})); }

FcfClass reduce(const Fcf& f) { return FcfClass(f); }

FcfClass star(const FcfClass& f, const FcfClass& g) {
  return FcfClass(concat(f.reduced(), g.reduced()));
}

FcfClass inverse(const FcfClass& f) {
  const auto& q = f.reduced().quotients();
  std::vector<RingElem> inv;
  inv.reserve(q.size() + 2);
  inv.emplace_back(0);
  for (auto it = q.rbegin(); it != q.rend(); ++it) inv.push_back(-*it);
  inv.emplace_back(0);
  return FcfClass(Fcf(std::move(inv)));
}

// The letter list stays strictly alternating (j / O-letter), so a single
// top-of-stack cancellation per push keeps the word canonical.
void FreeWord::push_j() {
  if (!letters_.empty() && letters_.back().is_j) {
    letters_.pop_back();
    return;
  }
  letters_.push_back(Letter{true, RingElem(0)});
}

void FreeWord::push_elem(const RingElem& x) {
  if (x.is_zero()) return;
  if (!letters_.empty() && !letters_.back().is_j) {
    RingElem merged = letters_.back().value + x;
    letters_.pop_back();
    if (!merged.is_zero()) letters_.push_back(Letter{false, std::move(merged)});
    return;
  }
  letters_.push_back(Letter{false, x});
}

bool FreeWord::operator==(const FreeWord& other) const {
  if (letters_.size() != other.letters_.size()) return false;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].is_j != other.letters_[i].is_j) return false;
    if (!letters_[i].is_j && !(letters_[i].value == other.letters_[i].value))
      return false;
  }
  return true;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ".";
    s += l.is_j ? "j" : l.value.str();
  }
  return s;
}

FreeWord to_free_word(const Fcf& f) {
  FreeWord w;
  for (const RingElem& c : f.quotients()) {
    w.push_elem(c);
    w.push_j();
  }
  return w;
}

std::vector<std::pair<RingElem, RingElem>> convergents(const Fcf& f) {
  std::vector<std::pair<RingElem, RingElem>> out;
  out.reserve(f.length());
  // [[p_k, p_{k-1}], [q_k, q_{k-1}]] = D(c1)...D(ck), starting from I.
  RingElem p(1), pp(0), q(0), qp(1);
  for (const RingElem& c : f.quotients()) {
    RingElem np = p * c + pp;
    RingElem nq = q * c + qp;
    pp = std::exchange(p, np);
    qp = std::exchange(q, nq);
    out.emplace_back(p, q);
  }
  return out;
}

}  // namespace pcf
