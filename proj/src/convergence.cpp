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

#include "pcf/convergence.hpp"

#include <algorithm>
#include <utility>

namespace pcf {

namespace {

Mat2 rotation_matrix(const Pcf& p, std::size_t j) {
  const auto& a = p.repeating();
  std::size_t k = a.size();
  Mat2 m = Mat2::ident();
  for (std::size_t i = 0; i < k; ++i) m = m * Mat2::d(a[(j + i) % k]);
  return m;
}

bool is_heavy(const Mat2& r) {
  return r.m21.is_zero() && r.m22.abs_cmp_one() == Cmp::greater;
}

}  // namespace

std::vector<ResidueData> residue_matrices(const Pcf& p) {
  std::vector<ResidueData> out;
  out.reserve(p.k());
  for (std::size_t j = 1; j <= p.k(); ++j) {
    ResidueData rd;
    rd.j = j;
    rd.r = rotation_matrix(p, j % p.k());
    rd.heavy = is_heavy(rd.r);
    out.push_back(std::move(rd));
  }
  return out;
}

std::vector<ResidueData> decimation_limits(const Pcf& p) {
  std::vector<ResidueData> out = residue_matrices(p);
  for (ResidueData& rd : out) {
    PowerLimit pl = power_limit(rd.r, ProjPoint::infinity());
    switch (pl.kind) {
      case PowerLimit::Kind::converges:
        rd.state = ResidueData::LimitState::exists;
        rd.limit = mobius(partial_matrix(p, p.n() + rd.j), pl.limit);
        break;
      case PowerLimit::Kind::divergent:
        rd.state = ResidueData::LimitState::divergent;
        break;
      case PowerLimit::Kind::ambiguous:
        rd.state = ResidueData::LimitState::ambiguous;
        break;
    }
  }
  // Prop. 7.5(2): heavy rotations are never cyclically adjacent.
  std::size_t k = out.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (k > 1 && out[i].heavy && out[(i + 1) % k].heavy)
      throw Error("internal: adjacent heavy rotation matrices");
  }
  return out;
}

namespace {

MajoritySummary summarize(const std::vector<ResidueData>& residues) {
  MajoritySummary s;
  s.total = residues.size();
  std::vector<std::pair<ProjPoint, std::size_t>> counts;
  for (const ResidueData& rd : residues) {
    if (rd.state != ResidueData::LimitState::exists) continue;
    ++s.existing;
    bool found = false;
    for (auto& [v, c] : counts) {
      if (v == rd.limit) {
        ++c;
        found = true;
        break;
      }
    }
    if (!found) counts.emplace_back(rd.limit, 1);
  }
  auto repr_less = [](const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return b.is_infinity() && !a.is_infinity();
    return compare_repr(a.value(), b.value()) < 0;
  };
  for (const auto& [v, c] : counts) {
    if (!s.value) {
      s.value = v;
      s.agree_count = c;
    } else if (c > s.agree_count ||
               (c == s.agree_count && repr_less(v, *s.value))) {
      s.value = v;
      s.agree_count = c;
    }
  }
  return s;
}

}  // namespace

ConvergenceReport classify(const Pcf& p) {
  ConvergenceReport rep;
  rep.residues = decimation_limits(p);
  for (const ResidueData& rd : rep.residues)
    if (rd.state == ResidueData::LimitState::ambiguous) rep.ambiguous = true;

  Mat2 e = e_matrix(p);
  QuadPoly qp = quad(e);
  if (qp.is_zero()) {
    rep.case_tag = CaseTag::zero_quad;
    rep.behavior = Behavior::strictly_divergent;
    rep.majority = summarize(rep.residues);
    return rep;
  }
  RootPair rp = roots(qp);
  if (rp.kind == RootPair::Kind::double_root) {
    rep.case_tag = CaseTag::double_root;
    rep.behavior = Behavior::convergent;
    rep.limit = rp.roots[0];
    rep.majority = summarize(rep.residues);
    return rep;
  }
  if (equal_eigen_magnitudes(e)) {
    rep.case_tag = CaseTag::equal_magnitude_divergent;
    rep.behavior = Behavior::strictly_divergent;
    rep.majority = summarize(rep.residues);
    return rep;
  }
  int cmp = eigen_magnitude_cmp(e, rp.roots[0], rp.roots[1]);
  const ProjPoint& beta_plus = cmp > 0 ? rp.roots[0] : rp.roots[1];
  const ProjPoint& beta_minus = cmp > 0 ? rp.roots[1] : rp.roots[0];
  bool any_heavy = false;
  for (const ResidueData& rd : rep.residues) {
    if (rd.heavy) any_heavy = true;
    // Prop. 7.5(1): the limit at a heavy index is the repelling fixed point.
    if (!rep.ambiguous && rd.state == ResidueData::LimitState::exists) {
      if (!(rd.limit == (rd.heavy ? beta_minus : beta_plus)))
        throw Error("internal: residue limit disagrees with the heavy split");
    }
  }
  if (any_heavy) {
    rep.case_tag = CaseTag::gap_strictly_quasiconvergent;
    rep.behavior = Behavior::strictly_quasiconvergent;
  } else {
    rep.case_tag = CaseTag::gap_convergent;
    rep.behavior = Behavior::convergent;
    rep.limit = beta_plus;
  }
  rep.majority = summarize(rep.residues);
  return rep;
}

MajorityAnalysis majority_analysis(const ConvergenceReport& report) {
  for (const ResidueData& rd : report.residues) {
    if (rd.state != ResidueData::LimitState::exists)
      throw DomainError("majority analysis needs every decimation limit to exist");
  }
  MajorityAnalysis m;
  m.total = report.majority.total;
  m.agree_count = report.majority.agree_count;
  m.witness = *report.majority.value;
  if (report.behavior == Behavior::strictly_quasiconvergent) {
    if (2 * m.agree_count <= m.total || m.agree_count >= m.total)
      throw Error("internal: strict quasiconvergence without a strict majority");
  }
  return m;
}

// --- numeric oracle ----------------------------------------------------------

namespace {

int raw_bits(const Interval& iv) {
  Int m = std::max(abs(iv.lo_raw()), abs(iv.hi_raw()));
  return static_cast<int>(msb(m == 0 ? Int(1) : m));
}

void rescale_pair(ComplexInterval& a, ComplexInterval& b, int prec) {
  int bits = std::max(
      std::max(raw_bits(a.re), raw_bits(a.im)),
      std::max(raw_bits(b.re), raw_bits(b.im)));
  int excess = bits - 2 * prec;
  if (excess <= 0) return;
  auto down = [&](Interval& iv) {
    iv = Interval(iv.lo_raw(), iv.hi_raw(), iv.prec() + excess).rounded(prec);
  };
  down(a.re);
  down(a.im);
  down(b.re);
  down(b.im);
}

}  // namespace

std::vector<OracleResidue> float_oracle(const Pcf& p, std::size_t n_periods,
                                        int precision_bits) {
  if (n_periods == 0) throw DomainError("need at least one period");
  if (precision_bits < 8) throw DomainError("precision too small");
  std::size_t k = p.k();
  int w = precision_bits;
  std::vector<ComplexInterval> quots;
  quots.reserve(p.n() + k);
  for (std::size_t i = 1; i <= p.n() + k; ++i)
    quots.push_back(complex_eval(p.quotient(i), w));

  Interval z = Interval::point(0, w), one = Interval::point(1, w);
  ComplexInterval num{one, z}, den{z, z};  // column (p, q) of the product

  std::vector<OracleResidue> out(k);
  std::vector<bool> has_prev(k, false);
  std::vector<ComplexInterval> prev(k);
  Rational tol2 = Rational(1, Int(1) << std::min(precision_bits / 2, 96));

  std::size_t total = p.n() + n_periods * k;
  for (std::size_t i = 1; i <= total; ++i) {
    const ComplexInterval& c =
        quots[i <= p.n() ? i - 1 : p.n() + (i - p.n() - 1) % k];
    ComplexInterval np = c * num + den;
    den = num;
    num = np;
    rescale_pair(num, den, w);
    if (i <= p.n()) continue;
    std::size_t j = (i - p.n() - 1) % k;  // residue j+1
    OracleResidue& res = out[j];
    if (den.norm2().contains_zero()) {
      res.defined = false;
      has_prev[j] = false;
      continue;
    }
    ComplexInterval v = num / den;
    res.defined = true;
    if (has_prev[j]) {
      ComplexInterval d = v - prev[j];
      res.last_delta2 = d.norm2().hi();
      res.converged = res.last_delta2 <= tol2 && v.width() * v.width() <= tol2;
    }
    prev[j] = v;
    has_prev[j] = true;
    res.value = v;
  }
  return out;
}

}  // namespace pcf
