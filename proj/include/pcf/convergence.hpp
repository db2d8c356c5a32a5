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

#ifndef PCF_CONVERGENCE_HPP_
#define PCF_CONVERGENCE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "pcf/interval.hpp"
#include "pcf/matrix2.hpp"
#include "pcf/pcf.hpp"

namespace pcf {

/// One residue class j (1..k) of the k-decimation of the convergents.
struct ResidueData {
  enum class LimitState { exists, divergent, ambiguous };

  std::size_t j = 0;
  Mat2 r;  // R_j = M([a_{j+1},...,a_k,a_1,...,a_j])
  bool heavy = false;  // t_j = 0 and |u_j| > 1
  LimitState state = LimitState::divergent;
  ProjPoint limit;  // the decimation limit, when it exists
};

enum class CaseTag {
  double_root,
  zero_quad,
  gap_convergent,
  gap_strictly_quasiconvergent,
  equal_magnitude_divergent,
};

enum class Behavior { convergent, strictly_quasiconvergent, strictly_divergent };

struct MajoritySummary {
  std::size_t total = 0;        // k
  std::size_t existing = 0;     // residues whose limit exists
  std::size_t agree_count = 0;  // residues sharing the modal limit
  std::optional<ProjPoint> value;  // modal limit (smallest witness on ties)
};

struct ConvergenceReport {
  CaseTag case_tag = CaseTag::zero_quad;
  Behavior behavior = Behavior::strictly_divergent;
  std::optional<ProjPoint> limit;  // when behavior == convergent
  std::vector<ResidueData> residues;
  MajoritySummary majority;
  bool ambiguous = false;  // some residue undecidable in the tower design
};

/// The k rotation matrices with heavy flags (no limits computed).
std::vector<ResidueData> residue_matrices(const Pcf& p);

/// Rotation matrices plus exact decimation limits: each limit is
/// power_limit(R_j, infinity) pushed through the Moebius map of M_{N+j}(P).
std::vector<ResidueData> decimation_limits(const Pcf& p);

/// Full exact classification per the four-case trichotomy, with residue
/// limits and a majority summary.
ConvergenceReport classify(const Pcf& p);

struct MajorityAnalysis {
  std::size_t total = 0;
  std::size_t agree_count = 0;
  ProjPoint witness;
};

/// Modal-limit count over the k residues; requires every limit to exist.
/// For strictly quasiconvergent inputs, k/2 < agree_count < k.
MajorityAnalysis majority_analysis(const ConvergenceReport& report);

/// Numeric cross-check data for one residue of the decimated convergents.
struct OracleResidue {
  bool defined = false;       // denominator enclosure excluded zero
  ComplexInterval value;      // enclosure of the last convergent
  Rational last_delta2 = 0;   // upper bound on |last - previous|^2
  bool converged = false;     // deltas settled below the derived tolerance
};

/// Iterates the convergents C_{N+j+nk} with rigorous interval arithmetic for
/// n_periods periods and reports per-residue Cauchy behavior. Test oracle
/// only; classification never consults it.
std::vector<OracleResidue> float_oracle(const Pcf& p, std::size_t n_periods,
                                        int precision_bits);

}  // namespace pcf

#endif  // PCF_CONVERGENCE_HPP_
