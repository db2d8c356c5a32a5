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

#include "pcf/interval.hpp"

#include <algorithm>
#include <utility>

namespace pcf {

namespace {

Int floor_div(const Int& a, const Int& b) {
  // b > 0; cpp_int division truncates toward zero.
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}
Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

Int pow2(int e) { return Int(1) << e; }

Int isqrt_floor(const Int& n) { return sqrt(n); }

}  // namespace

Interval::Interval(Int lo, Int hi, int prec) : lo_(std::move(lo)), hi_(std::move(hi)), prec_(prec) {
  if (lo_ > hi_) throw DomainError("interval endpoints out of order");
}

Interval Interval::point(const Int& n, int prec) {
  Int v = n << prec;
  return Interval(v, v, prec);
}

Interval Interval::of_rational(const Rational& r, int prec) {
  Int n = numerator(r) << prec;
  const Int& d = denominator(r);
  return Interval(floor_div(n, d), ceil_div(n, d), prec);
}

Rational Interval::lo() const { return Rational(lo_, pow2(prec_)); }
Rational Interval::hi() const { return Rational(hi_, pow2(prec_)); }
Rational Interval::width() const { return Rational(hi_ - lo_, pow2(prec_)); }
Rational Interval::midpoint() const { return Rational(lo_ + hi_, pow2(prec_ + 1)); }

bool Interval::contains(const Rational& v) const { return lo() <= v && v <= hi(); }

int Interval::known_sign() const {
  if (lo_ > 0) return 1;
  if (hi_ < 0) return -1;
  return 0;
}

Interval Interval::operator-() const { return Interval(-hi_, -lo_, prec_); }

namespace {
// Raise to a common precision (exact upscaling only).
void align(const Interval& a, const Interval& b, Int& alo, Int& ahi, Int& blo,
           Int& bhi, int& p) {
  p = std::max(a.prec(), b.prec());
  int sa = p - a.prec(), sb = p - b.prec();
  alo = a.lo_raw() << sa;
  ahi = a.hi_raw() << sa;
  blo = b.lo_raw() << sb;
  bhi = b.hi_raw() << sb;
}
}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  Int alo, ahi, blo, bhi;
  int p;
  align(a, b, alo, ahi, blo, bhi, p);
  return Interval(alo + blo, ahi + bhi, p);
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
  // Products live at prec pa+pb; round outward back to max(pa, pb).
  int p = std::max(a.prec(), b.prec());
  int shift = std::min(a.prec(), b.prec());
  Int c1 = a.lo_raw() * b.lo_raw();
  Int c2 = a.lo_raw() * b.hi_raw();
  Int c3 = a.hi_raw() * b.lo_raw();
  Int c4 = a.hi_raw() * b.hi_raw();
  Int lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Int hi = std::max(std::max(c1, c2), std::max(c3, c4));
  Int sc = pow2(shift);
  return Interval(floor_div(lo, sc), ceil_div(hi, sc), p);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by zero");
  Int alo, ahi, blo, bhi;
  int p;
  align(a, b, alo, ahi, blo, bhi, p);
  // Min/max of the endpoint quotients, rounded outward at precision p.
  Rational qlo, qhi;
  bool first = true;
  for (const Int* ai : {&alo, &ahi}) {
    for (const Int* bj : {&blo, &bhi}) {
      Rational q(*ai, *bj);
      if (first) {
        qlo = qhi = q;
        first = false;
      } else {
        qlo = std::min(qlo, q);
        qhi = std::max(qhi, q);
      }
    }
  }
  Int lo = floor_div(numerator(qlo) << p, denominator(qlo));
  Int hi = ceil_div(numerator(qhi) << p, denominator(qhi));
  return Interval(lo, hi, p);
}

Interval Interval::sqrt() const {
  if (hi_ < 0) throw DomainError("sqrt of a negative interval");
  Int lo = lo_ < 0 ? Int(0) : lo_;
  // sqrt(m*2^-p) = sqrt(m*2^p) * 2^-p.
  Int slo = isqrt_floor(lo << prec_);
  Int shiv = hi_ << prec_;
  Int shi = isqrt_floor(shiv);
  if (shi * shi < shiv) ++shi;
  return Interval(slo, shi, prec_);
}

Interval Interval::hull(const Interval& b) const {
  Int alo, ahi, blo, bhi;
  int p;
  align(*this, b, alo, ahi, blo, bhi, p);
  return Interval(std::min(alo, blo), std::max(ahi, bhi), p);
}

Interval Interval::rounded(int p) const {
  if (p >= prec_) return *this;
  Int sc = pow2(prec_ - p);
  return Interval(floor_div(lo_, sc), ceil_div(hi_, sc), p);
}

// --- complex ---------------------------------------------------------------

Rational ComplexInterval::width() const {
  return std::max(re.width(), im.width());
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval n2 = b.norm2();
  if (n2.contains_zero()) throw DomainError("complex interval division by zero");
  ComplexInterval num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
  return {num.re / n2, num.im / n2};
}

ComplexInterval csqrt(const ComplexInterval& z, bool known_real, int real_sign) {
  int p = std::max(z.re.prec(), z.im.prec());
  Interval zero = Interval::point(0, p);
  if (known_real) {
    if (real_sign >= 0) return {z.re.sqrt(), zero};
    return {zero, (-z.re).sqrt()};
  }
  int ims = z.im.known_sign();
  if (ims == 0) {
    // Straddling the branch cut: return a rigorous but crude hull.
    Interval m = z.norm2().sqrt().sqrt();
    Int hi = m.hi_raw();
    return {Interval(0, hi, m.prec()), Interval(-hi, hi, m.prec())};
  }
  Interval r = z.norm2().sqrt();
  if (z.re.known_sign() >= 0) {
    Interval u = ((r + z.re) / Interval::point(2, p)).sqrt();
    Interval v = z.im / (Interval::point(2, p) * u);
    return {u, v};
  }
  Interval w = ((r - z.re) / Interval::point(2, p)).sqrt();
  Interval v = ims > 0 ? w : -w;
  Interval u = z.im / (Interval::point(2, p) * v);
  return {u, v};
}

// --- evaluation --------------------------------------------------------------

namespace {

Interval sqrt_abs_radicand(std::int64_t d, int w) {
  return Interval::point(Int(d < 0 ? -d : d), w).sqrt();
}

ComplexInterval eval_base(const QuadElem& q, int w) {
  Interval a = Interval::of_rational(q.a, w);
  Interval zero = Interval::point(0, w);
  if (q.b == 0) return {a, zero};
  Interval b = Interval::of_rational(q.b, w);
  Interval s = sqrt_abs_radicand(q.d, w);
  if (q.d > 0) return {a + b * s, zero};
  return {a, b * s};
}

bool base_real(const QuadElem& q) { return q.b == 0 || q.d > 0; }

int base_sign_for_eval(const QuadElem& q) {
  // exact sign of a real-embedded base element (see exactnum)
  return make_base_elem(q.a, q.b, q.d).sign();
}

ComplexInterval eval_elem(const RingElem& x, int w) {
  if (!x.is_tower()) return eval_base(x.base(), w);
  const TowerElem& t = x.tower_ref();
  // Refine until the radicand enclosure is branch-safe (real radicands are
  // decided exactly, so only genuinely complex ones loop, and their imaginary
  // part is bounded away from zero).
  bool real = base_real(t.delta);
  int rs = real ? base_sign_for_eval(t.delta) : 0;
  for (int ww = w;; ww *= 2) {
    ComplexInterval dz = eval_base(t.delta, ww);
    if (!real && dz.im.known_sign() == 0) continue;
    ComplexInterval s = csqrt(dz, real, rs);
    ComplexInterval c0 = eval_base(t.c0, ww);
    ComplexInterval c1 = eval_base(t.c1, ww);
    ComplexInterval res = c0 + c1 * s;
    if (res.width() <= Rational(1, pow2(w)) || ww > w + 256) return res;
  }
}

}  // namespace

ComplexInterval complex_eval(const RingElem& x, int precision_bits) {
  if (precision_bits < 1) throw DomainError("precision must be positive");
  return eval_elem(x, precision_bits + 32);
}

// --- decimal rendering --------------------------------------------------------

namespace {

Int pow10(int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

// Digits of v ~ [lo, hi] with `sig` significant figures, or "" if the
// enclosure is too wide to commit.
std::string format_real(const Rational& lo, const Rational& hi, int sig) {
  Rational mid = (lo + hi) / 2;
  if (mid == 0 && lo == hi) return "0";
  Rational a = mid < 0 ? -mid : mid;
  if (hi - lo > a / pow10(sig + 2) && !(lo == hi)) {
    if (lo <= 0 && 0 <= hi) {
      // Interval around zero: value is zero to within the target precision.
      if (hi - lo < Rational(1, pow10(sig))) return "0";
    }
    return "";
  }
  bool neg = mid < 0;
  // Find e with 10^e <= a < 10^(e+1).
  int e = 0;
  if (a >= 1) {
    Rational t = a;
    while (t >= 10) {
      t /= 10;
      ++e;
    }
  } else {
    Rational t = a;
    while (t < 1) {
      t *= 10;
      --e;
    }
  }
  // sig digits: n = round(a * 10^(sig-1-e))
  Rational scaled = e <= sig - 1 ? Rational(a * pow10(sig - 1 - e))
                                 : Rational(a / pow10(e - (sig - 1)));
  Int n = Int(scaled + Rational(1, 2));  // truncation of scaled+1/2 = round
  std::string digits = n.str();
  if (static_cast<int>(digits.size()) > sig) {  // rounding carried over
    ++e;
    digits.pop_back();
  }
  // Strip trailing zeros but keep at least one digit.
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string out;
  if (e >= 0 && e <= 20) {
    if (static_cast<int>(digits.size()) <= e) {
      digits.append(e + 1 - digits.size(), '0');
      out = digits;
    } else {
      out = digits.substr(0, e + 1);
      std::string frac = digits.substr(e + 1);
      if (!frac.empty()) out += "." + frac;
    }
  } else if (e < 0 && e >= -8) {
    out = "0." + std::string(-e - 1, '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
  }
  return neg ? "-" + out : out;
}

}  // namespace

std::string decimal_string(const RingElem& x, int sig_digits) {
  if (x.is_zero()) return "0";
  bool real = x.is_real();
  for (int w = std::max(64, sig_digits * 4 + 32);; w *= 2) {
    ComplexInterval z = complex_eval(x, w);
    std::string rs = format_real(z.re.lo(), z.re.hi(), sig_digits);
    if (real) {
      if (!rs.empty()) return rs;
    } else {
      std::string is = format_real(z.im.lo(), z.im.hi(), sig_digits);
      if (!rs.empty() && !is.empty()) {
        if (rs == "0") return is == "1" ? "i" : (is == "-1" ? "-i" : is + "i");
        std::string sep = (!is.empty() && is[0] == '-') ? "" : "+";
        return rs + sep + (is == "1" ? "" : (is == "-1" ? "-" : is)) + "i";
      }
    }
    if (w > sig_digits * 64 + 4096)
      throw DomainError("decimal rendering failed to converge");
  }
}

}  // namespace pcf
