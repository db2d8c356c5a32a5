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

#include "pcf/exactnum.hpp"

#include <optional>
#include <utility>

namespace pcf {

struct detail_access {
  static RingElem base(QuadElem q) { return RingElem(std::move(q)); }
  static RingElem tower(TowerElem t) { return RingElem(std::move(t)); }
};

namespace {

RingElem wrap(QuadElem q) { return detail_access::base(std::move(q)); }
RingElem wrap(TowerElem t) { return detail_access::tower(std::move(t)); }

}  // namespace

namespace {

Int num(const Rational& r) { return numerator(r); }
Int den(const Rational& r) { return denominator(r); }

bool is_perfect_square(const Int& n, Int& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

// sqrt of a nonnegative rational, when it is rational.
std::optional<Rational> rational_sqrt_exact(const Rational& r) {
  if (r < 0) return std::nullopt;
  Int sn, sd;
  if (!is_perfect_square(num(r), sn) || !is_perfect_square(den(r), sd))
    return std::nullopt;
  return Rational(sn, sd);
}

bool quad_is_zero(const QuadElem& q) { return q.a == 0 && q.b == 0; }
bool quad_is_rational(const QuadElem& q) { return q.b == 0; }

int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

}  // namespace

void split_square(const Int& n, Int& s, Int& f) {
  if (n == 0) throw DomainError("split_square of zero");
  Int m = abs(n);
  s = 1;
  f = 1;
  for (Int p = 2; p * p <= m && p <= 100000; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) f *= p;
  }
  Int r;
  if (is_perfect_square(m, r)) {
    s *= r;
  } else {
    f *= m;
  }
  if (n < 0) f = -f;
}

namespace {

// --- base-field (level <= 1) helpers ------------------------------------

// Common radicand for two base elements, or throw.
std::int64_t unify_d(std::int64_t dx, std::int64_t dy) {
  if (dx == 0) return dy;
  if (dy == 0 || dx == dy) return dx;
  throw TowerMismatchError("elements of Q(sqrt " + std::to_string(dx) +
                           ") and Q(sqrt " + std::to_string(dy) +
                           ") cannot be combined");
}

QuadElem canon_base(Rational a, Rational b, std::int64_t d) {
  if (b == 0) return QuadElem{std::move(a), Rational(0), 0};
  return QuadElem{std::move(a), std::move(b), d};
}

QuadElem base_add(const QuadElem& x, const QuadElem& y) {
  std::int64_t d = unify_d(x.d, y.d);
  return canon_base(x.a + y.a, x.b + y.b, d);
}

QuadElem base_sub(const QuadElem& x, const QuadElem& y) {
  std::int64_t d = unify_d(x.d, y.d);
  return canon_base(x.a - y.a, x.b - y.b, d);
}

QuadElem base_neg(const QuadElem& x) { return QuadElem{-x.a, -x.b, x.d}; }

QuadElem base_mul(const QuadElem& x, const QuadElem& y) {
  std::int64_t d = unify_d(x.d, y.d);
  return canon_base(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
}

Rational base_norm(const QuadElem& x) { return x.a * x.a - x.b * x.b * x.d; }

QuadElem base_inv(const QuadElem& x) {
  if (quad_is_zero(x)) throw DomainError("division by zero");
  if (x.b == 0) return QuadElem{Rational(1) / x.a, Rational(0), 0};
  Rational n = base_norm(x);  // nonzero: d is squarefree != 1
  return canon_base(x.a / n, -x.b / n, x.d);
}

QuadElem base_div(const QuadElem& x, const QuadElem& y) {
  return base_mul(x, base_inv(y));
}

bool base_eq(const QuadElem& x, const QuadElem& y) {
  return x.d == y.d && x.a == y.a && x.b == y.b;
}

// Exact sign under the real embedding; requires d >= 0.
int base_sign(const QuadElem& x) {
  if (x.b == 0) return sign_of(x.a);
  if (x.d < 0) throw DomainError("sign of a complex-embedded value");
  int sa = sign_of(x.a), sb = sign_of(x.b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // |a| vs |b|*sqrt(d): compare a^2 with b^2*d (never equal, d squarefree).
  return (x.a * x.a > x.b * x.b * x.d) ? sa : sb;
}

// Sign of the real part / imaginary part of an embedded base element.
int base_re_sign(const QuadElem& x) {
  if (x.d >= 0) return base_sign(x);
  return sign_of(x.a);
}
int base_im_sign(const QuadElem& x) {
  if (x.d >= 0) return 0;
  return sign_of(x.b);
}

// Argument class of a nonzero embedded value: 0 when arg = 0, +1 when
// arg in (0, pi], -1 when arg in (-pi, 0).
int arg_class(const QuadElem& x) {
  int im = base_im_sign(x);
  if (im != 0) return im;
  return base_re_sign(x) < 0 ? 1 : 0;
}

// sqrt of a base element within its own field, when one exists.
// Picks the principal branch: positive for real values, negative imaginary
// axis excluded otherwise (Re > 0, or Re = 0 and Im > 0).
std::optional<QuadElem> base_sqrt_exact(const QuadElem& x) {
  if (quad_is_zero(x)) return QuadElem{};
  if (x.b == 0) {
    auto r = rational_sqrt_exact(x.a);
    if (!r) return std::nullopt;
    return QuadElem{*r, Rational(0), 0};
  }
  // (u + v*sqrt(d))^2 = a + b*sqrt(d): u^2 + v^2 d = a, 2uv = b.
  // u^2 solves 4z^2 - 4az + b^2 d = 0.
  auto m = rational_sqrt_exact(x.a * x.a - x.b * x.b * x.d);
  if (!m) return std::nullopt;
  for (int pm = 0; pm < 2; ++pm) {
    Rational z = (x.a + (pm == 0 ? *m : -*m)) / 2;  // candidate u^2
    auto u = rational_sqrt_exact(z);
    if (!u || *u == 0) continue;
    Rational v = x.b / (2 * *u);
    QuadElem s = canon_base(*u, v, x.d);
    // s*s == x by construction; fix the branch.
    int re = base_re_sign(s);
    if (re < 0 || (re == 0 && base_im_sign(s) < 0)) s = base_neg(s);
    return s;
  }
  return std::nullopt;
}

// sqrt(d1)*sqrt(d2) for squarefree radicands, as coeff*sqrt(f) with f
// squarefree. For d1, d2 < 0 the product is -sqrt(d1 d2).
void radicand_product(std::int64_t d1, std::int64_t d2, Rational& coeff,
                      Int& f) {
  Int s;
  split_square(Int(d1) * Int(d2), s, f);
  coeff = Rational(s);
  if (d1 < 0 && d2 < 0) coeff = -coeff;
}

std::int64_t radicand_to_i64(const Int& f) {
  if (f > Int("4611686018427387904") || f < -Int("4611686018427387904"))
    throw DomainError("radicand out of supported range");
  return static_cast<std::int64_t>(f);
}

std::int64_t tower_base(const QuadElem& c0, const QuadElem& c1,
                        const QuadElem& delta) {
  return unify_d(unify_d(c0.d, c1.d), delta.d);
}

RingElem tower_make(const QuadElem& c0, const QuadElem& c1,
                    const QuadElem& delta);

}  // namespace

RingElem make_base_elem(Rational a, Rational b, std::int64_t d) {
  return wrap(canon_base(std::move(a), std::move(b), d));
}

RingElem make_tower_elem(const QuadElem& c0, const QuadElem& c1,
                         const QuadElem& delta) {
  return tower_make(c0, c1, delta);
}

// --- RingElem basics ------------------------------------------------------

bool RingElem::is_rational() const {
  auto* q = std::get_if<QuadElem>(&v_);
  return q && q->d == 0;
}
bool RingElem::is_quad() const {
  auto* q = std::get_if<QuadElem>(&v_);
  return q && q->d != 0;
}
bool RingElem::is_tower() const { return std::holds_alternative<TowerElem>(v_); }

const Rational& RingElem::rat() const {
  if (!is_rational()) throw DomainError("value is not rational");
  return std::get<QuadElem>(v_).a;
}
const QuadElem& RingElem::base() const {
  if (is_tower()) throw DomainError("value is a tower element");
  return std::get<QuadElem>(v_);
}
const TowerElem& RingElem::tower_ref() const {
  if (!is_tower()) throw DomainError("value is not a tower element");
  return std::get<TowerElem>(v_);
}

std::int64_t RingElem::base_d() const {
  if (auto* q = std::get_if<QuadElem>(&v_)) return q->d;
  const TowerElem& t = std::get<TowerElem>(v_);
  return tower_base(t.c0, t.c1, t.delta);
}

bool RingElem::is_zero() const {
  auto* q = std::get_if<QuadElem>(&v_);
  return q && quad_is_zero(*q);
}
bool RingElem::is_one() const {
  auto* q = std::get_if<QuadElem>(&v_);
  return q && q->b == 0 && q->a == 1;
}

RingElem RingElem::quad(Rational a, Rational b, std::int64_t d) {
  if (b != 0) {
    if (d == 0 || d == 1) throw DomainError("radicand must be nonzero and != 1");
    Int s, f;
    split_square(Int(d), s, f);
    if (s != 1) throw DomainError("radicand must be squarefree");
  }
  return make_base_elem(std::move(a), std::move(b), b == 0 ? 0 : d);
}

// --- tower canonicalization ----------------------------------------------

namespace {

RingElem tower_make(const QuadElem& c0, const QuadElem& c1,
                    const QuadElem& delta) {
  (void)tower_base(c0, c1, delta);  // throws on a base-field mismatch
  if (quad_is_zero(c1)) return wrap(c0);
  if (quad_is_zero(delta)) return wrap(c0);
  if (auto s = base_sqrt_exact(delta)) {
    return wrap(base_add(c0, base_mul(c1, *s)));
  }
  if (quad_is_rational(delta)) {
    // Pull the square part out of the rational radicand:
    // sqrt(p/q) = (s/q)*sqrt(f) with p*q = s^2*f.
    Int s, f;
    split_square(num(delta.a) * den(delta.a), s, f);
    Rational coeff(s, den(delta.a));
    QuadElem c1s = base_mul(c1, QuadElem{coeff, Rational(0), 0});
    std::int64_t fi = radicand_to_i64(f);
    if (quad_is_rational(c0) && quad_is_rational(c1s)) {
      return make_base_elem(c0.a, c1s.a, fi);
    }
    if (quad_is_rational(c0) && c1s.a == 0) {
      // c1s = b*sqrt(d): value = c0 + b*sqrt(d)*sqrt(f) = c0 + b'*sqrt(df).
      Rational pc;
      Int m;
      radicand_product(c1s.d, fi, pc, m);
      if (m == 1) return wrap(canon_base(c0.a + c1s.b * pc, Rational(0), 0));
      return make_base_elem(c0.a, c1s.b * pc, radicand_to_i64(m));
    }
    if (delta.a == fi && base_eq(c1s, c1)) {
      return wrap(TowerElem{c0, c1, delta});  // already canonical
    }
    return tower_make(c0, c1s, QuadElem{Rational(f), Rational(0), 0});
  }
  // Genuinely quadratic radicand. Collapse delta = r*t^2 (r rational, t in
  // the base) whenever Norm(delta) is a rational square: then t = delta +- m
  // and r = 1/(2(a +- m)) with m = sqrt(Norm(delta)).
  if (auto m = rational_sqrt_exact(base_norm(delta))) {
    Rational am = delta.a + *m;
    QuadElem t;
    Rational r;
    if (am != 0) {
      t = QuadElem{am, delta.b, delta.d};
      r = Rational(1) / (2 * am);
    } else {
      t = QuadElem{delta.a - *m, delta.b, delta.d};
      r = Rational(1) / (2 * (delta.a - *m));
    }
    // Keep the principal branch: sqrt(delta) = t*sqrt(r) needs t*sqrt(r) to
    // have Re > 0, or Re = 0 and Im > 0. For r > 0 that is the sign of
    // Re(t)/Im(t); for r < 0, sqrt(r) = i*sqrt(|r|) rotates t by 90 degrees.
    int re, im;
    if (r > 0) {
      re = base_re_sign(t);
      im = base_im_sign(t);
    } else {
      re = -base_im_sign(t);
      im = base_re_sign(t);
    }
    if (re < 0 || (re == 0 && im < 0)) t = base_neg(t);
    return tower_make(c0, base_mul(c1, t), QuadElem{r, Rational(0), 0});
  }
  return wrap(TowerElem{c0, c1, delta});
}

// Scaling factor s with sqrt(dy) = s*sqrt(dx) (principal branches), when
// dy/dx is a square in the base field.
std::optional<QuadElem> radicand_rescale(const QuadElem& dx, const QuadElem& dy) {
  if (base_eq(dx, dy)) return QuadElem{Rational(1), Rational(0), 0};
  QuadElem q = base_div(dy, dx);
  auto s = base_sqrt_exact(q);
  if (!s) return std::nullopt;
  // base_sqrt_exact gives the principal sqrt of q = dy/dx; the true ratio
  // sqrt(dy)/sqrt(dx) differs by a sign exactly when arg(dy) - arg(dx)
  // leaves (-pi, pi].
  int cy = arg_class(dy), cx = arg_class(dx), cq = arg_class(q);
  bool flip = (cy > 0 && cx < 0 && cq < 0) || (cy < 0 && cx > 0 && cq > 0);
  if (flip) return base_neg(*s);
  return s;
}

struct TowerView {
  QuadElem c0, c1;
};

TowerView tower_view(const RingElem& x) {
  if (x.is_tower()) {
    const TowerElem& t = x.tower_ref();
    return TowerView{t.c0, t.c1};
  }
  return TowerView{x.base(), QuadElem{}};
}

// Aligns two operands into a common tower (if either is one).
bool tower_align(const RingElem& x, const RingElem& y, TowerView& vx,
                 TowerView& vy, QuadElem& delta) {
  const TowerElem* tx = x.is_tower() ? &x.tower_ref() : nullptr;
  const TowerElem* ty = y.is_tower() ? &y.tower_ref() : nullptr;
  if (!tx && !ty) return false;
  if (tx && ty && !base_eq(tx->delta, ty->delta)) {
    auto s = radicand_rescale(tx->delta, ty->delta);
    if (!s) throw TowerMismatchError("incompatible tower radicands");
    delta = tx->delta;
    vx = tower_view(x);
    vy = TowerView{ty->c0, base_mul(ty->c1, *s)};
    return true;
  }
  delta = tx ? tx->delta : ty->delta;
  vx = tower_view(x);
  vy = tower_view(y);
  return true;
}

}  // namespace

RingElem RingElem::tower(const RingElem& c0, const RingElem& c1,
                         const RingElem& delta) {
  if (c0.is_tower() || c1.is_tower() || delta.is_tower())
    throw DomainError("tower coordinates must lie in the base field");
  return tower_make(c0.base(), c1.base(), delta.base());
}

RingElem RingElem::sqrt_of(const RingElem& x) {
  if (x.is_tower()) {
    // Stay inside the same tower or give up; a second tower level is
    // outside the supported rings.
    const TowerElem& t = x.tower_ref();
    if (x.base_d() < 0)
      throw DomainError("sqrt of a tower value over an imaginary base");
    auto m = base_sqrt_exact(base_sub(base_mul(t.c0, t.c0),
                                      base_mul(base_mul(t.c1, t.c1), t.delta)));
    if (m) {
      for (int pm = 0; pm < 2; ++pm) {
        QuadElem z = base_mul(base_add(t.c0, pm == 0 ? *m : base_neg(*m)),
                              QuadElem{Rational(1, 2), Rational(0), 0});
        auto y0 = base_sqrt_exact(z);
        if (!y0 || quad_is_zero(*y0)) continue;
        QuadElem y1 = base_div(t.c1,
                               base_mul(QuadElem{Rational(2), Rational(0), 0}, *y0));
        RingElem cand = tower_make(*y0, y1, t.delta);
        if (cand * cand == x) {
          if (cand.is_real() && cand.sign() < 0) return -cand;
          return cand;
        }
      }
    }
    throw DomainError("sqrt would leave the supported tower");
  }
  return tower_make(QuadElem{}, QuadElem{Rational(1), Rational(0), 0}, x.base());
}

// --- arithmetic -----------------------------------------------------------

RingElem RingElem::operator-() const {
  if (is_tower()) {
    const TowerElem& t = tower_ref();
    return RingElem(TowerElem{base_neg(t.c0), base_neg(t.c1), t.delta});
  }
  return RingElem(base_neg(base()));
}

RingElem operator+(const RingElem& x, const RingElem& y) {
  TowerView vx, vy;
  QuadElem delta;
  if (tower_align(x, y, vx, vy, delta)) {
    return make_tower_elem(base_add(vx.c0, vy.c0), base_add(vx.c1, vy.c1),
                           delta);
  }
  return RingElem(base_add(x.base(), y.base()));
}

RingElem operator-(const RingElem& x, const RingElem& y) { return x + (-y); }

RingElem operator*(const RingElem& x, const RingElem& y) {
  TowerView vx, vy;
  QuadElem delta;
  if (tower_align(x, y, vx, vy, delta)) {
    QuadElem c0 = base_add(base_mul(vx.c0, vy.c0),
                           base_mul(base_mul(vx.c1, vy.c1), delta));
    QuadElem c1 = base_add(base_mul(vx.c0, vy.c1), base_mul(vx.c1, vy.c0));
    return make_tower_elem(c0, c1, delta);
  }
  return RingElem(base_mul(x.base(), y.base()));
}

RingElem RingElem::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (is_tower()) {
    const TowerElem& t = tower_ref();
    // (c0 + c1 sqrt(delta))^-1 = (c0 - c1 sqrt(delta)) / (c0^2 - c1^2 delta)
    QuadElem n = base_sub(base_mul(t.c0, t.c0),
                          base_mul(base_mul(t.c1, t.c1), t.delta));
    QuadElem ninv = base_inv(n);
    return RingElem(TowerElem{base_mul(t.c0, ninv),
                              base_mul(base_neg(t.c1), ninv), t.delta});
  }
  return RingElem(base_inv(base()));
}

RingElem operator/(const RingElem& x, const RingElem& y) {
  return x * y.inverse();
}

bool RingElem::operator==(const RingElem& y) const {
  const RingElem& x = *this;
  if (!x.is_tower() && !y.is_tower()) return base_eq(x.base(), y.base());
  // Canonical towers are irrational over their base field, so a tower never
  // equals a base element.
  if (x.is_tower() != y.is_tower()) return false;
  const TowerElem& tx = x.tower_ref();
  const TowerElem& ty = y.tower_ref();
  if (!base_eq(tx.c0, ty.c0)) return false;
  if (base_eq(tx.delta, ty.delta)) return base_eq(tx.c1, ty.c1);
  auto s = radicand_rescale(tx.delta, ty.delta);
  if (!s) return false;
  return base_eq(tx.c1, base_mul(ty.c1, *s));
}

// --- embedding-dependent queries -------------------------------------------

bool RingElem::is_real() const {
  if (!is_tower()) {
    const QuadElem& q = base();
    return q.b == 0 || q.d > 0;
  }
  const TowerElem& t = tower_ref();
  if (base_d() < 0) return false;
  return base_sign(t.delta) > 0;
}

int RingElem::sign() const {
  if (!is_tower()) return base_sign(base());
  const TowerElem& t = tower_ref();
  if (base_d() < 0)
    throw DomainError("sign of a tower over an imaginary base");
  if (base_sign(t.delta) < 0)
    throw DomainError("sign of a complex-embedded value");
  int s0 = base_sign(t.c0);
  int s1 = base_sign(t.c1);
  if (s0 == 0) return s1;
  if (s0 == s1) return s0;
  // |c0| vs |c1|*sqrt(delta): compare c0^2 with c1^2*delta in the base
  // (never equal: delta is not a square there).
  QuadElem diff = base_sub(base_mul(t.c0, t.c0),
                           base_mul(base_mul(t.c1, t.c1), t.delta));
  return base_sign(diff) > 0 ? s0 : s1;
}

RingElem RingElem::abs_square() const {
  if (is_real()) return *this * *this;
  if (!is_tower()) {
    const QuadElem& q = base();  // d < 0
    return RingElem(base_norm(q));
  }
  const TowerElem& t = tower_ref();
  if (base_d() < 0)
    throw DomainError("|x|^2 of a tower over an imaginary base is unsupported");
  // Real base, delta < 0: value = c0 + i*c1*sqrt(|delta|).
  return RingElem(base_sub(base_mul(t.c0, t.c0),
                           base_mul(base_mul(t.c1, t.c1), t.delta)));
}

Cmp RingElem::abs_cmp_one() const {
  if (is_real()) {
    int lo = (*this - RingElem(1)).sign();
    int hi = (*this + RingElem(1)).sign();
    if (lo > 0 || hi < 0) return Cmp::greater;
    if (lo == 0 || hi == 0) return Cmp::equal;
    return Cmp::less;
  }
  RingElem n = abs_square();
  int c = (n - RingElem(1)).sign();
  if (c > 0) return Cmp::greater;
  if (c < 0) return Cmp::less;
  return Cmp::equal;
}

// --- misc -------------------------------------------------------------------

bool is_ring_integer(const RingElem& x) {
  if (x.is_tower()) {
    const TowerElem& t = x.tower_ref();
    return is_ring_integer(make_base_elem(t.c0.a, t.c0.b, t.c0.d)) &&
           is_ring_integer(make_base_elem(t.c1.a, t.c1.b, t.c1.d));
  }
  const QuadElem& q = x.base();
  if (q.b == 0) return den(q.a) == 1;
  if (den(q.a) == 1 && den(q.b) == 1) return true;
  std::int64_t r = q.d % 4;
  if (r < 0) r += 4;
  return r == 1 && den(q.a) == 2 && den(q.b) == 2;
}

namespace {
int cmp_rat(const Rational& x, const Rational& y) {
  if (x < y) return -1;
  if (y < x) return 1;
  return 0;
}
int cmp_base(const QuadElem& x, const QuadElem& y) {
  if (x.d != y.d) return x.d < y.d ? -1 : 1;
  if (int c = cmp_rat(x.a, y.a)) return c;
  return cmp_rat(x.b, y.b);
}
}  // namespace

int compare_repr(const RingElem& x, const RingElem& y) {
  if (x.is_tower() != y.is_tower()) return x.is_tower() ? 1 : -1;
  if (!x.is_tower()) return cmp_base(x.base(), y.base());
  const TowerElem& tx = x.tower_ref();
  const TowerElem& ty = y.tower_ref();
  if (int c = cmp_base(tx.delta, ty.delta)) return c;
  if (int c = cmp_base(tx.c0, ty.c0)) return c;
  return cmp_base(tx.c1, ty.c1);
}

// --- rendering ---------------------------------------------------------------

namespace {

std::string rat_str(const Rational& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

// coefficient*sqrt(rad); a negative coefficient keeps its leading '-'.
std::string radical_term(const Rational& coeff, const std::string& rad) {
  if (coeff == 1) return "sqrt(" + rad + ")";
  if (coeff == -1) return "-sqrt(" + rad + ")";
  return rat_str(coeff) + "*sqrt(" + rad + ")";
}

std::string base_str(const QuadElem& q) {
  if (q.b == 0) return rat_str(q.a);
  std::string rad = std::to_string(q.d);
  if (q.a == 0) return radical_term(q.b, rad);
  std::string s = rat_str(q.a);
  if (q.b > 0) s += "+";
  return s + radical_term(q.b, rad);
}

bool base_is_single_term(const QuadElem& q) { return q.a == 0 || q.b == 0; }

}  // namespace

std::string RingElem::str() const {
  if (!is_tower()) return base_str(base());
  const TowerElem& t = tower_ref();
  std::string rad = base_str(t.delta);
  std::string c1s;
  if (quad_is_rational(t.c1)) {
    c1s = radical_term(t.c1.a, rad);
  } else {
    c1s = "(" + base_str(t.c1) + ")*sqrt(" + rad + ")";
  }
  if (quad_is_zero(t.c0)) return c1s;
  std::string head = base_is_single_term(t.c0) ? base_str(t.c0)
                                               : "(" + base_str(t.c0) + ")";
  if (!c1s.empty() && c1s[0] != '-') head += "+";
  return head + c1s;
}

}  // namespace pcf
