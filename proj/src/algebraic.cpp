#include "fds/algebraic.hpp"

#include <sstream>
#include <stdexcept>

namespace fds {

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& r) {
  AlgebraicNumber a;
  UPoly p;
  p.c = {-r, Rat(1)};
  a.min_poly = uprimitive(p);
  a.lo = a.hi = r;
  a.irreducible = true;
  return a;
}

AlgebraicNumber AlgebraicNumber::sqrt_of(const Rat& m) {
  if (sgn(m) < 0) throw std::invalid_argument("sqrt_of: negative radicand");
  UPoly p;
  p.c = {-m, Rat(0), Rat(1)};
  // crude upper bracket: 1 + m works since sqrt(m) <= 1 + m for m >= 0
  Rat hi = m + 1;
  AlgebraicNumber a = make(uprimitive(p), Rat(0), hi);
  a.irreducible = true;  // callers pass non-square m
  return a;
}

AlgebraicNumber AlgebraicNumber::make(UPoly p, const Rat& lo, const Rat& hi) {
  AlgebraicNumber a;
  a.min_poly = uprimitive(p);
  a.lo = lo;
  a.hi = hi;
  if (lo == hi) {
    if (sgn(a.min_poly.eval(lo)) != 0)
      throw std::invalid_argument("AlgebraicNumber: point interval is not a root");
    return a;
  }
  if (lo > hi) throw std::invalid_argument("AlgebraicNumber: empty interval");
  if (sgn(a.min_poly.eval(lo)) * sgn(a.min_poly.eval(hi)) >= 0)
    throw std::invalid_argument("AlgebraicNumber: endpoints do not bracket a root");
  if (count_roots(a.min_poly, lo, hi) != 1)
    throw std::invalid_argument("AlgebraicNumber: interval is not isolating");
  if (a.min_poly.degree() <= 1) {
    a.irreducible = true;
  } else {
    bool complete = false;
    auto rr = rational_roots(a.min_poly, complete);
    bool has_rr = !rr.empty();
    if (a.min_poly.degree() <= 3 && complete && !has_rr) a.irreducible = true;
    // For the in-interval root being rational we would have found it above;
    // callers that need a true minimal polynomial strip rational roots first.
  }
  return a;
}

double AlgebraicNumber::approx() const {
  if (is_rational()) return lo.get_d();
  Rat l = lo, h = hi;
  int slo = sgn(min_poly.eval(l));
  while (h - l > Rat(1, 1000000000000L)) {
    Rat m = (l + h) / 2;
    int sm = sgn(min_poly.eval(m));
    if (sm == 0) return m.get_d();
    if (sm == slo) l = m;
    else h = m;
  }
  return ((l + h) / 2).get_d();
}

std::string AlgebraicNumber::str() const {
  if (is_rational()) return lo.get_str();
  std::ostringstream os;
  os << "root of " << min_poly.str("t") << " in (" << lo.get_str() << ", " << hi.get_str() << ")";
  return os.str();
}

namespace {

// One bisection step of the isolating interval [lo,hi] of p.
// Returns false when the midpoint is an exact root (then *exact = mid).
bool bisect_step(const UPoly& p, Rat& lo, Rat& hi, Rat* exact) {
  Rat mid = (lo + hi) / 2;
  int sm = sgn(p.eval(mid));
  if (sm == 0) {
    *exact = mid;
    return false;
  }
  if (sgn(p.eval(lo)) == sm) lo = mid;
  else hi = mid;
  return true;
}

}  // namespace

int algebraic_sign(const AlgebraicNumber& a, const UPoly& expr) {
  if (a.is_rational()) return sgn(expr.eval(a.lo));
  UPoly r = urem(expr, a.min_poly);
  if (r.is_zero()) return 0;
  if (!a.irreducible) {
    UPoly g = ugcd(r, a.min_poly);
    if (g.degree() >= 1 && count_roots(g, a.lo, a.hi) == 1) return 0;
  }
  // expr(a) != 0: refine until the interval image of r excludes zero.
  Rat lo = a.lo, hi = a.hi;
  while (true) {
    Rat vlo, vhi;
    eval_interval(r, lo, hi, vlo, vhi);
    if (sgn(vlo) > 0) return 1;
    if (sgn(vhi) < 0) return -1;
    Rat exact;
    if (!bisect_step(a.min_poly, lo, hi, &exact)) return sgn(r.eval(exact));
  }
}

NumberField::NumberField(AlgebraicNumber alpha) : alpha_(std::move(alpha)) {
  lo_ = alpha_.lo;
  hi_ = alpha_.hi;
}

void NumberField::interval(const Rat& width, Rat& lo, Rat& hi) const {
  std::lock_guard<std::mutex> g(mu_);
  while (hi_ - lo_ > width) {
    Rat exact;
    if (!bisect_step(alpha_.min_poly, lo_, hi_, &exact)) {
      lo_ = hi_ = exact;
      break;
    }
  }
  lo = lo_;
  hi = hi_;
}

NFElem::NFElem(FieldPtr F, std::vector<Rat> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
  if (F_ && F_->trivial()) {
    // Collapse a degenerate field right away.
    Rat v = UPoly(c_).eval(F_->alpha().rational_value());
    F_.reset();
    c_ = {v};
    return;
  }
  if (F_) {
    UPoly r = urem(UPoly(c_), F_->alpha().min_poly);
    c_.assign(static_cast<size_t>(F_->degree()), Rat(0));
    for (size_t i = 0; i < r.c.size(); ++i) c_[i] = r.c[i];
  } else if (c_.empty()) {
    c_ = {Rat(0)};
  } else if (c_.size() > 1) {
    throw std::invalid_argument("NFElem: rational element with several coefficients");
  }
}

NFElem NFElem::generator(const FieldPtr& F) {
  std::vector<Rat> c(static_cast<size_t>(F->degree()), Rat(0));
  if (F->degree() == 1) {
    return NFElem(F->alpha().rational_value());
  }
  c[1] = Rat(1);
  return NFElem(F, std::move(c));
}

bool NFElem::is_rational() const {
  if (!F_) return true;
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rat NFElem::rational_value() const {
  if (!is_rational()) throw std::domain_error("NFElem: not rational");
  return c_[0];
}

bool NFElem::is_zero() const {
  bool all = true;
  for (const auto& q : c_)
    if (sgn(q) != 0) {
      all = false;
      break;
    }
  if (all) return true;
  if (!F_) return false;
  const AlgebraicNumber& a = F_->alpha();
  if (a.irreducible) return false;
  UPoly g = ugcd(UPoly(c_), a.min_poly);
  return g.degree() >= 1 && count_roots(g, a.lo, a.hi) == 1;
}

int NFElem::sign() const {
  if (!F_) return sgn(c_[0]);
  if (is_zero()) return 0;
  const AlgebraicNumber& a = F_->alpha();
  // Quadratic shortcut for defining polynomials x^2 - m with positive root.
  if (a.min_poly.degree() == 2 && c_.size() == 2 && sgn(a.min_poly.c[1]) == 0 &&
      sgn(a.lo) >= 0) {
    const Rat& p = c_[0];
    const Rat& q = c_[1];
    Rat m = -a.min_poly.c[0] / a.min_poly.c[2];
    if (sgn(q) == 0) return sgn(p);
    if (sgn(p) == 0) return sgn(q);
    if (sgn(p) == sgn(q)) return sgn(p);
    return sgn(p) * sgn(p * p - m * q * q);
  }
  UPoly r(c_);
  Rat lo, hi;
  Rat width = a.hi - a.lo;
  while (true) {
    F_->interval(width, lo, hi);
    if (lo == hi) return sgn(r.eval(lo));
    Rat vlo, vhi;
    eval_interval(r, lo, hi, vlo, vhi);
    if (sgn(vlo) > 0) return 1;
    if (sgn(vhi) < 0) return -1;
    width = (hi - lo) / 2;
  }
}

void NFElem::promote(NFElem& a, NFElem& b) {
  if (a.F_ == b.F_) return;
  if (!a.F_) {
    Rat v = a.c_[0];
    a.F_ = b.F_;
    a.c_.assign(b.c_.size(), Rat(0));
    a.c_[0] = v;
    return;
  }
  if (!b.F_) {
    promote(b, a);
    return;
  }
  throw std::invalid_argument("NFElem: mixing distinct number fields");
}

NFElem NFElem::operator+(const NFElem& o) const {
  NFElem a = *this, b = o;
  promote(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

NFElem NFElem::operator-(const NFElem& o) const {
  NFElem a = *this, b = o;
  promote(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

NFElem NFElem::operator-() const {
  NFElem a = *this;
  for (auto& q : a.c_) q = -q;
  return a;
}

NFElem NFElem::operator*(const NFElem& o) const {
  NFElem a = *this, b = o;
  promote(a, b);
  if (!a.F_) return NFElem(a.c_[0] * b.c_[0]);
  UPoly prod = UPoly(a.c_) * UPoly(b.c_);
  UPoly r = urem(prod, a.F_->alpha().min_poly);
  std::vector<Rat> c(a.c_.size(), Rat(0));
  for (size_t i = 0; i < r.c.size(); ++i) c[i] = r.c[i];
  NFElem res;
  res.F_ = a.F_;
  res.c_ = std::move(c);
  return res;
}

NFElem NFElem::inverse() const {
  if (!F_) {
    if (sgn(c_[0]) == 0) throw std::domain_error("NFElem: division by zero");
    return NFElem(Rat(1) / c_[0]);
  }
  if (is_zero()) throw std::domain_error("NFElem: division by zero");
  UPoly f(c_);
  UPoly modulus = F_->alpha().min_poly;
  // Dynamic splitting: keep the factor of the modulus that alpha satisfies
  // until f becomes invertible modulo it.
  while (true) {
    UPoly s, t;
    UPoly g = uextgcd(f, modulus, s, t);
    if (g.degree() == 0) {
      UPoly inv = urem(s, modulus);
      std::vector<Rat> c(c_.size(), Rat(0));
      for (size_t i = 0; i < inv.c.size(); ++i) c[i] = inv.c[i];
      NFElem res;
      res.F_ = F_;
      res.c_ = std::move(c);
      return res;
    }
    // alpha is not a root of g (f(alpha) != 0), so it is a root of modulus/g.
    UPoly q, r;
    udivmod(modulus, g, q, r);
    modulus = q;
    f = urem(f, modulus);
  }
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

double NFElem::approx() const {
  if (!F_) return c_[0].get_d();
  Rat lo, hi;
  enclosure(Rat(1, 1000000000000L), lo, hi);
  return ((lo + hi) / 2).get_d();
}

void NFElem::enclosure(const Rat& w, Rat& lo, Rat& hi) const {
  if (!F_) {
    lo = hi = c_[0];
    return;
  }
  UPoly r(c_);
  Rat alo, ahi;
  Rat width = F_->alpha().hi - F_->alpha().lo;
  while (true) {
    F_->interval(width, alo, ahi);
    eval_interval(r, alo, ahi, lo, hi);
    if (hi - lo <= w || alo == ahi) return;
    width = (ahi - alo) / 2;
  }
}

std::string NFElem::str() const {
  if (!F_) return c_[0].get_str();
  UPoly p(c_);
  return p.str("a");
}

NFElem nf_from_upoly(const FieldPtr& F, const UPoly& p) {
  if (!F) return NFElem(p.is_zero() ? Rat(0) : p.c[0]);
  return NFElem(F, p.c);
}

NFElem nf_linear(const FieldPtr& F, const Rat& q1, const Rat& q2) {
  std::vector<Rat> c(static_cast<size_t>(F->degree()), Rat(0));
  c[0] = q1;
  if (c.size() > 1) c[1] = q2;
  return NFElem(F, std::move(c));
}

}  // namespace fds
