#include "fds/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fds {

Monomial Monomial::one(int nvars) {
  Monomial m;
  m.nvars = static_cast<uint16_t>(nvars);
  return m;
}

Monomial Monomial::var(int nvars, int i, int power) {
  Monomial m;
  m.nvars = static_cast<uint16_t>(nvars);
  m.e[static_cast<size_t>(i)] = static_cast<uint16_t>(power);
  m.deg = static_cast<uint32_t>(power);
  return m;
}

bool Monomial::divides(const Monomial& m) const {
  for (int i = 0; i < nvars; ++i)
    if (e[static_cast<size_t>(i)] > m.e[static_cast<size_t>(i)]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (int i = 0; i < nvars; ++i) r.e[static_cast<size_t>(i)] += m.e[static_cast<size_t>(i)];
  r.deg += m.deg;
  return r;
}

Monomial Monomial::div(const Monomial& m) const {
  Monomial r = *this;
  for (int i = 0; i < nvars; ++i) r.e[static_cast<size_t>(i)] -= m.e[static_cast<size_t>(i)];
  r.deg -= m.deg;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (int i = 0; i < a.nvars; ++i) {
    r.e[static_cast<size_t>(i)] = std::max(a.e[static_cast<size_t>(i)], b.e[static_cast<size_t>(i)]);
    r.deg += r.e[static_cast<size_t>(i)];
  }
  return r;
}

bool Monomial::coprime(const Monomial& m) const {
  for (int i = 0; i < nvars; ++i)
    if (e[static_cast<size_t>(i)] && m.e[static_cast<size_t>(i)]) return false;
  return true;
}

int MonOrder::cmp(const Monomial& a, const Monomial& b) const {
  const int n = a.nvars;
  switch (kind) {
    case OrderKind::DegRevLex: {
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      for (int i = n - 1; i >= 0; --i) {
        uint16_t ai = a.e[static_cast<size_t>(i)], bi = b.e[static_cast<size_t>(i)];
        if (ai != bi) return ai < bi ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::Lex: {
      for (int i = 0; i < n; ++i) {
        uint16_t ai = a.e[static_cast<size_t>(i)], bi = b.e[static_cast<size_t>(i)];
        if (ai != bi) return ai > bi ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::ElimLast: {
      uint16_t au = a.e[static_cast<size_t>(n - 1)], bu = b.e[static_cast<size_t>(n - 1)];
      if (au != bu) return au > bu ? 1 : -1;
      uint32_t da = a.deg - au, db = b.deg - bu;
      if (da != db) return da > db ? 1 : -1;
      for (int i = n - 2; i >= 0; --i) {
        uint16_t ai = a.e[static_cast<size_t>(i)], bi = b.e[static_cast<size_t>(i)];
        if (ai != bi) return ai < bi ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

uint32_t Poly::total_degree() const {
  uint32_t d = 0;
  for (const auto& t : terms) d = std::max(d, t.m.deg);
  return d;
}

Poly Poly::constant(int nvars, const Rat& q) {
  Poly p;
  p.nvars = nvars;
  if (sgn(q) != 0) p.terms.push_back({Monomial::one(nvars), q});
  return p;
}

Poly Poly::var(int nvars, int i) {
  Poly p;
  p.nvars = nvars;
  p.terms.push_back({Monomial::var(nvars, i), Rat(1)});
  return p;
}

bool Poly::operator==(const Poly& o) const {
  if (nvars != o.nvars || terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i)
    if (!(terms[i].m == o.terms[i].m) || terms[i].c != o.terms[i].c) return false;
  return true;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  auto vname = [&](int i) {
    if (i < static_cast<int>(names.size())) return names[static_cast<size_t>(i)];
    return "x" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << (sgn(t.c) > 0 ? " + " : " - ");
    else if (sgn(t.c) < 0) os << "-";
    first = false;
    Rat mag = rat_abs(t.c);
    bool printed = false;
    if (mag != 1 || t.m.is_one()) {
      os << mag.get_str();
      printed = true;
    }
    for (int i = 0; i < nvars; ++i) {
      int ex = t.m.e[static_cast<size_t>(i)];
      if (!ex) continue;
      if (printed) os << "*";
      os << vname(i);
      if (ex > 1) os << "^" << ex;
      printed = true;
    }
  }
  return os.str();
}

Poly poly_normalize(int nvars, std::vector<Term> raw, const MonOrder& ord) {
  std::sort(raw.begin(), raw.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  Poly p;
  p.nvars = nvars;
  for (auto& t : raw) {
    if (!p.terms.empty() && p.terms.back().m == t.m) {
      p.terms.back().c += t.c;
      if (sgn(p.terms.back().c) == 0) p.terms.pop_back();
    } else if (sgn(t.c) != 0) {
      p.terms.push_back(std::move(t));
    }
  }
  return p;
}

Poly poly_add(const Poly& a, const Poly& b, const MonOrder& ord) {
  Poly r;
  r.nvars = a.nvars;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = ord.cmp(a.terms[i].m, b.terms[j].m);
    if (c > 0) r.terms.push_back(a.terms[i++]);
    else if (c < 0) r.terms.push_back(b.terms[j++]);
    else {
      Rat s = a.terms[i].c + b.terms[j].c;
      if (sgn(s) != 0) r.terms.push_back({a.terms[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < a.terms.size()) r.terms.push_back(a.terms[i++]);
  while (j < b.terms.size()) r.terms.push_back(b.terms[j++]);
  return r;
}

Poly poly_neg(const Poly& a) {
  Poly r = a;
  for (auto& t : r.terms) t.c = -t.c;
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b, const MonOrder& ord) {
  return poly_add(a, poly_neg(b), ord);
}

Poly poly_mul_term(const Poly& a, const Monomial& m, const Rat& c, const MonOrder& ord) {
  (void)ord;  // term multiplication preserves the sort order
  Poly r;
  r.nvars = a.nvars;
  if (sgn(c) == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({t.m * m, t.c * c});
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, const MonOrder& ord) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.nvars);
  std::vector<Term> raw;
  raw.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) raw.push_back({ta.m * tb.m, ta.c * tb.c});
  return poly_normalize(a.nvars, std::move(raw), ord);
}

Poly poly_scale(const Poly& a, const Rat& c) {
  if (sgn(c) == 0) return Poly::zero(a.nvars);
  Poly r = a;
  for (auto& t : r.terms) t.c *= c;
  return r;
}

Poly poly_reorder(const Poly& p, const MonOrder& ord) {
  return poly_normalize(p.nvars, p.terms, ord);
}

Poly poly_primitive(const Poly& p, const MonOrder& ord) {
  (void)ord;
  if (p.is_zero()) return p;
  Int l(1);
  for (const auto& t : p.terms) l = int_lcm(l, t.c.get_den());
  Int g(0);
  for (const auto& t : p.terms) {
    Rat scaled = t.c * Rat(l);
    g = int_gcd(g, scaled.get_num());
  }
  Rat lead_scaled = p.terms.front().c * Rat(l);
  if (sgn(lead_scaled) < 0) g = -g;
  Rat factor = Rat(l) / Rat(g);
  Poly r = p;
  for (auto& t : r.terms) {
    t.c *= factor;
    t.c.canonicalize();
  }
  return r;
}

Poly poly_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return poly_scale(p, Rat(1) / p.terms.front().c);
}

Poly poly_divexact(const Poly& a, const Poly& b, const MonOrder& ord) {
  if (b.is_zero()) throw std::invalid_argument("poly_divexact: division by zero");
  Poly rem = a;
  Poly quot = Poly::zero(a.nvars);
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    if (!b.lead().m.divides(lt.m))
      throw std::invalid_argument("poly_divexact: not divisible");
    Monomial qm = lt.m.div(b.lead().m);
    Rat qc = lt.c / b.lead().c;
    quot.terms.push_back({qm, qc});
    rem = poly_sub(rem, poly_mul_term(b, qm, qc, ord), ord);
  }
  return poly_normalize(a.nvars, quot.terms, ord);
}

Poly poly_subst(const Poly& p, int v, const Rat& value, const MonOrder& ord) {
  std::vector<Term> raw;
  raw.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    int ex = t.m.e[static_cast<size_t>(v)];
    Term nt = t;
    nt.m.e[static_cast<size_t>(v)] = 0;
    nt.m.deg -= static_cast<uint32_t>(ex);
    for (int k = 0; k < ex; ++k) nt.c *= value;
    raw.push_back(nt);
  }
  return poly_normalize(p.nvars, std::move(raw), ord);
}

Poly poly_project(const Poly& p, const std::vector<int>& new_index, int new_nvars,
                  const MonOrder& ord) {
  std::vector<Term> raw;
  raw.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    Term nt;
    nt.c = t.c;
    nt.m = Monomial::one(new_nvars);
    for (int i = 0; i < p.nvars; ++i) {
      int ex = t.m.e[static_cast<size_t>(i)];
      if (!ex) continue;
      int ni = new_index[static_cast<size_t>(i)];
      if (ni < 0) throw std::invalid_argument("poly_project: variable not allowed");
      nt.m.e[static_cast<size_t>(ni)] = static_cast<uint16_t>(ex);
      nt.m.deg += static_cast<uint32_t>(ex);
    }
    raw.push_back(nt);
  }
  return poly_normalize(new_nvars, std::move(raw), ord);
}

Rat poly_eval(const Poly& p, const std::vector<Rat>& xs) {
  Rat acc(0);
  for (const auto& t : p.terms) {
    Rat v = t.c;
    for (int i = 0; i < p.nvars; ++i)
      for (int k = 0; k < t.m.e[static_cast<size_t>(i)]; ++k) v *= xs[static_cast<size_t>(i)];
    acc += v;
  }
  return acc;
}

UPoly poly_to_upoly(const Poly& p, int v) {
  UPoly u;
  for (const auto& t : p.terms) {
    for (int i = 0; i < p.nvars; ++i)
      if (i != v && t.m.e[static_cast<size_t>(i)] != 0)
        throw std::invalid_argument("poly_to_upoly: polynomial is not univariate in v");
    size_t ex = t.m.e[static_cast<size_t>(v)];
    if (u.c.size() <= ex) u.c.resize(ex + 1, Rat(0));
    u.c[ex] += t.c;
  }
  u.trim();
  return u;
}

Poly upoly_to_poly(const UPoly& u, int nvars, int v, const MonOrder& ord) {
  std::vector<Term> raw;
  for (size_t i = 0; i < u.c.size(); ++i)
    if (sgn(u.c[i]) != 0)
      raw.push_back({Monomial::var(nvars, v, static_cast<int>(i)), u.c[i]});
  return poly_normalize(nvars, std::move(raw), ord);
}

Poly poly_det(const std::vector<std::vector<Poly>>& m, const MonOrder& ord) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
  const int nv = m[0][0].nvars;
  if (n == 1) return m[0][0];
  // Fraction-free Bareiss over the polynomial ring; divisions are exact.
  std::vector<std::vector<Poly>> a = m;
  Poly prev = Poly::constant(nv, Rat(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return Poly::zero(nv);
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(piv)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Poly num = poly_sub(
            poly_mul(a[static_cast<size_t>(k)][static_cast<size_t>(k)],
                     a[static_cast<size_t>(i)][static_cast<size_t>(j)], ord),
            poly_mul(a[static_cast<size_t>(i)][static_cast<size_t>(k)],
                     a[static_cast<size_t>(k)][static_cast<size_t>(j)], ord),
            ord);
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = poly_divexact(num, prev, ord);
      }
      a[static_cast<size_t>(i)][static_cast<size_t>(k)] = Poly::zero(nv);
    }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  Poly det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return sign < 0 ? poly_neg(det) : det;
}

}  // namespace fds
