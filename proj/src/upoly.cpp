#include "fds/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace fds {

UPoly UPoly::constant(const Rat& q) {
  UPoly p;
  if (sgn(q) != 0) p.c.push_back(q);
  return p;
}

UPoly UPoly::x() {
  UPoly p;
  p.c = {Rat(0), Rat(1)};
  return p;
}

void UPoly::trim() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UPoly::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (sgn(c[i]) == 0) continue;
    Rat a = c[i];
    if (!first) os << (sgn(a) > 0 ? " + " : " - ");
    else if (sgn(a) < 0) os << "-";
    first = false;
    Rat mag = rat_abs(a);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  UPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const Rat& q) {
  if (sgn(q) == 0) return UPoly();
  UPoly r = a;
  for (auto& x : r.c) x *= q;
  return r;
}

UPoly operator-(const UPoly& a) { return a * Rat(-1); }

UPoly uderivative(const UPoly& p) {
  UPoly r;
  if (p.c.size() <= 1) return r;
  r.c.resize(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) r.c[i - 1] = p.c[i] * Rat(static_cast<long>(i));
  r.trim();
  return r;
}

void udivmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  if (b.is_zero()) throw std::invalid_argument("udivmod: division by zero polynomial");
  rem = a;
  quot = UPoly();
  int db = b.degree();
  if (rem.degree() >= db) quot.c.assign(rem.degree() - db + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    Rat f = rem.lead() / b.lead();
    quot.c[k] = f;
    for (int i = 0; i <= db; ++i) rem.c[k + i] -= f * b.c[i];
    rem.trim();
  }
  quot.trim();
}

UPoly urem(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  udivmod(a, b, q, r);
  return r;
}

UPoly umonic(const UPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rat(1) / p.lead());
}

UPoly ugcd(const UPoly& a, const UPoly& b) {
  UPoly f = a, g = b;
  while (!g.is_zero()) {
    UPoly r = urem(f, g);
    f = g;
    g = r;
  }
  return umonic(f);
}

UPoly uextgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(Rat(1)), s1;
  UPoly t0, t1 = UPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    UPoly q, r;
    udivmod(r0, r1, q, r);
    r0 = r1;
    r1 = r;
    UPoly s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    UPoly t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (!r0.is_zero()) {
    Rat inv = Rat(1) / r0.lead();
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
  }
  s = s0;
  t = t0;
  return r0;
}

UPoly uprimitive(const UPoly& p) {
  if (p.is_zero()) return p;
  Int l(1);
  for (const auto& q : p.c) l = int_lcm(l, q.get_den());
  Int g(0);
  std::vector<Int> zs(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) {
    Rat scaled = p.c[i] * Rat(l);
    zs[i] = scaled.get_num();
    g = int_gcd(g, zs[i]);
  }
  if (sgn(zs.back()) < 0) g = -g;
  UPoly r;
  r.c.resize(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) r.c[i] = Rat(zs[i] / g);
  return r;
}

UPoly usquarefree_part(const UPoly& p) {
  if (p.degree() <= 1) return umonic(p);
  UPoly g = ugcd(p, uderivative(p));
  if (g.degree() == 0) return umonic(p);
  UPoly q, r;
  udivmod(p, g, q, r);
  return umonic(q);
}

UPoly ucompose(const UPoly& p, const UPoly& q) {
  UPoly acc;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * q + UPoly::constant(*it);
  return acc;
}

UPoly uaffine(const UPoly& p, const Rat& a, const Rat& b) {
  UPoly lin;
  lin.c = {b, a};
  lin.trim();
  return ucompose(p, lin);
}

SturmChain sturm_chain(const UPoly& p) {
  SturmChain s;
  UPoly f = uprimitive(p);
  if (f.is_zero()) return s;
  s.seq.push_back(f);
  UPoly d = uderivative(f);
  if (d.is_zero()) return s;
  s.seq.push_back(uprimitive(d));
  while (true) {
    const UPoly& a = s.seq[s.seq.size() - 2];
    const UPoly& b = s.seq.back();
    UPoly r = urem(a, b);
    if (r.is_zero()) break;
    s.seq.push_back(uprimitive(-r));
  }
  return s;
}

int sturm_variations(const SturmChain& s, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& p : s.seq) {
    int sg = sgn(p.eval(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

int count_roots(const SturmChain& s, const Rat& lo, const Rat& hi) {
  if (s.seq.empty()) return 0;
  return sturm_variations(s, lo) - sturm_variations(s, hi);
}

int count_roots(const UPoly& p, const Rat& lo, const Rat& hi) {
  return count_roots(sturm_chain(p), lo, hi);
}

Rat root_bound(const UPoly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, rat_abs(p.c[i] / p.lead()));
  return m + 1;
}

namespace {

void isolate_rec(const SturmChain& s, const UPoly& f, const Rat& lo, const Rat& hi,
                 std::vector<RootInterval>& out) {
  int n = count_roots(s, lo, hi);
  if (n == 0) return;
  if (n == 1 && sgn(f.eval(lo)) * sgn(f.eval(hi)) < 0) {
    out.push_back({lo, hi});
    return;
  }
  Rat mid = (lo + hi) / 2;
  if (sgn(f.eval(mid)) == 0) {
    out.push_back({mid, mid});
    // Shrink custody around the exact root so the recursion never lands on it.
    Rat eps = (hi - lo);
    while (true) {
      eps /= 2;
      if (sgn(f.eval(mid - eps)) != 0 && sgn(f.eval(mid + eps)) != 0 &&
          count_roots(s, mid - eps, mid + eps) == 1)
        break;
    }
    isolate_rec(s, f, lo, mid - eps, out);
    isolate_rec(s, f, mid + eps, hi, out);
    return;
  }
  isolate_rec(s, f, lo, mid, out);
  isolate_rec(s, f, mid, hi, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
  std::vector<RootInterval> out;
  UPoly f = usquarefree_part(p);
  if (f.degree() < 1) return out;
  SturmChain s = sturm_chain(f);
  Rat b = root_bound(f);
  // Endpoints of the global bracket are not roots (strict Cauchy bound).
  isolate_rec(s, f, -b, b, out);
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b2) {
    return a.lo < b2.lo;
  });
  return out;
}

void eval_interval(const UPoly& p, const Rat& lo, const Rat& hi, Rat& out_lo, Rat& out_hi) {
  // Interval Horner.
  Rat alo(0), ahi(0);
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    Rat c1 = alo * lo, c2 = alo * hi, c3 = ahi * lo, c4 = ahi * hi;
    Rat mn = std::min(std::min(c1, c2), std::min(c3, c4));
    Rat mx = std::max(std::max(c1, c2), std::max(c3, c4));
    alo = mn + *it;
    ahi = mx + *it;
  }
  out_lo = alo;
  out_hi = ahi;
}

namespace {

std::vector<Int> divisors_bounded(const Int& n, bool& complete) {
  std::vector<Int> divs{Int(1)};
  Int m = n < 0 ? Int(-n) : n;
  complete = true;
  if (m == 0) return divs;
  const long bound = 1000000;
  for (Int p = 2; p * p <= m; ++p) {
    if (p > bound) {
      complete = false;
      break;
    }
    if (!mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) continue;
    int e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    size_t base = divs.size();
    Int pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  if (m > 1) {
    size_t base = divs.size();
    for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * m);
  }
  return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& p, bool& complete) {
  std::vector<Rat> roots;
  complete = true;
  UPoly f = uprimitive(p);
  if (f.degree() < 1) return roots;
  // Strip powers of x first.
  size_t low = 0;
  while (low < f.c.size() && sgn(f.c[low]) == 0) ++low;
  if (low > 0) {
    roots.push_back(Rat(0));
    f.c.erase(f.c.begin(), f.c.begin() + static_cast<long>(low));
  }
  if (f.degree() < 1) return roots;
  if (f.degree() == 1) {
    roots.push_back(-f.c[0] / f.c[1]);
    return roots;
  }
  bool c1 = true, c2 = true;
  std::vector<Int> ps = divisors_bounded(f.c[0].get_num(), c1);
  std::vector<Int> qs = divisors_bounded(f.lead().get_num(), c2);
  complete = c1 && c2;
  for (const Int& pp : ps)
    for (const Int& qq : qs) {
      Rat cand(pp, qq);
      cand.canonicalize();
      if (sgn(f.eval(cand)) == 0) roots.push_back(cand);
      cand = -cand;
      if (sgn(f.eval(cand)) == 0) roots.push_back(cand);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

UPoly remove_root(const UPoly& p, const Rat& r) {
  UPoly lin;
  lin.c = {-r, Rat(1)};
  UPoly f = p, q, rem;
  while (true) {
    udivmod(f, lin, q, rem);
    if (!rem.is_zero()) break;
    f = q;
    if (f.degree() < 1) break;
  }
  return f;
}

// ---- irreducibility certificate mod p (Rabin) ----

namespace {

using ModPoly = std::vector<uint64_t>;  // dense, index = power

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  // reduce mod f (f monic)
  int df = static_cast<int>(f.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= df; --i) {
    uint64_t c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (int j = 0; j < df; ++j) {
      uint64_t sub = (c * f[j]) % p;
      r[i - df + j] = (r[i - df + j] + p - sub) % p;
    }
  }
  mp_trim(r);
  return r;
}

ModPoly mp_powmod_x(uint64_t e_base, int e_exp, const ModPoly& f, uint64_t p) {
  // computes x^(e_base^e_exp) mod f by repeated exponentiation
  ModPoly acc = {0, 1};
  mp_trim(acc);
  for (int t = 0; t < e_exp; ++t) {
    // acc := acc^e_base via square and multiply
    ModPoly result = {1};
    ModPoly base = acc;
    uint64_t e = e_base;
    while (e) {
      if (e & 1) result = mp_mulmod(result, base, f, p);
      base = mp_mulmod(base, base, f, p);
      e >>= 1;
    }
    acc = result;
  }
  return acc;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, uint64_t p) {
  auto inv = [&](uint64_t x) {
    uint64_t r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    // a mod b
    uint64_t lbinv = inv(b.back());
    ModPoly r = a;
    int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
      if (!r[i]) continue;
      uint64_t c = r[i] * lbinv % p;
      for (int j = 0; j <= db; ++j) {
        uint64_t sub = c * b[j] % p;
        r[i - db + j] = (r[i - db + j] + p - sub) % p;
      }
    }
    mp_trim(r);
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

bool irreducible_mod_p_certificate(const UPoly& poly) {
  UPoly f = uprimitive(poly);
  int n = f.degree();
  if (n <= 1) return n == 1;
  std::vector<int> prime_divs;
  for (int q = 2, m = n; q <= m; ++q)
    if (m % q == 0) {
      prime_divs.push_back(q);
      while (m % q == 0) m /= q;
    }
  for (uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
    if (mpz_divisible_ui_p(f.lead().get_num().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    // reduce mod p, make monic
    ModPoly fp(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      Int num = f.c[static_cast<size_t>(i)].get_num();
      unsigned long rm = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p));
      fp[static_cast<size_t>(i)] = rm;
    }
    if (fp.back() == 0) continue;
    // make monic
    {
      uint64_t linv = 1, e = p - 2, base = fp.back();
      while (e) {
        if (e & 1) linv = linv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& x : fp) x = x * linv % p;
    }
    // Rabin: x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) == 1 for prime q|n
    ModPoly xpn = mp_powmod_x(p, n, fp, p);
    ModPoly xx = {0, 1};
    if (xpn != xx) continue;  // f has no degree-n irreducible factor structure mod p
    bool ok = true;
    for (int q : prime_divs) {
      ModPoly h = mp_powmod_x(p, n / q, fp, p);
      // h - x
      ModPoly diff = h;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = (diff[1] + p - 1) % p;
      mp_trim(diff);
      ModPoly g = mp_gcd(fp, diff, p);
      if (static_cast<int>(g.size()) - 1 != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace fds
