#ifndef FDS_UPOLY_HPP
#define FDS_UPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fds/rational.hpp"

namespace fds {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// The zero polynomial has an empty coefficient vector.
struct UPoly {
  std::vector<Rat> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

  static UPoly constant(const Rat& q);
  static UPoly x();  // the monomial x

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const Rat& lead() const { return c.back(); }

  Rat eval(const Rat& x) const;
  std::string str(const std::string& var = "x") const;

  bool operator==(const UPoly& o) const { return c == o.c; }
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const Rat& q);
UPoly operator-(const UPoly& a);

UPoly uderivative(const UPoly& p);

// Euclidean division over Q: a = q*b + r with deg r < deg b.
void udivmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
UPoly urem(const UPoly& a, const UPoly& b);

UPoly umonic(const UPoly& p);
UPoly ugcd(const UPoly& a, const UPoly& b);  // monic gcd

// Extended Euclid: returns monic g = gcd(a,b) and s,t with s*a + t*b = g.
UPoly uextgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);

// Scale to integer coefficients with positive leading coefficient and
// content 1.
UPoly uprimitive(const UPoly& p);

UPoly usquarefree_part(const UPoly& p);

// Compose p(q(x)).
UPoly ucompose(const UPoly& p, const UPoly& q);

// Substitute x -> a*x + b (affine change of variable).
UPoly uaffine(const UPoly& p, const Rat& a, const Rat& b);

// ---- Sturm machinery ----

struct SturmChain {
  std::vector<UPoly> seq;
};

SturmChain sturm_chain(const UPoly& p);

// Sign variations of the chain evaluated at x.
int sturm_variations(const SturmChain& s, const Rat& x);

// Number of distinct real roots in the half-open interval (lo, hi].
int count_roots(const SturmChain& s, const Rat& lo, const Rat& hi);
int count_roots(const UPoly& p, const Rat& lo, const Rat& hi);

// Cauchy bound: all real roots lie in (-B, B).
Rat root_bound(const UPoly& p);

// Isolating intervals for all distinct real roots of p (p need not be
// squarefree; isolation runs on the squarefree part). Each interval is
// either exact (lo == hi, rational root) or open with p(lo)*p(hi) < 0
// and exactly one root inside. Sorted ascending.
struct RootInterval {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
};
std::vector<RootInterval> isolate_real_roots(const UPoly& p);

// Interval evaluation: image of [lo,hi] under p, conservative.
void eval_interval(const UPoly& p, const Rat& lo, const Rat& hi, Rat& out_lo, Rat& out_hi);

// All rational roots of p, each with multiplicity forgotten. Complete when
// the leading/trailing coefficients factor within the trial-division bound;
// `complete` reports whether the divisor enumeration was exhaustive.
std::vector<Rat> rational_roots(const UPoly& p, bool& complete);

// Divide out a known root: p / (x - r)^k for maximal k. Returns quotient.
UPoly remove_root(const UPoly& p, const Rat& r);

// Irreducibility certificate over Q via Rabin's test modulo small primes.
// true = certainly irreducible; false = no certificate found (may still be
// irreducible). Degree <= 1 returns true.
bool irreducible_mod_p_certificate(const UPoly& p);

}  // namespace fds

#endif
