#ifndef FDS_POLY_HPP
#define FDS_POLY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fds/rational.hpp"
#include "fds/upoly.hpp"

namespace fds {

// At most 8 ring variables: up to s = 6 distance symbols, the saturation
// variable u, and one spare for the Rabinowitsch trick in tests.
constexpr int kMaxVars = 8;

struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint16_t nvars = 0;
  uint32_t deg = 0;

  static Monomial one(int nvars);
  static Monomial var(int nvars, int i, int power = 1);

  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  Monomial div(const Monomial& m) const;  // requires divisibility
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& m) const;
  bool operator==(const Monomial& m) const { return nvars == m.nvars && e == m.e; }
};

// Monomial orders. Variable 0 is the largest under every order here, so the
// paper's x_1 > ... > x_s > u puts u at the last index.
enum class OrderKind {
  DegRevLex,   // the default order used by the rank filter
  Lex,         // full lexicographic, used for solving
  ElimLast,    // last variable's degree first, degrevlex on the rest; eliminates u
};

struct MonOrder {
  OrderKind kind = OrderKind::DegRevLex;
  // cmp > 0 if a > b
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
};

struct Term {
  Monomial m;
  Rat c;
};

// Sparse multivariate polynomial; terms kept sorted descending under the
// order that produced it (all routines take the active order explicitly).
struct Poly {
  int nvars = 0;
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].m.is_one()); }
  const Term& lead() const { return terms.front(); }
  uint32_t total_degree() const;

  static Poly zero(int nvars) { return Poly{nvars, {}}; }
  static Poly constant(int nvars, const Rat& q);
  static Poly var(int nvars, int i);

  std::string str(const std::vector<std::string>& names = {}) const;
  bool operator==(const Poly& o) const;
};

Poly poly_normalize(int nvars, std::vector<Term> raw, const MonOrder& ord);
Poly poly_add(const Poly& a, const Poly& b, const MonOrder& ord);
Poly poly_sub(const Poly& a, const Poly& b, const MonOrder& ord);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b, const MonOrder& ord);
Poly poly_mul_term(const Poly& a, const Monomial& m, const Rat& c, const MonOrder& ord);
Poly poly_scale(const Poly& a, const Rat& c);

// Re-sort the terms of p under a different order.
Poly poly_reorder(const Poly& p, const MonOrder& ord);

// Divide all coefficients by the rational content; integer coefficients,
// positive leading coefficient. Zero stays zero.
Poly poly_primitive(const Poly& p, const MonOrder& ord);
Poly poly_monic(const Poly& p);

// Exact division a / b; throws if the division is not exact.
Poly poly_divexact(const Poly& a, const Poly& b, const MonOrder& ord);

// Substitute variable `v` by a rational constant. Arity is preserved
// (the variable simply no longer occurs).
Poly poly_subst(const Poly& p, int v, const Rat& value, const MonOrder& ord);

// Project onto a smaller ring: keep_vars[i] gives the new index of old
// variable i, or -1 if it must not occur (throws when it does).
Poly poly_project(const Poly& p, const std::vector<int>& new_index, int new_nvars,
                  const MonOrder& ord);

Rat poly_eval(const Poly& p, const std::vector<Rat>& xs);

// Collect p as a univariate polynomial in variable v; the coefficients must
// not involve any other variable (throws otherwise).
UPoly poly_to_upoly(const Poly& p, int v);
Poly upoly_to_poly(const UPoly& u, int nvars, int v, const MonOrder& ord);

// det of a square matrix of polynomials, fraction-free Bareiss.
Poly poly_det(const std::vector<std::vector<Poly>>& m, const MonOrder& ord);

}  // namespace fds

#endif
