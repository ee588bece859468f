#ifndef FDS_ALGEBRAIC_HPP
#define FDS_ALGEBRAIC_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fds/rational.hpp"
#include "fds/upoly.hpp"

namespace fds {

// A real algebraic number: a defining polynomial plus an isolating interval.
// Rational numbers use a degenerate interval lo == hi. Construction asserts,
// via a Sturm sequence, that the interval isolates exactly one real root.
struct AlgebraicNumber {
  UPoly min_poly;  // primitive integer coefficients
  Rat lo, hi;
  bool irreducible = false;  // set when certified (degree <= 3 w/o rational
                             // roots, or a mod-p certificate succeeded)

  bool is_rational() const { return lo == hi; }
  Rat rational_value() const { return lo; }

  static AlgebraicNumber from_rational(const Rat& r);
  // Positive square root of a non-square positive rational.
  static AlgebraicNumber sqrt_of(const Rat& m);
  // Verifying constructor; throws on a malformed interval.
  static AlgebraicNumber make(UPoly p, const Rat& lo, const Rat& hi);

  double approx() const;
  std::string str() const;
};

// Exact sign of expr(a). Decides zero through gcd with the defining
// polynomial, then refines the interval by bisection until the sign shows.
int algebraic_sign(const AlgebraicNumber& a, const UPoly& expr);

// Q(alpha). Shares interval refinement across all elements of the field.
class NumberField {
 public:
  explicit NumberField(AlgebraicNumber alpha);

  const AlgebraicNumber& alpha() const { return alpha_; }
  int degree() const { return alpha_.min_poly.degree(); }
  bool trivial() const { return alpha_.is_rational(); }

  // Current cached isolating interval, refined at least to width `width`.
  void interval(const Rat& width, Rat& lo, Rat& hi) const;

 private:
  AlgebraicNumber alpha_;
  mutable Rat lo_, hi_;
  mutable std::mutex mu_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of Q(alpha), represented as a polynomial in alpha of degree less
// than deg(min_poly). A null field pointer means a plain rational.
class NFElem {
 public:
  NFElem() : c_{Rat(0)} {}
  explicit NFElem(const Rat& q) : c_{q} {}
  NFElem(FieldPtr F, std::vector<Rat> coeffs);

  static NFElem generator(const FieldPtr& F);

  const FieldPtr& field() const { return F_; }
  bool is_rational() const;
  Rat rational_value() const;  // throws when not rational
  bool is_zero() const;
  int sign() const;

  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator/(const NFElem& o) const;
  NFElem operator-() const;
  bool operator==(const NFElem& o) const { return (*this - o).is_zero(); }
  bool operator!=(const NFElem& o) const { return !(*this == o); }

  // Exact comparison via sign of the difference.
  bool operator<(const NFElem& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const NFElem& o) const { return (*this - o).sign() <= 0; }

  NFElem inverse() const;
  double approx() const;
  // Rational enclosure of width <= w.
  void enclosure(const Rat& w, Rat& lo, Rat& hi) const;
  std::string str() const;

  const std::vector<Rat>& coeffs() const { return c_; }
  UPoly as_upoly() const { return UPoly(c_); }

 private:
  static void promote(NFElem& a, NFElem& b);

  FieldPtr F_;            // null = rational
  std::vector<Rat> c_;    // length deg(F) when F set, else length 1
};

NFElem nf_from_upoly(const FieldPtr& F, const UPoly& p);

// Convenience: q1 + q2*alpha for quadratic fields.
NFElem nf_linear(const FieldPtr& F, const Rat& q1, const Rat& q2);

}  // namespace fds

#endif
