#ifndef FDS_RATIONAL_HPP
#define FDS_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace fds {

// Exact arithmetic substrate. mpq_class keeps gcd(num,den)=1 and den>0
// after every operation, which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline int sgn(const Rat& q) { return static_cast<int>(mpq_sgn(q.get_mpq_t())); }
inline int sgn(const Int& z) { return static_cast<int>(mpz_sgn(z.get_mpz_t())); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Largest integer square divisor removed: n = square * kernel, kernel squarefree.
// Trial division; fine for the small radicands of the construction module.
inline void squarefree_split(const Int& n, Int& square_root, Int& kernel) {
  Int m = n;
  square_root = 1;
  kernel = 1;
  if (m == 0) { kernel = 0; return; }
  for (Int p = 2; p * p <= m; ++p) {
    Int p2 = p * p;
    while (mpz_divisible_p(m.get_mpz_t(), p2.get_mpz_t())) {
      m /= p2;
      square_root *= p;
    }
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      kernel *= p;
    }
  }
  kernel *= m;
}

}  // namespace fds

#endif
