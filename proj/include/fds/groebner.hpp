#ifndef FDS_GROEBNER_HPP
#define FDS_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "fds/poly.hpp"

namespace fds {

struct GroebnerBudget {
  uint64_t max_reduction_steps = 50'000'000;  // single-term cancellation steps
  size_t max_basis = 4000;
  uint32_t max_degree = 200;
};

enum class GbStatus { Ok, BudgetExhausted };

struct GroebnerResult {
  GbStatus status = GbStatus::Ok;
  std::vector<Poly> basis;  // reduced Groebner basis when status == Ok
  bool trivial() const { return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero(); }
};

// Normal form of f modulo basis: no term of the result is divisible by any
// basis leading term. Exact rational arithmetic; canonical for fixed inputs.
Poly poly_reduce(const Poly& f, const std::vector<Poly>& basis, const MonOrder& ord);

// Unique reduced Groebner basis of <gens> under ord (monic, interreduced,
// sorted ascending by leading monomial).
GroebnerResult groebner_reduced(const std::vector<Poly>& gens, const MonOrder& ord,
                                const GroebnerBudget& budget = {});

// Dimension of K[x]/<basis> as a K-vector space (count of standard
// monomials), or -1 when infinite or above `cap`. Requires a Groebner basis.
long quotient_dimension(const std::vector<Poly>& gb, int nvars, long cap);

enum class Tri { True, False, Unknown };

// 1 in <gens>? Unknown when the budget ran out; callers that use this as a
// pruning filter must treat Unknown as "keep".
Tri ideal_is_trivial(const std::vector<Poly>& gens, const MonOrder& ord,
                     const GroebnerBudget& budget = {});

// Incremental interface used by the staged minor generation: feed generators
// one at a time and stop early once the ideal is known trivial.
class IncrementalGB {
 public:
  IncrementalGB(int nvars, const MonOrder& ord, const GroebnerBudget& budget = {});

  // Returns false iff the generator was already in the ideal (reduces to 0).
  bool add_generator(const Poly& g);

  // Seed with polynomials already known to form a Groebner basis (their
  // mutual S-polynomials reduce to zero, so no pairs are scheduled).
  void seed_groebner_basis(const std::vector<Poly>& gb);

  bool known_trivial() const { return trivial_; }
  bool budget_exhausted() const { return exhausted_; }
  // Current (non-reduced) basis; call finish() for the reduced one.
  const std::vector<Poly>& raw_basis() const { return basis_; }
  GroebnerResult finish();

 private:
  friend GroebnerResult groebner_reduced(const std::vector<Poly>&, const MonOrder&,
                                         const GroebnerBudget&);
  struct Pair {
    uint32_t i, j;
    Monomial lcm;
  };

  void update_pairs(uint32_t t);
  void process_all_pairs();
  Poly reduce_primitive(const Poly& f, uint64_t* steps);

  int nvars_;
  MonOrder ord_;
  GroebnerBudget budget_;
  std::vector<Poly> basis_;
  std::vector<Pair> pairs_;
  uint64_t steps_ = 0;
  bool trivial_ = false;
  bool exhausted_ = false;
};

}  // namespace fds

#endif
