#ifndef FDS_MINORS_HPP
#define FDS_MINORS_HPP

#include <vector>

#include "fds/candidate.hpp"
#include "fds/groebner.hpp"
#include "fds/poly.hpp"

namespace fds {

enum class Mode { Spherical, General };

const char* mode_name(Mode m);

// Rank condition rank <= d as a polynomial system. A symmetric matrix has
// rank <= d exactly when all its principal minors of orders d+1 and d+2
// vanish, so those cut out the same variety as the full set of
// binom(n,d+1)^2 order-(d+1) minors at a fraction of the generator count.
// The saturation generator 1 + u*prod(factors) of the paper's systems forces
// the color values pairwise distinct and away from the forbidden constants;
// it is stored in factored form and only combined with u when needed.
//
// Variable layout (x-ring; u goes one index past the end when embedded):
//   spherical: x_1..x_c at indices 0..c-1                  (x_arity = c)
//   general:   x_2..x_c at indices 0..c-2; color 0 is the constant 1
//              (x_arity = c-1)
struct MinorSystem {
  Mode mode = Mode::Spherical;
  int dim = 0;       // ambient dimension d
  int order = 0;     // n of the candidate matrix
  int ncolors = 0;   // colors actually used by the candidate
  int x_arity = 0;   // ring arity without u
  int arity = 0;     // ring arity including u
  std::vector<Poly> minors;             // in the x-ring
  std::vector<Poly> distinct_factors;   // x_j - x_k  (and x_i - 1 spherical / x_i, x_i - 1 general)
  std::vector<Poly> bound_factors;      // the "forbidden value" part of the product

  // Saturation factors = bound_factors ++ distinct_factors.
  std::vector<Poly> all_factors() const;
  // The system in the paper's shape: minors and 1 + u*prod(factors), all in
  // the (x_arity+1)-variable ring with u last.
  std::vector<Poly> generators_with_u() const;
};

// Symbolic matrices with entries in variables x_1..x_c (arity = nvars).
std::vector<std::vector<Poly>> symbolic_gram(const Candidate& g, int nvars);
// Centered matrix C = [G_in + G_jn - G_ij + delta_ij], base = last vertex,
// entries in x_1..x_c (no normalization).
std::vector<std::vector<Poly>> symbolic_centered(const Candidate& g, int nvars);

MinorSystem build_spherical_system(const Candidate& g, int d);
MinorSystem build_general_system(const Candidate& g, int d);

// Unnormalized order-(d+1) principal minors of the centered matrix, in
// variables x_1..x_c; used by the homogeneity property test.
std::vector<Poly> general_minors_unnormalized(const Candidate& g, int d);

enum class Verdict { Feasible, Infeasible, Unknown };

// Infeasible iff 1 lies in the ideal of the full system. Unknown (budget)
// must be treated as feasible by callers: the filter may only ever discard
// proven cases.
Verdict rank_feasible(const MinorSystem& sys, const GroebnerBudget& budget = {});

// The Groebner basis of the minor ideal in the x-ring (no u). Empty optional
// on budget exhaustion.
struct MinorBasis {
  GbStatus status = GbStatus::Ok;
  std::vector<Poly> basis;
};
MinorBasis minor_ideal_basis(const MinorSystem& sys, const GroebnerBudget& budget = {});

const char* verdict_name(Verdict v);

// Batch kernels over independent candidates.
std::vector<Verdict> feasibility_batch_serial(const std::vector<Candidate>& cands, Mode mode,
                                              int d, const GroebnerBudget& budget);
std::vector<Verdict> feasibility_batch_parallel(const std::vector<Candidate>& cands, Mode mode,
                                                int d, const GroebnerBudget& budget);

}  // namespace fds

#endif
