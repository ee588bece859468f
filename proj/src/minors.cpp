#include "fds/minors.hpp"

#include <omp.h>

#include <stdexcept>

namespace fds {

const char* mode_name(Mode m) { return m == Mode::Spherical ? "spherical" : "general"; }

namespace {

// All size-k index subsets of {0..n-1}, visited in lex order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

Poly principal_minor(const std::vector<std::vector<Poly>>& m, const std::vector<int>& idx,
                     const MonOrder& ord) {
  const int k = static_cast<int>(idx.size());
  std::vector<std::vector<Poly>> sub(static_cast<size_t>(k), std::vector<Poly>(static_cast<size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      sub[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          m[static_cast<size_t>(idx[static_cast<size_t>(a)])][static_cast<size_t>(idx[static_cast<size_t>(b)])];
  return poly_det(sub, ord);
}

void append_principal_minors(const std::vector<std::vector<Poly>>& m, int size,
                             std::vector<Poly>& out, const MonOrder& ord) {
  const int n = static_cast<int>(m.size());
  if (size > n) return;
  for_each_subset(n, size, [&](const std::vector<int>& idx) {
    Poly d = principal_minor(m, idx, ord);
    if (!d.is_zero()) out.push_back(d);
  });
}

Poly extend_arity(const Poly& p, int new_arity, const MonOrder& ord) {
  std::vector<int> remap(static_cast<size_t>(p.nvars));
  for (int i = 0; i < p.nvars; ++i) remap[static_cast<size_t>(i)] = i;
  return poly_project(p, remap, new_arity, ord);
}

}  // namespace

std::vector<Poly> MinorSystem::all_factors() const {
  std::vector<Poly> f = bound_factors;
  f.insert(f.end(), distinct_factors.begin(), distinct_factors.end());
  return f;
}

std::vector<Poly> MinorSystem::generators_with_u() const {
  MonOrder ord{OrderKind::DegRevLex};
  std::vector<Poly> out;
  for (const auto& m : minors) out.push_back(extend_arity(m, arity, ord));
  Poly f = Poly::constant(arity, Rat(1));
  for (const auto& fac : all_factors()) f = poly_mul(f, extend_arity(fac, arity, ord), ord);
  out.push_back(poly_add(Poly::constant(arity, Rat(1)),
                         poly_mul(Poly::var(arity, arity - 1), f, ord), ord));
  return out;
}

std::vector<std::vector<Poly>> symbolic_gram(const Candidate& g, int nvars) {
  const int n = g.n;
  std::vector<std::vector<Poly>> m(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Poly::constant(nvars, Rat(1));
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      Poly x = Poly::var(nvars, g.color(i, j));
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = x;
      m[static_cast<size_t>(j)][static_cast<size_t>(i)] = x;
    }
  return m;
}

std::vector<std::vector<Poly>> symbolic_centered(const Candidate& g, int nvars) {
  const int n = g.n;
  const int base = n - 1;
  MonOrder ord{OrderKind::DegRevLex};
  auto entry = [&](int i, int j) {
    Poly r = Poly::var(nvars, g.color(i, base));
    r = poly_add(r, Poly::var(nvars, g.color(j, base)), ord);
    if (i != j) r = poly_sub(r, Poly::var(nvars, g.color(i, j)), ord);
    // i == j: -G_ii + delta_ii = -1 + 1 = 0
    return r;
  };
  std::vector<std::vector<Poly>> m(static_cast<size_t>(n - 1), std::vector<Poly>(static_cast<size_t>(n - 1)));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry(i, j);
  return m;
}

MinorSystem build_spherical_system(const Candidate& g, int d) {
  if (g.n <= d) throw std::invalid_argument("spherical system: need n >= d+1, rank condition is vacuous");
  MinorSystem sys;
  sys.mode = Mode::Spherical;
  sys.dim = d;
  sys.order = g.n;
  sys.ncolors = g.colors_used();
  const int c = sys.ncolors;
  sys.x_arity = c;
  sys.arity = c + 1;
  MonOrder ord{OrderKind::DegRevLex};
  auto m = symbolic_gram(g, sys.x_arity);
  append_principal_minors(m, d + 1, sys.minors, ord);
  append_principal_minors(m, d + 2, sys.minors, ord);
  for (int i = 0; i < c; ++i)
    sys.bound_factors.push_back(
        poly_sub(Poly::var(sys.x_arity, i), Poly::constant(sys.x_arity, Rat(1)), ord));
  for (int j = 0; j < c; ++j)
    for (int k = j + 1; k < c; ++k)
      sys.distinct_factors.push_back(
          poly_sub(Poly::var(sys.x_arity, j), Poly::var(sys.x_arity, k), ord));
  return sys;
}

MinorSystem build_general_system(const Candidate& g, int d) {
  if (g.n <= d + 1) throw std::invalid_argument("general system: need n >= d+2");
  MinorSystem sys;
  sys.mode = Mode::General;
  sys.dim = d;
  sys.order = g.n;
  sys.ncolors = g.colors_used();
  const int c = sys.ncolors;
  sys.x_arity = c - 1;
  sys.arity = c;
  MonOrder ord{OrderKind::DegRevLex};

  // Build C in temporary variables x_1..x_c, substitute x_1 = 1, then
  // project away the dead variable.
  auto m = symbolic_centered(g, c);
  std::vector<int> remap(static_cast<size_t>(c), -1);
  for (int t = 1; t < c; ++t) remap[static_cast<size_t>(t)] = t - 1;
  std::vector<Poly> raw;
  append_principal_minors(m, d + 1, raw, ord);
  append_principal_minors(m, d + 2, raw, ord);
  for (const auto& p : raw) {
    Poly q = poly_subst(p, 0, Rat(1), ord);
    q = poly_project(q, remap, sys.x_arity, ord);
    if (!q.is_zero()) sys.minors.push_back(q);
  }
  for (int i = 0; i < c - 1; ++i) {
    Poly xi = Poly::var(sys.x_arity, i);
    sys.bound_factors.push_back(xi);
    sys.bound_factors.push_back(poly_sub(xi, Poly::constant(sys.x_arity, Rat(1)), ord));
  }
  for (int j = 0; j < c - 1; ++j)
    for (int k = j + 1; k < c - 1; ++k)
      sys.distinct_factors.push_back(
          poly_sub(Poly::var(sys.x_arity, j), Poly::var(sys.x_arity, k), ord));
  return sys;
}

std::vector<Poly> general_minors_unnormalized(const Candidate& g, int d) {
  MonOrder ord{OrderKind::DegRevLex};
  const int c = g.colors_used();
  auto m = symbolic_centered(g, c);
  std::vector<Poly> out;
  append_principal_minors(m, d + 1, out, ord);
  return out;
}

MinorBasis minor_ideal_basis(const MinorSystem& sys, const GroebnerBudget& budget) {
  MonOrder ord{OrderKind::DegRevLex};
  MinorBasis out;
  if (sys.minors.empty()) return out;  // zero ideal
  IncrementalGB gb(sys.x_arity, ord, budget);
  for (const auto& p : sys.minors) {
    gb.add_generator(p);
    if (gb.known_trivial() || gb.budget_exhausted()) break;
  }
  GroebnerResult r = gb.finish();
  out.status = r.status;
  out.basis = std::move(r.basis);
  return out;
}

Verdict rank_feasible(const MinorSystem& sys, const GroebnerBudget& budget) {
  MonOrder ord{OrderKind::DegRevLex};
  // Stage 1: Groebner basis of the minor ideal in the x-ring.
  MinorBasis mb = minor_ideal_basis(sys, budget);
  if (mb.status == GbStatus::BudgetExhausted) return Verdict::Unknown;
  if (mb.basis.size() == 1 && mb.basis[0].is_constant() && !mb.basis[0].is_zero())
    return Verdict::Infeasible;

  // Stage 2: the full system is infeasible iff prod(factors) vanishes on the
  // whole minor variety. A single factor already in the ideal settles it.
  Poly fprod = Poly::constant(sys.x_arity, Rat(1));
  for (const auto& fac : sys.all_factors()) {
    Poly nf = mb.basis.empty() ? fac : poly_reduce(fac, mb.basis, ord);
    if (nf.is_zero()) return Verdict::Infeasible;
    fprod = poly_mul(fprod, nf, ord);
    if (!mb.basis.empty()) fprod = poly_reduce(fprod, mb.basis, ord);
    if (fprod.is_zero()) return Verdict::Infeasible;
  }

  // Stage 3a: when the minor ideal is zero-dimensional, f vanishes on the
  // variety iff its image in the Artinian quotient is nilpotent; the
  // nilpotency index is at most the quotient dimension, so normal-form
  // powering decides membership without another basis computation.
  if (mb.basis.empty()) return Verdict::Feasible;  // zero ideal, full space
  long qdim = quotient_dimension(mb.basis, sys.x_arity, 600);
  if (qdim >= 0) {
    Poly g = fprod;  // = NF(f), nonzero
    for (long k = 1; k < qdim; ++k) {
      g = poly_reduce(poly_mul(g, fprod, ord), mb.basis, ord);
      if (g.is_zero()) return Verdict::Infeasible;
      g = poly_primitive(g, ord);
    }
    return Verdict::Feasible;
  }

  // Stage 3b: Rabinowitsch. 1 in <minors, 1 + u*f> iff f vanishes on V(minors).
  const int full = sys.x_arity + 1;
  IncrementalGB gb(full, ord, budget);
  std::vector<Poly> seed;
  for (const auto& p : mb.basis) seed.push_back(extend_arity(p, full, ord));
  gb.seed_groebner_basis(seed);
  Poly sat = poly_add(Poly::constant(full, Rat(1)),
                      poly_mul(Poly::var(full, full - 1), extend_arity(fprod, full, ord), ord), ord);
  gb.add_generator(sat);
  if (gb.budget_exhausted()) return Verdict::Unknown;
  if (gb.known_trivial()) return Verdict::Infeasible;
  return Verdict::Feasible;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Feasible: return "feasible";
    case Verdict::Infeasible: return "infeasible";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

Verdict one_verdict(const Candidate& g, Mode mode, int d, const GroebnerBudget& budget) {
  MinorSystem sys = mode == Mode::Spherical ? build_spherical_system(g, d)
                                            : build_general_system(g, d);
  return rank_feasible(sys, budget);
}

}  // namespace

std::vector<Verdict> feasibility_batch_serial(const std::vector<Candidate>& cands, Mode mode,
                                              int d, const GroebnerBudget& budget) {
  std::vector<Verdict> out(cands.size());
  for (size_t i = 0; i < cands.size(); ++i) out[i] = one_verdict(cands[i], mode, d, budget);
  return out;
}

std::vector<Verdict> feasibility_batch_parallel(const std::vector<Candidate>& cands, Mode mode,
                                                int d, const GroebnerBudget& budget) {
  std::vector<Verdict> out(cands.size());
  const long nc = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < nc; ++i)
    out[static_cast<size_t>(i)] = one_verdict(cands[static_cast<size_t>(i)], mode, d, budget);
  return out;
}

}  // namespace fds
