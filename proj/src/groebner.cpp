#include "fds/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace fds {

namespace {

void check_arity(const std::vector<Poly>& ps, int nvars) {
  for (const auto& p : ps)
    if (p.nvars != nvars) throw std::invalid_argument("polynomial arity mismatch");
}

// Full reduction with exact rational arithmetic.
Poly reduce_exact(const Poly& f, const std::vector<Poly>& basis, const MonOrder& ord) {
  Poly work = f;
  size_t pos = 0;
  while (pos < work.terms.size()) {
    const Term& t = work.terms[pos];
    const Poly* red = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.lead().m.divides(t.m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      ++pos;
      continue;
    }
    Monomial qm = t.m.div(red->lead().m);
    Rat qc = t.c / red->lead().c;
    work = poly_sub(work, poly_mul_term(*red, qm, qc, ord), ord);
  }
  return work;
}

}  // namespace

Poly poly_reduce(const Poly& f, const std::vector<Poly>& basis, const MonOrder& ord) {
  check_arity(basis, f.nvars);
  for (const auto& g : basis)
    if (g.is_zero()) throw std::invalid_argument("poly_reduce: zero basis element");
  return reduce_exact(f, basis, ord);
}

IncrementalGB::IncrementalGB(int nvars, const MonOrder& ord, const GroebnerBudget& budget)
    : nvars_(nvars), ord_(ord), budget_(budget) {}

// Fraction-free full reduction: the result is the normal form up to a
// positive rational factor, returned content-free. Determinantal generators
// carry huge integer content, so coefficients are kept integral, scaled by
// the minimal factor per step, and content-stripped periodically.
Poly IncrementalGB::reduce_primitive(const Poly& f, uint64_t* steps) {
  Poly work = poly_primitive(f, ord_);
  size_t pos = 0;
  int since_strip = 0;
  while (pos < work.terms.size()) {
    const Term& t = work.terms[pos];
    const Poly* red = nullptr;
    for (const auto& g : basis_) {
      if (g.lead().m.divides(t.m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      ++pos;
      continue;
    }
    if (++*steps > budget_.max_reduction_steps) {
      exhausted_ = true;
      return work;
    }
    Monomial qm = t.m.div(red->lead().m);
    // (lc/d) * work - (c/d) * qm * g with d = gcd(c, lc); basis elements are
    // primitive so lc > 0 and both factors are integers.
    Int d = int_gcd(t.c.get_num(), red->lead().c.get_num());
    Rat scale = red->lead().c / Rat(d);
    Rat mult = t.c / Rat(d);
    Poly scaled = scale == 1 ? work : poly_scale(work, scale);
    work = poly_sub(scaled, poly_mul_term(*red, qm, mult, ord_), ord_);
    if (++since_strip >= 16) {
      since_strip = 0;
      if (!work.is_zero()) {
        size_t keep = pos;
        work = poly_primitive(work, ord_);
        pos = keep;
      }
    }
  }
  if (!work.is_zero()) work = poly_primitive(work, ord_);
  return work;
}

void IncrementalGB::update_pairs(uint32_t t) {
  // Gebauer-Moeller update of the critical pair set for new element t.
  const Monomial& lt = basis_[t].lead().m;
  std::vector<Pair> fresh;
  fresh.reserve(t);
  for (uint32_t i = 0; i < t; ++i)
    fresh.push_back({i, t, Monomial::lcm(basis_[i].lead().m, lt)});

  // Old pairs: chain criterion.
  std::vector<Pair> kept;
  kept.reserve(pairs_.size());
  for (const auto& p : pairs_) {
    bool drop = lt.divides(p.lcm) &&
                !(Monomial::lcm(basis_[p.i].lead().m, lt) == p.lcm) &&
                !(Monomial::lcm(basis_[p.j].lead().m, lt) == p.lcm);
    if (!drop) kept.push_back(p);
  }
  pairs_.swap(kept);

  // New pairs: remove (i,t) when another new lcm strictly divides it.
  std::vector<bool> dead(fresh.size(), false);
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (dead[a]) continue;
    for (size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || dead[b]) continue;
      if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
        dead[a] = true;
        break;
      }
    }
  }
  // Equal lcms: keep the first.
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (dead[a]) continue;
    for (size_t b = a + 1; b < fresh.size(); ++b)
      if (!dead[b] && fresh[a].lcm == fresh[b].lcm) dead[b] = true;
  }
  // Buchberger's coprimality criterion.
  for (size_t a = 0; a < fresh.size(); ++a)
    if (!dead[a] && basis_[fresh[a].i].lead().m.coprime(lt)) dead[a] = true;

  for (size_t a = 0; a < fresh.size(); ++a)
    if (!dead[a]) pairs_.push_back(fresh[a]);
}

void IncrementalGB::seed_groebner_basis(const std::vector<Poly>& gb) {
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      trivial_ = true;
      basis_.clear();
      basis_.push_back(Poly::constant(nvars_, Rat(1)));
      pairs_.clear();
      return;
    }
    basis_.push_back(poly_primitive(g, ord_));
  }
}

bool IncrementalGB::add_generator(const Poly& g) {
  if (g.nvars != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  if (trivial_ || exhausted_) return false;
  Poly h = reduce_primitive(poly_primitive(g, ord_), &steps_);
  if (exhausted_ || h.is_zero()) return false;
  if (h.is_constant()) {
    trivial_ = true;
    basis_.clear();
    basis_.push_back(Poly::constant(nvars_, Rat(1)));
    pairs_.clear();
    return true;
  }
  if (h.total_degree() > budget_.max_degree || basis_.size() >= budget_.max_basis) {
    exhausted_ = true;
    return false;
  }
  basis_.push_back(h);
  update_pairs(static_cast<uint32_t>(basis_.size() - 1));
  process_all_pairs();
  return true;
}

void IncrementalGB::process_all_pairs() {
  while (!pairs_.empty() && !trivial_ && !exhausted_) {
    // Normal selection: smallest lcm under the active order.
    size_t best = 0;
    for (size_t k = 1; k < pairs_.size(); ++k)
      if (ord_.cmp(pairs_[k].lcm, pairs_[best].lcm) < 0) best = k;
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();

    const Poly& f = basis_[p.i];
    const Poly& g = basis_[p.j];
    Monomial mf = p.lcm.div(f.lead().m);
    Monomial mg = p.lcm.div(g.lead().m);
    Poly s = poly_sub(poly_mul_term(f, mf, g.lead().c, ord_),
                      poly_mul_term(g, mg, f.lead().c, ord_), ord_);
    Poly h = reduce_primitive(s, &steps_);
    if (exhausted_) return;
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      trivial_ = true;
      basis_.clear();
      basis_.push_back(Poly::constant(nvars_, Rat(1)));
      pairs_.clear();
      return;
    }
    if (h.total_degree() > budget_.max_degree || basis_.size() >= budget_.max_basis) {
      exhausted_ = true;
      return;
    }
    basis_.push_back(h);
    update_pairs(static_cast<uint32_t>(basis_.size() - 1));
  }
}

GroebnerResult IncrementalGB::finish() {
  GroebnerResult res;
  if (exhausted_) {
    res.status = GbStatus::BudgetExhausted;
    return res;
  }
  if (trivial_) {
    res.basis.push_back(Poly::constant(nvars_, Rat(1)));
    return res;
  }
  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis_.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis_.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = basis_[j].lead().m;
      const Monomial& li = basis_[i].lead().m;
      if (lj.divides(li) && (!(li == lj) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis_[i]);
  }
  // Interreduce tails.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Poly r = reduce_exact(minimal[i], others, ord_);
      r = r.is_zero() ? r : poly_primitive(r, ord_);
      if (!(r == minimal[i])) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
          --i;
        } else {
          minimal[static_cast<size_t>(i)] = r;
        }
      }
    }
  }
  for (auto& p : minimal) p = poly_monic(p);
  std::sort(minimal.begin(), minimal.end(),
            [&](const Poly& a, const Poly& b) { return ord_.cmp(a.lead().m, b.lead().m) < 0; });
  res.basis = std::move(minimal);
  return res;
}

long quotient_dimension(const std::vector<Poly>& gb, int nvars, long cap) {
  std::vector<Monomial> lms;
  lms.reserve(gb.size());
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return 0;
    lms.push_back(g.lead().m);
  }
  // Finite dimension iff every variable has a pure-power leading monomial.
  std::vector<int> bound(static_cast<size_t>(nvars), -1);
  for (const auto& m : lms) {
    int var = -1;
    bool pure = true;
    for (int i = 0; i < nvars; ++i) {
      if (m.e[static_cast<size_t>(i)] == 0) continue;
      if (var >= 0) {
        pure = false;
        break;
      }
      var = i;
    }
    if (pure && var >= 0) {
      int e = m.e[static_cast<size_t>(var)];
      if (bound[static_cast<size_t>(var)] < 0 || e < bound[static_cast<size_t>(var)])
        bound[static_cast<size_t>(var)] = e;
    }
  }
  long box = 1;
  for (int i = 0; i < nvars; ++i) {
    if (bound[static_cast<size_t>(i)] < 0) return -1;
    box *= bound[static_cast<size_t>(i)];
    if (box > 1000000L) return -1;
  }
  // Count box monomials below the staircase.
  long count = 0;
  Monomial m = Monomial::one(nvars);
  std::vector<int> ex(static_cast<size_t>(nvars), 0);
  while (true) {
    bool standard = true;
    for (const auto& lm : lms)
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    if (standard && ++count > cap) return -1;
    int i = 0;
    for (; i < nvars; ++i) {
      if (ex[static_cast<size_t>(i)] + 1 < bound[static_cast<size_t>(i)]) {
        ++ex[static_cast<size_t>(i)];
        m.e[static_cast<size_t>(i)]++;
        m.deg++;
        break;
      }
      m.deg -= static_cast<uint32_t>(ex[static_cast<size_t>(i)]);
      m.e[static_cast<size_t>(i)] = 0;
      ex[static_cast<size_t>(i)] = 0;
    }
    if (i == nvars) break;
  }
  return count;
}

GroebnerResult groebner_reduced(const std::vector<Poly>& gens, const MonOrder& ord,
                                const GroebnerBudget& budget) {
  if (gens.empty()) throw std::invalid_argument("groebner_reduced: empty generator list");
  check_arity(gens, gens[0].nvars);
  IncrementalGB gb(gens[0].nvars, ord, budget);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    gb.add_generator(g);
    if (gb.known_trivial() || gb.budget_exhausted()) break;
  }
  return gb.finish();
}

Tri ideal_is_trivial(const std::vector<Poly>& gens, const MonOrder& ord,
                     const GroebnerBudget& budget) {
  GroebnerResult r = groebner_reduced(gens, ord, budget);
  if (r.status == GbStatus::BudgetExhausted) return Tri::Unknown;
  return r.trivial() ? Tri::True : Tri::False;
}

}  // namespace fds
