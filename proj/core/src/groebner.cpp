#include "octic/groebner.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace octic {

Poly normal_form(const Ring& R, const Poly& f, const std::vector<Poly>& G) {
  Poly rem;
  Poly w = f;
  std::vector<Term> rem_terms;
  while (!w.is_zero()) {
    bool reduced = false;
    for (const Poly& g : G) {
      if (g.is_zero()) continue;
      if (mono_divides(g.lead().m, w.lead().m)) {
        Term q;
        q.m = mono_div(w.lead().m, g.lead().m);
        q.c = R.field.mul(w.lead().c, R.field.inv(g.lead().c));
        w = poly_sub(R, w, poly_mul_term(R, g, q));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem_terms.push_back(w.lead());
      w.t.erase(w.t.begin());
    }
  }
  rem.t = std::move(rem_terms);  // already in descending order
  return rem;
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
  return normal_form(G.ring, f, G.g);
}

namespace {

Poly s_poly(const Ring& R, const Poly& a, const Poly& b) {
  Monomial l = mono_lcm(a.lead().m, b.lead().m);
  Term ta{mono_div(l, a.lead().m), R.field.inv(a.lead().c)};
  Term tb{mono_div(l, b.lead().m), R.field.inv(b.lead().c)};
  return poly_sub(R, poly_mul_term(R, a, ta), poly_mul_term(R, b, tb));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int deg;
};

}  // namespace

GroebnerBasis buchberger(const Ring& R, std::vector<Poly> gens) {
  std::vector<Poly> G;
  for (Poly& f : gens)
    if (!f.is_zero()) G.push_back(poly_monic(R, f));

  std::list<Pair> pairs;
  auto add_pairs_for = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Monomial l = mono_lcm(G[i].lead().m, G[n].lead().m);
      pairs.push_back(Pair{i, n, l, l.deg()});
    }
  };
  for (std::size_t n = 1; n < G.size(); ++n) add_pairs_for(n);

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm by degree, then by term order, then index.
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      if (it->deg < best->deg ||
          (it->deg == best->deg && R.order.cmp(it->lcm, best->lcm) < 0) ||
          (it->deg == best->deg && it->lcm == best->lcm &&
           (it->i < best->i || (it->i == best->i && it->j < best->j))))
        best = it;
    }
    Pair pr = *best;
    pairs.erase(best);

    const Monomial& li = G[pr.i].lead().m;
    const Monomial& lj = G[pr.j].lead().m;
    // Product criterion.
    if (mono_mul(li, lj) == pr.lcm) continue;
    // Chain criterion: some k with LT_k | lcm and both pairs already gone.
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!mono_divides(G[k].lead().m, pr.lcm)) continue;
      bool pending = false;
      for (const Pair& q : pairs) {
        if ((q.i == std::min(pr.i, k) && q.j == std::max(pr.i, k)) ||
            (q.i == std::min(pr.j, k) && q.j == std::max(pr.j, k))) {
          pending = true;
          break;
        }
      }
      if (!pending) skip = true;
    }
    if (skip) continue;

    Poly r = normal_form(R, s_poly(R, G[pr.i], G[pr.j]), G);
    if (!r.is_zero()) {
      G.push_back(poly_monic(R, r));
      add_pairs_for(G.size() - 1);
    }
  }

  // Minimalize: drop elements whose lead term is divisible by another's.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (k == i) continue;
      if (mono_divides(G[k].lead().m, G[i].lead().m) &&
          !(G[k].lead().m == G[i].lead().m && k > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Autoreduce.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    Poly r = normal_form(R, minimal[i], others);
    if (!r.is_zero()) reduced.push_back(poly_monic(R, r));
  }
  std::sort(reduced.begin(), reduced.end(), [&R](const Poly& a, const Poly& b) {
    return R.order.cmp(a.lead().m, b.lead().m) > 0;
  });
  return GroebnerBasis{R, std::move(reduced)};
}

bool is_certified_groebner(const GroebnerBasis& G) {
  const Ring& R = G.ring;
  for (std::size_t i = 0; i < G.g.size(); ++i)
    for (std::size_t j = i + 1; j < G.g.size(); ++j)
      if (!normal_form(R, s_poly(R, G.g[i], G.g[j]), G.g).is_zero()) return false;
  return true;
}

bool ideal_contains(const GroebnerBasis& G, const Poly& f) {
  return normal_form(f, G).is_zero();
}

namespace {

/// Ring with one extra auxiliary variable placed last and eliminated first.
Ring aux_ring(const Ring& R) {
  int n = R.nvars();
  if (n >= kMaxVars) throw std::invalid_argument("no auxiliary variable available");
  return make_ring(R.field, n + 1, static_cast<std::uint8_t>(1u << n));
}

bool uses_vars(const Poly& f, std::uint8_t mask) {
  for (const Term& t : f.t)
    for (int i = 0; i < kMaxVars; ++i)
      if ((mask & (1u << i)) && t.m.e[static_cast<std::size_t>(i)] != 0) return true;
  return false;
}

}  // namespace

std::vector<Poly> ideal_intersect(const Ring& R, const std::vector<Poly>& A,
                                  const std::vector<Poly>& B) {
  Ring Ru = aux_ring(R);
  int uvar = R.nvars();
  Poly u = poly_from_terms(Ru, {{mono({}), 1}});
  u.t[0].m.e[static_cast<std::size_t>(uvar)] = 1;
  Poly one_minus_u = poly_from_terms(Ru, {{mono({}), 1}});
  one_minus_u = poly_sub(Ru, one_minus_u, u);

  std::vector<Poly> gens;
  for (const Poly& a : A) gens.push_back(poly_mul(Ru, ring_convert(R, a, Ru), u));
  for (const Poly& b : B) gens.push_back(poly_mul(Ru, ring_convert(R, b, Ru), one_minus_u));
  GroebnerBasis gb = buchberger(Ru, std::move(gens));

  std::vector<Poly> out;
  std::uint8_t umask = static_cast<std::uint8_t>(1u << uvar);
  for (const Poly& g : gb.g)
    if (!uses_vars(g, umask)) out.push_back(ring_convert(Ru, g, R));
  return out;
}

Poly poly_exact_div(const Ring& R, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("exact division by zero");
  Poly w = f, q;
  Fe ginv = R.field.inv(g.lead().c);
  std::vector<Term> qt;
  while (!w.is_zero()) {
    if (!mono_divides(g.lead().m, w.lead().m))
      throw std::domain_error("inexact polynomial division");
    Term t{mono_div(w.lead().m, g.lead().m), R.field.mul(w.lead().c, ginv)};
    qt.push_back(t);
    w = poly_sub(R, w, poly_mul_term(R, g, t));
  }
  return poly_from_terms(R, std::move(qt));
}

std::vector<Poly> ideal_quotient(const Ring& R, const std::vector<Poly>& I,
                                 const std::vector<Poly>& J) {
  std::vector<Poly> nonzero_J;
  for (const Poly& j : J)
    if (!j.is_zero()) nonzero_J.push_back(j);
  if (nonzero_J.empty())  // (I : 0) = (1)
    return {poly_from_terms(R, {{mono({}), 1}})};

  std::vector<Poly> result;
  bool first = true;
  for (const Poly& j : nonzero_J) {
    std::vector<Poly> cap = ideal_intersect(R, I, {j});
    std::vector<Poly> quot;
    for (const Poly& c : cap) quot.push_back(poly_exact_div(R, c, j));
    if (first) {
      result = std::move(quot);
      first = false;
    } else {
      result = ideal_intersect(R, result, quot);
    }
  }
  return result;
}

std::vector<Poly> saturate(const Ring& R, const std::vector<Poly>& I,
                           const std::vector<Poly>& J) {
  std::vector<Poly> cur = I;
  GroebnerBasis prev = buchberger(R, cur);
  for (;;) {
    std::vector<Poly> next = ideal_quotient(R, prev.g, J);
    GroebnerBasis nextgb = buchberger(R, next);
    if (groebner_equal(prev, nextgb)) return prev.g;
    prev = std::move(nextgb);
  }
}

std::vector<Poly> eliminate(const Ring& R, const std::vector<Poly>& I,
                            std::uint8_t keep_mask) {
  std::uint8_t all = static_cast<std::uint8_t>((1u << R.nvars()) - 1);
  std::uint8_t elim = static_cast<std::uint8_t>(all & ~keep_mask);
  if (elim == 0) return buchberger(R, I).g;
  Ring Re = make_ring(R.field, R.nvars(), elim);
  std::vector<Poly> gens;
  for (const Poly& f : I) gens.push_back(ring_convert(R, f, Re));
  GroebnerBasis gb = buchberger(Re, std::move(gens));
  std::vector<Poly> out;
  for (const Poly& g : gb.g)
    if (!uses_vars(g, elim)) out.push_back(ring_convert(Re, g, R));
  return out;
}

bool groebner_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.g.size() != b.g.size()) return false;
  for (std::size_t i = 0; i < a.g.size(); ++i)
    if (!(a.g[i] == b.g[i])) return false;
  return true;
}

}  // namespace octic
