#include "octic/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace octic {

Monomial mono(std::initializer_list<int> exps) {
  Monomial m;
  int i = 0;
  for (int v : exps) {
    if (i >= kMaxVars) throw std::invalid_argument("too many exponents");
    m.e[static_cast<std::size_t>(i++)] = static_cast<std::uint16_t>(v);
  }
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i)
    r.e[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(a.e[static_cast<std::size_t>(i)] + b.e[static_cast<std::size_t>(i)]);
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i)
    r.e[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(b.e[static_cast<std::size_t>(i)] - a.e[static_cast<std::size_t>(i)]);
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i)
    r.e[static_cast<std::size_t>(i)] =
        std::max(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
  return r;
}

namespace {

// Grevlex restricted to the variables selected by `mask`.
int cmp_grevlex_masked(const Monomial& a, const Monomial& b, int nvars, std::uint8_t mask) {
  int da = 0, db = 0;
  for (int i = 0; i < nvars; ++i)
    if (mask & (1u << i)) {
      da += a.e[static_cast<std::size_t>(i)];
      db += b.e[static_cast<std::size_t>(i)];
    }
  if (da != db) return da > db ? 1 : -1;
  for (int i = nvars - 1; i >= 0; --i) {
    if (!(mask & (1u << i))) continue;
    int d = static_cast<int>(a.e[static_cast<std::size_t>(i)]) -
            static_cast<int>(b.e[static_cast<std::size_t>(i)]);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
  std::uint8_t all = static_cast<std::uint8_t>((1u << nvars) - 1);
  if (elim_mask != 0) {
    int c = cmp_grevlex_masked(a, b, nvars, elim_mask & all);
    if (c != 0) return c;
    return cmp_grevlex_masked(a, b, nvars, static_cast<std::uint8_t>(all & ~elim_mask));
  }
  return cmp_grevlex_masked(a, b, nvars, all);
}

Ring make_ring(std::uint64_t p, int nvars, std::uint8_t elim_mask) {
  return make_ring(PrimeField(p), nvars, elim_mask);
}

Ring make_ring(const PrimeField& F, int nvars, std::uint8_t elim_mask) {
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("bad variable count");
  return Ring{F, TermOrder{nvars, elim_mask}};
}

int Poly::degree() const {
  int d = -1;
  for (const Term& term : t) d = std::max(d, term.m.deg());
  return d;
}

bool Poly::is_homogeneous() const {
  if (t.empty()) return true;
  int d = t.front().m.deg();
  for (const Term& term : t)
    if (term.m.deg() != d) return false;
  return true;
}

bool Poly::operator==(const Poly& o) const {
  if (t.size() != o.t.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!(t[i].m == o.t[i].m) || t[i].c != o.t[i].c) return false;
  return true;
}

Poly poly_from_terms(const Ring& R, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&R](const Term& a, const Term& b) { return R.order.cmp(a.m, b.m) > 0; });
  Poly out;
  for (Term& term : terms) {
    if (term.c == 0) continue;
    if (!out.t.empty() && out.t.back().m == term.m) {
      out.t.back().c = R.field.add(out.t.back().c, term.c);
      if (out.t.back().c == 0) out.t.pop_back();
    } else {
      out.t.push_back(term);
    }
  }
  return out;
}

Poly poly_from(const Ring& R,
               std::initializer_list<std::pair<std::initializer_list<int>, std::int64_t>> terms) {
  std::vector<Term> ts;
  for (const auto& [exps, c] : terms) ts.push_back({mono(exps), R.field.reduce(c)});
  return poly_from_terms(R, std::move(ts));
}

Poly poly_add(const Ring& R, const Poly& f, const Poly& g) {
  Poly out;
  out.t.reserve(f.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < f.t.size() && j < g.t.size()) {
    int c = R.order.cmp(f.t[i].m, g.t[j].m);
    if (c > 0) {
      out.t.push_back(f.t[i++]);
    } else if (c < 0) {
      out.t.push_back(g.t[j++]);
    } else {
      Fe s = R.field.add(f.t[i].c, g.t[j].c);
      if (s != 0) out.t.push_back({f.t[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < f.t.size()) out.t.push_back(f.t[i++]);
  while (j < g.t.size()) out.t.push_back(g.t[j++]);
  return out;
}

Poly poly_neg(const Ring& R, const Poly& f) {
  Poly out = f;
  for (Term& term : out.t) term.c = R.field.neg(term.c);
  return out;
}

Poly poly_sub(const Ring& R, const Poly& f, const Poly& g) {
  return poly_add(R, f, poly_neg(R, g));
}

Poly poly_scale(const Ring& R, const Poly& f, Fe s) {
  if (s == 0) return {};
  Poly out = f;
  for (Term& term : out.t) term.c = R.field.mul(term.c, s);
  return out;
}

Poly poly_mul_term(const Ring& R, const Poly& f, const Term& t) {
  if (t.c == 0) return {};
  Poly out = f;
  for (Term& term : out.t) {
    term.m = mono_mul(term.m, t.m);
    term.c = R.field.mul(term.c, t.c);
  }
  return out;
}

Poly poly_mul(const Ring& R, const Poly& f, const Poly& g) {
  std::vector<Term> acc;
  acc.reserve(f.t.size() * g.t.size());
  for (const Term& a : f.t)
    for (const Term& b : g.t) acc.push_back({mono_mul(a.m, b.m), R.field.mul(a.c, b.c)});
  return poly_from_terms(R, std::move(acc));
}

Poly poly_monic(const Ring& R, const Poly& f) {
  if (f.is_zero() || f.lead().c == 1) return f;
  return poly_scale(R, f, R.field.inv(f.lead().c));
}

Poly partial_derivative(const Ring& R, const Poly& f, int var) {
  std::vector<Term> acc;
  for (const Term& term : f.t) {
    std::uint16_t e = term.m.e[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Term d = term;
    d.m.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e - 1);
    d.c = R.field.mul(term.c, R.field.reduce(e));
    acc.push_back(d);
  }
  return poly_from_terms(R, std::move(acc));
}

Fe evaluate(const Ring& R, const Poly& f, std::span<const Fe> point) {
  if (static_cast<int>(point.size()) < R.nvars())
    throw std::invalid_argument("evaluate: point has too few coordinates");
  Fe acc = 0;
  for (const Term& term : f.t) {
    Fe v = term.c;
    for (int i = 0; i < R.nvars(); ++i) {
      std::uint16_t e = term.m.e[static_cast<std::size_t>(i)];
      if (e) v = R.field.mul(v, R.field.pow(point[static_cast<std::size_t>(i)], e));
    }
    acc = R.field.add(acc, v);
  }
  return acc;
}

namespace {

void enumerate_monomials(int nvars, int var, int remaining, Monomial cur,
                         std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
    enumerate_monomials(nvars, var + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(const Ring& R, int d) {
  if (d < 0) throw std::invalid_argument("monomial_basis: negative degree");
  std::vector<Monomial> out;
  enumerate_monomials(R.nvars(), 0, d, Monomial{}, out);
  std::sort(out.begin(), out.end(),
            [&R](const Monomial& a, const Monomial& b) { return R.order.cmp(a, b) > 0; });
  return out;
}

Poly dehomogenize(const Ring& source, const Poly& f, const Ring& target, int var) {
  std::vector<Term> acc;
  for (const Term& term : f.t) {
    Term t2;
    t2.c = term.c;
    int j = 0;
    for (int i = 0; i < source.nvars(); ++i) {
      if (i == var) continue;
      t2.m.e[static_cast<std::size_t>(j++)] = term.m.e[static_cast<std::size_t>(i)];
    }
    acc.push_back(t2);
  }
  return poly_from_terms(target, std::move(acc));
}

Poly ring_convert(const Ring& source, const Poly& f, const Ring& target) {
  for (const Term& term : f.t)
    for (int i = target.nvars(); i < kMaxVars; ++i)
      if (term.m.e[static_cast<std::size_t>(i)] != 0)
        throw std::invalid_argument("ring_convert: term uses a dropped variable");
  (void)source;
  std::vector<Term> acc(f.t.begin(), f.t.end());
  return poly_from_terms(target, std::move(acc));
}

std::string poly_to_string(const Ring& R, const Poly& f) {
  static const char* names[kMaxVars] = {"x", "y", "z", "u"};
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < f.t.size(); ++k) {
    if (k) s += " + ";
    const Term& term = f.t[k];
    s += std::to_string(term.c);
    for (int i = 0; i < R.nvars(); ++i) {
      std::uint16_t e = term.m.e[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      s += "*";
      s += names[i];
      if (e > 1) {
        s += "^";
        s += std::to_string(e);
      }
    }
  }
  return s;
}

}  // namespace octic
