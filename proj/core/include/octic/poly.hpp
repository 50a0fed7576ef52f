#ifndef OCTIC_POLY_HPP
#define OCTIC_POLY_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "octic/field.hpp"

namespace octic {

/// Three ambient variables x > y > z plus one auxiliary variable for
/// elimination steps.
inline constexpr int kMaxVars = 4;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  int deg() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

Monomial mono(std::initializer_list<int> exps);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic order with x > y > z (> u), optionally as a
/// block/elimination order: variables in elim_mask dominate, compared by
/// grevlex within the block, ties broken by grevlex on the remaining block.
struct TermOrder {
  int nvars = 3;
  std::uint8_t elim_mask = 0;

  /// Returns >0 if a > b, 0 if equal, <0 if a < b.
  int cmp(const Monomial& a, const Monomial& b) const;

  bool operator==(const TermOrder& o) const = default;
};

struct Term {
  Monomial m;
  Fe c = 0;
};

/// Ambient ring context: F_p, number of active variables, term order.
struct Ring {
  PrimeField field;
  TermOrder order;

  int nvars() const { return order.nvars; }
};

Ring make_ring(std::uint64_t p, int nvars = 3, std::uint8_t elim_mask = 0);
Ring make_ring(const PrimeField& F, int nvars = 3, std::uint8_t elim_mask = 0);

/// Sparse polynomial: terms strictly descending in the ring's term order,
/// no zero coefficients, no duplicate monomials.
struct Poly {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
  /// Total degree (max over terms); -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  bool operator==(const Poly& o) const;
};

/// Builds a normalized polynomial from arbitrary (possibly unsorted,
/// duplicated, zero-coefficient) terms.
Poly poly_from_terms(const Ring& R, std::vector<Term> terms);
/// Convenience constructor from integer coefficients.
Poly poly_from(const Ring& R,
               std::initializer_list<std::pair<std::initializer_list<int>, std::int64_t>> terms);

Poly poly_add(const Ring& R, const Poly& f, const Poly& g);
Poly poly_sub(const Ring& R, const Poly& f, const Poly& g);
Poly poly_neg(const Ring& R, const Poly& f);
Poly poly_scale(const Ring& R, const Poly& f, Fe s);
Poly poly_mul_term(const Ring& R, const Poly& f, const Term& t);
Poly poly_mul(const Ring& R, const Poly& f, const Poly& g);
Poly poly_monic(const Ring& R, const Poly& f);

Poly partial_derivative(const Ring& R, const Poly& f, int var);

Fe evaluate(const Ring& R, const Poly& f, std::span<const Fe> point);

/// All monomials of total degree d in the first `nvars` variables, sorted
/// descending in the ring order; exactly C(d+nvars-1, nvars-1) of them.
std::vector<Monomial> monomial_basis(const Ring& R, int d);

/// Substitutes 1 for variable `var` and drops it: chart polynomial in one
/// variable fewer (terms re-merged under the target ring's order).
Poly dehomogenize(const Ring& source, const Poly& f, const Ring& target, int var);

/// Reinterprets a polynomial in a ring with more variables (exponents of the
/// new variables are zero) or a different order; terms are re-sorted.
Poly ring_convert(const Ring& source, const Poly& f, const Ring& target);

/// Human-readable form "c*x^a*y^b*z^c + ..." in term order.
std::string poly_to_string(const Ring& R, const Poly& f);

}  // namespace octic

#endif
