#ifndef OCTIC_UNIPOLY_HPP
#define OCTIC_UNIPOLY_HPP

#include <vector>

#include "octic/field.hpp"

namespace octic {

/// Univariate polynomial over F_p, coefficients ascending by exponent.
/// Normalized: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient list and degree -1.
struct UniPoly {
  std::vector<Fe> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Fe coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(k)] : 0;
  }
  Fe lead() const { return c.back(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const UniPoly& o) const { return c == o.c; }
};

UniPoly uni_from(const PrimeField& F, std::vector<std::int64_t> coeffs);

UniPoly uni_add(const PrimeField& F, const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const PrimeField& F, const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const PrimeField& F, const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const PrimeField& F, const UniPoly& a, Fe s);
UniPoly uni_monic(const PrimeField& F, const UniPoly& a);
UniPoly uni_derivative(const PrimeField& F, const UniPoly& a);
Fe uni_eval(const PrimeField& F, const UniPoly& a, Fe x);

/// Quotient and remainder; b must be nonzero.
struct UniDivRem {
  UniPoly q, r;
};
UniDivRem uni_divrem(const PrimeField& F, const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly uni_gcd(const PrimeField& F, UniPoly a, UniPoly b);

/// Squarefree iff gcd(a, a') is constant. A p-th power (a' = 0 with
/// deg a > 0) is declared not squarefree.
bool uni_squarefree(const PrimeField& F, const UniPoly& a);

/// Squarefree part a / gcd(a, a'), monic.
UniPoly uni_squarefree_part(const PrimeField& F, const UniPoly& a);

/// Homogeneous binary form in (t0, t1); c[k] is the coefficient of
/// t0^k * t1^(degree-k).
struct BinaryForm {
  int degree = 0;
  std::vector<Fe> c;

  bool operator==(const BinaryForm& o) const { return degree == o.degree && c == o.c; }
};

/// t1-homogenization of b to the given degree (requires deg b <= degree).
BinaryForm binary_form_from_unipoly(const UniPoly& b, int degree);

}  // namespace octic

#endif
