#ifndef OCTIC_GROEBNER_HPP
#define OCTIC_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "octic/poly.hpp"

namespace octic {

/// Reduced Groebner basis in the ring's term order: monic elements, no term
/// of any element divisible by the leading term of another, sorted
/// descending by leading monomial.
struct GroebnerBasis {
  Ring ring;
  std::vector<Poly> g;
};

/// Remainder of multivariate division of f by G (full reduction: no term of
/// the result is divisible by any leading term of G). Divisors are tried in
/// list order, so the result is deterministic.
Poly normal_form(const Ring& R, const Poly& f, const std::vector<Poly>& G);
Poly normal_form(const Poly& f, const GroebnerBasis& G);

/// Buchberger's algorithm with the normal pair-selection strategy
/// (smallest lcm by degree, then term order) and the product and chain
/// criteria. Deterministic for a fixed generator order.
GroebnerBasis buchberger(const Ring& R, std::vector<Poly> gens);

/// Checks that every S-polynomial of pairs reduces to zero (certifying
/// property; intended for tests).
bool is_certified_groebner(const GroebnerBasis& G);

/// Membership test f in I via normal form against a GB of I.
bool ideal_contains(const GroebnerBasis& G, const Poly& f);

/// Generators of the intersection of two ideals, via an auxiliary variable
/// and a block elimination order.
std::vector<Poly> ideal_intersect(const Ring& R, const std::vector<Poly>& A,
                                  const std::vector<Poly>& B);

/// Generators of (I : J) = { f | f*J in I }, computed as the intersection
/// of the single-divisor quotients (I : j) = (I cap (j)) / j.
std::vector<Poly> ideal_quotient(const Ring& R, const std::vector<Poly>& I,
                                 const std::vector<Poly>& J);

/// Generators of the saturation (I : J^inf): iterated quotient until the
/// reduced Groebner basis stabilizes.
std::vector<Poly> saturate(const Ring& R, const std::vector<Poly>& I,
                           const std::vector<Poly>& J);

/// Generators of I cap F_p[kept variables], via a block-order Groebner
/// basis; keep_mask has bit i set when variable i is kept.
std::vector<Poly> eliminate(const Ring& R, const std::vector<Poly>& I,
                            std::uint8_t keep_mask);

/// Exact division (g must divide f termwise-exactly in the ideal sense).
Poly poly_exact_div(const Ring& R, const Poly& f, const Poly& g);

bool groebner_equal(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace octic

#endif
