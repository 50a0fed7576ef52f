#ifndef OCTIC_ZERODIM_HPP
#define OCTIC_ZERODIM_HPP

#include <map>
#include <optional>
#include <vector>

#include "octic/groebner.hpp"
#include "octic/matrix.hpp"
#include "octic/rng.hpp"

namespace octic {

/// Finite-dimensional quotient algebra R/I of a zero-dimensional ideal,
/// presented by the standard monomials under a Groebner basis.
class QuotientAlgebra {
public:
  const Ring& ring() const { return gb_.ring; }
  const GroebnerBasis& gb() const { return gb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Coordinates of the residue class of f on the standard monomials.
  std::vector<Fe> coords(const Poly& f) const;
  Poly from_coords(const std::vector<Fe>& v) const;

  /// Matrix of v -> normal_form(f * v) on the standard monomial basis.
  DenseMatrix multiplication_operator(const Poly& f) const;

  /// Multiplication operator of variable i (cached).
  const DenseMatrix& var_operator(int i) const { return var_ops_[static_cast<std::size_t>(i)]; }

  /// Image vectors of m_i * w for every standard monomial m_i, computed by
  /// walking the staircase with the cached variable operators.
  std::vector<std::vector<Fe>> monomial_orbit(const std::vector<Fe>& w) const;

  friend std::optional<QuotientAlgebra> quotient_algebra(GroebnerBasis gb);

private:
  explicit QuotientAlgebra(GroebnerBasis gb) : gb_(std::move(gb)) {}

  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::map<std::array<std::uint16_t, kMaxVars>, std::size_t> index_;
  std::vector<DenseMatrix> var_ops_;
};

/// Builds the quotient algebra, or nullopt when the ideal is not
/// zero-dimensional (infinite staircase).
std::optional<QuotientAlgebra> quotient_algebra(GroebnerBasis gb);

/// dim_k R/I; throws std::domain_error when not zero-dimensional.
std::size_t zerodim_degree(const Ring& R, const std::vector<Poly>& gens);

enum class Reducedness { Reduced, NotReduced, Undecided };

struct ReducednessResult {
  Reducedness verdict = Reducedness::Undecided;
  /// Separating linear form and its charpoly when the verdict is Reduced.
  Poly witness_form;
  UniPoly witness_charpoly;
};

/// One-sided radical witness: the ideal is reduced iff multiplication by
/// some linear form has squarefree characteristic polynomial. Up to
/// `attempts` random forms are tried; a non-squarefree *minimal* polynomial
/// proves NotReduced, exhaustion yields Undecided.
ReducednessResult is_reduced_zerodim(const QuotientAlgebra& A, Rng& rng, int attempts = 5);

/// Generators of (I : J) for zero-dimensional I, as the preimage of the
/// annihilator of the ideal generated by J in R/I. Pure linear algebra; an
/// independent route from the elimination-based ideal_quotient.
std::vector<Poly> zerodim_colon(const QuotientAlgebra& A, const std::vector<Poly>& Jgens);

/// Generators of (I : J^inf) for zero-dimensional I: annihilator of the
/// stabilized power (J bar)^k (R/I).
std::vector<Poly> zerodim_saturate(const QuotientAlgebra& A, const std::vector<Poly>& Jgens);

}  // namespace octic

#endif
