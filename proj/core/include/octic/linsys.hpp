#ifndef OCTIC_LINSYS_HPP
#define OCTIC_LINSYS_HPP

#include <array>
#include <vector>

#include "octic/zerodim.hpp"

namespace octic {

/// Projective point with multiplicity: 1 = pass through, 2 = node condition
/// (value and both chart partials vanish). Multiplicity-2 points must be
/// normalized to z = 1.
struct FatPoint {
  std::array<Fe, 3> pt;
  int mult = 1;
};

struct FatPointSystem {
  std::vector<FatPoint> points;
};

/// Graded piece of the ideal sheaf: basis of degree-d forms satisfying all
/// point conditions (and, optionally, membership in an extra ideal).
struct LinearSystem {
  int degree = 0;
  std::size_t dimension = 0;
  std::vector<Poly> basis;  // homogeneous, echelon-normalized, deterministic
};

/// Kernel of the evaluation matrix of the degree-d monomials at the fat
/// points. `extra` (when given) is the chart quotient algebra of a scheme
/// ideal; membership of the unknown form is imposed as linear constraints
/// on the normal-form coordinates.
LinearSystem linear_system(const Ring& R3, const FatPointSystem& S, int d,
                           const QuotientAlgebra* extra = nullptr);

/// Dimensions of the ideal's graded pieces for d = 0..d_max.
std::vector<std::size_t> hilbert_function(const Ring& R3, const FatPointSystem& S, int d_max);

/// Minimal generator and first-syzygy counts per degree of the homogeneous
/// ideal of a finite set of simple points (the resolution-shape window).
struct ResolutionProfile {
  int d_max = 0;
  std::vector<std::size_t> generators;    // index = degree
  std::vector<std::size_t> new_syzygies;  // index = degree
};

ResolutionProfile generator_syzygy_profile(const Ring& R3, const FatPointSystem& S,
                                           int d_max = 8);

}  // namespace octic

#endif
