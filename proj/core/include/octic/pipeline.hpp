#ifndef OCTIC_PIPELINE_HPP
#define OCTIC_PIPELINE_HPP

#include <optional>

#include "octic/verify.hpp"

namespace octic {

/// Numerology of the construction; every identity is re-audited by
/// dimension_audit().
struct ConstructionConstants {
  static constexpr int genus = 9;
  static constexpr int cover_degree = 8;
  static constexpr int curve_degree = 8;
  static constexpr int quintic_degree = 5;
  static constexpr int node_count = 12;      // C(7,2) - 9
  static constexpr int branch_count = 32;    // 2g - 2 + 2d
  static constexpr int n_P = 12;
  static constexpr int n_R = 5;
  static constexpr int n_Q = 8;              // 25 - 12 - 5
  static constexpr int bezout = 25;          // two quintics
};

struct Pencil {
  Poly f1, f2;
};

struct RunCounters {
  int point_rounds = 0;
  int pencil_rounds = 0;
  int coordinate_rounds = 0;
};

struct PointChoice {
  std::vector<std::array<Fe, 3>> P, R;
  std::array<std::array<Fe, 3>, 3> coordinate_change{};
  std::size_t h0_ipr_5 = 0;  // 4 on success
  std::size_t h0_ip2_8 = 0;  // 9 on success
};

/// One sampling round of step (1): 17 distinct projective points moved off
/// z = 0 by a random coordinate change; nullopt when either dimension check
/// fails (caller retries with fresh randomness).
std::optional<PointChoice> choose_points(const Ring& R3, Rng& rng, RunCounters& counters);

/// Step (2): two independent random combinations of the 4-dimensional
/// system of quintics through P and R.
Pencil choose_pencil(const Ring& R3, const LinearSystem& L, Rng& rng);

struct ResidualResult {
  bool ok = false;
  std::string failure;  // "DegenerateResidual" variants
  std::size_t pencil_base_degree = 0;
  Reducedness pencil_base_reduced = Reducedness::Undecided;
  std::size_t iq_degree = 0;
  Reducedness iq_reduced = Reducedness::Undecided;
  bool disjoint_from_pr = false;
  std::vector<Poly> iq_gens;  // chart GB of I_Q
};

/// Step (3): I_Q = (f1, f2) : I_{P u R}, with degree / reducedness /
/// disjointness verdicts.
ResidualResult residual_points(const Ring& R3, const Pencil& pencil, const PointChoice& pts,
                               Rng& rng);

struct OcticResult {
  bool ok = false;
  std::size_t dimension = 0;  // must be exactly 1
  Poly g;
};

/// Step (4): the unique (normalized) octic double at P and through Q.
OcticResult choose_octic(const Ring& R3, const std::vector<std::array<Fe, 3>>& P,
                         const QuotientAlgebra& iq_algebra);

struct Certificate;  // certificate.hpp

/// Records every check payload of one attempt into the certificate.
/// Reducedness verdicts are coded 1 (reduced), 0 (not), -1 (undecided).
void fill_checks(Certificate& cert, const PointChoice& pc, const ResidualResult& rr,
                 const OcticResult& oc, const VerifyOutcome& vo);

/// Full randomized construction with retry logic; always returns a
/// certificate (status SUCCESS, FAILED:<stage>, or UNDECIDED:<check>).
Certificate run_construction(std::uint64_t prime, std::uint64_t seed, int retry_budget);

}  // namespace octic

#endif
