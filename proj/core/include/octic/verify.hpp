#ifndef OCTIC_VERIFY_HPP
#define OCTIC_VERIFY_HPP

#include <array>
#include <string>
#include <vector>

#include "octic/linsys.hpp"

namespace octic {

/// Everything a verification pass needs, exactly as recorded in a
/// certificate. Points are in working coordinates (after the recorded
/// coordinate change), normalized to z = 1. f1, f2, g are homogeneous in
/// x, y, z; the residual ideal generators live in the chart z = 1.
struct ConstructionData {
  std::uint64_t prime = 0;
  std::array<std::array<Fe, 3>, 3> coordinate_change{};
  std::vector<std::array<Fe, 3>> P;  // 12 double points
  std::vector<std::array<Fe, 3>> R;  // 5 residual base points
  Poly f1, f2;                       // quintic pencil
  std::vector<Poly> iq_gens;         // chart Groebner basis of I_Q
  Poly g;                            // the 12-nodal octic
};

struct NodeReport {
  bool ok = false;
  std::string failure;  // "ExtraSingularity", "NonOrdinaryNode", or empty
  std::size_t singular_degree = 0;
  bool singular_reduced = false;
  bool support_is_P = false;
  bool no_infinity_singularities = false;
  std::vector<Fe> discriminants;
  bool all_ordinary = false;
};

struct GenusReport {
  bool ok = false;
  int genus = 0;
  std::size_t adjoint_dimension = 0;  // h0(I_P(5)), must equal the genus
};

struct ProfileReport {
  bool ok = false;
  ResolutionProfile profile;
};

struct RamificationReport {
  bool ok = false;
  std::string failure;
  bool r_disjoint_from_curve = false;
  std::size_t presaturation_degree = 0;  // deg (g, h) before saturation
  std::size_t degree = 0;                // must be 32
  Reducedness reduced = Reducedness::Undecided;
  bool f1_unit = false;
  int pencil_basis_changes = 0;
  UniPoly branch_unipoly;  // charpoly of multiplication by f2/f1
  BinaryForm branch_form;  // its degree-32 homogenization
  bool squarefree = false;
};

struct RecoveryReport {
  bool ok = false;
  std::string failure;
  std::size_t h0_ipq_5 = 0;  // must be 2
  bool pencil_in_span = false;
  std::size_t base_degree = 0;  // must be 25
  Reducedness base_reduced = Reducedness::Undecided;
  bool ideal_equality = false;
};

NodeReport verify_nodes(const ConstructionData& data, Rng& rng);
GenusReport genus_check(const ConstructionData& data, const NodeReport& nodes);
ProfileReport irreducibility_evidence(const ConstructionData& data);
RamificationReport ramification_analysis(const ConstructionData& data, Rng& rng);
RecoveryReport recover_R(const ConstructionData& data, Rng& rng);

/// Generic core of the ramification check, also usable on toy covers:
/// curve cut out by `curve`, pencil (q1 : q2), base-locus components to
/// strip given by chart generators in `excess`.
struct RamCore {
  bool ok = false;
  std::string failure;
  std::size_t presaturation_degree = 0;
  std::size_t degree = 0;
  Reducedness reduced = Reducedness::Undecided;
  bool q1_unit = false;
  UniPoly branch_unipoly;
  bool squarefree = false;
};
RamCore ramification_core(const Ring& R3, const Poly& curve, const Poly& q1, const Poly& q2,
                          const std::vector<Poly>& excess_chart_gens, Rng& rng);

/// Quadratic-part discriminant of a chart curve at a point (translated to
/// the origin); nonzero iff the singularity is an ordinary node.
Fe node_quadratic_discriminant(const Ring& R2, const Poly& f_chart, Fe a, Fe b);

/// Chart generators of the affine vanishing ideal of a finite set of
/// z = 1 points, from one graded piece beyond the regularity.
std::vector<Poly> point_vanishing_ideal_chart(const Ring& R3, const Ring& R2,
                                              const std::vector<std::array<Fe, 3>>& pts);

struct AuditRow {
  std::string name;
  long long computed = 0;
  long long expected = 0;
  bool ok = false;
};

struct DimensionAudit {
  int g = 9, d = 8;
  std::vector<AuditRow> rows;
  bool all_ok = false;
};

DimensionAudit dimension_audit(int g = 9, int d = 8);
std::string audit_table(const DimensionAudit& a);

struct VerifyOutcome {
  NodeReport nodes;
  GenusReport genus;
  ProfileReport profile;
  RamificationReport ramification;
  RecoveryReport recovery;
  bool all_ok = false;
  bool undecided = false;
  std::string first_failure;
};

VerifyOutcome verify_all(const ConstructionData& data, Rng& rng);

}  // namespace octic

#endif
