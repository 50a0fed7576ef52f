#include "octic/pipeline.hpp"

#include <algorithm>

#include "octic/certificate.hpp"

namespace octic {

namespace {

std::array<Fe, 3> normalize_projective(const PrimeField& F, std::array<Fe, 3> v) {
  for (int i = 0; i < 3; ++i)
    if (v[static_cast<std::size_t>(i)] != 0) {
      Fe s = F.inv(v[static_cast<std::size_t>(i)]);
      for (int j = 0; j < 3; ++j)
        v[static_cast<std::size_t>(j)] = F.mul(v[static_cast<std::size_t>(j)], s);
      return v;
    }
  return v;
}

std::array<Fe, 3> apply_matrix(const PrimeField& F, const std::array<std::array<Fe, 3>, 3>& M,
                               const std::array<Fe, 3>& p) {
  std::array<Fe, 3> q{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      q[static_cast<std::size_t>(i)] =
          F.add(q[static_cast<std::size_t>(i)],
                F.mul(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                      p[static_cast<std::size_t>(j)]));
  return q;
}

}  // namespace

std::optional<PointChoice> choose_points(const Ring& R3, Rng& rng, RunCounters& counters) {
  const PrimeField& F = R3.field;
  counters.point_rounds++;

  constexpr int total = ConstructionConstants::n_P + ConstructionConstants::n_R;
  std::vector<std::array<Fe, 3>> raw;
  while (static_cast<int>(raw.size()) < total) {
    std::array<Fe, 3> v{rng.field_element(F), rng.field_element(F), rng.field_element(F)};
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
    v = normalize_projective(F, v);
    if (std::find(raw.begin(), raw.end(), v) == raw.end()) raw.push_back(v);
  }

  PointChoice pc;
  bool moved = false;
  for (int attempt = 0; attempt < 20 && !moved; ++attempt) {
    counters.coordinate_rounds++;
    std::array<std::array<Fe, 3>, 3> M{};
    DenseMatrix D(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Fe v = rng.field_element(F);
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        D.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      }
    if (!mat_inv(F, D)) continue;
    std::vector<std::array<Fe, 3>> working;
    bool off_line = true;
    for (const auto& p : raw) {
      std::array<Fe, 3> q = apply_matrix(F, M, p);
      if (q[2] == 0) {
        off_line = false;
        break;
      }
      Fe s = F.inv(q[2]);
      working.push_back({F.mul(q[0], s), F.mul(q[1], s), 1});
    }
    if (!off_line) continue;
    pc.coordinate_change = M;
    pc.P.assign(working.begin(), working.begin() + ConstructionConstants::n_P);
    pc.R.assign(working.begin() + ConstructionConstants::n_P, working.end());
    moved = true;
  }
  if (!moved) return std::nullopt;

  FatPointSystem SPR;
  for (const auto& p : pc.P) SPR.points.push_back({p, 1});
  for (const auto& r : pc.R) SPR.points.push_back({r, 1});
  pc.h0_ipr_5 = linear_system(R3, SPR, ConstructionConstants::quintic_degree).dimension;

  FatPointSystem SP2;
  for (const auto& p : pc.P) SP2.points.push_back({p, 2});
  pc.h0_ip2_8 = linear_system(R3, SP2, ConstructionConstants::curve_degree).dimension;

  if (pc.h0_ipr_5 != 4 || pc.h0_ip2_8 != 9) return std::nullopt;
  return pc;
}

Pencil choose_pencil(const Ring& R3, const LinearSystem& L, Rng& rng) {
  const PrimeField& F = R3.field;
  std::size_t n = L.basis.size();
  for (;;) {
    DenseMatrix C(2, n);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < n; ++j) C.at(i, j) = rng.field_element(F);
    if (rank_and_kernel(F, C).rank != 2) continue;
    Pencil p;
    Poly f1, f2;
    for (std::size_t j = 0; j < n; ++j) {
      f1 = poly_add(R3, f1, poly_scale(R3, L.basis[j], C.at(0, j)));
      f2 = poly_add(R3, f2, poly_scale(R3, L.basis[j], C.at(1, j)));
    }
    p.f1 = f1;
    p.f2 = f2;
    return p;
  }
}

ResidualResult residual_points(const Ring& R3, const Pencil& pencil, const PointChoice& pts,
                               Rng& rng) {
  ResidualResult rr;
  const PrimeField& F = R3.field;
  Ring R2 = make_ring(F, 2);

  Poly f1c = dehomogenize(R3, pencil.f1, R2, 2);
  Poly f2c = dehomogenize(R3, pencil.f2, R2, 2);
  GroebnerBasis gb_base = buchberger(R2, {f1c, f2c});
  auto AB = quotient_algebra(gb_base);
  if (!AB) {
    rr.failure = "DegenerateResidual:PencilNotFinite";
    return rr;
  }
  rr.pencil_base_degree = AB->dim();
  rr.pencil_base_reduced = is_reduced_zerodim(*AB, rng).verdict;
  if (rr.pencil_base_degree != ConstructionConstants::bezout ||
      rr.pencil_base_reduced != Reducedness::Reduced) {
    rr.failure = "DegenerateResidual:BaseLocus";
    return rr;
  }

  std::vector<std::array<Fe, 3>> pr = pts.P;
  pr.insert(pr.end(), pts.R.begin(), pts.R.end());
  std::vector<Poly> ipr = point_vanishing_ideal_chart(R3, R2, pr);

  std::vector<Poly> iq = zerodim_colon(*AB, ipr);
  GroebnerBasis gbq = buchberger(R2, iq);
  auto AQ = quotient_algebra(gbq);
  if (!AQ) {
    rr.failure = "DegenerateResidual:ResidualNotFinite";
    return rr;
  }
  rr.iq_degree = AQ->dim();
  rr.iq_reduced = is_reduced_zerodim(*AQ, rng).verdict;

  rr.disjoint_from_pr = true;
  for (const auto& p : pr) {
    std::array<Fe, 2> c{p[0], p[1]};
    bool vanishes_all = true;
    for (const Poly& g : gbq.g)
      if (evaluate(R2, g, c) != 0) vanishes_all = false;
    if (vanishes_all) rr.disjoint_from_pr = false;
  }

  if (rr.iq_degree != ConstructionConstants::n_Q || rr.iq_reduced != Reducedness::Reduced ||
      !rr.disjoint_from_pr) {
    rr.failure = "DegenerateResidual:ResidualDefect";
    return rr;
  }
  rr.iq_gens = gbq.g;
  rr.ok = true;
  return rr;
}

OcticResult choose_octic(const Ring& R3, const std::vector<std::array<Fe, 3>>& P,
                         const QuotientAlgebra& iq_algebra) {
  OcticResult out;
  FatPointSystem S;
  for (const auto& p : P) S.points.push_back({p, 2});
  LinearSystem L = linear_system(R3, S, ConstructionConstants::curve_degree, &iq_algebra);
  out.dimension = L.dimension;
  if (L.dimension != 1) return out;
  out.g = L.basis[0];
  out.ok = true;
  return out;
}

namespace {

void push_check(Certificate& cert, const std::string& name, std::int64_t v) {
  cert.checks[name] = {v};
}

std::int64_t red_code(Reducedness r) {
  return r == Reducedness::Reduced ? 1 : r == Reducedness::NotReduced ? 0 : -1;
}

}  // namespace

void fill_checks(Certificate& cert, const PointChoice& pc, const ResidualResult& rr,
                 const OcticResult& oc, const VerifyOutcome& vo) {
  push_check(cert, "points.h0_ipr_5", static_cast<std::int64_t>(pc.h0_ipr_5));
  push_check(cert, "points.h0_ip2_8", static_cast<std::int64_t>(pc.h0_ip2_8));

  push_check(cert, "residual.base_degree", static_cast<std::int64_t>(rr.pencil_base_degree));
  push_check(cert, "residual.base_reduced", red_code(rr.pencil_base_reduced));
  push_check(cert, "residual.iq_degree", static_cast<std::int64_t>(rr.iq_degree));
  push_check(cert, "residual.iq_reduced", red_code(rr.iq_reduced));
  push_check(cert, "residual.disjoint_from_pr", rr.disjoint_from_pr);

  push_check(cert, "octic.dimension", static_cast<std::int64_t>(oc.dimension));

  push_check(cert, "nodes.degree", static_cast<std::int64_t>(vo.nodes.singular_degree));
  push_check(cert, "nodes.reduced", vo.nodes.singular_reduced ? 1 : -1);
  push_check(cert, "nodes.support_is_P", vo.nodes.support_is_P);
  push_check(cert, "nodes.no_infinity_singularities", vo.nodes.no_infinity_singularities);
  {
    std::vector<std::int64_t> d;
    for (Fe v : vo.nodes.discriminants) d.push_back(static_cast<std::int64_t>(v));
    cert.checks["nodes.discriminants"] = d;
  }
  push_check(cert, "nodes.all_ordinary", vo.nodes.all_ordinary);

  push_check(cert, "genus.value", vo.genus.genus);
  push_check(cert, "genus.adjoint_dimension",
             static_cast<std::int64_t>(vo.genus.adjoint_dimension));

  {
    std::vector<std::int64_t> g, s;
    for (std::size_t v : vo.profile.profile.generators) g.push_back(static_cast<std::int64_t>(v));
    for (std::size_t v : vo.profile.profile.new_syzygies)
      s.push_back(static_cast<std::int64_t>(v));
    cert.checks["profile.generators"] = g;
    cert.checks["profile.new_syzygies"] = s;
  }

  push_check(cert, "ramification.presaturation_degree",
             static_cast<std::int64_t>(vo.ramification.presaturation_degree));
  push_check(cert, "ramification.degree", static_cast<std::int64_t>(vo.ramification.degree));
  push_check(cert, "ramification.reduced", red_code(vo.ramification.reduced));
  push_check(cert, "ramification.squarefree", vo.ramification.squarefree);
  push_check(cert, "ramification.pencil_basis_changes", vo.ramification.pencil_basis_changes);
  {
    std::vector<std::int64_t> b;
    for (Fe v : vo.ramification.branch_unipoly.c) b.push_back(static_cast<std::int64_t>(v));
    cert.checks["ramification.branch_unipoly"] = b;
  }

  push_check(cert, "recovery.h0_ipq_5", static_cast<std::int64_t>(vo.recovery.h0_ipq_5));
  push_check(cert, "recovery.pencil_in_span", vo.recovery.pencil_in_span);
  push_check(cert, "recovery.base_degree", static_cast<std::int64_t>(vo.recovery.base_degree));
  push_check(cert, "recovery.base_reduced", red_code(vo.recovery.base_reduced));
  push_check(cert, "recovery.ideal_equality", vo.recovery.ideal_equality);
}

Certificate run_construction(std::uint64_t prime, std::uint64_t seed, int retry_budget) {
  Certificate cert;
  cert.prime = prime;
  cert.seed = seed;
  cert.retry_budget = retry_budget;

  PrimeField F(prime);
  Ring R3 = make_ring(F, 3);
  Rng rng(seed);

  std::string last_failure = "points";

  while (cert.counters.point_rounds < retry_budget) {
    auto pc = choose_points(R3, rng, cert.counters);
    if (!pc) {
      last_failure = "points";
      continue;
    }

    FatPointSystem SPR;
    for (const auto& p : pc->P) SPR.points.push_back({p, 1});
    for (const auto& r : pc->R) SPR.points.push_back({r, 1});
    LinearSystem L5 = linear_system(R3, SPR, ConstructionConstants::quintic_degree);

    for (int pencil_try = 0; pencil_try < 3; ++pencil_try) {
      cert.counters.pencil_rounds++;
      Pencil pencil = choose_pencil(R3, L5, rng);

      ResidualResult rr = residual_points(R3, pencil, *pc, rng);
      if (!rr.ok) {
        last_failure = "residual:" + rr.failure;
        continue;
      }

      Ring R2 = make_ring(F, 2);
      auto AQ = quotient_algebra(buchberger(R2, rr.iq_gens));
      OcticResult oc = choose_octic(R3, pc->P, *AQ);
      if (!oc.ok) {
        last_failure = "octic:WrongOcticDimension";
        continue;
      }

      ConstructionData data;
      data.prime = prime;
      data.coordinate_change = pc->coordinate_change;
      data.P = pc->P;
      data.R = pc->R;
      data.f1 = pencil.f1;
      data.f2 = pencil.f2;
      data.iq_gens = rr.iq_gens;
      data.g = oc.g;

      VerifyOutcome vo = verify_all(data, rng);
      cert.data = data;
      fill_checks(cert, *pc, rr, oc, vo);
      if (vo.all_ok) {
        cert.status = "SUCCESS";
        return cert;
      }
      if (vo.undecided) {
        cert.status = "UNDECIDED:" + vo.first_failure;
        return cert;
      }
      last_failure = vo.first_failure;
      // Node, genus, and profile defects are properties of the points alone;
      // resampling the pencil cannot repair them.
      if (!vo.nodes.ok || !vo.genus.ok || !vo.profile.ok) break;
    }
  }

  cert.status = "FAILED:" + last_failure;
  return cert;
}

}  // namespace octic
