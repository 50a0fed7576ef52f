#include "octic/linsys.hpp"

#include <stdexcept>

namespace octic {

namespace {

Fe eval_monomial(const PrimeField& F, const Monomial& m, const std::array<Fe, 3>& p) {
  Fe v = 1;
  for (int i = 0; i < 3; ++i) {
    std::uint16_t e = m.e[static_cast<std::size_t>(i)];
    if (e) v = F.mul(v, F.pow(p[static_cast<std::size_t>(i)], e));
  }
  return v;
}

// d/dvar of the monomial, evaluated at p.
Fe eval_monomial_partial(const PrimeField& F, const Monomial& m, int var,
                         const std::array<Fe, 3>& p) {
  std::uint16_t e = m.e[static_cast<std::size_t>(var)];
  if (e == 0) return 0;
  Monomial d = m;
  d.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e - 1);
  return F.mul(F.reduce(e), eval_monomial(F, d, p));
}

}  // namespace

LinearSystem linear_system(const Ring& R3, const FatPointSystem& S, int d,
                           const QuotientAlgebra* extra) {
  const PrimeField& F = R3.field;
  std::vector<Monomial> mons = monomial_basis(R3, d);

  std::size_t nrows = 0;
  for (const FatPoint& fp : S.points) nrows += fp.mult == 2 ? 3 : 1;
  std::size_t extra_rows = extra ? extra->dim() : 0;

  DenseMatrix M(nrows + extra_rows, mons.size());
  std::size_t r = 0;
  for (const FatPoint& fp : S.points) {
    for (std::size_t j = 0; j < mons.size(); ++j) M.at(r, j) = eval_monomial(F, mons[j], fp.pt);
    ++r;
    if (fp.mult == 2) {
      if (fp.pt[2] != 1)
        throw std::invalid_argument("node condition requires a point normalized to z = 1");
      for (int var = 0; var < 2; ++var) {
        for (std::size_t j = 0; j < mons.size(); ++j)
          M.at(r, j) = eval_monomial_partial(F, mons[j], var, fp.pt);
        ++r;
      }
    }
  }
  if (extra) {
    const Ring& R2 = extra->ring();
    for (std::size_t j = 0; j < mons.size(); ++j) {
      // Chart representative x^a y^b of the monomial x^a y^b z^c.
      Monomial chart;
      chart.e[0] = mons[j].e[0];
      chart.e[1] = mons[j].e[1];
      Poly mchart = poly_from_terms(R2, {{chart, 1}});
      std::vector<Fe> c = extra->coords(mchart);
      for (std::size_t t = 0; t < extra->dim(); ++t) M.at(nrows + t, j) = c[t];
    }
  }

  RankKernel rk = rank_and_kernel(F, M);
  LinearSystem out;
  out.degree = d;
  out.dimension = rk.kernel.size();
  for (const auto& v : rk.kernel) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (v[j] != 0) terms.push_back({mons[j], v[j]});
    out.basis.push_back(poly_from_terms(R3, std::move(terms)));
  }
  return out;
}

std::vector<std::size_t> hilbert_function(const Ring& R3, const FatPointSystem& S, int d_max) {
  std::vector<std::size_t> dims;
  for (int d = 0; d <= d_max; ++d) dims.push_back(linear_system(R3, S, d).dimension);
  return dims;
}

namespace {

std::vector<Fe> poly_coords(const Ring& R3, const Poly& f, const std::vector<Monomial>& mons) {
  std::vector<Fe> v(mons.size(), 0);
  for (const Term& t : f.t) {
    bool found = false;
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (mons[j] == t.m) {
        v[j] = t.c;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("coordinate monomial missing");
  }
  (void)R3;
  return v;
}

std::size_t rank_of_rows(const PrimeField& F, const std::vector<std::vector<Fe>>& rows,
                         std::size_t width) {
  if (rows.empty()) return 0;
  DenseMatrix M(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) M.at(i, j) = rows[i][j];
  return rank_and_kernel(F, M).rank;
}

Poly var_poly(const Ring& R, int v) {
  Monomial m;
  m.e[static_cast<std::size_t>(v)] = 1;
  return poly_from_terms(R, {{m, 1}});
}

}  // namespace

ResolutionProfile generator_syzygy_profile(const Ring& R3, const FatPointSystem& S, int d_max) {
  const PrimeField& F = R3.field;
  ResolutionProfile out;
  out.d_max = d_max;
  out.generators.assign(static_cast<std::size_t>(d_max) + 1, 0);
  out.new_syzygies.assign(static_cast<std::size_t>(d_max) + 1, 0);

  std::vector<std::vector<Monomial>> mons(static_cast<std::size_t>(d_max) + 1);
  std::vector<LinearSystem> pieces(static_cast<std::size_t>(d_max) + 1);
  for (int d = 0; d <= d_max; ++d) {
    mons[static_cast<std::size_t>(d)] = monomial_basis(R3, d);
    pieces[static_cast<std::size_t>(d)] = linear_system(R3, S, d);
  }

  // Minimal generators: new elements of I_d beyond R_1 * I_{d-1}.
  std::vector<std::pair<Poly, int>> gens;  // (generator, degree)
  for (int d = 0; d <= d_max; ++d) {
    const auto& md = mons[static_cast<std::size_t>(d)];
    std::vector<std::vector<Fe>> rows;
    if (d > 0)
      for (const Poly& f : pieces[static_cast<std::size_t>(d - 1)].basis)
        for (int v = 0; v < 3; ++v)
          rows.push_back(poly_coords(R3, poly_mul(R3, f, var_poly(R3, v)), md));
    std::size_t base_rank = rank_of_rows(F, rows, md.size());
    for (const Poly& f : pieces[static_cast<std::size_t>(d)].basis) {
      rows.push_back(poly_coords(R3, f, md));
      std::size_t nr = rank_of_rows(F, rows, md.size());
      if (nr > base_rank) {
        base_rank = nr;
        gens.emplace_back(f, d);
        out.generators[static_cast<std::size_t>(d)]++;
      } else {
        rows.pop_back();
      }
    }
  }

  // First syzygies of the minimal generators, degree by degree.
  std::vector<std::vector<std::vector<Fe>>> syz(static_cast<std::size_t>(d_max) + 1);
  for (int d = 0; d <= d_max; ++d) {
    // Column blocks: monomials of degree d - deg(g) per generator g.
    std::vector<std::pair<std::size_t, Monomial>> columns;  // (generator index, multiplier)
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int dd = d - gens[gi].second;
      if (dd < 0) continue;
      for (const Monomial& m : mons[static_cast<std::size_t>(dd)]) columns.emplace_back(gi, m);
    }
    if (columns.empty()) continue;
    const auto& md = mons[static_cast<std::size_t>(d)];
    DenseMatrix M(md.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      Poly prod = poly_mul_term(R3, gens[columns[c].first].first, Term{columns[c].second, 1});
      std::vector<Fe> col = poly_coords(R3, prod, md);
      for (std::size_t i = 0; i < md.size(); ++i) M.at(i, c) = col[i];
    }
    RankKernel rk = rank_and_kernel(F, M);
    syz[static_cast<std::size_t>(d)] = rk.kernel;

    // Contribution of lower-degree syzygies: multiply degree-(d-1) syzygy
    // vectors by each variable and measure their span inside the kernel.
    std::vector<std::vector<Fe>> old_rows;
    if (d > 0) {
      // Map a degree-(d-1) syzygy coordinate vector into degree-d columns.
      std::vector<std::pair<std::size_t, Monomial>> prev_cols;
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        int dd = d - 1 - gens[gi].second;
        if (dd < 0) continue;
        for (const Monomial& m : mons[static_cast<std::size_t>(dd)]) prev_cols.emplace_back(gi, m);
      }
      for (const auto& s : syz[static_cast<std::size_t>(d - 1)]) {
        for (int v = 0; v < 3; ++v) {
          std::vector<Fe> row(columns.size(), 0);
          for (std::size_t c = 0; c < prev_cols.size(); ++c) {
            if (s[c] == 0) continue;
            Monomial shifted = prev_cols[c].second;
            shifted.e[static_cast<std::size_t>(v)]++;
            for (std::size_t cc = 0; cc < columns.size(); ++cc)
              if (columns[cc].first == prev_cols[c].first && columns[cc].second == shifted) {
                row[cc] = F.add(row[cc], s[c]);
                break;
              }
          }
          old_rows.push_back(std::move(row));
        }
      }
    }
    std::size_t old_rank = rank_of_rows(F, old_rows, columns.size());
    std::size_t kdim = rk.kernel.size();
    out.new_syzygies[static_cast<std::size_t>(d)] = kdim > old_rank ? kdim - old_rank : 0;
  }
  return out;
}

}  // namespace octic
