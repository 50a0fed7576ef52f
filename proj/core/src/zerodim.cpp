#include "octic/zerodim.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace octic {

namespace {

bool is_standard(const Monomial& m, const GroebnerBasis& gb) {
  for (const Poly& g : gb.g)
    if (mono_divides(g.lead().m, m)) return false;
  return true;
}

/// Basis of the row space, as RREF rows.
std::vector<std::vector<Fe>> row_space_basis(const PrimeField& F,
                                             const std::vector<std::vector<Fe>>& rows,
                                             std::size_t width) {
  DenseMatrix M(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) M.at(i, j) = rows[i][j];
  // Reuse rank_and_kernel's elimination by transposing the question:
  // easiest is a local RREF.
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < width && r < M.rows(); ++c) {
    std::size_t piv = r;
    while (piv < M.rows() && M.at(piv, c) == 0) ++piv;
    if (piv == M.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < width; ++j) std::swap(M.at(piv, j), M.at(r, j));
    Fe inv = F.inv(M.at(r, c));
    for (std::size_t j = c; j < width; ++j) M.at(r, j) = F.mul(M.at(r, j), inv);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      Fe f = M.at(i, c);
      for (std::size_t j = c; j < width; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Fe>> out;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Fe> row(width);
    for (std::size_t j = 0; j < width; ++j) row[j] = M.at(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::optional<QuotientAlgebra> quotient_algebra(GroebnerBasis gb) {
  const Ring& R = gb.ring;
  // Zero-dimensional iff some pure power of every variable is a lead term.
  for (int v = 0; v < R.nvars(); ++v) {
    bool found = false;
    for (const Poly& g : gb.g) {
      if (g.is_zero()) continue;
      const Monomial& m = g.lead().m;
      bool pure = m.e[static_cast<std::size_t>(v)] > 0;
      for (int i = 0; i < kMaxVars && pure; ++i)
        if (i != v && m.e[static_cast<std::size_t>(i)] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    // A nonzero constant in the GB means the unit ideal: dimension 0, fine.
    if (!found && !(gb.g.size() == 1 && gb.g[0].lead().m.deg() == 0)) return std::nullopt;
  }

  QuotientAlgebra A(std::move(gb));

  if (!(A.gb_.g.size() == 1 && !A.gb_.g[0].is_zero() && A.gb_.g[0].lead().m.deg() == 0)) {
    std::deque<Monomial> queue;
    queue.push_back(Monomial{});
    std::map<std::array<std::uint16_t, kMaxVars>, bool> seen;
    seen[Monomial{}.e] = true;
    while (!queue.empty()) {
      Monomial m = queue.front();
      queue.pop_front();
      if (!is_standard(m, A.gb_)) continue;
      A.basis_.push_back(m);
      for (int v = 0; v < R.nvars(); ++v) {
        Monomial next = m;
        next.e[static_cast<std::size_t>(v)]++;
        if (!seen.count(next.e)) {
          seen[next.e] = true;
          queue.push_back(next);
        }
      }
    }
    std::sort(A.basis_.begin(), A.basis_.end(),
              [&R](const Monomial& a, const Monomial& b) { return R.order.cmp(a, b) < 0; });
  }
  for (std::size_t i = 0; i < A.basis_.size(); ++i) A.index_[A.basis_[i].e] = i;

  for (int v = 0; v < R.nvars(); ++v) {
    Poly xv = poly_from_terms(R, {{[&] {
                                     Monomial m;
                                     m.e[static_cast<std::size_t>(v)] = 1;
                                     return m;
                                   }(),
                                   1}});
    A.var_ops_.push_back(A.multiplication_operator(xv));
  }
  return A;
}

std::vector<Fe> QuotientAlgebra::coords(const Poly& f) const {
  Poly nf = normal_form(f, gb_);
  std::vector<Fe> v(basis_.size(), 0);
  for (const Term& t : nf.t) {
    auto it = index_.find(t.m.e);
    if (it == index_.end())
      throw std::logic_error("normal form contains a non-standard monomial");
    v[it->second] = t.c;
  }
  return v;
}

Poly QuotientAlgebra::from_coords(const std::vector<Fe>& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v[i] != 0) terms.push_back({basis_[i], v[i]});
  return poly_from_terms(gb_.ring, std::move(terms));
}

DenseMatrix QuotientAlgebra::multiplication_operator(const Poly& f) const {
  DenseMatrix M(dim(), dim());
  const Ring& R = gb_.ring;
  for (std::size_t j = 0; j < dim(); ++j) {
    Poly fm = poly_mul_term(R, f, Term{basis_[j], 1});
    std::vector<Fe> col = coords(fm);
    for (std::size_t i = 0; i < dim(); ++i) M.at(i, j) = col[i];
  }
  return M;
}

std::vector<std::vector<Fe>> QuotientAlgebra::monomial_orbit(const std::vector<Fe>& w) const {
  const Ring& R = gb_.ring;
  std::vector<std::vector<Fe>> orbit(dim());
  // basis_ is sorted ascending, so m/x_v precedes m.
  for (std::size_t i = 0; i < dim(); ++i) {
    const Monomial& m = basis_[i];
    if (m.deg() == 0) {
      orbit[i] = w;
      continue;
    }
    int v = 0;
    while (m.e[static_cast<std::size_t>(v)] == 0) ++v;
    Monomial prev = m;
    prev.e[static_cast<std::size_t>(v)]--;
    auto it = index_.find(prev.e);
    if (it == index_.end()) throw std::logic_error("staircase not closed under division");
    orbit[i] = mat_vec(R.field, var_ops_[static_cast<std::size_t>(v)], orbit[it->second]);
  }
  return orbit;
}

std::size_t zerodim_degree(const Ring& R, const std::vector<Poly>& gens) {
  auto A = quotient_algebra(buchberger(R, gens));
  if (!A) throw std::domain_error("ideal is not zero-dimensional");
  return A->dim();
}

ReducednessResult is_reduced_zerodim(const QuotientAlgebra& A, Rng& rng, int attempts) {
  ReducednessResult res;
  const Ring& R = A.ring();
  for (int k = 0; k < attempts; ++k) {
    std::vector<Term> terms;
    for (int v = 0; v < R.nvars(); ++v) {
      Monomial m;
      m.e[static_cast<std::size_t>(v)] = 1;
      terms.push_back({m, rng.field_element(R.field)});
    }
    Poly ell = poly_from_terms(R, std::move(terms));
    if (ell.is_zero()) continue;
    DenseMatrix M = A.multiplication_operator(ell);
    UniPoly cp = charpoly(R.field, M);
    if (uni_squarefree(R.field, cp)) {
      res.verdict = Reducedness::Reduced;
      res.witness_form = ell;
      res.witness_charpoly = cp;
      return res;
    }
    // Minimal polynomial not squarefree is a proof of non-reducedness:
    // evaluate the squarefree part at M.
    UniPoly sf = uni_squarefree_part(R.field, cp);
    DenseMatrix acc(A.dim(), A.dim());
    DenseMatrix power = DenseMatrix::identity(A.dim());
    for (int d = 0; d <= sf.degree(); ++d) {
      Fe c = sf.coeff(d);
      if (c != 0)
        for (std::size_t i = 0; i < A.dim(); ++i)
          for (std::size_t j = 0; j < A.dim(); ++j)
            acc.at(i, j) = R.field.add(acc.at(i, j), R.field.mul(c, power.at(i, j)));
      if (d < sf.degree()) power = mat_mul(R.field, power, M);
    }
    bool zero = true;
    for (std::size_t i = 0; i < A.dim() && zero; ++i)
      for (std::size_t j = 0; j < A.dim() && zero; ++j)
        if (acc.at(i, j) != 0) zero = false;
    if (!zero) {
      res.verdict = Reducedness::NotReduced;
      res.witness_form = ell;
      res.witness_charpoly = cp;
      return res;
    }
  }
  res.verdict = Reducedness::Undecided;
  return res;
}

namespace {

std::vector<Poly> annihilator_preimage(const QuotientAlgebra& A,
                                       const std::vector<std::vector<Fe>>& W) {
  const PrimeField& F = A.ring().field;
  std::size_t n = A.dim();
  // Unknown f = sum c_i m_i; constraints: f * w = 0 for every w in W.
  std::vector<std::vector<std::vector<Fe>>> orbits;
  orbits.reserve(W.size());
  for (const auto& w : W) orbits.push_back(A.monomial_orbit(w));

  DenseMatrix M(W.size() * n, n);
  for (std::size_t k = 0; k < W.size(); ++k)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t i = 0; i < n; ++i) M.at(k * n + t, i) = orbits[k][i][t];

  RankKernel rk = rank_and_kernel(F, M);
  std::vector<Poly> gens = A.gb().g;
  for (const auto& c : rk.kernel) gens.push_back(A.from_coords(c));
  return gens;
}

std::vector<std::vector<Fe>> ideal_image(const QuotientAlgebra& A,
                                         const std::vector<DenseMatrix>& J_ops,
                                         const std::vector<std::vector<Fe>>& span_vectors) {
  // When span_vectors spans an ideal (or all of A), the span of the images
  // j*v is itself an ideal: a*(j*v) = j*(a*v) stays inside.
  const PrimeField& F = A.ring().field;
  std::vector<std::vector<Fe>> rows;
  for (const DenseMatrix& J : J_ops)
    for (const auto& v : span_vectors) rows.push_back(mat_vec(F, J, v));
  return row_space_basis(F, rows, A.dim());
}

}  // namespace

std::vector<Poly> zerodim_colon(const QuotientAlgebra& A, const std::vector<Poly>& Jgens) {
  std::vector<DenseMatrix> J_ops;
  for (const Poly& j : Jgens)
    if (!j.is_zero()) J_ops.push_back(A.multiplication_operator(j));
  if (J_ops.empty()) return {poly_from_terms(A.ring(), {{mono({}), 1}})};

  // W = (image of J)A: unit vectors suffice as the spanning set.
  std::vector<std::vector<Fe>> units;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    std::vector<Fe> e(A.dim(), 0);
    e[i] = 1;
    units.push_back(std::move(e));
  }
  auto W = ideal_image(A, J_ops, units);
  return annihilator_preimage(A, W);
}

std::vector<Poly> zerodim_saturate(const QuotientAlgebra& A, const std::vector<Poly>& Jgens) {
  std::vector<DenseMatrix> J_ops;
  for (const Poly& j : Jgens)
    if (!j.is_zero()) J_ops.push_back(A.multiplication_operator(j));
  if (J_ops.empty()) return {poly_from_terms(A.ring(), {{mono({}), 1}})};

  std::vector<std::vector<Fe>> units;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    std::vector<Fe> e(A.dim(), 0);
    e[i] = 1;
    units.push_back(std::move(e));
  }
  std::vector<std::vector<Fe>> W = ideal_image(A, J_ops, units);
  for (;;) {
    std::vector<std::vector<Fe>> next = ideal_image(A, J_ops, W);
    if (next.size() == W.size()) break;  // J^{k+1}A is a subspace of J^k A
    W = std::move(next);
  }
  return annihilator_preimage(A, W);
}

}  // namespace octic
