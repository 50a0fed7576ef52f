#include "octic/matrix.hpp"

#include <stdexcept>

namespace octic {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

struct Rref {
  DenseMatrix m;
  std::vector<std::size_t> pivot_cols;
};

Rref rref(const PrimeField& F, DenseMatrix m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Fe inv = F.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Fe f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

RankKernel rank_and_kernel(const PrimeField& F, const DenseMatrix& M) {
  Rref rr = rref(F, M);
  RankKernel out;
  out.rank = rr.pivot_cols.size();

  std::vector<bool> is_pivot(M.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  for (std::size_t free_c = 0; free_c < M.cols(); ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Fe> v(M.cols(), 0);
    v[free_c] = 1;
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
      v[rr.pivot_cols[k]] = F.neg(rr.m.at(k, free_c));
    // Normalize the first nonzero coordinate to 1.
    for (Fe x : v) {
      if (x != 0) {
        if (x != 1) {
          Fe s = F.inv(x);
          for (Fe& y : v) y = F.mul(y, s);
        }
        break;
      }
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Fe>> solve(const PrimeField& F, const DenseMatrix& M,
                                     const std::vector<Fe>& b) {
  if (b.size() != M.rows()) throw std::invalid_argument("solve: size mismatch");
  DenseMatrix aug(M.rows(), M.cols() + 1);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, M.cols()) = b[i];
  }
  Rref rr = rref(F, std::move(aug));
  std::vector<Fe> x(M.cols(), 0);
  for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
    if (rr.pivot_cols[k] == M.cols()) return std::nullopt;  // pivot in the b column
    x[rr.pivot_cols[k]] = rr.m.at(k, M.cols());
  }
  return x;
}

std::vector<Fe> mat_vec(const PrimeField& F, const DenseMatrix& M,
                        const std::vector<Fe>& v) {
  std::vector<Fe> r(M.rows(), 0);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Fe acc = 0;
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (M.at(i, j) != 0 && v[j] != 0) acc = F.add(acc, F.mul(M.at(i, j), v[j]));
    r[i] = acc;
  }
  return r;
}

DenseMatrix mat_mul(const PrimeField& F, const DenseMatrix& A, const DenseMatrix& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: size mismatch");
  DenseMatrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      Fe a = A.at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < B.cols(); ++j)
        if (B.at(k, j) != 0) C.at(i, j) = F.add(C.at(i, j), F.mul(a, B.at(k, j)));
    }
  return C;
}

std::optional<DenseMatrix> mat_inv(const PrimeField& F, const DenseMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("mat_inv: not square");
  std::size_t n = M.rows();
  DenseMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Rref rr = rref(F, std::move(aug));
  if (rr.pivot_cols.size() < n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
  DenseMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.m.at(i, n + j);
  return inv;
}

UniPoly charpoly(const PrimeField& F, const DenseMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("charpoly: not square");
  std::size_t n = M.rows();
  if (n == 0) return uni_from(F, {1});

  DenseMatrix H = M;
  // Similarity reduction to upper Hessenberg form, deterministic pivoting.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && H.at(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H.at(piv, j), H.at(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(H.at(i, piv), H.at(i, c + 1));
    }
    Fe pinv = F.inv(H.at(c + 1, c));
    for (std::size_t i = c + 2; i < n; ++i) {
      Fe f = F.mul(H.at(i, c), pinv);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) H.at(i, j) = F.sub(H.at(i, j), F.mul(f, H.at(c + 1, j)));
      for (std::size_t j = 0; j < n; ++j) H.at(j, c + 1) = F.add(H.at(j, c + 1), F.mul(f, H.at(j, i)));
    }
  }

  // p_k = (t - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i..k-1} h_{j+1,j}) p_{i-1}
  std::vector<UniPoly> p(n + 1);
  p[0] = uni_from(F, {1});
  UniPoly t = uni_from(F, {0, 1});
  for (std::size_t k = 1; k <= n; ++k) {
    UniPoly lin = uni_sub(F, t, uni_from(F, {static_cast<std::int64_t>(H.at(k - 1, k - 1))}));
    UniPoly acc = uni_mul(F, lin, p[k - 1]);
    Fe sub_prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      sub_prod = F.mul(sub_prod, H.at(i + 1, i));
      if (sub_prod == 0) break;
      Fe coeff = F.mul(H.at(i, k - 1), sub_prod);
      if (coeff != 0) acc = uni_sub(F, acc, uni_scale(F, p[i], coeff));
    }
    p[k] = std::move(acc);
  }
  return p[n];
}

}  // namespace octic
