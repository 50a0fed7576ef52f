#ifndef OCTIC_MATRIX_HPP
#define OCTIC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "octic/field.hpp"
#include "octic/unipoly.hpp"

namespace octic {

/// Row-major dense matrix over F_p. All elimination routines pivot on the
/// first nonzero entry in column order, so results are deterministic.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fe& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Fe at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static DenseMatrix identity(std::size_t n);

  bool operator==(const DenseMatrix& o) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Fe> a_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// Kernel basis vectors, reduced-echelon-normalized: first nonzero
  /// coordinate 1, ordered by free column index.
  std::vector<std::vector<Fe>> kernel;
};

RankKernel rank_and_kernel(const PrimeField& F, const DenseMatrix& M);

/// Returns a solution of M x = b, or nullopt if the system is inconsistent.
std::optional<std::vector<Fe>> solve(const PrimeField& F, const DenseMatrix& M,
                                     const std::vector<Fe>& b);

std::vector<Fe> mat_vec(const PrimeField& F, const DenseMatrix& M,
                        const std::vector<Fe>& v);
DenseMatrix mat_mul(const PrimeField& F, const DenseMatrix& A, const DenseMatrix& B);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<DenseMatrix> mat_inv(const PrimeField& F, const DenseMatrix& M);

/// Exact characteristic polynomial det(tI - M), monic of degree n.
/// Computed by similarity reduction to Hessenberg form followed by the
/// leading-principal-minor recurrence; valid for every p (no division by
/// integer constants).
UniPoly charpoly(const PrimeField& F, const DenseMatrix& M);

}  // namespace octic

#endif
