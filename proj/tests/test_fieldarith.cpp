#include "doctest.h"

#include "octic/field.hpp"
#include "octic/matrix.hpp"
#include "octic/rng.hpp"

using namespace octic;

namespace {

// Brute-force inverse: the unique b with a*b = 1 mod p.
Fe brute_inverse(const PrimeField& F, Fe a) {
  for (Fe b = 1; b < F.p(); ++b)
    if (F.mul(a, b) == 1) return b;
  return 0;
}

// Fraction-free (Bareiss-style over a field: plain elimination with row
// echelon, counting pivots) rank oracle, written independently of
// rank_and_kernel's RREF path.
std::size_t brute_rank(const PrimeField& F, DenseMatrix M) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < M.cols() && rank < M.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < M.rows() && M.at(piv, c) == 0) ++piv;
    if (piv == M.rows()) continue;
    for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(rank, j));
    for (std::size_t i = rank + 1; i < M.rows(); ++i) {
      // Row_i <- pivot*Row_i - lead*Row_rank (no division needed).
      Fe lead = M.at(i, c), pv = M.at(rank, c);
      for (std::size_t j = 0; j < M.cols(); ++j)
        M.at(i, j) = F.sub(F.mul(pv, M.at(i, j)), F.mul(lead, M.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("primality and admissibility") {
    CHECK(PrimeField::is_prime(2));
    CHECK(PrimeField::is_prime(7));
    CHECK(PrimeField::is_prime(10007));
    CHECK(PrimeField::is_prime(2147483647));
    CHECK_FALSE(PrimeField::is_prime(1));
    CHECK_FALSE(PrimeField::is_prime(10006));
    CHECK_FALSE(PrimeField::is_admissible(2));
    CHECK_FALSE(PrimeField::is_admissible(5));
    CHECK(PrimeField::is_admissible(3));
    CHECK(PrimeField::is_admissible(7));
    CHECK(PrimeField::is_admissible(10007));
    CHECK_FALSE(PrimeField::is_admissible(4294967291ULL));  // >= 2^31
    CHECK_THROWS(PrimeField(10));
    CHECK_THROWS(PrimeField(5));
  }

  TEST_CASE("inverse matches exhaustive search over F_7 and F_101") {
    for (std::uint64_t p : {7ULL, 101ULL}) {
      PrimeField F(p);
      for (Fe a = 1; a < p; ++a) CHECK(F.inv(a) == brute_inverse(F, a));
      CHECK_THROWS_AS((void)F.inv(0), std::domain_error);
    }
  }

  TEST_CASE("ring axioms on random samples") {
    PrimeField F(10007);
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
      Fe a = rng.field_element(F), b = rng.field_element(F), c = rng.field_element(F);
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.sub(a, a) == 0);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.pow(a, F.p() - 1) == 1);  // Fermat
    }
    CHECK(F.reduce(-1) == 10006);
    CHECK(F.reduce(10007) == 0);
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("rank agrees with fraction-free oracle on random matrices") {
    PrimeField F(7);
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
      DenseMatrix M(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M.at(i, j) = rng.field_element(F);
      CHECK(rank_and_kernel(F, M).rank == brute_rank(F, M));
    }
  }

  TEST_CASE("kernel vectors actually lie in the kernel and are normalized") {
    PrimeField F(10007);
    Rng rng(3);
    DenseMatrix M(4, 7);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 7; ++j) M.at(i, j) = rng.field_element(F);
    RankKernel rk = rank_and_kernel(F, M);
    CHECK(rk.rank + rk.kernel.size() == 7);
    for (const auto& v : rk.kernel) {
      std::vector<Fe> img = mat_vec(F, M, v);
      for (Fe x : img) CHECK(x == 0);
      std::size_t first = 0;
      while (first < v.size() && v[first] == 0) ++first;
      REQUIRE(first < v.size());
      CHECK(v[first] == 1);
    }
  }

  TEST_CASE("solve returns a solution exactly when consistent") {
    PrimeField F(7);
    DenseMatrix M(2, 2);
    M.at(0, 0) = 1;
    M.at(0, 1) = 2;
    M.at(1, 0) = 2;
    M.at(1, 1) = 4;  // rank 1
    auto s1 = solve(F, M, {3, 6});
    REQUIRE(s1.has_value());
    CHECK(F.add(F.mul(M.at(0, 0), (*s1)[0]), F.mul(M.at(0, 1), (*s1)[1])) == 3);
    CHECK_FALSE(solve(F, M, {3, 5}).has_value());
  }

  TEST_CASE("charpoly of a companion matrix recovers the polynomial") {
    PrimeField F(10007);
    // t^4 + 3t^3 + 9t^2 + 4t + 11
    std::vector<Fe> coeffs = {11, 4, 9, 3};
    DenseMatrix C(4, 4);
    for (std::size_t i = 1; i < 4; ++i) C.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < 4; ++i) C.at(i, 3) = F.neg(coeffs[i]);
    UniPoly cp = charpoly(F, C);
    CHECK(cp == uni_from(F, {11, 4, 9, 3, 1}));
  }

  TEST_CASE("charpoly works when the dimension exceeds p") {
    PrimeField F(7);
    Rng rng(5);
    std::size_t n = 10;  // n > p: integer-division methods would fail here
    DenseMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.at(i, j) = rng.field_element(F);
    UniPoly cp = charpoly(F, M);
    REQUIRE(cp.degree() == 10);
    CHECK(cp.lead() == 1);
    // Cayley-Hamilton: cp(M) = 0.
    DenseMatrix acc(n, n), power = DenseMatrix::identity(n);
    for (int d = 0; d <= cp.degree(); ++d) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          acc.at(i, j) = F.add(acc.at(i, j), F.mul(cp.coeff(d), power.at(i, j)));
      if (d < cp.degree()) power = mat_mul(F, power, M);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(acc.at(i, j) == 0);
  }

  TEST_CASE("mat_inv round-trips and rejects singular input") {
    PrimeField F(10007);
    Rng rng(9);
    DenseMatrix M(3, 3);
    do {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) M.at(i, j) = rng.field_element(F);
    } while (!mat_inv(F, M));
    DenseMatrix P = mat_mul(F, *mat_inv(F, M), M);
    CHECK(P == DenseMatrix::identity(3));
    DenseMatrix S(2, 2);
    S.at(0, 0) = 1;
    S.at(0, 1) = 2;
    S.at(1, 0) = 3;
    S.at(1, 1) = 6;
    CHECK_FALSE(mat_inv(F, S).has_value());
  }
}
