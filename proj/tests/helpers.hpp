#ifndef OCTIC_TESTS_HELPERS_HPP
#define OCTIC_TESTS_HELPERS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "octic/poly.hpp"
#include "octic/rng.hpp"
#include "octic/unipoly.hpp"

namespace octic::testing {

/// Element of F_{p^k} as a polynomial of degree < k modulo a fixed monic
/// irreducible. Test-only: slow and simple on purpose (independent oracle).
struct ExtField {
  PrimeField F;
  UniPoly modulus;  // monic irreducible of degree k

  int k() const { return modulus.degree(); }

  using El = std::vector<Fe>;  // coefficient vector of size k

  El zero() const { return El(static_cast<std::size_t>(k()), 0); }
  El from_base(Fe a) const {
    El e = zero();
    e[0] = a;
    return e;
  }
  bool is_zero(const El& a) const {
    for (Fe v : a)
      if (v) return false;
    return true;
  }

  El add(const El& a, const El& b) const {
    El r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(r[i], b[i]);
    return r;
  }

  El mul(const El& a, const El& b) const {
    UniPoly pa{std::vector<Fe>(a)}, pb{std::vector<Fe>(b)};
    pa.trim();
    pb.trim();
    UniPoly prod = uni_mul(F, pa, pb);
    UniPoly rem = prod.is_zero() ? prod : uni_divrem(F, prod, modulus).r;
    El r = zero();
    for (int i = 0; i <= rem.degree(); ++i) r[static_cast<std::size_t>(i)] = rem.coeff(i);
    return r;
  }

  El pow_el(El a, std::uint64_t e) const {
    El r = from_base(1);
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// All p^k elements, in lexicographic coefficient order.
  std::vector<El> all_elements() const {
    std::vector<El> out;
    std::uint64_t total = 1;
    for (int i = 0; i < k(); ++i) total *= F.p();
    for (std::uint64_t code = 0; code < total; ++code) {
      El e = zero();
      std::uint64_t c = code;
      for (int i = 0; i < k(); ++i) {
        e[static_cast<std::size_t>(i)] = c % F.p();
        c /= F.p();
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  /// Evaluation of a bivariate chart polynomial at (x, y) in F_{p^k}.
  El evaluate2(const Ring& R2, const Poly& f, const El& x, const El& y) const {
    El acc = zero();
    for (const Term& t : f.t) {
      El v = from_base(t.c);
      v = mul(v, pow_el(x, t.m.e[0]));
      v = mul(v, pow_el(y, t.m.e[1]));
      acc = add(acc, v);
    }
    return acc;
  }
};

/// x^3 + 3x + 2 is irreducible over F_7 (no roots; degree 3 suffices).
inline ExtField f7_cubed() { return ExtField{PrimeField(7), uni_from(PrimeField(7), {2, 3, 0, 1})}; }

inline std::vector<std::array<Fe, 3>> random_affine_points(const Ring& R3, Rng& rng,
                                                           std::size_t n) {
  std::vector<std::array<Fe, 3>> pts;
  while (pts.size() < n) {
    std::array<Fe, 3> p{rng.field_element(R3.field), rng.field_element(R3.field), 1};
    bool dup = false;
    for (const auto& q : pts)
      if (q == p) dup = true;
    if (!dup) pts.push_back(p);
  }
  return pts;
}

}  // namespace octic::testing

#endif
