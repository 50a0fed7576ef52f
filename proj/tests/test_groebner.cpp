#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "octic/groebner.hpp"
#include "octic/zerodim.hpp"

using namespace octic;
using octic::testing::ExtField;

namespace {

// Interpolation oracle over F_7: the vanishing ideal of a point set,
// realized as all chart polynomials of degree <= d0 vanishing there, for d0
// large enough to generate. Membership in the ideal is decided by
// evaluating at the points — valid only for radical (point) ideals.
bool vanishes_on(const Ring& R2, const Poly& f, const std::vector<std::array<Fe, 2>>& pts) {
  for (const auto& p : pts) {
    std::array<Fe, 2> a{p[0], p[1]};
    if (evaluate(R2, f, a) != 0) return false;
  }
  return true;
}

std::vector<std::array<Fe, 2>> brute_colon_points(const std::vector<std::array<Fe, 2>>& I_pts,
                                                  const std::vector<std::array<Fe, 2>>& J_pts) {
  // (I : J) for radical point ideals = ideal of I_pts \ J_pts.
  std::vector<std::array<Fe, 2>> out;
  for (const auto& p : I_pts)
    if (std::find(J_pts.begin(), J_pts.end(), p) == J_pts.end()) out.push_back(p);
  return out;
}

Poly point_ideal_factor(const Ring& R2, const std::array<Fe, 2>& p, int which) {
  // (x - p0) or (y - p1)
  if (which == 0) return poly_from_terms(R2, {{mono({1, 0}), 1}, {mono({0, 0}), R2.field.neg(p[0])}});
  return poly_from_terms(R2, {{mono({0, 1}), 1}, {mono({0, 0}), R2.field.neg(p[1])}});
}

// The exact radical vanishing ideal of a point set, as the intersection of
// the maximal ideals (x - a, y - b).
std::vector<Poly> point_set_generators(const Ring& R2, const std::vector<std::array<Fe, 2>>& pts) {
  std::vector<Poly> acc = {point_ideal_factor(R2, pts[0], 0), point_ideal_factor(R2, pts[0], 1)};
  for (std::size_t i = 1; i < pts.size(); ++i)
    acc = ideal_intersect(R2, acc,
                          {point_ideal_factor(R2, pts[i], 0), point_ideal_factor(R2, pts[i], 1)});
  return acc;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("hand-checkable reduced basis: symmetric linear system") {
    Ring R = make_ring(10007, 3);
    // (x + y + z, x - y) has reduced grevlex GB {x - z... } work it out:
    // y = x, z = -2x  =>  GB {x + y + z, x - y} reduces to {y - z*?}
    Poly f1 = poly_from(R, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
    Poly f2 = poly_from(R, {{{1, 0, 0}, 1}, {{0, 1, 0}, -1}});
    GroebnerBasis gb = buchberger(R, {f1, f2});
    CHECK(is_certified_groebner(gb));
    // x and y are leading terms; the basis is {x + (1/2)z, y + (1/2)z}.
    REQUIRE(gb.g.size() == 2);
    Fe half = R.field.inv(2);
    CHECK(gb.g[0] == poly_from_terms(R, {{mono({1, 0, 0}), 1}, {mono({0, 0, 1}), half}}));
    CHECK(gb.g[1] == poly_from_terms(R, {{mono({0, 1, 0}), 1}, {mono({0, 0, 1}), half}}));
  }

  TEST_CASE("normal form is a full reduction and detects membership") {
    Ring R = make_ring(7, 2);
    Poly g1 = poly_from(R, {{{2, 0}, 1}, {{0, 1}, -1}});  // x^2 - y
    Poly g2 = poly_from(R, {{{0, 2}, 1}, {{1, 0}, -1}});  // y^2 - x
    GroebnerBasis gb = buchberger(R, {g1, g2});
    CHECK(is_certified_groebner(gb));
    // x^4 = (x^2)^2 ≡ y^2 ≡ x mod I.
    Poly x4 = poly_from(R, {{{4, 0}, 1}});
    CHECK(normal_form(x4, gb) == poly_from(R, {{{1, 0}, 1}}));
    Poly member = poly_sub(R, x4, poly_from(R, {{{1, 0}, 1}}));
    CHECK(ideal_contains(gb, member));
    CHECK_FALSE(ideal_contains(gb, poly_from(R, {{{1, 0}, 1}})));
  }

  TEST_CASE("unit ideal collapses to {1}") {
    Ring R = make_ring(7, 2);
    GroebnerBasis gb = buchberger(R, {poly_from(R, {{{1, 0}, 1}}),
                                      poly_from(R, {{{1, 0}, 1}, {{0, 0}, 1}})});
    REQUIRE(gb.g.size() == 1);
    CHECK(gb.g[0] == poly_from(R, {{{0, 0}, 1}}));
  }

  TEST_CASE("intersect / quotient / saturate contract examples") {
    Ring R = make_ring(10007, 2);
    Poly x = poly_from(R, {{{1, 0}, 1}});
    Poly y = poly_from(R, {{{0, 1}, 1}});
    Poly x2 = poly_from(R, {{{2, 0}, 1}});
    Poly xy = poly_from(R, {{{1, 1}, 1}});
    Poly x2y = poly_from(R, {{{2, 1}, 1}});

    // (x) cap (y) = (xy)
    auto inter = buchberger(R, ideal_intersect(R, {x}, {y}));
    CHECK(groebner_equal(inter, buchberger(R, {xy})));

    // ((x y) : (x)) = (y)
    auto quot = buchberger(R, ideal_quotient(R, {xy}, {x}));
    CHECK(groebner_equal(quot, buchberger(R, {y})));

    // saturate((x^2), (x)) = (1); saturate((x^2 y), (x)) = (y); sat(I,(1)) = I
    CHECK(groebner_equal(buchberger(R, saturate(R, {x2}, {x})),
                         buchberger(R, {poly_from(R, {{{0, 0}, 1}})})));
    CHECK(groebner_equal(buchberger(R, saturate(R, {x2y}, {x})), buchberger(R, {y})));
    Poly one = poly_from(R, {{{0, 0}, 1}});
    CHECK(groebner_equal(buchberger(R, saturate(R, {x2y}, {one})), buchberger(R, {x2y})));
  }

  TEST_CASE("elimination removes a block of variables") {
    Ring R = make_ring(10007, 3);
    // I = (x - z^2, y - z^3); eliminating z yields the twisted-cubic-style
    // relation x^3 - y^2 in the (x, y) block.
    Poly f1 = poly_from(R, {{{1, 0, 0}, 1}, {{0, 0, 2}, -1}});
    Poly f2 = poly_from(R, {{{0, 1, 0}, 1}, {{0, 0, 3}, -1}});
    auto el = eliminate(R, {f1, f2}, 0b011);
    Ring Rxy = make_ring(10007, 3);
    auto gb = buchberger(Rxy, el);
    Poly rel = poly_from(Rxy, {{{3, 0, 0}, 1}, {{0, 2, 0}, -1}});
    CHECK(ideal_contains(gb, rel));
    for (const Poly& g : gb.g)
      for (const Term& t : g.t) CHECK(t.m.e[2] == 0);
  }

  TEST_CASE("quotient agrees with the interpolation oracle over F_7") {
    Ring R2 = make_ring(7, 2);
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
      // Random small point sets with J_pts a subset of I_pts.
      std::vector<std::array<Fe, 2>> I_pts;
      while (I_pts.size() < 4) {
        std::array<Fe, 2> p{rng.field_element(R2.field), rng.field_element(R2.field)};
        if (std::find(I_pts.begin(), I_pts.end(), p) == I_pts.end()) I_pts.push_back(p);
      }
      std::vector<std::array<Fe, 2>> J_pts = {I_pts[0], I_pts[1]};
      auto I = point_set_generators(R2, I_pts);
      auto J = point_set_generators(R2, J_pts);
      auto Q = buchberger(R2, ideal_quotient(R2, I, J));

      auto expected_pts = brute_colon_points(I_pts, J_pts);
      // Oracle check 1: every element of Q vanishes on the expected points.
      for (const Poly& q : Q.g) CHECK(vanishes_on(R2, q, expected_pts));
      // Oracle check 2: degree of the quotient scheme equals the count.
      CHECK(zerodim_degree(R2, Q.g) == expected_pts.size());
    }
  }

  TEST_CASE("zero-dimensional colon route agrees with the elimination route") {
    Ring R2 = make_ring(7, 2);
    Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::array<Fe, 2>> I_pts;
      while (I_pts.size() < 5) {
        std::array<Fe, 2> p{rng.field_element(R2.field), rng.field_element(R2.field)};
        if (std::find(I_pts.begin(), I_pts.end(), p) == I_pts.end()) I_pts.push_back(p);
      }
      auto I = point_set_generators(R2, I_pts);
      auto J = point_set_generators(R2, {I_pts[0], I_pts[3]});
      auto A = quotient_algebra(buchberger(R2, I));
      REQUIRE(A.has_value());
      auto fast = buchberger(R2, zerodim_colon(*A, J));
      auto slow = buchberger(R2, ideal_quotient(R2, I, J));
      CHECK(groebner_equal(fast, slow));

      auto fast_sat = buchberger(R2, zerodim_saturate(*A, J));
      auto slow_sat = buchberger(R2, saturate(R2, I, J));
      CHECK(groebner_equal(fast_sat, slow_sat));
    }
  }

  TEST_CASE("zerodim_degree counts points over the extension field F_{7^3}") {
    Ring R2 = make_ring(7, 2);
    ExtField E = octic::testing::f7_cubed();
    Rng rng(55);
    for (int trial = 0; trial < 5; ++trial) {
      // I = (f(x), y - g(x)) with f squarefree: degree = deg f, and every
      // point of V(I) is (r, g(r)) for a root r of f in the closure. All
      // roots of a degree-3 squarefree f live in F_{7^3} (factors have
      // degree 1 or 3)... only when f has no quadratic factor, so build f
      // as a product of distinct linear factors times one cubic.
      UniPoly f = uni_from(E.F, {2, 3, 0, 1});  // irreducible cubic
      Fe a = rng.field_element(E.F);
      Fe b = (a + 1 + rng.below(6)) % 7;
      f = uni_mul(E.F, f, uni_from(E.F, {static_cast<std::int64_t>(E.F.neg(a)), 1}));
      f = uni_mul(E.F, f, uni_from(E.F, {static_cast<std::int64_t>(E.F.neg(b)), 1}));
      REQUIRE(uni_squarefree(E.F, f));

      // Chart polynomials: f(x) and y - (x^2 + c)
      Fe c = rng.field_element(E.F);
      std::vector<Term> fx;
      for (int d = 0; d <= f.degree(); ++d)
        if (f.coeff(d)) fx.push_back({mono({d, 0}), f.coeff(d)});
      Poly Pf = poly_from_terms(R2, std::move(fx));
      Poly Pg = poly_from(R2, {{{0, 1}, 1},
                               {{2, 0}, -1},
                               {{0, 0}, -static_cast<std::int64_t>(c)}});

      std::size_t deg = zerodim_degree(R2, {Pf, Pg});
      CHECK(deg == static_cast<std::size_t>(f.degree()));

      // Brute-force point count over F_{7^3}: solutions of both equations.
      std::size_t count = 0;
      for (const auto& x : E.all_elements()) {
        // f(x) = 0?
        ExtField::El v = E.zero();
        for (int d = f.degree(); d >= 0; --d) {
          v = E.mul(v, x);
          v = E.add(v, E.from_base(f.coeff(d)));
        }
        if (!E.is_zero(v)) continue;
        // unique y = x^2 + c
        ++count;
      }
      CHECK(count == deg);  // squarefree with all roots in F_{7^3}
    }
  }
}

TEST_SUITE("zerodim") {
  TEST_CASE("quotient algebra of a complete intersection of conics") {
    Ring R2 = make_ring(10007, 2);
    Poly f = poly_from(R2, {{{2, 0}, 1}, {{0, 0}, -1}});  // x^2 - 1
    Poly g = poly_from(R2, {{{0, 2}, 1}, {{0, 0}, -4}});  // y^2 - 4
    auto A = quotient_algebra(buchberger(R2, {f, g}));
    REQUIRE(A.has_value());
    CHECK(A->dim() == 4);
    CHECK(A->basis()[0] == mono({0, 0}));  // ascending order, 1 first
    Rng rng(2);
    CHECK(is_reduced_zerodim(*A, rng).verdict == Reducedness::Reduced);
  }

  TEST_CASE("non-reducedness is detected with a proof") {
    Ring R2 = make_ring(10007, 2);
    Poly f = poly_from(R2, {{{2, 0}, 1}});  // x^2
    Poly g = poly_from(R2, {{{0, 1}, 1}});  // y
    auto A = quotient_algebra(buchberger(R2, {f, g}));
    REQUIRE(A.has_value());
    CHECK(A->dim() == 2);
    Rng rng(2);
    CHECK(is_reduced_zerodim(*A, rng).verdict == Reducedness::NotReduced);
  }

  TEST_CASE("positive-dimensional ideals are rejected") {
    Ring R2 = make_ring(10007, 2);
    Poly f = poly_from(R2, {{{1, 0}, 1}});  // (x): a line
    CHECK_FALSE(quotient_algebra(buchberger(R2, {f})).has_value());
    CHECK_THROWS_AS((void)zerodim_degree(R2, {f}), std::domain_error);
  }

  TEST_CASE("multiplication operators commute and respect the algebra") {
    Ring R2 = make_ring(7, 2);
    Poly f = poly_from(R2, {{{2, 0}, 1}, {{0, 1}, -1}});
    Poly g = poly_from(R2, {{{0, 2}, 1}, {{1, 0}, -1}});
    auto A = quotient_algebra(buchberger(R2, {f, g}));
    REQUIRE(A.has_value());
    const DenseMatrix& Mx = A->var_operator(0);
    const DenseMatrix& My = A->var_operator(1);
    CHECK(mat_mul(A->ring().field, Mx, My) == mat_mul(A->ring().field, My, Mx));
    // coords/from_coords round-trip
    Poly h = poly_from(R2, {{{1, 1}, 3}, {{0, 0}, 5}});
    CHECK(A->from_coords(A->coords(h)) == normal_form(h, A->gb()));
  }
}
