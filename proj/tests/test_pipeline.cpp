#include "doctest.h"

#include "octic/certificate.hpp"

using namespace octic;

namespace {

std::vector<std::int64_t> check_of(const Certificate& c, const std::string& name) {
  auto it = c.checks.find(name);
  REQUIRE_MESSAGE(it != c.checks.end(), "missing check: " << name);
  return it->second;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("point choice satisfies both dimension gates") {
    Ring R3 = make_ring(10007, 3);
    Rng rng(17);
    RunCounters counters;
    std::optional<PointChoice> pc;
    for (int i = 0; i < 10 && !pc; ++i) pc = choose_points(R3, rng, counters);
    REQUIRE(pc.has_value());
    CHECK(pc->P.size() == 12);
    CHECK(pc->R.size() == 5);
    CHECK(pc->h0_ipr_5 == 4);
    CHECK(pc->h0_ip2_8 == 9);
    for (const auto& p : pc->P) CHECK(p[2] == 1);
    for (const auto& r : pc->R) CHECK(r[2] == 1);
    // All 17 points distinct.
    std::vector<std::array<Fe, 3>> all = pc->P;
    all.insert(all.end(), pc->R.begin(), pc->R.end());
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
  }

  TEST_CASE("full construction: every gate value on a SUCCESS run") {
    Certificate cert = run_construction(10007, 2, 10);
    REQUIRE(cert.status == "SUCCESS");

    CHECK(check_of(cert, "points.h0_ipr_5") == std::vector<std::int64_t>{4});
    CHECK(check_of(cert, "points.h0_ip2_8") == std::vector<std::int64_t>{9});
    CHECK(check_of(cert, "octic.dimension") == std::vector<std::int64_t>{1});
    CHECK(check_of(cert, "recovery.h0_ipq_5") == std::vector<std::int64_t>{2});

    CHECK(check_of(cert, "residual.base_degree") == std::vector<std::int64_t>{25});
    CHECK(check_of(cert, "residual.iq_degree") == std::vector<std::int64_t>{8});
    CHECK(check_of(cert, "residual.disjoint_from_pr") == std::vector<std::int64_t>{1});
    CHECK(check_of(cert, "nodes.degree") == std::vector<std::int64_t>{12});
    CHECK(check_of(cert, "ramification.degree") == std::vector<std::int64_t>{32});
    CHECK(check_of(cert, "ramification.squarefree") == std::vector<std::int64_t>{1});
    CHECK(check_of(cert, "recovery.base_degree") == std::vector<std::int64_t>{25});
    CHECK(check_of(cert, "recovery.ideal_equality") == std::vector<std::int64_t>{1});

    CHECK(check_of(cert, "genus.value") == std::vector<std::int64_t>{9});
    CHECK(check_of(cert, "genus.adjoint_dimension") == std::vector<std::int64_t>{9});
    CHECK(check_of(cert, "nodes.all_ordinary") == std::vector<std::int64_t>{1});
    CHECK(check_of(cert, "nodes.discriminants").size() == 12);
    for (auto d : check_of(cert, "nodes.discriminants")) CHECK(d != 0);

    CHECK(check_of(cert, "profile.generators") ==
          std::vector<std::int64_t>{0, 0, 0, 0, 3, 0, 0, 0, 0});
    CHECK(check_of(cert, "profile.new_syzygies") ==
          std::vector<std::int64_t>{0, 0, 0, 0, 0, 0, 2, 0, 0});

    // Branch polynomial: degree 32, recorded in full.
    CHECK(check_of(cert, "ramification.branch_unipoly").size() == 33);
    // Bezout bookkeeping: deg g * deg h = 8 * 15 before stripping the base
    // locus at P and Q.
    CHECK(check_of(cert, "ramification.presaturation_degree") ==
          std::vector<std::int64_t>{120});

    // The recorded octic is normalized: first nonzero coefficient 1 in
    // descending term order.
    CHECK(cert.data.g.lead().c == 1);
    CHECK(cert.data.g.degree() == 8);
    CHECK(cert.data.f1.degree() == 5);
    CHECK(cert.data.f2.degree() == 5);
  }

  TEST_CASE("construction over a small field terminates with a legal status") {
    Certificate cert = run_construction(7, 3, 3);
    bool legal = cert.status == "SUCCESS" || cert.status.rfind("FAILED:", 0) == 0 ||
                 cert.status.rfind("UNDECIDED:", 0) == 0;
    CHECK(legal);
    CHECK(cert.counters.point_rounds >= 1);
    CHECK(cert.counters.point_rounds <= 3);
  }

  TEST_CASE("retry budget of the failing stage is respected") {
    // Seed/budget chosen small so even a failing run is quick; the contract
    // is only that point rounds never exceed the budget.
    Certificate cert = run_construction(11, 5, 2);
    CHECK(cert.counters.point_rounds <= 2);
  }
}
