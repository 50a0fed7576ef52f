#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "octic/certificate.hpp"

using namespace octic;

namespace {

// One SUCCESS certificate shared by the whole suite (construction is the
// expensive part).
const Certificate& success_cert() {
  static Certificate cert = run_construction(10007, 1, 10);
  return cert;
}

}  // namespace

TEST_SUITE("certificate") {
  TEST_CASE("construction succeeds and serializes canonically") {
    const Certificate& cert = success_cert();
    REQUIRE(cert.status == "SUCCESS");
    std::string j1 = certificate_to_json(cert);
    Certificate back = certificate_from_json(j1);
    std::string j2 = certificate_to_json(back);
    CHECK(j1 == j2);  // parse -> re-serialize is the identity
    CHECK(back.prime == cert.prime);
    CHECK(back.seed == cert.seed);
    CHECK(back.data.g == cert.data.g);
    CHECK(back.checks == cert.checks);
  }

  TEST_CASE("repeated runs are byte-identical") {
    Certificate again = run_construction(10007, 1, 10);
    CHECK(certificate_to_json(again) == certificate_to_json(success_cert()));
  }

  TEST_CASE("file round-trip") {
    const Certificate& cert = success_cert();
    std::string path = "roundtrip_cert.json";
    std::size_t n = write_certificate(cert, path);
    CHECK(n > 0);
    Certificate back = read_certificate(path);
    CHECK(certificate_to_json(back) == certificate_to_json(cert));
    std::remove(path.c_str());
    CHECK_THROWS(read_certificate("does_not_exist_cert.json"));
  }

  TEST_CASE("reverify accepts an untouched certificate") {
    ReverifyResult r = reverify(success_cert());
    CHECK(r.ok);
    CHECK_FALSE(r.undecided);
  }

  TEST_CASE("tampering with a stored verdict is detected") {
    Certificate tampered = success_cert();
    tampered.checks["genus.value"] = {8};
    ReverifyResult r = reverify(tampered);
    CHECK_FALSE(r.ok);
    bool flagged = false;
    for (const auto& line : r.lines)
      if (line.find("TAMPERED") != std::string::npos &&
          line.find("genus.value") != std::string::npos)
        flagged = true;
    CHECK(flagged);
  }

  TEST_CASE("tampering with the curve itself is detected") {
    Certificate tampered = success_cert();
    Ring R3 = make_ring(tampered.prime, 3);
    // Perturb one coefficient of the octic.
    tampered.data.g = poly_add(R3, tampered.data.g, poly_from(R3, {{{0, 0, 8}, 1}}));
    ReverifyResult r = reverify(tampered);
    CHECK_FALSE(r.ok);
  }

  TEST_CASE("tampering with the residual ideal is detected") {
    Certificate tampered = success_cert();
    Ring R2 = make_ring(tampered.prime, 2);
    tampered.data.iq_gens[0] =
        poly_add(R2, tampered.data.iq_gens[0], poly_from(R2, {{{0, 0}, 1}}));
    ReverifyResult r = reverify(tampered);
    CHECK_FALSE(r.ok);
  }

  TEST_CASE("malformed input is rejected with a clear error") {
    CHECK_THROWS_AS((void)certificate_from_json("not json at all"), std::runtime_error);
    CHECK_THROWS_AS((void)certificate_from_json("{}"), std::runtime_error);
    // Inadmissible prime embedded in otherwise plausible JSON.
    std::string j = certificate_to_json(success_cert());
    auto pos = j.find("\"prime\": 10007");
    REQUIRE(pos != std::string::npos);
    std::string bad = j.substr(0, pos) + "\"prime\": 10" + j.substr(pos + 14);
    CHECK_THROWS_AS((void)certificate_from_json(bad), std::runtime_error);
  }

  TEST_CASE("non-success certificates are not re-checkable") {
    Certificate failed;
    failed.prime = 10007;
    failed.seed = 0;
    failed.status = "FAILED:points";
    ReverifyResult r = reverify(failed);
    CHECK_FALSE(r.ok);
  }
}
