#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "octic/certificate.hpp"
#include "octic/pipeline.hpp"

namespace {

// Exit codes. Construction failure and certificate rejection are separate
// from usage and I/O problems so scripts can tell them apart.
constexpr int kOk = 0;
constexpr int kConstructionFailed = 2;
constexpr int kVerifyRejected = 3;
constexpr int kUsage = 64;
constexpr int kDataError = 65;
constexpr int kNoInput = 66;

int cmd_construct(std::uint64_t prime, std::uint64_t seed, int retries, const std::string& out,
                  bool quiet) {
  if (!octic::PrimeField::is_admissible(prime)) {
    std::cerr << "error: prime must be a prime other than 2 and 5, below 2^31\n";
    return kUsage;
  }
  if (retries < 1) {
    std::cerr << "error: --retries must be at least 1\n";
    return kUsage;
  }
  octic::Certificate cert = octic::run_construction(prime, seed, retries);
  if (!quiet) {
    std::cout << "prime   " << cert.prime << "\n";
    std::cout << "seed    " << cert.seed << "\n";
    std::cout << "status  " << cert.status << "\n";
    std::cout << "rounds  points=" << cert.counters.point_rounds
              << " pencils=" << cert.counters.pencil_rounds << "\n";
    for (const auto& [name, vals] : cert.checks) {
      std::cout << "check   " << name << " =";
      for (auto v : vals) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  if (!out.empty()) {
    try {
      std::size_t n = octic::write_certificate(cert, out);
      if (!quiet) std::cout << "wrote   " << out << " (" << n << " bytes)\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kDataError;
    }
  }
  return cert.status == "SUCCESS" ? kOk : kConstructionFailed;
}

int cmd_verify(const std::string& path, bool quiet) {
  octic::Certificate cert;
  try {
    cert = octic::read_certificate(path);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.rfind("cannot open", 0) == 0 ? kNoInput : kDataError;
  }
  octic::ReverifyResult res = octic::reverify(cert);
  if (!quiet)
    for (const auto& line : res.lines) std::cout << line << "\n";
  if (res.ok && !res.undecided) {
    std::cout << "VERIFIED\n";
    return kOk;
  }
  std::cout << (res.ok ? "UNDECIDED" : "REJECTED") << "\n";
  return kVerifyRejected;
}

int cmd_audit(int genus, int degree) {
  octic::DimensionAudit a = octic::dimension_audit(genus, degree);
  std::cout << octic::audit_table(a);
  return a.all_ok ? kOk : 1;
}

int cmd_selfcheck() {
  bool ok = true;
  auto report = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
    if (!pass) ok = false;
  };

  for (std::uint64_t p : {std::uint64_t{7}, std::uint64_t{10007}}) {
    octic::PrimeField F(p);
    octic::Rng rng(42);

    bool field_ok = true;
    for (int i = 0; i < 200; ++i) {
      octic::Fe a = rng.nonzero_field_element(F);
      octic::Fe b = rng.field_element(F);
      if (F.mul(a, F.inv(a)) != 1) field_ok = false;
      if (F.add(F.sub(b, a), a) != b) field_ok = false;
      if (F.pow(a, p - 1) != 1) field_ok = false;
    }
    report("field arithmetic identities (p=" + std::to_string(p) + ")", field_ok);

    // Buchberger on a known complete intersection of two conics: the
    // quotient must have dimension 4 and Cayley-Hamilton must hold for a
    // random multiplication operator.
    octic::Ring R2 = octic::make_ring(F, 2);
    auto gb = octic::buchberger(
        R2, {octic::poly_from(R2, {{{2, 0}, 1}, {{0, 0}, -1}}),
             octic::poly_from(R2, {{{0, 2}, 1}, {{1, 0}, -1}})});
    auto A = octic::quotient_algebra(gb);
    bool zd_ok = A.has_value() && A->dim() == 4;
    if (zd_ok) {
      octic::Poly ell = octic::poly_from(R2, {{{1, 0}, 1}, {{0, 1}, 2}});
      octic::DenseMatrix M = A->multiplication_operator(ell);
      octic::UniPoly cp = octic::charpoly(F, M);
      // Evaluate cp(M) and check it is zero.
      octic::DenseMatrix acc(4, 4), power = octic::DenseMatrix::identity(4);
      for (int d = 0; d <= cp.degree(); ++d) {
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j)
            acc.at(i, j) = F.add(acc.at(i, j), F.mul(cp.coeff(d), power.at(i, j)));
        if (d < cp.degree()) power = octic::mat_mul(F, power, M);
      }
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          if (acc.at(i, j) != 0) zd_ok = false;
    }
    report("zero-dimensional algebra + Cayley-Hamilton (p=" + std::to_string(p) + ")", zd_ok);

    // Colon-ideal identity on split points: I = I1 * I2 (products of point
    // ideals), then (I : I1) = I2.
    octic::Poly x = octic::poly_from(R2, {{{1, 0}, 1}});
    octic::Poly y = octic::poly_from(R2, {{{0, 1}, 1}});
    octic::Poly xm1 = octic::poly_from(R2, {{{1, 0}, 1}, {{0, 0}, -1}});
    octic::Poly ym1 = octic::poly_from(R2, {{{0, 1}, 1}, {{0, 0}, -1}});
    std::vector<octic::Poly> I;
    for (const auto& a : {x, y})
      for (const auto& b : {xm1, ym1}) I.push_back(octic::poly_mul(R2, a, b));
    auto AI = octic::quotient_algebra(octic::buchberger(R2, I));
    bool colon_ok = AI.has_value();
    if (colon_ok) {
      auto Q = octic::zerodim_colon(*AI, {x, y});
      auto gbq = octic::buchberger(R2, Q);
      auto gbe = octic::buchberger(R2, {xm1, ym1});
      colon_ok = octic::groebner_equal(gbq, gbe);
    }
    report("colon ideal of split points (p=" + std::to_string(p) + ")", colon_ok);
  }

  octic::DimensionAudit a = octic::dimension_audit();
  report("dimension audit", a.all_ok);

  std::cout << (ok ? "selfcheck passed" : "selfcheck FAILED") << "\n";
  return ok ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction of 12-nodal plane octics with a degree-8 pencil over F_p"};
  app.require_subcommand(1);

  std::uint64_t prime = 10007, seed = 1;
  int retries = 20;
  std::string out_path, cert_path;
  bool quiet = false;

  auto* construct = app.add_subcommand("construct", "Run the randomized construction");
  construct->add_option("--prime", prime, "Base field prime (not 2 or 5, below 2^31)");
  construct->add_option("--seed", seed, "RNG seed (replays are byte-identical)");
  construct->add_option("--retries", retries, "Point-choice retry budget");
  construct->add_option("--out", out_path, "Certificate output path (canonical JSON)");
  construct->add_flag("--quiet", quiet, "Suppress per-check output");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate from its raw data");
  verify->add_option("certificate", cert_path, "Certificate file")->required();
  verify->add_flag("--quiet", quiet, "Only print the final verdict");

  int audit_genus = 9, audit_degree = 8;
  auto* audit = app.add_subcommand("audit", "Print the numerical dimension audit");
  audit->add_option("--degree", audit_degree, "Cover degree");
  auto* gopt = audit->add_option("--genus", audit_genus, "Genus override (testing)");
  gopt->group("");  // hidden

  app.add_subcommand("selfcheck", "Fixed-seed invariant suites over F_7 and F_10007");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(prime, seed, retries, out_path, quiet);
    if (verify->parsed()) return cmd_verify(cert_path, quiet);
    if (audit->parsed()) return cmd_audit(audit_genus, audit_degree);
    return cmd_selfcheck();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
}
