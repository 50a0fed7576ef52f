#include "octic/certificate.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace octic {

namespace {

using nlohmann::json;  // std::map-backed: object keys serialize sorted

json poly_to_json(const Ring& R, const Poly& f) {
  json terms = json::array();
  for (const Term& t : f.t) {
    json exps = json::array();
    for (int v = 0; v < R.nvars(); ++v) exps.push_back(t.m.e[static_cast<std::size_t>(v)]);
    terms.push_back(json::array({exps, t.c}));
  }
  return json{{"nvars", R.nvars()}, {"terms", terms}, {"str", poly_to_string(R, f)}};
}

Poly poly_from_json(const Ring& R, const json& j) {
  if (!j.is_object() || !j.contains("terms")) throw std::runtime_error("malformed polynomial");
  if (j.value("nvars", R.nvars()) != R.nvars())
    throw std::runtime_error("polynomial variable count mismatch");
  std::vector<Term> terms;
  for (const auto& jt : j.at("terms")) {
    Monomial m;
    const auto& exps = jt.at(0);
    if (static_cast<int>(exps.size()) != R.nvars())
      throw std::runtime_error("malformed exponent vector");
    for (int v = 0; v < R.nvars(); ++v)
      m.e[static_cast<std::size_t>(v)] = exps.at(static_cast<std::size_t>(v)).get<std::uint16_t>();
    Fe c = jt.at(1).get<std::uint64_t>();
    if (c >= R.field.p()) throw std::runtime_error("coefficient out of range");
    terms.push_back({m, c});
  }
  return poly_from_terms(R, std::move(terms));
}

json points_to_json(const std::vector<std::array<Fe, 3>>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(json::array({p[0], p[1], p[2]}));
  return a;
}

std::vector<std::array<Fe, 3>> points_from_json(const PrimeField& F, const json& j) {
  std::vector<std::array<Fe, 3>> pts;
  for (const auto& jp : j) {
    std::array<Fe, 3> p{jp.at(0).get<std::uint64_t>(), jp.at(1).get<std::uint64_t>(),
                        jp.at(2).get<std::uint64_t>()};
    for (Fe v : p)
      if (v >= F.p()) throw std::runtime_error("point coordinate out of range");
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

std::string certificate_to_json(const Certificate& c) {
  PrimeField F(c.prime);
  Ring R3 = make_ring(F, 3);
  Ring R2 = make_ring(F, 2);

  json j;
  j["schema_version"] = c.schema_version;
  j["prime"] = c.prime;
  j["seed"] = c.seed;
  j["retry_budget"] = c.retry_budget;
  j["status"] = c.status;
  j["counters"] = json{{"point_rounds", c.counters.point_rounds},
                       {"pencil_rounds", c.counters.pencil_rounds},
                       {"coordinate_rounds", c.counters.coordinate_rounds}};

  json cc = json::array();
  for (const auto& row : c.data.coordinate_change)
    cc.push_back(json::array({row[0], row[1], row[2]}));

  json iq = json::array();
  for (const Poly& g : c.data.iq_gens) iq.push_back(poly_to_json(R2, g));

  j["data"] = json{{"coordinate_change", cc},
                   {"P", points_to_json(c.data.P)},
                   {"R", points_to_json(c.data.R)},
                   {"f1", poly_to_json(R3, c.data.f1)},
                   {"f2", poly_to_json(R3, c.data.f2)},
                   {"iq_gens", iq},
                   {"g", poly_to_json(R3, c.data.g)}};

  json checks = json::object();
  for (const auto& [name, vals] : c.checks) checks[name] = vals;
  j["checks"] = checks;

  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    Certificate c;
    c.schema_version = j.at("schema_version").get<int>();
    if (c.schema_version != 1) throw std::runtime_error("unsupported schema version");
    c.prime = j.at("prime").get<std::uint64_t>();
    if (!PrimeField::is_admissible(c.prime)) throw std::runtime_error("inadmissible prime");
    c.seed = j.at("seed").get<std::uint64_t>();
    c.retry_budget = j.at("retry_budget").get<int>();
    c.status = j.at("status").get<std::string>();
    const json& jc = j.at("counters");
    c.counters.point_rounds = jc.at("point_rounds").get<int>();
    c.counters.pencil_rounds = jc.at("pencil_rounds").get<int>();
    c.counters.coordinate_rounds = jc.at("coordinate_rounds").get<int>();

    PrimeField F(c.prime);
    Ring R3 = make_ring(F, 3);
    Ring R2 = make_ring(F, 2);
    const json& jd = j.at("data");
    c.data.prime = c.prime;
    const json& jcc = jd.at("coordinate_change");
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        c.data.coordinate_change[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            jcc.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k))
                .get<std::uint64_t>();
    c.data.P = points_from_json(F, jd.at("P"));
    c.data.R = points_from_json(F, jd.at("R"));
    c.data.f1 = poly_from_json(R3, jd.at("f1"));
    c.data.f2 = poly_from_json(R3, jd.at("f2"));
    for (const auto& jg : jd.at("iq_gens")) c.data.iq_gens.push_back(poly_from_json(R2, jg));
    c.data.g = poly_from_json(R3, jd.at("g"));

    for (const auto& [name, vals] : j.at("checks").items())
      c.checks[name] = vals.get<std::vector<std::int64_t>>();
    return c;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed certificate: ") + e.what());
  }
}

std::size_t write_certificate(const Certificate& c, const std::string& path) {
  std::string text = certificate_to_json(c);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
  return text.size();
}

Certificate read_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return certificate_from_json(text);
}

namespace {

bool is_reducedness_key(const std::string& name) {
  return name.size() >= 7 && name.compare(name.size() - 7, 7, "reduced") == 0;
}

}  // namespace

ReverifyResult reverify(const Certificate& c) {
  ReverifyResult out;
  out.ok = true;

  if (c.status.rfind("SUCCESS", 0) != 0) {
    out.ok = false;
    out.lines.push_back("status " + c.status + ": only SUCCESS certificates are re-checkable");
    return out;
  }

  PrimeField F(c.prime);
  Ring R3 = make_ring(F, 3);
  Ring R2 = make_ring(F, 2);
  Rng rng(c.seed);

  auto fail = [&](const std::string& msg) {
    out.ok = false;
    out.lines.push_back("TAMPERED: " + msg);
  };

  if (c.data.P.size() != 12 || c.data.R.size() != 5) {
    fail("wrong point counts");
    return out;
  }
  if (c.data.f1.degree() != 5 || c.data.f2.degree() != 5 || !c.data.f1.is_homogeneous() ||
      !c.data.f2.is_homogeneous())
    fail("pencil is not a pair of quintic forms");
  if (c.data.g.degree() != 8 || !c.data.g.is_homogeneous()) fail("octic has wrong degree");
  if (!out.ok) return out;

  PointChoice pc;
  pc.P = c.data.P;
  pc.R = c.data.R;
  pc.coordinate_change = c.data.coordinate_change;
  {
    FatPointSystem SPR;
    for (const auto& p : pc.P) SPR.points.push_back({p, 1});
    for (const auto& r : pc.R) SPR.points.push_back({r, 1});
    pc.h0_ipr_5 = linear_system(R3, SPR, 5).dimension;
    FatPointSystem SP2;
    for (const auto& p : pc.P) SP2.points.push_back({p, 2});
    pc.h0_ip2_8 = linear_system(R3, SP2, 8).dimension;
  }

  Pencil pencil{c.data.f1, c.data.f2};
  ResidualResult rr = residual_points(R3, pencil, pc, rng);
  if (rr.iq_gens != c.data.iq_gens)
    fail("residual ideal generators do not reproduce");
  else
    out.lines.push_back("iq_gens: reproduced from pencil and points");

  OcticResult oc;
  {
    auto AQ = quotient_algebra(buchberger(R2, c.data.iq_gens));
    if (!AQ) {
      fail("recorded residual ideal is not zero-dimensional");
      return out;
    }
    oc = choose_octic(R3, c.data.P, *AQ);
    if (!oc.ok || !(oc.g == c.data.g))
      fail("octic does not reproduce");
    else
      out.lines.push_back("octic: reproduced as the unique normalized section");
  }

  VerifyOutcome vo = verify_all(c.data, rng);
  Certificate fresh;
  fill_checks(fresh, pc, rr, oc, vo);

  for (const auto& [name, stored] : c.checks) {
    auto it = fresh.checks.find(name);
    if (it == fresh.checks.end()) {
      fail("unknown check: " + name);
      continue;
    }
    if (is_reducedness_key(name) &&
        (it->second == std::vector<std::int64_t>{-1} || stored == std::vector<std::int64_t>{-1})) {
      out.undecided = true;
      out.lines.push_back("UNDECIDED: " + name);
      continue;
    }
    if (it->second != stored)
      fail("check mismatch: " + name);
    else
      out.lines.push_back("ok: " + name);
  }
  for (const auto& [name, vals] : fresh.checks)
    if (!c.checks.count(name)) fail("missing check: " + name);

  if (!vo.all_ok && !out.undecided) fail("verification verdicts do not reproduce");
  return out;
}

}  // namespace octic
