#ifndef OCTIC_CERTIFICATE_HPP
#define OCTIC_CERTIFICATE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "octic/pipeline.hpp"

namespace octic {

/// Self-contained record of one construction run. Serialization is
/// canonical JSON (sorted keys, decimal integers, no floats), so replaying
/// (prime, seed) reproduces the file byte for byte.
struct Certificate {
  int schema_version = 1;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int retry_budget = 0;
  std::string status;  // SUCCESS | FAILED:<stage> | UNDECIDED:<check>
  RunCounters counters;

  ConstructionData data;

  /// Flat check payloads: integers (dimensions, degrees, 0/1 booleans).
  std::map<std::string, std::vector<std::int64_t>> checks;
};

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);  // throws std::runtime_error

/// Canonical bytes written; throws std::runtime_error on I/O failure.
std::size_t write_certificate(const Certificate& c, const std::string& path);
Certificate read_certificate(const std::string& path);

struct ReverifyResult {
  bool ok = false;        // every verdict reproduced from raw data
  bool undecided = false;
  std::vector<std::string> lines;  // one human-readable line per check
};

/// Re-executes every verification from the raw certificate fields
/// (recomputing I_Q and the octic from the recorded points and pencil) and
/// compares against the stored verdicts. Any mismatch marks TAMPERED.
ReverifyResult reverify(const Certificate& c);

}  // namespace octic

#endif
