#ifndef OCTIC_RNG_HPP
#define OCTIC_RNG_HPP

#include <cstdint>

#include "octic/field.hpp"

namespace octic {

/// splitmix64 generator. Deliberately self-contained so that certificate
/// replay is byte-identical across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n) by rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  Fe field_element(const PrimeField& F) { return below(F.p()); }

  Fe nonzero_field_element(const PrimeField& F) { return 1 + below(F.p() - 1); }

private:
  std::uint64_t state_;
};

}  // namespace octic

#endif
