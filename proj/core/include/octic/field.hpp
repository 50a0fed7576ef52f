#ifndef OCTIC_FIELD_HPP
#define OCTIC_FIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace octic {

/// Canonical representative of an element of F_p, always in [0, p).
using Fe = std::uint64_t;

/// Arithmetic context for the prime field F_p.
///
/// p = 2 and p = 5 are rejected: the construction relies on Euler's
/// relation with forms of degree 8 and 5, which degenerates when p
/// divides the degree.
class PrimeField {
public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  Fe reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<Fe>(r);
  }

  Fe add(Fe a, Fe b) const {
    Fe s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fe sub(Fe a, Fe b) const { return a >= b ? a - b : a + p_ - b; }
  Fe neg(Fe a) const { return a == 0 ? 0 : p_ - a; }
  Fe mul(Fe a, Fe b) const { return (a * b) % p_; }

  /// Modular inverse by the extended Euclidean algorithm.
  /// Throws std::domain_error on zero input.
  Fe inv(Fe a) const;

  Fe pow(Fe a, std::uint64_t e) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint64_t n);
  /// Prime and not in {2, 5}.
  static bool is_admissible(std::uint64_t n);

private:
  std::uint64_t p_;
};

}  // namespace octic

#endif
