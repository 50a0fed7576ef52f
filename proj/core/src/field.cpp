#include "octic/field.hpp"

namespace octic {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_admissible(p))
    throw std::invalid_argument("modulus must be a prime other than 2 and 5, below 2^31");
}

Fe PrimeField::inv(Fe a) const {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_);
  std::int64_t new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<Fe>(t);
}

Fe PrimeField::pow(Fe a, std::uint64_t e) const {
  Fe r = 1 % p_;
  Fe base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool PrimeField::is_admissible(std::uint64_t n) {
  // mul() computes a*b in uint64_t, so p^2 must fit.
  return n < (std::uint64_t{1} << 31) && is_prime(n) && n != 2 && n != 5;
}

}  // namespace octic
