#include "octic/unipoly.hpp"

#include <stdexcept>

namespace octic {

UniPoly uni_from(const PrimeField& F, std::vector<std::int64_t> coeffs) {
  UniPoly r;
  r.c.reserve(coeffs.size());
  for (std::int64_t v : coeffs) r.c.push_back(F.reduce(v));
  r.trim();
  return r;
}

UniPoly uni_add(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = F.add(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
  r.trim();
  return r;
}

UniPoly uni_sub(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = F.sub(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
  r.trim();
  return r;
}

UniPoly uni_mul(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UniPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

UniPoly uni_scale(const PrimeField& F, const UniPoly& a, Fe s) {
  if (s == 0) return {};
  UniPoly r = a;
  for (Fe& v : r.c) v = F.mul(v, s);
  return r;
}

UniPoly uni_monic(const PrimeField& F, const UniPoly& a) {
  if (a.is_zero() || a.lead() == 1) return a;
  return uni_scale(F, a, F.inv(a.lead()));
}

UniPoly uni_derivative(const PrimeField& F, const UniPoly& a) {
  UniPoly r;
  for (std::size_t i = 1; i < a.c.size(); ++i)
    r.c.push_back(F.mul(a.c[i], F.reduce(static_cast<std::int64_t>(i))));
  r.trim();
  return r;
}

Fe uni_eval(const PrimeField& F, const UniPoly& a, Fe x) {
  Fe v = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) v = F.add(F.mul(v, x), a.c[i]);
  return v;
}

UniDivRem uni_divrem(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  UniDivRem res;
  res.r = a;
  if (a.degree() < b.degree()) return res;
  res.q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  Fe binv = F.inv(b.lead());
  while (!res.r.is_zero() && res.r.degree() >= b.degree()) {
    int k = res.r.degree() - b.degree();
    Fe f = F.mul(res.r.lead(), binv);
    res.q.c[static_cast<std::size_t>(k)] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      std::size_t idx = static_cast<std::size_t>(k) + i;
      res.r.c[idx] = F.sub(res.r.c[idx], F.mul(f, b.c[i]));
    }
    res.r.trim();
  }
  res.q.trim();
  return res;
}

UniPoly uni_gcd(const PrimeField& F, UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = uni_divrem(F, a, b).r;
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(F, a);
}

bool uni_squarefree(const PrimeField& F, const UniPoly& a) {
  if (a.is_zero()) return false;
  if (a.degree() == 0) return true;
  UniPoly d = uni_derivative(F, a);
  if (d.is_zero()) return false;  // p-th power
  return uni_gcd(F, a, d).degree() == 0;
}

UniPoly uni_squarefree_part(const PrimeField& F, const UniPoly& a) {
  if (a.is_zero()) return a;
  UniPoly d = uni_derivative(F, a);
  if (d.is_zero()) return uni_from(F, {1});
  UniPoly g = uni_gcd(F, a, d);
  return uni_monic(F, uni_divrem(F, a, g).q);
}

BinaryForm binary_form_from_unipoly(const UniPoly& b, int degree) {
  if (b.degree() > degree)
    throw std::invalid_argument("degree too small to homogenize");
  BinaryForm r;
  r.degree = degree;
  r.c.assign(static_cast<std::size_t>(degree) + 1, 0);
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = b.c[i];
  return r;
}

}  // namespace octic
