#pragma once

#include <vector>

namespace nlevo::detail {

// Dense polynomials with ascending monomial coefficients. Internal helper for
// the exact-moment coefficient path and the interval transform.
using Poly = std::vector<double>;

inline double poly_eval(const Poly& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

inline void poly_axpy(Poly& acc, double s, const Poly& p) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0.0);
  for (size_t i = 0; i < p.size(); ++i) acc[i] += s * p[i];
}

// p(a + b*u) as a polynomial in u (Horner with polynomial arithmetic).
inline Poly poly_compose_affine(const Poly& p, double a, double b) {
  Poly result{0.0};
  const Poly affine{a, b};
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    result = poly_mul(result, affine);
    if (result.empty()) result = {0.0};
    result[0] += *it;
  }
  return result;
}

}  // namespace nlevo::detail
