#include "nlevo/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace nlevo {

namespace {

// Legendre P_m and its derivative at x.
std::pair<double, double> legendre_with_derivative(int m, double x) {
  double p_prev = 1.0;
  double p = x;
  for (int k = 2; k <= m; ++k) {
    const double p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
    p_prev = p;
    p = p_next;
  }
  const double dp = m * (x * p - p_prev) / (x * x - 1.0);
  return {p, dp};
}

QuadRule build_gauss_legendre(int m) {
  QuadRule rule;
  rule.nodes.assign(m, 0.0);
  rule.weights.assign(m, 0.0);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      auto pd = legendre_with_derivative(m, x);
      dp = pd.second;
      const double dx = pd.first / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        dp = legendre_with_derivative(m, x).second;
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) {
    const auto [p, dp] = legendre_with_derivative(m, 0.0);
    (void)p;
    rule.nodes[m / 2] = 0.0;
    rule.weights[m / 2] = 2.0 / (dp * dp);
  }
  return rule;
}

}  // namespace

const QuadRule& gauss_legendre(int points) {
  if (points < 1) {
    throw std::invalid_argument("gauss_legendre: need at least one point");
  }
  static std::mutex mutex;
  static std::map<int, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(points);
  if (it == cache.end()) {
    it = cache.emplace(points, build_gauss_legendre(points)).first;
  }
  return it->second;
}

}  // namespace nlevo
