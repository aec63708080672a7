#include "nlevo/mesh.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nlevo {

namespace {
constexpr double kNodeSnapTolerance = 1e-14;
}

Mesh cgl_mesh(int n) {
  if (n < 2) {
    throw InvalidDegreeError("cgl_mesh: degree must be >= 2, got " +
                             std::to_string(n));
  }
  Mesh mesh;
  mesh.n = n;
  mesh.nodes.assign(n + 1, 0.0);
  // cos((n-k)pi/n) written as sin(pi*(2k-n)/(2n)) and mirrored, which makes
  // the node set exactly symmetric in floating point.
  for (int k = 0; k <= n / 2; ++k) {
    const double s = std::sin(std::numbers::pi * (n - 2 * k) / (2.0 * n));
    mesh.nodes[k] = -s;
    mesh.nodes[n - k] = s;
  }
  mesh.nodes[0] = -1.0;
  mesh.nodes[n] = 1.0;
  if (n % 2 == 0) mesh.nodes[n / 2] = 0.0;

  mesh.steps.assign(n, 0.0);
  for (int k = 1; k <= n; ++k) {
    mesh.steps[k - 1] = mesh.nodes[k] - mesh.nodes[k - 1];
  }
  return mesh;
}

std::vector<double> barycentric_weights(int n) {
  std::vector<double> w(n + 1);
  for (int j = 0; j <= n; ++j) {
    w[j] = (j % 2 == 0) ? 1.0 : -1.0;
  }
  w[0] *= 0.5;
  w[n] *= 0.5;
  return w;
}

std::vector<double> lagrange_basis(const Mesh& mesh, double t) {
  const int n = mesh.n;
  std::vector<double> out(n + 1, 0.0);

  // Snap to the interpolation property when t coincides with a node; the
  // barycentric ratio is 0/0 there.
  for (int j = 0; j <= n; ++j) {
    if (std::abs(t - mesh.nodes[j]) < kNodeSnapTolerance) {
      out[j] = 1.0;
      return out;
    }
  }

  const std::vector<double> w = barycentric_weights(n);
  double denom = 0.0;
  for (int j = 0; j <= n; ++j) {
    out[j] = w[j] / (t - mesh.nodes[j]);
    denom += out[j];
  }
  for (int j = 0; j <= n; ++j) {
    out[j] /= denom;
  }
  return out;
}

Vec interpolate(const Mesh& mesh, const std::vector<Vec>& values, double t) {
  if (static_cast<int>(values.size()) != mesh.n + 1) {
    throw std::invalid_argument(
        "interpolate: expected " + std::to_string(mesh.n + 1) +
        " nodal values, got " + std::to_string(values.size()));
  }
  const Eigen::Index dim = values.front().size();
  for (const Vec& v : values) {
    if (v.size() != dim) {
      throw std::invalid_argument(
          "interpolate: nodal values have mismatched dimensions");
    }
  }
  const std::vector<double> basis = lagrange_basis(mesh, t);
  Vec result = Vec::Zero(dim);
  for (int j = 0; j <= mesh.n; ++j) {
    result += basis[j] * values[j];
  }
  return result;
}

double lebesgue_constant(const Mesh& mesh, int grid) {
  if (grid < 1000) {
    throw std::invalid_argument("lebesgue_constant: grid must be >= 1000");
  }
  double best = 0.0;
  for (int i = 0; i <= grid; ++i) {
    const double t = -1.0 + 2.0 * i / grid;
    const std::vector<double> basis = lagrange_basis(mesh, t);
    double sum = 0.0;
    for (double b : basis) sum += std::abs(b);
    if (sum > best) best = sum;
  }
  return best;
}

}  // namespace nlevo
