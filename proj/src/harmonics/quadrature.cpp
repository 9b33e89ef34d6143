#include "dharm/quadrature.hpp"

#include "dharm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dharm {

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = w;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
  }
  return rule;
}

void QuadratureSpec::validate() const {
  if (gauss_order < 2 || phi_points < 2 || beta_points < 2)
    throw std::invalid_argument("quadrature orders must be >= 2 (got " + std::to_string(gauss_order) + ", " +
                                std::to_string(phi_points) + ", " + std::to_string(beta_points) + ")");
}

AngularGrid::AngularGrid(const QuadratureSpec& spec) : spec_(spec) {
  spec_.validate();
  const GaussLegendreRule rule = gauss_legendre(spec_.gauss_order);
  const double two_pi = 2.0 * std::numbers::pi;
  for (double x : rule.nodes) thetas_.push_back(std::acos(x));
  for (int j = 0; j < spec_.phi_points; ++j) phis_.push_back(two_pi * j / spec_.phi_points);
  for (int k = 0; k < spec_.beta_points; ++k) betas_.push_back(two_pi * k / spec_.beta_points);
  const double uniform = (two_pi / spec_.phi_points) * (two_pi / spec_.beta_points);
  weights_.reserve(thetas_.size() * phis_.size() * betas_.size());
  for (double w : rule.weights)
    for (std::size_t j = 0; j < phis_.size() * betas_.size(); ++j) weights_.push_back(w * uniform);
}

GridField::GridField(std::size_t components, std::size_t nodes)
    : components_(components), nodes_(nodes), re_(components * nodes, 0.0), im_(components * nodes, 0.0) {}

std::span<double> GridField::re(std::size_t c) { return {re_.data() + c * nodes_, nodes_}; }
std::span<double> GridField::im(std::size_t c) { return {im_.data() + c * nodes_, nodes_}; }
std::span<const double> GridField::re(std::size_t c) const { return {re_.data() + c * nodes_, nodes_}; }
std::span<const double> GridField::im(std::size_t c) const { return {im_.data() + c * nodes_, nodes_}; }

std::complex<double> integrate_pairing(const AngularGrid& grid, const GridField& a, const GridField& b) {
  if (a.components() != b.components()) throw std::invalid_argument("integrate_pairing: component count mismatch");
  if (a.nodes() != grid.size() || b.nodes() != grid.size())
    throw std::invalid_argument("integrate_pairing: field not sampled on this grid");
  std::complex<double> total = 0.0;
  for (std::size_t c = 0; c < a.components(); ++c)
    total += kernels::weighted_conj_dot(grid.weights(), a.re(c), a.im(c), b.re(c), b.im(c));
  return total;
}

std::vector<std::vector<std::complex<double>>> gram_matrix(const AngularGrid& grid, std::span<const GridField> fields) {
  const std::size_t n = fields.size();
  std::vector<std::vector<std::complex<double>>> g(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g[i][j] = integrate_pairing(grid, fields[i], fields[j]);
      g[j][i] = std::conj(g[i][j]);
    }
  }
  return g;
}

std::vector<std::vector<std::complex<double>>> gram_matrix(const AngularGrid& grid, std::size_t count,
                                                           const std::function<GridField(std::size_t)>& sample,
                                                           std::size_t tile) {
  if (tile == 0) throw std::invalid_argument("gram_matrix: tile size must be positive");
  std::vector<std::vector<std::complex<double>>> g(count, std::vector<std::complex<double>>(count));
  auto load = [&](std::size_t begin) {
    std::vector<GridField> fields;
    for (std::size_t i = begin; i < std::min(count, begin + tile); ++i) fields.push_back(sample(i));
    return fields;
  };
  for (std::size_t bi = 0; bi < count; bi += tile) {
    const std::vector<GridField> rows = load(bi);
    for (std::size_t bj = bi; bj < count; bj += tile) {
      const std::vector<GridField> cols = bj == bi ? std::vector<GridField>{} : load(bj);
      const std::vector<GridField>& other = bj == bi ? rows : cols;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = bj == bi ? i : 0; j < other.size(); ++j) {
          const std::complex<double> v = integrate_pairing(grid, rows[i], other[j]);
          g[bi + i][bj + j] = v;
          g[bj + j][bi + i] = std::conj(v);
        }
      }
    }
  }
  return g;
}

}  // namespace dharm
