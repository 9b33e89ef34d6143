#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dharm {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2*order-1.
GaussLegendreRule gauss_legendre(int order);

/// Product rule over (theta, phi, beta): Gauss-Legendre in cos(theta), uniform
/// trapezoidal points in phi and beta (exact for trigonometric polynomials
/// whose frequencies stay below the point count).
struct QuadratureSpec {
  int gauss_order = 32;
  int phi_points = 64;
  int beta_points = 64;

  /// Throws std::invalid_argument when any order is below 2.
  void validate() const;
};

class AngularGrid {
 public:
  explicit AngularGrid(const QuadratureSpec& spec);

  const QuadratureSpec& spec() const { return spec_; }
  std::size_t size() const { return weights_.size(); }

  std::span<const double> thetas() const { return thetas_; }
  std::span<const double> phis() const { return phis_; }
  std::span<const double> betas() const { return betas_; }
  /// Flattened product weights, node index (i * phi_points + j) * beta_points + k.
  std::span<const double> weights() const { return weights_; }

 private:
  QuadratureSpec spec_;
  std::vector<double> thetas_;
  std::vector<double> phis_;
  std::vector<double> betas_;
  std::vector<double> weights_;
};

/// A complex field with `components` components sampled on every node of a
/// grid, stored split and component-major.
class GridField {
 public:
  GridField(std::size_t components, std::size_t nodes);

  std::size_t components() const { return components_; }
  std::size_t nodes() const { return nodes_; }

  std::span<double> re(std::size_t component);
  std::span<double> im(std::size_t component);
  std::span<const double> re(std::size_t component) const;
  std::span<const double> im(std::size_t component) const;

 private:
  std::size_t components_;
  std::size_t nodes_;
  std::vector<double> re_;
  std::vector<double> im_;
};

/// sum over components and nodes of w * conj(a) * b.
std::complex<double> integrate_pairing(const AngularGrid& grid, const GridField& a, const GridField& b);

/// Hermitian matrix G[i][j] = integrate_pairing(fields[i], fields[j]).
std::vector<std::vector<std::complex<double>>> gram_matrix(const AngularGrid& grid, std::span<const GridField> fields);

/// Same matrix for `count` fields produced on demand by `sample`, holding at
/// most two tiles of `tile` fields in memory at a time.
std::vector<std::vector<std::complex<double>>> gram_matrix(const AngularGrid& grid, std::size_t count,
                                                           const std::function<GridField(std::size_t)>& sample,
                                                           std::size_t tile);

}  // namespace dharm
