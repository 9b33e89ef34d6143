#pragma once

#include <stdexcept>
#include <string>

namespace dharm {

/// A harmonic label (triple or signature) violates its index conditions.
class InvalidLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was asked for on slots whose variances do not allow it
/// (mixed-variance transposition, same-variance contraction, ...).
class VarianceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point lies on the singular locus of a chart.
class ChartSingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The quadrature requested cannot integrate the integrand exactly.
class QuadratureOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A metric denominator fell below the configured degeneracy threshold.
class DegenerateMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Lagrangian model failed its homogeneity (Euler relation) check.
class HomogeneityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dharm
