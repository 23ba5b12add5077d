#pragma once

#include <array>
#include <functional>

#include "lie4/linalg.hpp"
#include "lie4/scalar.hpp"

namespace lie4::kowalski {

using Point = std::array<double, 4>;
using MetricFn = std::function<Mat4<double>(const Point&)>;

/// Coordinate metric on R^4, coordinate order (u, v, x, y):
///   g = (-x + s) du^2 + (x + s) dv^2 - 2y du dv
///       + lambda^2 (1 + x^2 + y^2)^{-1} [(1+y^2) dx^2 + (1+x^2) dy^2 - 2xy dx dy]
/// with s = sqrt(x^2 + y^2 + 1). The dy^2 exponent is a deliberate reading of
/// the source display (the 2-tensor is not symmetric otherwise).
Mat4<double> metric_at(const Point& p, double lambda);

/// Christoffel symbols gamma[k][i][j] = Gamma^k_{ij} by order-4 central
/// differences of the metric with step h.
std::array<std::array<std::array<double, 4>, 4>, 4> christoffel_fd(const MetricFn& g,
                                                                   const Point& p, double h);

struct PointReport {
  Point point;
  Mat4<double> metric;
  std::array<std::array<std::array<double, 4>, 4>, 4> christoffel;
  Mat4<double> ricci;
  std::array<double, 4> ricci_eigenvalues;  // of the Ricci endomorphism, ascending
  double scal = 0.0;
  double symmetry_residual = 0.0;  // max |ricci_ij - ricci_ji|
  double richardson = 0.0;         // max |ricci(h) - ricci(h/2)| / scale
  bool richardson_ok = false;
};

/// Finite-difference curvature report for an arbitrary coordinate metric.
PointReport ricci_fd(const MetricFn& g, const Point& p, double h = 1e-3);

/// Same for the lambda-metric above.
PointReport ricci_fd(const Point& p, double lambda, double h = 1e-3);

/// Deterministic sample points in [-2, 2]^4 for homogeneity checks.
std::array<Point, 10> sample_points();

struct CrossValidateReport {
  double family_r = 0.0;       // nonzero Ricci endomorphism eigenvalue, algebraic side
  double family_ratio = 0.0;   // scal^2 / |rho|^2
  double lambda_star = 0.0;
  bool lambda_found = false;
  double model_r = 0.0;        // nonzero eigenvalue of the coordinate model at lambda_star
  double model_ratio = 0.0;
  double pattern_residual = 0.0;  // deviation of the eigenvalues from {0, 0, r, r}
  bool ok = false;
};

/// Matches the coordinate metric against the two-parameter family member
/// (s, t): scans lambda until the nonzero Ricci eigenvalue agrees, then
/// compares the eigenvalue pattern and the homothety-invariant ratio.
CrossValidateReport cross_validate(const Rational& s, const Rational& t);

}  // namespace lie4::kowalski
