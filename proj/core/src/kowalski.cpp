#include "lie4/kowalski.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "lie4/curvature.hpp"
#include "lie4/models.hpp"

namespace lie4::kowalski {

Mat4<double> metric_at(const Point& p, double lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("metric_at: lambda must be positive");
  double x = p[2], y = p[3];
  double s = std::sqrt(x * x + y * y + 1.0);
  double q = lambda * lambda / (1.0 + x * x + y * y);
  Mat4<double> g = zero_mat4<double>();
  g[0][0] = -x + s;
  g[1][1] = x + s;
  g[0][1] = g[1][0] = -y;
  g[2][2] = q * (1.0 + y * y);
  g[3][3] = q * (1.0 + x * x);
  g[2][3] = g[3][2] = -q * x * y;
  return g;
}

namespace {

/// Order-4 central difference of f along coordinate c at p.
template <class F>
auto diff4(const F& f, const Point& p, int c, double h) {
  auto at = [&](double offset) {
    Point q = p;
    q[c] += offset;
    return f(q);
  };
  auto fp1 = at(h), fm1 = at(-h), fp2 = at(2 * h), fm2 = at(-2 * h);
  decltype(fp1) r{};
  if constexpr (std::is_same_v<decltype(fp1), double>) {
    r = (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
  } else {
    for (size_t i = 0; i < fp1.size(); ++i)
      for (size_t j = 0; j < fp1[i].size(); ++j)
        r[i][j] = (8.0 * (fp1[i][j] - fm1[i][j]) - (fp2[i][j] - fm2[i][j])) / (12.0 * h);
  }
  return r;
}

Eigen::Matrix4d to_eigen(const Mat4<double>& m) {
  Eigen::Matrix4d e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m[i][j];
  return e;
}

}  // namespace

std::array<std::array<std::array<double, 4>, 4>, 4> christoffel_fd(const MetricFn& g,
                                                                   const Point& p, double h) {
  std::array<Mat4<double>, 4> dg;
  for (int c = 0; c < 4; ++c) dg[c] = diff4(g, p, c, h);
  Mat4<double> ginv = mat4_inverse(g(p));
  std::array<std::array<std::array<double, 4>, 4>, 4> gamma{};
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double v = 0.0;
        for (int l = 0; l < 4; ++l)
          v += ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        gamma[k][i][j] = 0.5 * v;
      }
  return gamma;
}

namespace {

Mat4<double> ricci_once(const MetricFn& g, const Point& p, double h) {
  // Gamma^k_{ij} and its coordinate derivatives
  auto gamma = christoffel_fd(g, p, h);
  auto gamma_entry = [&](int k, int i, int j) {
    return [&g, h, k, i, j](const Point& q) { return christoffel_fd(g, q, h)[k][i][j]; };
  };
  // dgamma[c][k][i][j] = d_c Gamma^k_{ij}
  std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4> dgamma{};
  for (int c = 0; c < 4; ++c)
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
          double v = diff4(gamma_entry(k, i, j), p, c, h);
          dgamma[c][k][i][j] = v;
          dgamma[c][k][j][i] = v;
        }
  Mat4<double> ric = zero_mat4<double>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double v = 0.0;
      for (int k = 0; k < 4; ++k) {
        v += dgamma[k][k][i][j] - dgamma[j][k][i][k];
        for (int l = 0; l < 4; ++l)
          v += gamma[k][k][l] * gamma[l][i][j] - gamma[k][j][l] * gamma[l][i][k];
      }
      ric[i][j] = v;
    }
  return ric;
}

}  // namespace

PointReport ricci_fd(const MetricFn& g, const Point& p, double h) {
  if (!(h > 0)) throw std::invalid_argument("ricci_fd: step must be positive");
  PointReport rep;
  rep.point = p;
  rep.metric = g(p);
  rep.christoffel = christoffel_fd(g, p, h);
  rep.ricci = ricci_once(g, p, h);

  Mat4<double> half_step = ricci_once(g, p, h / 2);
  double scale = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) scale = std::max(scale, std::fabs(rep.ricci[i][j]));
  rep.richardson = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      rep.richardson = std::max(rep.richardson, std::fabs(rep.ricci[i][j] - half_step[i][j]) / scale);
  rep.richardson_ok = rep.richardson < 1e-6;

  rep.symmetry_residual = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      rep.symmetry_residual = std::max(rep.symmetry_residual, std::fabs(rep.ricci[i][j] - rep.ricci[j][i]));
  // symmetrize before the eigen solve
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double v = 0.5 * (rep.ricci[i][j] + rep.ricci[j][i]);
      rep.ricci[i][j] = rep.ricci[j][i] = v;
    }

  // eigenvalues of the Ricci endomorphism: generalized problem ric v = ev g v
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix4d> es(to_eigen(rep.ricci),
                                                               to_eigen(rep.metric));
  for (int i = 0; i < 4; ++i) rep.ricci_eigenvalues[i] = es.eigenvalues()(i);
  rep.scal = es.eigenvalues().sum();
  return rep;
}

PointReport ricci_fd(const Point& p, double lambda, double h) {
  return ricci_fd([lambda](const Point& q) { return metric_at(q, lambda); }, p, h);
}

std::array<Point, 10> sample_points() {
  return {{{0.0, 0.0, 0.0, 0.0},
           {0.3, -0.7, 0.5, 1.1},
           {-1.2, 0.4, -0.9, 0.2},
           {2.0, -2.0, 1.5, -1.5},
           {0.1, 0.2, 0.3, 0.4},
           {-0.5, 1.3, 0.8, -1.9},
           {1.7, 0.6, -1.1, 0.9},
           {-2.0, -1.0, 2.0, 1.0},
           {0.9, -1.4, -0.3, -0.8},
           {1.1, 1.9, 0.7, 1.3}}};
}

CrossValidateReport cross_validate(const Rational& s, const Rational& t) {
  if (t == 0) throw std::invalid_argument("cross_validate: t must be nonzero");
  CrossValidateReport rep;
  // algebraic side, exact: Ricci endomorphism eigenvalues {0, 0, r, r}
  MetricLieAlgebra<Rational> m{family_algebra(s, t), identity_mat4<Rational>()};
  CurvatureData<Rational> cd = curvature(m);
  rep.family_r = scalar_to_double(cd.ricci[2][2]);
  double norm2 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) norm2 += scalar_to_double(cd.ricci[i][j] * cd.ricci[i][j]);
  double scal = scalar_to_double(cd.scal);
  rep.family_ratio = scal * scal / norm2;

  Point origin = {0.0, 0.0, 0.0, 0.0};
  auto model_r = [&](double lambda) {
    PointReport pr = ricci_fd(origin, lambda);
    return pr.ricci_eigenvalues[0];  // most negative; the nonzero pair
  };

  // The nonzero eigenvalue is monotone in lambda; bracket then bisect.
  double lo = 1e-3, hi = 1e3;
  double flo = model_r(lo) - rep.family_r, fhi = model_r(hi) - rep.family_r;
  if (flo * fhi > 0) {
    rep.lambda_found = false;
    return rep;
  }
  for (int it = 0; it < 200; ++it) {
    double mid = std::sqrt(lo * hi);
    double fm = model_r(mid) - rep.family_r;
    if (flo * fm <= 0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
    if (hi - lo < 1e-12 * hi) break;
  }
  rep.lambda_star = std::sqrt(lo * hi);
  rep.lambda_found = true;

  PointReport pr = ricci_fd(origin, rep.lambda_star);
  rep.model_r = pr.ricci_eigenvalues[0];
  double mnorm2 = 0.0;
  for (double ev : pr.ricci_eigenvalues) mnorm2 += ev * ev;
  rep.model_ratio = pr.scal * pr.scal / mnorm2;
  rep.pattern_residual =
      std::max({std::fabs(pr.ricci_eigenvalues[0] - pr.ricci_eigenvalues[1]),
                std::fabs(pr.ricci_eigenvalues[2]), std::fabs(pr.ricci_eigenvalues[3])}) /
      std::fabs(rep.model_r);
  rep.ok = rep.lambda_found && rep.pattern_residual < 1e-6 &&
           std::fabs(rep.model_ratio - rep.family_ratio) < 1e-5 &&
           std::fabs(rep.model_r - rep.family_r) < 1e-5 * std::fabs(rep.family_r);
  return rep;
}

}  // namespace lie4::kowalski
