#include "cmm/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cmm/errors.hpp"

namespace cmm {

double ln_gamma(double x) {
  if (!(x > 0.0)) throw ParameterError("ln_gamma: x must be positive");
  return std::lgamma(x);
}

double digamma(double x) {
  if (!(x > 0.0)) throw ParameterError("digamma: x must be positive");
  double result = 0.0;
  // psi(x) = psi(x + 1) - 1/x until the asymptotic series is accurate.
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic expansion with Bernoulli coefficients B_2..B_14.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = std::log(x) - 0.5 * inv;
  double term = inv2;
  series -= term * (1.0 / 12.0);
  term *= inv2;
  series += term * (1.0 / 120.0);
  term *= inv2;
  series -= term * (1.0 / 252.0);
  term *= inv2;
  series += term * (1.0 / 240.0);
  term *= inv2;
  series -= term * (1.0 / 132.0);
  term *= inv2;
  series += term * (691.0 / 32760.0);
  term *= inv2;
  series -= term * (1.0 / 12.0);
  return result + series;
}

double log_sum_exp(std::span<const double> v) {
  if (v.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

double dirichlet_entropy(std::span<const double> eps) {
  if (eps.empty()) throw ParameterError("dirichlet_entropy: empty parameter vector");
  double eps_hat = 0.0;
  for (double e : eps) {
    if (!(e > 0.0)) throw ParameterError("dirichlet_entropy: parameters must be positive");
    eps_hat += e;
  }
  const double psi_hat = digamma(eps_hat);
  double h = 0.0;
  double ln_c = ln_gamma(eps_hat);
  for (double e : eps) {
    h -= (e - 1.0) * (digamma(e) - psi_hat);
    ln_c -= ln_gamma(e);
  }
  return h - ln_c;
}

double normal_wishart_entropy(double beta, double nu, const Eigen::MatrixXd& w) {
  const auto d = static_cast<int>(w.rows());
  if (d == 0) return 0.0;
  if (w.cols() != d) throw ParameterError("normal_wishart_entropy: W must be square");
  if (!(beta > 0.0)) throw ParameterError("normal_wishart_entropy: beta must be positive");
  if (!(nu > d - 1.0)) throw ParameterError("normal_wishart_entropy: nu must exceed D - 1");

  Eigen::LLT<Eigen::MatrixXd> llt(w);
  if (llt.info() != Eigen::Success)
    throw ParameterError("normal_wishart_entropy: W is not positive definite");
  double ln_det_w = 0.0;
  for (int i = 0; i < d; ++i) ln_det_w += std::log(llt.matrixL()(i, i));
  ln_det_w *= 2.0;

  const double dd = static_cast<double>(d);
  double h = -(dd / 2.0) * std::log(beta);
  h += (dd * (dd + 1.0) / 4.0) * std::log(M_PI / 4.0);
  h -= ((dd + 2.0) / 2.0) * ln_det_w;
  h += dd * (nu + 1.0) / 2.0;
  for (int i = 1; i <= d; ++i) {
    const double arg = (nu + 1.0 - i) / 2.0;
    h -= ((nu + dd + 2.0) / 2.0) * digamma(arg);
    h += ln_gamma(arg);
  }
  return h;
}

}  // namespace cmm
