#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cmm {

// log Gamma(x) for x > 0. Throws ParameterError for x <= 0.
double ln_gamma(double x);

// Digamma psi(x) = d/dx ln Gamma(x) for x > 0. Throws ParameterError for x <= 0.
// Recurrence down to the asymptotic region, then the Bernoulli series.
double digamma(double x);

// log(sum(exp(v))) without overflow. Returns -inf for an empty input.
double log_sum_exp(std::span<const double> v);

// Entropy of a Dirichlet distribution with parameter vector eps (all > 0):
//   H = -sum_k (eps_k - 1) (psi(eps_k) - psi(eps_hat)) - ln C(eps)
// with eps_hat = sum eps_k and C(eps) = Gamma(eps_hat) / prod Gamma(eps_k).
double dirichlet_entropy(std::span<const double> eps);

// Joint entropy of the Gaussian-Inverse-Wishart posterior over (mu, Sigma)
// given the variational parameters (beta, nu, W) with Lambda ~ Wishart(W, nu)
// and mu | Sigma ~ N(m, Sigma / beta):
//
//   H = -(D/2) ln beta + (D(D+1)/4) ln(pi/4) - ((D+2)/2) ln det W
//       + D(nu+1)/2 - ((nu+D+2)/2) sum_d psi((nu+1-d)/2)
//       + sum_d ln Gamma((nu+1-d)/2)
//
// Requires beta > 0 and nu > D - 1. D = 0 yields 0 (no continuous parameters).
double normal_wishart_entropy(double beta, double nu, const Eigen::MatrixXd& w);

}  // namespace cmm
