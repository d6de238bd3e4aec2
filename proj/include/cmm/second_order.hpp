#pragma once

#include <vector>

#include <Eigen/Dense>

namespace cmm {

// Variational Normal-Wishart posterior for one component's (mu, Sigma):
// Lambda ~ Wishart(W, nu), mu | Lambda ~ N(m, (beta Lambda)^-1).
struct NormalWishartParams {
  Eigen::VectorXd m;
  double beta = 0.0;
  double nu = 0.0;
  Eigen::MatrixXd w;
};

// Second-order (parameter) distributions produced by VI training, aligned
// with the classifier's component order.
struct SecondOrderParams {
  std::vector<NormalWishartParams> normal_wisharts;
  // dirichlets[i][d]: Dirichlet parameters for component i, categorical dim d.
  std::vector<std::vector<Eigen::VectorXd>> dirichlets;
  // Mixing-weight Dirichlet parameters per class, aligned with the per-class
  // component order.
  std::vector<Eigen::VectorXd> mixing_dirichlets;

  int num_components() const { return static_cast<int>(normal_wisharts.size()); }
  void validate(int d_cont) const;
};

}  // namespace cmm
