#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cmm/schema.hpp"
#include "cmm/second_order.hpp"

namespace cmm {

// Log-space floor: evidence below exp(kLogFloor) is treated as degenerate
// instead of being divided through.
inline constexpr double kLogFloor = -700.0;

// Multivariate Gaussian with cached Cholesky factor and log-determinant.
// Construction fails with ParameterError if the covariance is not SPD.
class GaussianParams {
public:
  GaussianParams() = default;
  GaussianParams(Eigen::VectorXd mean, Eigen::MatrixXd covariance);

  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }
  double log_det() const { return log_det_; }
  int dim() const { return static_cast<int>(mean_.size()); }

  double log_density(const Eigen::VectorXd& x) const;

  // True when all off-diagonal entries are at most tol in magnitude.
  bool is_diagonal(double tol = 1e-12) const;

private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd covariance_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  double log_det_ = 0.0;
};

// One probability table per categorical feature dimension.
class CategoricalParams {
public:
  CategoricalParams() = default;
  explicit CategoricalParams(std::vector<Eigen::VectorXd> probs);

  const std::vector<Eigen::VectorXd>& probs() const { return probs_; }
  int dims() const { return static_cast<int>(probs_.size()); }

  // log prod_d delta_{d, x_d}; index -1 contributes log(1/K_d).
  double log_density(const std::vector<int>& categories) const;

private:
  std::vector<Eigen::VectorXd> probs_;
};

struct HybridComponent {
  GaussianParams gaussian;
  CategoricalParams categorical;
  int class_index = 0;
  double mixing_coefficient = 0.0;
};

// Generative classifier: per-class sets of hybrid components combined by
// Bayes' rule. Mixing coefficients are global (they already absorb the class
// priors), so p(x) = sum_i pi_i p(x|i) and the class posterior for c sums the
// components assigned to c. Immutable after construction; all evaluation
// methods are const and safe to share across threads.
class Classifier {
public:
  Classifier() = default;
  Classifier(Schema schema, Eigen::VectorXd class_priors,
             std::vector<HybridComponent> components);

  const Schema& schema() const { return schema_; }
  const Eigen::VectorXd& class_priors() const { return class_priors_; }
  const std::vector<HybridComponent>& components() const { return components_; }
  const HybridComponent& component(int i) const { return components_[i]; }
  int num_components() const { return static_cast<int>(components_.size()); }
  int num_classes() const { return static_cast<int>(class_priors_.size()); }
  const std::vector<std::vector<int>>& class_components() const { return class_components_; }

  double log_component_density(int i, const Sample& sample) const;
  // Eq-level log p(x) via log-sum-exp over all weighted components.
  double log_evidence(const Sample& sample) const;

private:
  Schema schema_;
  Eigen::VectorXd class_priors_;
  std::vector<HybridComponent> components_;
  std::vector<std::vector<int>> class_components_;  // I_c
};

// p(x | i): Gaussian times the categorical product. May underflow to 0.
double component_density(const HybridComponent& component, const Sample& sample);

// p(x) = sum_i p(x|i) pi_i.
double evidence(const Classifier& classifier, const Sample& sample);

// Posterior over classes; throws DegenerateInputError when the evidence
// underflows the log-space floor.
Eigen::VectorXd class_posterior(const Classifier& classifier, const Sample& sample);

// Winner-takes-all; ties resolved toward the lowest class index.
int classify(const Classifier& classifier, const Sample& sample);

// rho_i(x) = p(x|i) pi_i / p(x).
Eigen::VectorXd responsibilities(const Classifier& classifier, const Sample& sample);

// Copy without component i, remaining mixing coefficients renormalized
// globally. Throws StructuralError when i is the last component of its class.
Classifier remove_component(const Classifier& classifier, int i);

class Dataset;

// Fraction of labeled samples with classify(x) != label.
double classification_error(const Classifier& classifier, const Dataset& data);

// ---- Serialization ----
// Self-describing JSON document with keys `schema`, `class_priors`,
// `components` and optional `second_order`. Numbers round-trip exactly, so a
// save/load cycle reproduces every evaluation bit for bit.
std::string to_json(const Classifier& classifier, const SecondOrderParams* second_order = nullptr);
void save_model(const std::string& path, const Classifier& classifier,
                const SecondOrderParams* second_order = nullptr);

struct LoadedModel {
  Classifier classifier;
  std::optional<SecondOrderParams> second_order;
};
LoadedModel from_json(const std::string& text);
LoadedModel load_model(const std::string& path);

}  // namespace cmm
