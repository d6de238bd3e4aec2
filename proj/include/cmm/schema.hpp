#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cmm {

enum class ColumnKind { Continuous, Categorical };
enum class ColumnRole { Feature, Class };

struct ColumnSchema {
  std::string name;
  ColumnKind kind = ColumnKind::Continuous;
  ColumnRole role = ColumnRole::Feature;
  // Category value names in index order; also the class names for the class
  // column. Empty for continuous columns.
  std::vector<std::string> categories;

  int cardinality() const { return static_cast<int>(categories.size()); }
};

// Column layout shared by datasets, samples and classifiers. Categorical
// values are stored as 0-based indices into the column's category list; the
// 1-of-K indicator expansion is never materialized.
class Schema {
public:
  Schema() = default;
  explicit Schema(std::vector<ColumnSchema> columns);

  const std::vector<ColumnSchema>& columns() const { return columns_; }

  int d_cont() const { return static_cast<int>(continuous_.size()); }
  int d_cat() const { return static_cast<int>(categorical_.size()); }

  bool has_class_column() const { return class_column_.has_value(); }
  int class_column() const;
  const ColumnSchema& class_schema() const;
  int num_classes() const { return class_schema().cardinality(); }

  // Schema of the d-th categorical feature dimension, d in [0, d_cat).
  const ColumnSchema& categorical(int d) const { return columns_[categorical_[d]]; }
  // Schema of the d-th continuous feature dimension.
  const ColumnSchema& continuous(int d) const { return columns_[continuous_[d]]; }

  // Column indices (into columns()) of the feature dimensions, in order.
  const std::vector<int>& continuous_columns() const { return continuous_; }
  const std::vector<int>& categorical_columns() const { return categorical_; }

  // Structural equality on everything evaluation depends on.
  bool compatible_with(const Schema& other) const;

  // Validates invariants; called by the constructor.
  void validate() const;

private:
  std::vector<ColumnSchema> columns_;
  std::vector<int> continuous_;
  std::vector<int> categorical_;
  std::optional<int> class_column_;
};

// One observation: continuous values in schema order of the continuous
// feature columns, category indices for the categorical feature columns.
// An index of -1 marks a category unseen at training time under the
// map-to-uniform policy; densities treat it as 1/K_d.
struct Sample {
  Eigen::VectorXd continuous;
  std::vector<int> categorical;
  std::optional<int> label;
};

// Throws SchemaError unless the sample's shape and category ranges match.
void check_sample(const Schema& schema, const Sample& sample);

}  // namespace cmm
