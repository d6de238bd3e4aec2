#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cmm/rng.hpp"
#include "cmm/schema.hpp"

namespace cmm {

// Policy for category values in new data that were not seen when the schema
// was built. `Error` fails loud; `MapToUniform` encodes them as -1, which
// densities treat as a uniform 1/K_d factor.
enum class UnseenCategoryPolicy { Error, MapToUniform };

// Typed, immutable-after-load sample collection. Continuous features live in
// an N x D_cont matrix, categorical features as 0-based indices.
class Dataset {
public:
  Dataset() = default;
  Dataset(Schema schema, Eigen::MatrixXd continuous, Eigen::MatrixXi categorical,
          std::vector<int> labels, std::vector<std::string> provenance = {});

  const Schema& schema() const { return schema_; }
  std::size_t size() const { return static_cast<std::size_t>(continuous_.rows()); }
  bool labeled() const { return !labels_.empty(); }

  const Eigen::MatrixXd& continuous() const { return continuous_; }
  const Eigen::MatrixXi& categorical() const { return categorical_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(std::size_t n) const { return labels_[n]; }

  Sample sample(std::size_t n) const;
  const std::vector<std::string>& provenance() const { return provenance_; }
  Dataset with_provenance(std::string entry) const;

  // Rows of one class (labeled datasets only).
  std::vector<std::size_t> class_rows(int c) const;
  // |X_c| / |X| for every class.
  Eigen::VectorXd empirical_class_priors() const;

  // New dataset holding the given rows, in order.
  Dataset subset(const std::vector<std::size_t>& rows) const;

private:
  Schema schema_;
  Eigen::MatrixXd continuous_;   // N x D_cont
  Eigen::MatrixXi categorical_;  // N x D_cat
  std::vector<int> labels_;      // empty when unlabeled
  std::vector<std::string> provenance_;
};

// ---- Loading ----

// Column declaration for CSV ingestion: JSON {"columns":[{"name": ...,
// "kind": "continuous"|"categorical"|"class"}, ...]} or plain "name:kind"
// lines. Columns not mentioned raise SchemaError.
struct SchemaDeclaration {
  struct Entry {
    std::string name;
    std::string kind;  // continuous | categorical | class
  };
  std::vector<Entry> entries;

  static SchemaDeclaration parse_file(const std::string& path);
  static SchemaDeclaration parse(const std::string& text);
};

// Header-row CSV loader. Categorical values map to indices in first-occurrence
// order; malformed rows raise ParseError naming the row number. When
// `reference` is given, its category tables are reused and `policy` decides
// what happens to unseen values.
Dataset load_csv(const std::string& path, const SchemaDeclaration& decl);
Dataset load_csv(const std::string& path, const SchemaDeclaration& decl, const Schema& reference,
                 UnseenCategoryPolicy policy);
Dataset load_csv_stream(std::istream& in, const std::string& origin, const SchemaDeclaration& decl,
                        const Schema* reference, UnseenCategoryPolicy policy);

void save_csv(const std::string& path, const Dataset& data);

// ---- Transforms ----

struct ZTransform {
  Eigen::VectorXd mean;
  Eigen::VectorXd std;  // zero-variance dims keep std = 1 (passed through)
  Dataset apply(const Dataset& data) const;
};

// Centers and scales every continuous dimension to mean 0, std 1 (population
// std). Zero-variance dims pass through unchanged; `warnings` collects their
// names when non-null.
std::pair<Dataset, ZTransform> z_normalize(const Dataset& data,
                                           std::vector<std::string>* warnings = nullptr);

struct PcaTransform {
  Eigen::VectorXd mean;
  Eigen::MatrixXd basis;  // D_cont x k, columns are eigenvectors
  Eigen::VectorXd eigenvalues;
  Dataset apply(const Dataset& data) const;
};

// Projects the continuous block onto the top-k eigenvectors of its sample
// covariance. Eigenvector signs are fixed (largest-magnitude entry positive).
// Categorical columns pass through untouched.
std::pair<Dataset, PcaTransform> pca(const Dataset& data, int k);

// ---- Splits ----

// Stratified-by-class split; per-class proportions preserved within one
// sample. Deterministic per seed.
std::pair<Dataset, Dataset> split(const Dataset& data, double test_fraction, std::uint64_t seed);

// Stratified k-fold partition; folds are disjoint and cover the dataset.
// Throws when k exceeds the smallest class size.
std::vector<Dataset> kfold(const Dataset& data, int k, std::uint64_t seed);

Dataset concat(const std::vector<Dataset>& parts);

// ---- Synthetic generators (documented in the README) ----

// Two interleaved half-moon classes with Gaussian noise.
Dataset make_two_moons(std::size_t samples_per_class, double noise, std::uint64_t seed);

// Gaussian blob mixture: centers[c] lists the blob centers of class c.
Dataset make_blobs(const std::vector<std::vector<Eigen::Vector2d>>& centers,
                   std::size_t samples_per_blob, double stddev, std::uint64_t seed);

// Unlabeled 2-D stream: background N(0, I); between [novel_begin, novel_end)
// every (novel_every)-th sample is drawn from N(offset, I).
Dataset make_two_regime_stream(std::size_t length, std::size_t novel_begin,
                               std::size_t novel_end, int novel_every,
                               const Eigen::Vector2d& offset, std::uint64_t seed);

}  // namespace cmm
