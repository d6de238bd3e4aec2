#include "cmm/schema.hpp"

#include "cmm/errors.hpp"

namespace cmm {

Schema::Schema(std::vector<ColumnSchema> columns) : columns_(std::move(columns)) {
  for (int i = 0; i < static_cast<int>(columns_.size()); ++i) {
    const ColumnSchema& col = columns_[i];
    if (col.role == ColumnRole::Class) {
      if (class_column_.has_value())
        throw SchemaError("schema has more than one class column");
      class_column_ = i;
    } else if (col.kind == ColumnKind::Continuous) {
      continuous_.push_back(i);
    } else {
      categorical_.push_back(i);
    }
  }
  validate();
}

void Schema::validate() const {
  for (const ColumnSchema& col : columns_) {
    if (col.name.empty()) throw SchemaError("schema column without a name");
    if (col.role == ColumnRole::Class && col.kind != ColumnKind::Categorical)
      throw SchemaError("class column '" + col.name + "' must be categorical");
    if (col.role == ColumnRole::Feature && col.kind == ColumnKind::Categorical &&
        !col.categories.empty() && col.cardinality() < 2)
      throw SchemaError("categorical column '" + col.name + "' needs at least 2 categories");
  }
}

int Schema::class_column() const {
  if (!class_column_) throw SchemaError("schema has no class column");
  return *class_column_;
}

const ColumnSchema& Schema::class_schema() const { return columns_[class_column()]; }

bool Schema::compatible_with(const Schema& other) const {
  if (columns_.size() != other.columns_.size()) return false;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    const ColumnSchema& a = columns_[i];
    const ColumnSchema& b = other.columns_[i];
    if (a.kind != b.kind || a.role != b.role || a.name != b.name) return false;
    if (a.kind == ColumnKind::Categorical && a.categories != b.categories) return false;
  }
  return true;
}

void check_sample(const Schema& schema, const Sample& sample) {
  if (sample.continuous.size() != schema.d_cont())
    throw SchemaError("sample has " + std::to_string(sample.continuous.size()) +
                      " continuous values, schema expects " + std::to_string(schema.d_cont()));
  if (static_cast<int>(sample.categorical.size()) != schema.d_cat())
    throw SchemaError("sample has " + std::to_string(sample.categorical.size()) +
                      " categorical values, schema expects " + std::to_string(schema.d_cat()));
  for (int d = 0; d < schema.d_cat(); ++d) {
    const int v = sample.categorical[d];
    const int k = schema.categorical(d).cardinality();
    if (v < -1 || v >= k)
      throw SchemaError("category index " + std::to_string(v) + " out of range for column '" +
                        schema.categorical(d).name + "'");
  }
  if (sample.label && schema.has_class_column() &&
      (*sample.label < 0 || *sample.label >= schema.num_classes()))
    throw SchemaError("class label out of range");
}

}  // namespace cmm
