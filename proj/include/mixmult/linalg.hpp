#ifndef MIXMULT_LINALG_HPP
#define MIXMULT_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "mixmult/error.hpp"

namespace mixmult {

// Sparse vector over a field: (column, nonzero value) pairs sorted by column.
template <typename Field>
using SparseVector = std::vector<std::pair<std::size_t, typename Field::value_type>>;

// Incrementally built reduced row-echelon basis of a subspace of k^n.
// Pivots are the leading (smallest) column of each row, so the result does not
// depend on anything but insertion order.
template <typename Field>
class RowEchelon {
 public:
  using Coeff = typename Field::value_type;

  RowEchelon(Field field, std::size_t num_cols)
      : field_(std::move(field)), ncols_(num_cols), pivot_row_(num_cols, kNone) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t num_cols() const { return ncols_; }
  bool full() const { return rows_.size() == ncols_; }

  // Reduces v against the basis; adds it when independent. Returns true if the
  // rank grew.
  bool insert(const SparseVector<Field>& v) { return insert_dense(densify(v)); }

  bool insert_dense(std::vector<Coeff> dense) {
    std::size_t lead = reduce(dense);
    if (lead == kNone) return false;
    Coeff inv = field_.inv(dense[lead]);
    for (std::size_t j = lead; j < ncols_; ++j)
      if (!field_.is_zero(dense[j])) dense[j] = field_.mul(dense[j], inv);
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(dense));
    return true;
  }

  bool in_span(const SparseVector<Field>& v) const {
    std::vector<Coeff> dense = densify(v);
    return reduce(dense) == kNone;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<Coeff> densify(const SparseVector<Field>& v) const {
    std::vector<Coeff> dense(ncols_, field_.zero());
    for (const auto& [c, x] : v) {
      if (c >= ncols_) throw InconsistencyError("vector column out of range");
      dense[c] = field_.add(dense[c], x);
    }
    return dense;
  }

  // Eliminates against the pivots in place; returns the first surviving
  // non-pivot column, or kNone when the vector is in the span.
  // Columns are visited in increasing order and eliminating at a pivot column
  // only touches later columns, so one pass suffices.
  std::size_t reduce(std::vector<Coeff>& dense) const {
    if (dense.size() != ncols_) throw InconsistencyError("vector length mismatch");
    std::size_t lead = kNone;
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (field_.is_zero(dense[c])) continue;
      std::size_t r = pivot_row_[c];
      if (r == kNone) {
        if (lead == kNone) lead = c;
        continue;
      }
      Coeff factor = dense[c];
      const std::vector<Coeff>& row = rows_[r];
      for (std::size_t j = c; j < ncols_; ++j)
        if (!field_.is_zero(row[j])) dense[j] = field_.sub(dense[j], field_.mul(factor, row[j]));
    }
    return lead;
  }

  Field field_;
  std::size_t ncols_;
  std::vector<std::vector<Coeff>> rows_;
  std::vector<std::size_t> pivot_row_;
};

template <typename Field>
std::size_t rank_of(const Field& field, std::size_t num_cols, const std::vector<SparseVector<Field>>& rows) {
  RowEchelon<Field> ech(field, num_cols);
  for (const auto& r : rows) {
    ech.insert(r);
    if (ech.full()) break;
  }
  return ech.rank();
}

}  // namespace mixmult

#endif  // MIXMULT_LINALG_HPP
