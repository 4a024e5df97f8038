#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ppm/cycnum.hpp"

namespace ppm {

// Sparse vector with strictly increasing indices and no stored zeros.
class SVec {
 public:
  using Entry = std::pair<int, CycNum>;
  SVec() = default;
  explicit SVec(std::vector<Entry> entries);  // any order; duplicates summed

  const std::vector<Entry>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }
  size_t size() const { return e_.size(); }
  CycNum at(int index) const;

  // this += c * o
  void axpy(const CycNum& c, const SVec& o);
  SVec scaled(const CycNum& c) const;

  friend bool operator==(const SVec& a, const SVec& b);

 private:
  std::vector<Entry> e_;
};

// Incremental column echelon form over Q(zeta_N). Inserted vectors are reduced
// against earlier pivots; a pivot is stored with leading index = pivot row and
// leading coefficient 1. Optionally tracks each pivot as a combination of the
// inserted columns so kernels and particular solutions can be read off.
class Reducer {
 public:
  explicit Reducer(bool track = false) : track_(track) {}

  // Returns true if v was independent of everything inserted so far.
  // With tracking, a dependent column yields a kernel vector (see kernel()).
  bool insert(const SVec& v, int column_id = -1);
  int rank() const { return static_cast<int>(pivots_.size()); }

  // Normal form of v modulo the span: zero at every pivot row. Canonical for
  // a fixed row order, independent of the insertion order.
  SVec reduce(const SVec& v) const;
  bool contains(const SVec& v) const { return reduce(v).is_zero(); }

  // If v lies in the span, its expression as a combination of inserted
  // column ids (only independent columns are used).
  std::optional<SVec> solve(const SVec& v) const;

  // Kernel vectors found so far (combinations of column ids), tracking only.
  const std::vector<SVec>& kernel() const { return kernel_; }
  std::vector<int> pivot_rows() const;

 private:
  SVec reduce_impl(const SVec& v, SVec* combo) const;
  bool track_;
  std::vector<SVec> pivots_;
  std::vector<SVec> combos_;
  std::unordered_map<int, int> by_row_;
  std::vector<SVec> kernel_;
};

// Dense-labelled exact matrix built column by column.
struct SliceMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SVec> columns;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  SVec apply(const SVec& x) const;  // x indexed by column
};

struct RankKernel {
  int rank = 0;
  std::vector<SVec> kernel;  // vectors indexed by column
};

RankKernel exact_rank_kernel(const SliceMatrix& m);
int exact_rank(const std::vector<SVec>& columns);

}  // namespace ppm
