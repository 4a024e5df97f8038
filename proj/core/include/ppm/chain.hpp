#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppm/group.hpp"
#include "ppm/linalg.hpp"
#include "ppm/poly.hpp"

namespace ppm {

// Basis element of a graded slice: generator (or Clifford word) index, an
// auxiliary index (group element for lifted complexes) and a monomial.
struct Key {
  int gen = 0;
  int aux = 0;
  Mono mono;
  friend bool operator==(const Key& a, const Key& b) {
    return a.gen == b.gen && a.aux == b.aux && a.mono == b.mono;
  }
  friend bool operator<(const Key& a, const Key& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    if (a.aux != b.aux) return a.aux < b.aux;
    return a.mono < b.mono;
  }
};

struct KeyHash {
  size_t operator()(const Key& k) const;
};

using Chain = std::map<Key, CycNum>;
void chain_add(Chain& c, const Key& k, const CycNum& v);
void chain_axpy(Chain& c, const CycNum& f, const Chain& o);
Chain chain_scaled(const Chain& c, const CycNum& f);
bool chain_is_zero(const Chain& c);

// A cochain complex presented by finite degree slices; the differential
// raises tripled degree by 3.
class ChainView {
 public:
  virtual ~ChainView() = default;
  virtual std::vector<Key> basis(int degree) const = 0;
  virtual Chain diff(const Key& k) const = 0;
  virtual int degree_of(const Key& k) const = 0;
  virtual Elem weight_of(const Key& k) const;
  virtual std::string label(const Key& k) const;

  Chain apply(const Chain& c) const;
  std::string format(const Chain& c) const;
};

// Restricts a view to basis elements satisfying a predicate; the predicate
// must cut out a subcomplex (e.g. a weight space).
class FilteredView : public ChainView {
 public:
  FilteredView(const ChainView& base, std::function<bool(const Key&)> keep)
      : base_(base), keep_(std::move(keep)) {}
  std::vector<Key> basis(int degree) const override;
  Chain diff(const Key& k) const override { return base_.diff(k); }
  int degree_of(const Key& k) const override { return base_.degree_of(k); }
  Elem weight_of(const Key& k) const override { return base_.weight_of(k); }
  std::string label(const Key& k) const override { return base_.label(k); }

 private:
  const ChainView& base_;
  std::function<bool(const Key&)> keep_;
};

// Only the weight-w part (w = zero element: the invariant subcomplex).
FilteredView weight_filter(const ChainView& base, const FinAbGroup& g, const Elem& w);

struct Slice {
  std::vector<Key> keys;
  std::unordered_map<Key, int, KeyHash> index;
  explicit Slice(std::vector<Key> k = {});
  int find(const Key& k) const;
};

// Converts a chain to slice coordinates; throws ShapeMismatch if a key is
// outside the slice.
SVec to_svec(const Chain& c, const Slice& s);
Chain from_svec(const SVec& v, const Slice& s);

// Matrix of d from degree d to degree d+3 with labelled rows/columns.
SliceMatrix slice_matrix(const ChainView& v, int degree);

// dim H^d for d = 0..cutoff; throws CutoffTooSmall if cutoff < 3.
std::vector<int> cohomology_hilbert(const ChainView& v, int cutoff);

// Cohomology dims restricted to a parity (entries for other parities are 0).
std::vector<int> parity_part(const std::vector<int>& h, int parity);

// First basis element of degree <= max_degree with d(d(k)) != 0, if any.
std::optional<Key> find_d_squared_failure(const ChainView& v, int max_degree);

// First basis element whose differential has a term of degree != deg + 3.
std::optional<Key> find_degree_failure(const ChainView& v, int max_degree);

// Boundaries B^d and cocycles Z^d of a slice, as vectors in slice coordinates.
struct SliceCohomology {
  Slice slice;
  Reducer boundaries;           // span of d(B_{d-3})
  std::vector<SVec> cocycles;   // kernel basis of d: B_d -> B_{d+3}
  int dim() const { return static_cast<int>(cocycles.size()) - boundaries.rank(); }
};
SliceCohomology slice_cohomology(const ChainView& v, int degree);

// Representatives of a basis of H^d (cocycles independent modulo boundaries).
std::vector<Chain> cohomology_basis(const ChainView& v, int degree);

// Normal form of a cocycle modulo boundaries of its degree (canonical).
Chain class_normal_form(const ChainView& v, const Chain& c, int degree);
bool is_exact(const ChainView& v, const Chain& c, int degree);

}  // namespace ppm
