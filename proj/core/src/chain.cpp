#include "ppm/chain.hpp"

#include <sstream>

#include "ppm/error.hpp"

namespace ppm {

size_t KeyHash::operator()(const Key& k) const {
  size_t h = static_cast<size_t>(k.gen) * 1000003u ^ static_cast<size_t>(k.aux) * 9176u;
  for (int i = 0; i < kMaxVars; ++i) h = h * 31u + static_cast<size_t>(k.mono.e[i]);
  return h;
}

void chain_add(Chain& c, const Key& k, const CycNum& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = c.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

void chain_axpy(Chain& c, const CycNum& f, const Chain& o) {
  if (f.is_zero()) return;
  for (const auto& [k, v] : o) chain_add(c, k, f * v);
}

Chain chain_scaled(const Chain& c, const CycNum& f) {
  Chain r;
  chain_axpy(r, f, c);
  return r;
}

bool chain_is_zero(const Chain& c) { return c.empty(); }

Elem ChainView::weight_of(const Key&) const {
  throw Error(ErrorKind::ShapeMismatch, "this complex carries no G-weights");
}

std::string ChainView::label(const Key& k) const {
  std::ostringstream os;
  os << "g" << k.gen;
  if (k.aux) os << "[" << k.aux << "]";
  if (k.mono != Mono::one()) os << "*" << k.mono.str();
  return os.str();
}

Chain ChainView::apply(const Chain& c) const {
  Chain r;
  for (const auto& [k, v] : c) chain_axpy(r, v, diff(k));
  return r;
}

std::string ChainView::format(const Chain& c) const {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, v] : c) {
    std::string cs = v.str();
    bool neg = v.is_rational() && v.rational_value() < 0;
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    first = false;
    std::string mag = neg ? cs.substr(1) : cs;
    if (!v.is_rational()) mag = "(" + mag + ")";
    if (mag != "1") s += mag + "*";
    s += label(k);
  }
  return s;
}

std::vector<Key> FilteredView::basis(int degree) const {
  std::vector<Key> out;
  for (const Key& k : base_.basis(degree))
    if (keep_(k)) out.push_back(k);
  return out;
}

FilteredView weight_filter(const ChainView& base, const FinAbGroup& g, const Elem& w) {
  Elem target = g.normalize(w);
  return FilteredView(base, [&base, g, target](const Key& k) { return g.normalize(base.weight_of(k)) == target; });
}

Slice::Slice(std::vector<Key> k) : keys(std::move(k)) {
  index.reserve(keys.size() * 2);
  for (size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], static_cast<int>(i));
}

int Slice::find(const Key& k) const {
  auto it = index.find(k);
  return it == index.end() ? -1 : it->second;
}

SVec to_svec(const Chain& c, const Slice& s) {
  std::vector<SVec::Entry> e;
  e.reserve(c.size());
  for (const auto& [k, v] : c) {
    int i = s.find(k);
    if (i < 0) throw Error(ErrorKind::ShapeMismatch, "chain term outside the slice basis");
    e.push_back({i, v});
  }
  return SVec(std::move(e));
}

Chain from_svec(const SVec& v, const Slice& s) {
  Chain c;
  for (const auto& [i, x] : v.entries()) c.emplace(s.keys.at(i), x);
  return c;
}

SliceMatrix slice_matrix(const ChainView& v, int degree) {
  Slice src(v.basis(degree));
  Slice dst(v.basis(degree + 3));
  SliceMatrix m;
  m.rows = static_cast<int>(dst.keys.size());
  m.cols = static_cast<int>(src.keys.size());
  for (const Key& k : dst.keys) m.row_labels.push_back(v.label(k));
  for (const Key& k : src.keys) {
    m.col_labels.push_back(v.label(k));
    m.columns.push_back(to_svec(v.diff(k), dst));
  }
  return m;
}

namespace {

int slice_rank(const ChainView& v, int degree) {
  std::vector<Key> src = v.basis(degree);
  if (src.empty()) return 0;
  Slice dst(v.basis(degree + 3));
  Reducer red;
  for (const Key& k : src) red.insert(to_svec(v.diff(k), dst));
  return red.rank();
}

}  // namespace

std::vector<int> cohomology_hilbert(const ChainView& v, int cutoff) {
  if (cutoff < 3) throw Error(ErrorKind::CutoffTooSmall, "cohomology needs cutoff >= 3");
  std::vector<int> rank(cutoff + 4, 0);  // rank[d + 3] = rank of d: d -> d+3
  for (int d = -3; d <= cutoff; ++d) rank[d + 3] = slice_rank(v, d);
  std::vector<int> h(cutoff + 1, 0);
  for (int d = 0; d <= cutoff; ++d) {
    int n = static_cast<int>(v.basis(d).size());
    h[d] = n - rank[d + 3] - rank[d];
    if (h[d] < 0) throw Error(ErrorKind::LoadAssertion, "negative cohomology dimension (d^2 != 0?)");
  }
  return h;
}

std::vector<int> parity_part(const std::vector<int>& h, int parity) {
  std::vector<int> r(h.size(), 0);
  for (size_t d = 0; d < h.size(); ++d)
    if (static_cast<int>(d % 2) == parity) r[d] = h[d];
  return r;
}

std::optional<Key> find_d_squared_failure(const ChainView& v, int max_degree) {
  for (int d = 0; d <= max_degree; ++d)
    for (const Key& k : v.basis(d))
      if (!v.apply(v.diff(k)).empty()) return k;
  return std::nullopt;
}

std::optional<Key> find_degree_failure(const ChainView& v, int max_degree) {
  for (int d = 0; d <= max_degree; ++d)
    for (const Key& k : v.basis(d))
      for (const auto& [t, c] : v.diff(k))
        if (v.degree_of(t) != d + 3) return k;
  return std::nullopt;
}

SliceCohomology slice_cohomology(const ChainView& v, int degree) {
  SliceCohomology out{Slice(v.basis(degree)), Reducer(), {}};
  for (const Key& k : v.basis(degree - 3)) out.boundaries.insert(to_svec(v.diff(k), out.slice));
  Slice next(v.basis(degree + 3));
  Reducer red(true);
  for (size_t j = 0; j < out.slice.keys.size(); ++j) red.insert(to_svec(v.diff(out.slice.keys[j]), next), static_cast<int>(j));
  out.cocycles = red.kernel();
  return out;
}

std::vector<Chain> cohomology_basis(const ChainView& v, int degree) {
  SliceCohomology sc = slice_cohomology(v, degree);
  std::vector<Chain> out;
  Reducer red = sc.boundaries;
  for (const SVec& z : sc.cocycles)
    if (red.insert(z)) out.push_back(from_svec(z, sc.slice));
  return out;
}

Chain class_normal_form(const ChainView& v, const Chain& c, int degree) {
  Slice s(v.basis(degree));
  Reducer red;
  for (const Key& k : v.basis(degree - 3)) red.insert(to_svec(v.diff(k), s));
  return from_svec(red.reduce(to_svec(c, s)), s);
}

bool is_exact(const ChainView& v, const Chain& c, int degree) { return class_normal_form(v, c, degree).empty(); }

}  // namespace ppm
