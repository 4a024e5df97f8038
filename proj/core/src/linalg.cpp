#include "ppm/linalg.hpp"

#include <algorithm>

namespace ppm {

SVec::SVec(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [i, c] : entries) {
    if (!e_.empty() && e_.back().first == i) {
      e_.back().second += c;
      if (e_.back().second.is_zero()) e_.pop_back();
    } else if (!c.is_zero()) {
      e_.push_back({i, std::move(c)});
    }
  }
}

CycNum SVec::at(int index) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), index, [](const Entry& a, int i) { return a.first < i; });
  return (it != e_.end() && it->first == index) ? it->second : CycNum();
}

void SVec::axpy(const CycNum& c, const SVec& o) {
  if (c.is_zero() || o.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + o.e_.size());
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      out.push_back(std::move(e_[i++]));
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      out.push_back({o.e_[j].first, c * o.e_[j].second});
      ++j;
    } else {
      CycNum s = e_[i].second + c * o.e_[j].second;
      if (!s.is_zero()) out.push_back({e_[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  e_ = std::move(out);
}

SVec SVec::scaled(const CycNum& c) const {
  SVec r;
  if (c.is_zero()) return r;
  r.e_.reserve(e_.size());
  for (const auto& [i, v] : e_) r.e_.push_back({i, v * c});
  return r;
}

bool operator==(const SVec& a, const SVec& b) {
  if (a.e_.size() != b.e_.size()) return false;
  for (size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i].first != b.e_[i].first || a.e_[i].second != b.e_[i].second) return false;
  return true;
}

SVec Reducer::reduce_impl(const SVec& v, SVec* combo) const {
  SVec r = v;
  // Scan left to right; eliminating at a pivot row only touches larger rows.
  size_t pos = 0;
  while (pos < r.entries().size()) {
    const int row = r.entries()[pos].first;
    auto it = by_row_.find(row);
    if (it == by_row_.end()) {
      ++pos;
      continue;
    }
    const CycNum f = r.entries()[pos].second;
    r.axpy(-f, pivots_[it->second]);
    if (combo) combo->axpy(-f, combos_[it->second]);
  }
  return r;
}

bool Reducer::insert(const SVec& v, int column_id) {
  SVec combo;
  if (track_) combo = SVec({{column_id, CycNum(1)}});
  SVec r = reduce_impl(v, track_ ? &combo : nullptr);
  if (r.is_zero()) {
    if (track_) kernel_.push_back(std::move(combo));
    return false;
  }
  const CycNum lead_inv = r.entries().front().second.inv();
  const int row = r.entries().front().first;
  by_row_[row] = static_cast<int>(pivots_.size());
  pivots_.push_back(r.scaled(lead_inv));
  if (track_) combos_.push_back(combo.scaled(lead_inv));
  return true;
}

SVec Reducer::reduce(const SVec& v) const { return reduce_impl(v, nullptr); }

std::optional<SVec> Reducer::solve(const SVec& v) const {
  // combo tracks v - sum f_k p_k; negate to express v itself.
  SVec combo;
  SVec r = reduce_impl(v, &combo);
  if (!r.is_zero()) return std::nullopt;
  return combo.scaled(CycNum(-1));
}

std::vector<int> Reducer::pivot_rows() const {
  std::vector<int> out;
  for (const auto& p : pivots_) out.push_back(p.entries().front().first);
  std::sort(out.begin(), out.end());
  return out;
}

SVec SliceMatrix::apply(const SVec& x) const {
  SVec r;
  for (const auto& [j, c] : x.entries()) r.axpy(c, columns.at(j));
  return r;
}

RankKernel exact_rank_kernel(const SliceMatrix& m) {
  Reducer red(true);
  for (int j = 0; j < m.cols; ++j) red.insert(m.columns[j], j);
  return {red.rank(), red.kernel()};
}

int exact_rank(const std::vector<SVec>& columns) {
  Reducer red;
  for (const auto& c : columns) red.insert(c);
  return red.rank();
}

}  // namespace ppm
