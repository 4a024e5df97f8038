#include "ppm/clifford.hpp"

#include <bit>
#include <mutex>

namespace ppm {

namespace {

const char* kVar[3] = {"x", "y", "z"};

bool in_order(const Letter& a, const Letter& b) {
  if (a.is_d != b.is_d) return !a.is_d;  // theta before d
  return a.index < b.index;
}

}  // namespace

int CliffWord::theta_count() const { return std::popcount(imask()); }
int CliffWord::d_count() const { return std::popcount(jmask()); }

std::vector<Letter> CliffWord::letters() const {
  std::vector<Letter> out;
  for (int i = 0; i < 3; ++i)
    if (imask() & (1u << i)) out.push_back(theta(i));
  for (int i = 0; i < 3; ++i)
    if (jmask() & (1u << i)) out.push_back(dtheta(i));
  return out;
}

std::string CliffWord::str() const {
  std::string s;
  for (const Letter& l : letters()) {
    if (!s.empty()) s += " ";
    s += (l.is_d ? "d_" : "th_") + std::string(kVar[l.index]);
  }
  return s.empty() ? "1" : s;
}

std::map<int, long> clifford_normalize(const std::vector<Letter>& letters) {
  std::map<int, long> out;
  std::vector<std::pair<std::vector<Letter>, long>> work{{letters, 1}};
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    size_t k = 0;
    bool zero = false;
    for (; k + 1 < w.size(); ++k) {
      if (w[k] == w[k + 1]) {
        zero = true;  // theta_i^2 = d_i^2 = 0
        break;
      }
      if (!in_order(w[k], w[k + 1])) break;
    }
    if (zero) continue;
    if (k + 1 >= w.size()) {
      unsigned im = 0, jm = 0;
      for (const Letter& l : w) (l.is_d ? jm : im) |= 1u << l.index;
      out[CliffWord::make(im, jm).id] += c;
      continue;
    }
    const Letter a = w[k], b = w[k + 1];
    std::vector<Letter> swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    work.push_back({swapped, -c});
    if (a.is_d && !b.is_d && a.index == b.index) {
      std::vector<Letter> contracted;
      contracted.insert(contracted.end(), w.begin(), w.begin() + k);
      contracted.insert(contracted.end(), w.begin() + k + 2, w.end());
      work.push_back({contracted, c});
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

const std::vector<std::pair<int, long>>& word_product(int a, int b) {
  static std::once_flag once;
  static std::vector<std::vector<std::pair<int, long>>> table;
  std::call_once(once, [] {
    table.resize(kNumWords * kNumWords);
    for (int i = 0; i < kNumWords; ++i)
      for (int j = 0; j < kNumWords; ++j) {
        auto li = CliffWord{i}.letters();
        auto lj = CliffWord{j}.letters();
        li.insert(li.end(), lj.begin(), lj.end());
        for (auto [w, c] : clifford_normalize(li)) table[i * kNumWords + j].push_back({w, c});
      }
  });
  return table[a * kNumWords + b];
}

unsigned ext_basis_mask(int k) {
  static const unsigned masks[kExtDim] = {0u, 1u, 2u, 4u, 3u, 5u, 6u, 7u};
  return masks[k];
}

int ext_basis_index(unsigned mask) {
  for (int k = 0; k < kExtDim; ++k)
    if (ext_basis_mask(k) == mask) return k;
  return -1;
}

std::string ext_basis_name(int k) {
  unsigned m = ext_basis_mask(k);
  std::string s;
  for (int i = 0; i < 3; ++i)
    if (m & (1u << i)) s += (s.empty() ? "th_" : " th_") + std::string(kVar[i]);
  return s.empty() ? "1" : s;
}

std::pair<int, unsigned> word_apply(int word, unsigned mask) {
  auto ls = CliffWord{word}.letters();
  int sign = 1;
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const unsigned bit = 1u << it->index;
    // number of set bits below index: sign for moving to the front
    const int below = std::popcount(mask & (bit - 1));
    if (it->is_d) {
      if (!(mask & bit)) return {0, 0};
      mask &= ~bit;
    } else {
      if (mask & bit) return {0, 0};
      mask |= bit;
    }
    if (below & 1) sign = -sign;
  }
  return {sign, mask};
}

std::array<std::array<int, kExtDim>, kExtDim> word_matrix(int word) {
  std::array<std::array<int, kExtDim>, kExtDim> m{};
  for (int c = 0; c < kExtDim; ++c) {
    auto [s, mask] = word_apply(word, ext_basis_mask(c));
    if (s != 0) m[ext_basis_index(mask)][c] = s;
  }
  return m;
}

}  // namespace ppm
