#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace ppm {

// Letters of the Clifford algebra on theta_x, theta_y, theta_z and their
// contractions d_x, d_y, d_z, with theta_i theta_j = -theta_j theta_i,
// d_i d_j = -d_j d_i and d_i theta_j = -theta_j d_i + delta_ij.
struct Letter {
  bool is_d = false;  // false: theta_i, true: d/d theta_i
  int index = 0;      // 0,1,2 = x,y,z
  friend bool operator==(const Letter& a, const Letter& b) { return a.is_d == b.is_d && a.index == b.index; }
};

inline Letter theta(int i) { return {false, i}; }
inline Letter dtheta(int i) { return {true, i}; }

// Normal-ordered word theta_I d_J with both index sets increasing.
// Encoded as I | (J << 3); there are 64 words.
struct CliffWord {
  int id = 0;
  static CliffWord make(unsigned imask, unsigned jmask) { return {static_cast<int>(imask | (jmask << 3))}; }
  unsigned imask() const { return id & 7u; }
  unsigned jmask() const { return (id >> 3) & 7u; }
  int theta_count() const;
  int d_count() const;
  int degree() const { return theta_count() - d_count(); }  // tripled degree
  int parity() const { return (theta_count() + d_count()) & 1; }
  std::vector<Letter> letters() const;
  std::string str() const;  // "th_x th_y d_x", "1"
  friend bool operator<(const CliffWord& a, const CliffWord& b) { return a.id < b.id; }
  friend bool operator==(const CliffWord& a, const CliffWord& b) { return a.id == b.id; }
};

constexpr int kNumWords = 64;

// Signed sum of normal-ordered words equal to the given letter product.
std::map<int, long> clifford_normalize(const std::vector<Letter>& letters);

// Product of two normal-ordered words (cached table).
const std::vector<std::pair<int, long>>& word_product(int a, int b);

// Exterior algebra basis for the 8-dimensional module: sorted theta subsets
// ordered 1, th_x, th_y, th_z, th_x th_y, th_x th_z, th_y th_z, th_x th_y th_z.
constexpr int kExtDim = 8;
unsigned ext_basis_mask(int k);
int ext_basis_index(unsigned mask);
std::string ext_basis_name(int k);

// Action of a word on an exterior basis element: (sign, target mask), sign 0 if killed.
std::pair<int, unsigned> word_apply(int word, unsigned mask);

// 8x8 integer matrix of a word (row = output basis index).
std::array<std::array<int, kExtDim>, kExtDim> word_matrix(int word);

}  // namespace ppm
