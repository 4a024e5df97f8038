#include "ppm/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ppm/error.hpp"

namespace ppm {

Mono Mono::var(int i, int power) {
  Mono m;
  m.e[i] = static_cast<int16_t>(power);
  return m;
}

int Mono::total() const { return total(0, kMaxVars); }

int Mono::total(int first, int last) const {
  int s = 0;
  for (int i = first; i < last; ++i) s += e[i];
  return s;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
  return r;
}

bool Mono::divides(const Mono& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
  return r;
}

std::string var_name(int i) {
  static const char* names[kMaxVars] = {"x", "y", "z", "x'", "y'", "z'"};
  return names[i];
}

std::string Mono::str(int nvars) const {
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var_name(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

bool degrevlex_greater(const Mono& a, const Mono& b, int nvars) {
  int da = a.total(0, nvars), db = b.total(0, nvars);
  if (da != db) return da > db;
  for (int i = nvars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

std::vector<Mono> monomials_of_degree(int nvars, int degree) {
  std::vector<Mono> out;
  if (degree < 0) return out;
  Mono m;
  // recursive fill of exponents for variables 0..nvars-1 summing to degree
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      m.e[i] = static_cast<int16_t>(left);
      out.push_back(m);
      return;
    }
    for (int k = left; k >= 0; --k) {
      m.e[i] = static_cast<int16_t>(k);
      self(self, i + 1, left - k);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) { return degrevlex_greater(a, b, nvars); });
  return out;
}

Mono parse_mono(const std::string& text) {
  Mono m;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
  if (s.empty() || s == "1") return m;
  size_t i = 0;
  while (i < s.size()) {
    int v = -1;
    if (s[i] == 'x') v = 0;
    else if (s[i] == 'y') v = 1;
    else if (s[i] == 'z') v = 2;
    else throw Error(ErrorKind::Parse, "bad monomial '" + text + "'");
    ++i;
    if (i < s.size() && (s[i] == '\'' || s[i] == 'p')) {
      v += 3;
      ++i;
    }
    int power = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw Error(ErrorKind::Parse, "bad exponent in '" + text + "'");
      power = std::stoi(s.substr(i, j - i));
      i = j;
    }
    m.e[v] = static_cast<int16_t>(m.e[v] + power);
  }
  return m;
}

Poly Poly::constant(const CycNum& c, int nvars) {
  Poly p(nvars);
  p.add_term(Mono::one(), c);
  return p;
}

Poly Poly::var(int i, int nvars) {
  Poly p(nvars);
  p.add_term(Mono::var(i), CycNum(1));
  return p;
}

Poly Poly::monomial(const Mono& m, const CycNum& c, int nvars) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.total());
  return d;
}

CycNum Poly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? CycNum() : it->second;
}

void Poly::add_term(const Mono& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const CycNum& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, v] : r.t_) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.n_, b.n_));
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  int target = 3;
  for (const auto& p : images) target = std::max(target, p.nvars());
  Poly r(target);
  for (const auto& [m, c] : t_) {
    Poly term = Poly::constant(c, target);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m.e[i]; ++k) term = term * images.at(i);
    r += term;
  }
  return r;
}

Poly Poly::scale_vars(const std::vector<CycNum>& s) const {
  Poly r(n_);
  for (const auto& [m, c] : t_) {
    CycNum f = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m.e[i]; ++k) f *= s.at(i);
    r.add_term(m, f);
  }
  return r;
}

Poly Poly::with_nvars(int nvars) const {
  Poly r(nvars);
  for (const auto& [m, c] : t_) {
    for (int i = nvars; i < kMaxVars; ++i)
      if (m.e[i] != 0) throw Error(ErrorKind::ShapeMismatch, "polynomial uses a dropped variable");
    r.add_term(m, c);
  }
  return r;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Mono, CycNum>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return degrevlex_greater(a.first, b.first, n_); });
  std::string s;
  bool first = true;
  for (const auto& [m, c] : v) {
    std::string cs = c.str();
    bool neg = c.is_rational() && c.rational_value() < 0;
    bool compound = !c.is_rational();
    std::string mag = neg ? cs.substr(1) : cs;
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    first = false;
    if (m == Mono::one()) {
      s += compound ? "(" + mag + ")" : mag;
    } else {
      if (compound) s += "(" + mag + ")*";
      else if (mag != "1") s += mag + "*";
      s += m.str(n_);
    }
  }
  return s;
}

}  // namespace ppm
