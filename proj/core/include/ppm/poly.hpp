#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ppm/cycnum.hpp"

namespace ppm {

// Variables x,y,z are 0,1,2; the primed copies x',y',z' are 3,4,5.
constexpr int kMaxVars = 6;

struct Mono {
  std::array<int16_t, kMaxVars> e{};

  static Mono one() { return Mono{}; }
  static Mono var(int i, int power = 1);

  int total() const;
  int total(int first, int last) const;  // degree in variables [first, last)
  Mono operator*(const Mono& o) const;
  bool divides(const Mono& o) const;
  Mono operator/(const Mono& o) const;  // requires divides

  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }
  friend bool operator<(const Mono& a, const Mono& b) { return a.e < b.e; }

  std::string str(int nvars = 3) const;  // "x^2*y", "1"
};

// Degree-reverse-lexicographic comparison with x > y > z (> x' > y' > z').
bool degrevlex_greater(const Mono& a, const Mono& b, int nvars);

// All monomials of the given total degree in the first nvars variables,
// in descending degrevlex order.
std::vector<Mono> monomials_of_degree(int nvars, int degree);

// Parses "x^2 y", "x*y^2", "1", "x^0 y^1 z^1"; names x,y,z,xp,yp,zp (or x').
Mono parse_mono(const std::string& text);

std::string var_name(int i);

class Poly {
 public:
  explicit Poly(int nvars = 3) : n_(nvars) {}
  static Poly constant(const CycNum& c, int nvars = 3);
  static Poly var(int i, int nvars = 3);
  static Poly monomial(const Mono& m, const CycNum& c, int nvars = 3);

  int nvars() const { return n_; }
  const std::map<Mono, CycNum>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;  // -1 for zero
  CycNum coeff(const Mono& m) const;
  void add_term(const Mono& m, const CycNum& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const CycNum& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const CycNum& c) { return a *= c; }
  friend Poly operator*(const CycNum& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Replace variable i by images[i]; images may live in a different ring size.
  Poly substitute(const std::vector<Poly>& images) const;
  // x_i -> s_i * x_i.
  Poly scale_vars(const std::vector<CycNum>& s) const;
  // Reinterpret in a ring with more (or fewer, if unused) variables.
  Poly with_nvars(int nvars) const;

  std::string str() const;

 private:
  int n_;
  std::map<Mono, CycNum> t_;
};

}  // namespace ppm
