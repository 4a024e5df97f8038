#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace ppm {

// Element of the cyclotomic field Q(zeta_N), stored as a rational polynomial
// in zeta_N of degree < phi(N), reduced modulo the N-th cyclotomic polynomial.
class CycNum {
 public:
  CycNum();  // zero, order 1
  CycNum(long n);  // NOLINT: integers embed implicitly
  explicit CycNum(const mpq_class& q);
  CycNum(int order, std::vector<mpq_class> coeffs);  // coeffs.size() == phi(order)

  static CycNum root_of_unity(int n, long k);
  static CycNum rational(long num, long den);

  int order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Only valid when is_rational().
  mpq_class rational_value() const;

  // Same value re-expressed over Q(zeta_L); requires order() | l.
  CycNum lifted(int l) const;

  CycNum inv() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inv(); }
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  // Polynomial in zeta_N, e.g. "1/2 - 3*z3^2"; rationals print plainly.
  std::string str() const;

 private:
  int order_;
  std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

// Euler phi and the integer coefficients of Phi_n (low degree first).
int euler_phi(int n);
const std::vector<long>& cyclotomic_poly(int n);

}  // namespace ppm
