#include "ppm/cycnum.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ppm/error.hpp"

namespace ppm {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NonSurjective: return "NonSurjective";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::LoadAssertion: return "LoadAssertion";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::IntertwiningFailure: return "IntertwiningFailure";
    case ErrorKind::TwistedProductUnsupported: return "TwistedProductUnsupported";
    case ErrorKind::NonDiagonal: return "NonDiagonal";
    case ErrorKind::PotentialMismatch: return "PotentialMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NoLiftAtCutoff: return "NoLiftAtCutoff";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

namespace {

struct Table {
  int n = 1;
  int phi = 1;
  // red[k] = zeta^k reduced mod Phi_n, for 0 <= k < n.
  std::vector<std::vector<long>> red;
};

std::vector<long> poly_divexact(std::vector<long> num, const std::vector<long>& den) {
  // Both monic integer polynomials, low degree first.
  const int dn = static_cast<int>(den.size()) - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (int i = static_cast<int>(num.size()) - 1; i >= dn; --i) {
    long c = num[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const Table& table(int n) {
  static std::map<int, std::unique_ptr<Table>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto t = std::make_unique<Table>();
  t->n = n;
  t->phi = euler_phi(n);
  const auto& phi_poly = cyclotomic_poly(n);
  t->red.assign(n, std::vector<long>(t->phi, 0));
  std::vector<long> cur(t->phi, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    t->red[k] = cur;
    // multiply by zeta and reduce
    long top = cur[t->phi - 1];
    for (int i = t->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < t->phi; ++i) cur[i] -= top * phi_poly[i];
  }
  auto& ref = *t;
  cache.emplace(n, std::move(t));
  return ref;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

int euler_phi(int n) {
  int r = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<long>& cyclotomic_poly(int n) {
  static std::map<int, std::vector<long>> cache;
  static std::recursive_mutex m;
  std::lock_guard<std::recursive_mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divexact(p, cyclotomic_poly(d));
  return cache.emplace(n, p).first->second;
}

CycNum::CycNum() : order_(1), c_(1) {}

CycNum::CycNum(long n) : order_(1), c_{mpq_class(n)} {}

CycNum::CycNum(const mpq_class& q) : order_(1), c_{q} {}

CycNum::CycNum(int order, std::vector<mpq_class> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1 || static_cast<int>(c_.size()) != euler_phi(order))
    throw Error(ErrorKind::OrderMismatch, "coefficient vector does not match phi(order)");
}

CycNum CycNum::root_of_unity(int n, long k) {
  if (n < 1) throw Error(ErrorKind::OrderMismatch, "root_of_unity needs n >= 1");
  const Table& t = table(n);
  long r = ((k % n) + n) % n;
  std::vector<mpq_class> c(t.phi);
  for (int i = 0; i < t.phi; ++i) c[i] = t.red[r][i];
  return CycNum(n, std::move(c));
}

CycNum CycNum::rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return CycNum(q);
}

bool CycNum::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycNum::is_one() const { return is_rational() && c_[0] == 1; }

mpq_class CycNum::rational_value() const { return c_[0]; }

CycNum CycNum::lifted(int l) const {
  if (l == order_) return *this;
  if (l % order_ != 0) throw Error(ErrorKind::OrderMismatch, "lift target not a multiple of order");
  const Table& t = table(l);
  const int step = l / order_;
  std::vector<mpq_class> out(t.phi);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& r = t.red[(i * step) % l];
    for (int j = 0; j < t.phi; ++j)
      if (r[j] != 0) out[j] += c_[i] * r[j];
  }
  return CycNum(l, std::move(out));
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.order_ != order_) {
    int l = lcm_int(order_, o.order_);
    *this = lifted(l);
    return *this += o.lifted(l);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (o.order_ != order_) {
    int l = lcm_int(order_, o.order_);
    *this = lifted(l);
    return *this -= o.lifted(l);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.order_ != order_) {
    int l = lcm_int(order_, o.order_);
    *this = lifted(l);
    return *this *= o.lifted(l);
  }
  const int phi = static_cast<int>(c_.size());
  if (phi == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  const Table& t = table(order_);
  std::vector<mpq_class> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  std::vector<mpq_class> out(prod.begin(), prod.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& r = t.red[k % order_];
    for (int j = 0; j < phi; ++j)
      if (r[j] != 0) out[j] += prod[k] * r[j];
  }
  c_ = std::move(out);
  return *this;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const int phi = static_cast<int>(c_.size());
  if (phi == 1) return CycNum(order_, {1 / c_[0]});
  // Solve (multiplication-by-this matrix) * v = e_0 by exact elimination.
  std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    CycNum col = *this * CycNum::root_of_unity(order_, j);
    for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
  }
  m[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int p = c;
    while (p < phi && m[p][c] == 0) ++p;
    if (p == phi) throw Error(ErrorKind::DivisionByZero, "singular multiplication matrix");
    std::swap(m[p], m[c]);
    mpq_class piv = m[c][c];
    for (int j = c; j <= phi; ++j) m[c][j] /= piv;
    for (int r = 0; r < phi; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int j = c; j <= phi; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<mpq_class> out(phi);
  for (int i = 0; i < phi; ++i) out[i] = m[i][phi];
  return CycNum(order_, std::move(out));
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  int l = lcm_int(a.order_, b.order_);
  return a.lifted(l).c_ == b.lifted(l).c_;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const mpq_class& q = c_[i];
    if (q == 0) continue;
    mpq_class a = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << order_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.str(); }

}  // namespace ppm
