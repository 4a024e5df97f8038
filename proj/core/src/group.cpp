#include "ppm/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ppm/error.hpp"

namespace ppm {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<long> parse_csv_longs(const std::string& text) {
  std::vector<long> out;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    try {
      out.push_back(std::stol(tok, &pos));
    } catch (...) {
      throw Error(ErrorKind::Parse, "bad element component '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw Error(ErrorKind::Parse, "bad element component '" + tok + "'");
  }
  return out;
}

}  // namespace

FinAbGroup FinAbGroup::from_cyclic(const std::vector<long>& orders) {
  for (long n : orders)
    if (n < 1) throw Error(ErrorKind::Parse, "cyclic factor order must be positive");
  // prime -> list of (exponent, presentation factor)
  std::map<long, std::vector<std::pair<int, size_t>>> by_prime;
  for (size_t j = 0; j < orders.size(); ++j)
    for (auto [p, e] : factorize(orders[j])) by_prime[p].push_back({e, j});
  size_t r = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end());
    r = std::max(r, v.size());
  }
  FinAbGroup g;
  g.d_.assign(r, 1);
  // slot[(p, j)] = invariant factor index holding the p-part of factor j
  std::map<std::pair<long, size_t>, std::pair<size_t, int>> slot;
  for (auto& [p, v] : by_prime) {
    size_t off = r - v.size();
    for (size_t k = 0; k < v.size(); ++k) {
      g.d_[off + k] *= ipow(p, v[k].first);
      slot[{p, v[k].second}] = {off + k, v[k].first};
    }
  }
  g.pres_orders_ = orders;
  g.pres_images_.assign(orders.size(), Elem(r, 0));
  for (auto& [key, val] : slot) {
    auto [p, j] = key;
    auto [i, e] = val;
    // The p-part of the generator of Z_{n_j} becomes an element of order p^e
    // in invariant factor i.
    long unit = g.d_[i] / ipow(p, e);
    g.pres_images_[j][i] = mod(g.pres_images_[j][i] + unit, g.d_[i]);
  }
  return g;
}

FinAbGroup FinAbGroup::parse(const std::string& token) {
  std::string t;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t == "1" || t == "0" || t == "Z1") return from_cyclic({});
  std::vector<long> orders;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'z'))
      throw Error(ErrorKind::Parse, "bad group factor '" + part + "' in '" + token + "'");
    size_t pos = 0;
    long n = 0;
    try {
      n = std::stol(part.substr(1), &pos);
    } catch (...) {
      throw Error(ErrorKind::Parse, "bad group factor '" + part + "'");
    }
    if (pos != part.size() - 1 || n < 1) throw Error(ErrorKind::Parse, "bad group factor '" + part + "'");
    if (n > 1) orders.push_back(n);
  }
  return from_cyclic(orders);
}

long FinAbGroup::order() const {
  long r = 1;
  for (long d : d_) r *= d;
  return r;
}

Elem FinAbGroup::add(const Elem& a, const Elem& b) const {
  Elem r(d_.size());
  for (size_t i = 0; i < d_.size(); ++i) r[i] = mod(a[i] + b[i], d_[i]);
  return r;
}

Elem FinAbGroup::neg(const Elem& a) const {
  Elem r(d_.size());
  for (size_t i = 0; i < d_.size(); ++i) r[i] = mod(-a[i], d_[i]);
  return r;
}

Elem FinAbGroup::scale(long k, const Elem& a) const {
  Elem r(d_.size());
  for (size_t i = 0; i < d_.size(); ++i) r[i] = mod(k % d_[i] * a[i], d_[i]);
  return r;
}

Elem FinAbGroup::normalize(const Elem& a) const {
  if (a.size() != d_.size()) throw Error(ErrorKind::Parse, "element has wrong length");
  Elem r(d_.size());
  for (size_t i = 0; i < d_.size(); ++i) r[i] = mod(a[i], d_[i]);
  return r;
}

bool FinAbGroup::is_zero(const Elem& a) const {
  for (size_t i = 0; i < d_.size(); ++i)
    if (mod(a[i], d_[i]) != 0) return false;
  return true;
}

long FinAbGroup::element_order(const Elem& a) const {
  long o = 1;
  for (size_t i = 0; i < d_.size(); ++i) o = std::lcm(o, d_[i] / std::gcd(mod(a[i], d_[i]), d_[i]));
  return o;
}

std::vector<Elem> FinAbGroup::elements() const {
  std::vector<Elem> out;
  Elem cur = zero();
  const long n = order();
  out.reserve(n);
  for (long k = 0; k < n; ++k) {
    out.push_back(cur);
    for (int i = rank() - 1; i >= 0; --i) {
      if (++cur[i] < d_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

long FinAbGroup::index_of(const Elem& a) const {
  long idx = 0;
  for (size_t i = 0; i < d_.size(); ++i) idx = idx * d_[i] + mod(a[i], d_[i]);
  return idx;
}

Elem FinAbGroup::from_presentation(const std::vector<long>& coords) const {
  if (coords.size() != pres_images_.size())
    throw Error(ErrorKind::Parse, "element needs " + std::to_string(pres_images_.size()) + " components");
  Elem r = zero();
  for (size_t j = 0; j < coords.size(); ++j) r = add(r, scale(mod(coords[j], pres_orders_[j]), pres_images_[j]));
  return r;
}

Elem FinAbGroup::parse_element(const std::string& text) const {
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) t += c;
  if (pres_images_.empty()) {
    if (t.empty() || t == "0") return zero();
    throw Error(ErrorKind::Parse, "trivial group only has the element 0");
  }
  return from_presentation(parse_csv_longs(t));
}

std::string FinAbGroup::str() const {
  if (d_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < d_.size(); ++i) s += (i ? "xZ" : "Z") + std::to_string(d_[i]);
  return s;
}

std::string FinAbGroup::str(const Elem& a) const {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(mod(a[i], d_[i]));
  return s + ")";
}

Character::Character(const FinAbGroup& g, std::vector<long> exponents) : g_(g), c_(g.normalize(exponents)) {}

bool Character::is_trivial() const { return g_.is_zero(c_); }

long Character::log(const Elem& g) const {
  const long n = g_.exponent();
  const auto& d = g_.invariant_factors();
  long k = 0;
  for (size_t i = 0; i < d.size(); ++i) k = mod(k + (c_[i] * mod(g[i], d[i])) % d[i] * (n / d[i]), n);
  return k;
}

CycNum Character::operator()(const Elem& g) const {
  return CycNum::root_of_unity(static_cast<int>(g_.exponent()), log(g));
}

Character Character::operator*(const Character& o) const { return Character(g_, g_.add(c_, o.c_)); }

Character Character::inverse() const { return Character(g_, g_.neg(c_)); }

std::string Character::str() const {
  std::string s = "chi(";
  for (size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
  return s + ")";
}

std::vector<Character> enumerate_characters(const FinAbGroup& g) {
  // Characters are indexed by exponent tuples in the same ranges as elements.
  std::vector<Character> out;
  for (const Elem& e : g.elements()) out.emplace_back(g, e);
  return out;
}

CycNum char_eval(const Character& chi, const Elem& g) { return chi(g); }

long generated_subgroup_order(const FinAbGroup& g, const std::vector<Elem>& gens) {
  std::set<Elem> seen{g.zero()};
  std::vector<Elem> frontier{g.zero()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const Elem& a : frontier)
      for (const Elem& s : gens) {
        Elem b = g.add(a, s);
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier.swap(next);
  }
  return static_cast<long>(seen.size());
}

CoverSpec::CoverSpec(FinAbGroup g, Elem g_alpha, Elem g_beta)
    : g_(std::move(g)), ga_(g_.normalize(g_alpha)), gb_(g_.normalize(g_beta)) {
  gc_ = g_.neg(g_.add(ga_, gb_));
  check();
}

CoverSpec::CoverSpec(FinAbGroup g, Elem g_alpha, Elem g_beta, Elem g_gamma)
    : g_(std::move(g)), ga_(g_.normalize(g_alpha)), gb_(g_.normalize(g_beta)), gc_(g_.normalize(g_gamma)) {
  if (!g_.is_zero(g_.add(g_.add(ga_, gb_), gc_)))
    throw Error(ErrorKind::LoadAssertion, "g_alpha + g_beta + g_gamma must vanish");
  check();
}

void CoverSpec::check() const {
  if (generated_subgroup_order(g_, {ga_, gb_}) != g_.order())
    throw Error(ErrorKind::NonSurjective, "<g_alpha, g_beta> is a proper subgroup of " + g_.str());
}

CoverSpec CoverSpec::trivial() {
  FinAbGroup g = FinAbGroup::from_cyclic({});
  return CoverSpec(g, g.zero(), g.zero());
}

CoverSpec CoverSpec::parse(const std::string& group, const std::string& ga, const std::string& gb) {
  FinAbGroup g = FinAbGroup::parse(group);
  return CoverSpec(g, g.parse_element(ga), g.parse_element(gb));
}

std::string CoverSpec::str() const {
  return g_.str() + " g_alpha=" + g_.str(ga_) + " g_beta=" + g_.str(gb_) + " g_gamma=" + g_.str(gc_);
}

CoverInvariants cover_invariants(const CoverSpec& spec) {
  const FinAbGroup& g = spec.group();
  CoverInvariants inv;
  for (int a = 0; a < 3; ++a) {
    inv.per_end[a] = g.order() / g.element_order(spec.end(a));
    inv.punctures += inv.per_end[a];
  }
  long twice = 2 + g.order() - inv.punctures;
  if (twice % 2 != 0 || twice < 0)
    throw Error(ErrorKind::ParityViolation, "Euler characteristic gives a non-integral genus");
  inv.genus = twice / 2;
  return inv;
}

}  // namespace ppm
