#include "ppm/twisted.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ppm/error.hpp"

namespace ppm {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size()))
    s.replace(p, from.size(), to);
}

struct Lin {
  long scalar = 0;
  Elem elem;
  bool has_elem = false;
};

Lin eval_expr(const std::string& text, long n, const CoverSpec& spec) {
  const FinAbGroup& G = spec.group();
  Lin out;
  out.elem = G.zero();
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw Error(ErrorKind::Parse, "unterminated tuple '" + text + "'");
    std::string body = text.substr(1, text.size() - 2);
    Elem e;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (trim(part).empty()) continue;
      e.push_back(std::stol(part));
    }
    if (static_cast<int>(e.size()) != G.rank())
      throw Error(ErrorKind::Parse, "tuple '" + text + "' has wrong length for " + G.str());
    out.elem = G.normalize(e);
    out.has_elem = true;
    return out;
  }
  size_t i = 0;
  while (i < text.size()) {
    long sign = 1;
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
    }
    size_t j = i;
    while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
    std::string term = text.substr(i, j - i);
    if (term.empty()) throw Error(ErrorKind::Parse, "empty term in '" + text + "'");
    long coef = sign;
    const Elem* sym = nullptr;
    std::stringstream ts(term);
    std::string f;
    while (std::getline(ts, f, '*')) {
      if (f == "n") {
        coef *= n;
      } else if (f == "ga" || f == "gb" || f == "gg") {
        if (sym) throw Error(ErrorKind::Parse, "product of group symbols in '" + text + "'");
        sym = &spec.end(f == "ga" ? 0 : (f == "gb" ? 1 : 2));
      } else if (!f.empty() && std::all_of(f.begin(), f.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        coef *= std::stol(f);
      } else {
        throw Error(ErrorKind::Parse, "bad factor '" + f + "' in '" + text + "'");
      }
    }
    if (sym) {
      out.elem = G.add(out.elem, G.scale(coef, *sym));
      out.has_elem = true;
    } else {
      out.scalar += coef;
    }
    i = j;
  }
  return out;
}

long eval_int(const std::string& text, long n, const CoverSpec& spec) {
  Lin l = eval_expr(text, n, spec);
  if (l.has_elem) throw Error(ErrorKind::Parse, "expected an integer, got '" + text + "'");
  return l.scalar;
}

Elem eval_elem(const std::string& text, long n, const CoverSpec& spec) {
  Lin l = eval_expr(text, n, spec);
  if (l.scalar != 0)
    throw Error(ErrorKind::Parse, "expected a group element, got '" + text + "'");
  return l.elem;
}

Elem mono_weight(const Mono& m, const CoverSpec& spec) {
  const FinAbGroup& G = spec.group();
  Elem w = G.zero();
  for (int i = 0; i < 3; ++i)
    if (m.e[i]) w = G.add(w, G.scale(m.e[i], spec.end(i)));
  return w;
}

}  // namespace

TwistedComplex::TwistedComplex(CoverSpec spec, bool polynomial, std::string name)
    : spec_(std::move(spec)), polynomial_(polynomial), name_(std::move(name)) {}

int TwistedComplex::add_generator(const std::string& name, int degree, const Elem& weight) {
  if (by_name_.count(name)) throw Error(ErrorKind::LoadAssertion, "duplicate generator " + name);
  int id = static_cast<int>(gens_.size());
  gens_.push_back({name, degree, spec_.group().normalize(weight)});
  from_.emplace_back();
  by_name_[name] = id;
  return id;
}

void TwistedComplex::add_curve(const CurveDatum& c) {
  const int ng = static_cast<int>(gens_.size());
  if (c.input < 0 || c.input >= ng || c.output < 0 || c.output >= ng)
    throw Error(ErrorKind::LoadAssertion, "curve refers to an unknown generator");
  const Generator& in = gens_[c.input];
  const Generator& out = gens_[c.output];
  if (!polynomial_ && c.mono != Mono::one())
    throw Error(ErrorKind::LoadAssertion, "monomial on a curve of a non-polynomial complex");
  if (c.mono.total(3, kMaxVars) != 0)
    throw Error(ErrorKind::LoadAssertion, "primed variable in curve monomial");
  if (out.degree + 2 * c.mono.total() != in.degree + 3)
    throw Error(ErrorKind::LoadAssertion,
                "degree mismatch on curve " + in.name + " -> " + c.mono.str() + "*" + out.name);
  const FinAbGroup& G = spec_.group();
  if (G.normalize(G.add(out.weight, mono_weight(c.mono, spec_))) != in.weight)
    throw Error(ErrorKind::LoadAssertion,
                "weight mismatch on curve " + in.name + " -> " + c.mono.str() + "*" + out.name);
  CurveDatum d = c;
  d.label = G.normalize(c.label);
  from_[c.input].push_back(static_cast<int>(curves_.size()));
  curves_.push_back(std::move(d));
}

TwistedComplex TwistedComplex::parse(const std::string& text, const CoverSpec& spec, int n_max) {
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream is(text);
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
      ++no;
      auto h = line.find('#');
      if (h != std::string::npos) line.resize(h);
      line = trim(line);
      if (!line.empty()) lines.emplace_back(no, line);
    }
  }
  std::string name;
  bool polynomial = true;
  for (const auto& [no, line] : lines) {
    auto tok = split_ws(line);
    if (tok[0] == "name" && tok.size() == 2) name = tok[1];
    if (tok[0] == "polynomial" && tok.size() == 2) {
      if (tok[1] != "yes" && tok[1] != "no")
        throw Error(ErrorKind::Parse, "line " + std::to_string(no) + ": polynomial yes|no");
      polynomial = tok[1] == "yes";
    }
  }
  TwistedComplex c(spec, polynomial, name);
  // Two passes so curves may precede the declarations they use.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& [no, raw] : lines) {
      const bool templ = raw.find("{n}") != std::string::npos;
      const long lo = templ ? 1 : 0;
      const long hi = templ ? n_max : 0;
      for (long n = lo; n <= hi; ++n) {
        std::string line = raw;
        if (templ) replace_all(line, "{n}", std::to_string(n));
        auto tok = split_ws(line);
        const std::string where = "line " + std::to_string(no) + ": ";
        if (tok[0] == "name" || tok[0] == "polynomial") continue;
        try {
          if (tok[0] == "gen") {
            if (pass != 0) continue;
            if (tok.size() != 4) throw Error(ErrorKind::Parse, "gen <name> <degree> <weight>");
            c.add_generator(tok[1], static_cast<int>(eval_int(tok[2], n, spec)),
                            eval_elem(tok[3], n, spec));
            continue;
          }
          if (pass != 1) continue;
          if (tok.size() < 5) throw Error(ErrorKind::Parse, "expected input output sign monomial label");
          CurveDatum d;
          d.input = c.gen_index(tok[0]);
          d.output = c.gen_index(tok[1]);
          if (d.input < 0 || d.output < 0)
            throw Error(ErrorKind::Parse, "unknown generator in '" + line + "'");
          d.sign = std::stol(tok[2]);
          std::string mono;
          for (size_t i = 3; i + 1 < tok.size(); ++i) mono += tok[i] + " ";
          d.mono = parse_mono(mono);
          d.label = eval_elem(tok.back(), n, spec);
          c.add_curve(d);
        } catch (const Error& e) {
          throw Error(e.kind(), where + e.detail());
        } catch (const std::logic_error&) {
          throw Error(ErrorKind::Parse, where + "bad number in '" + line + "'");
        }
      }
    }
  }
  return c;
}

std::string TwistedComplex::serialize() const {
  const FinAbGroup& G = spec_.group();
  std::ostringstream os;
  os << "# cover " << spec_.str() << "; labels in invariant-factor coordinates\n";
  if (!name_.empty()) os << "name " << name_ << "\n";
  os << "polynomial " << (polynomial_ ? "yes" : "no") << "\n";
  for (const Generator& g : gens_)
    os << "gen " << g.name << " " << g.degree << " " << G.str(g.weight) << "\n";
  for (const CurveDatum& d : curves_) {
    os << gens_[d.input].name << " " << gens_[d.output].name << " " << d.sign << " ";
    if (polynomial_)
      os << "x^" << d.mono.e[0] << " y^" << d.mono.e[1] << " z^" << d.mono.e[2];
    else
      os << "1";
    os << " " << G.str(d.label) << "\n";
  }
  return os.str();
}

int TwistedComplex::gen_index(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

std::vector<Key> TwistedComplex::slice_basis(int degree, const std::optional<Elem>& weight) const {
  std::vector<Key> out;
  for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
    const int rest = degree - gens_[g].degree;
    if (rest < 0 || rest % 2) continue;
    if (!polynomial_) {
      if (rest == 0) out.push_back({g, 0, Mono::one()});
      continue;
    }
    for (const Mono& m : monomials_of_degree(3, rest / 2)) out.push_back({g, 0, m});
  }
  if (weight) {
    const Elem w = spec_.group().normalize(*weight);
    std::erase_if(out, [&](const Key& k) { return key_weight(k) != w; });
  }
  return out;
}

int TwistedComplex::key_degree(const Key& k) const { return gens_[k.gen].degree + 2 * k.mono.total(); }

Elem TwistedComplex::key_weight(const Key& k) const {
  return spec_.group().normalize(spec_.group().add(gens_[k.gen].weight, mono_weight(k.mono, spec_)));
}

std::string TwistedComplex::key_label(const Key& k) const {
  if (k.mono == Mono::one()) return gens_[k.gen].name;
  return k.mono.str() + "*" + gens_[k.gen].name;
}

Key TwistedComplex::key(const std::string& gen, const Mono& m) const {
  int g = gen_index(gen);
  if (g < 0) throw Error(ErrorKind::Parse, "unknown generator " + gen);
  return {g, 0, m};
}

SectorComplex::SectorComplex(TwistedPtr c, Character chi, std::optional<Elem> weight)
    : c_(std::move(c)), chi_(std::move(chi)), weight_(std::move(weight)) {
  if (!(chi_.group() == c_->spec().group()))
    throw Error(ErrorKind::OrderMismatch, "character of a different group");
  for (const CurveDatum& d : c_->curves()) coef_.push_back(CycNum(d.sign) * chi_(d.label));
}

std::vector<Key> SectorComplex::basis(int degree) const { return c_->slice_basis(degree, weight_); }

Chain SectorComplex::diff(const Key& k) const {
  Chain r;
  for (int ci : c_->curves_from(k.gen)) {
    const CurveDatum& d = c_->curves()[ci];
    chain_add(r, Key{d.output, 0, k.mono * d.mono}, coef_[ci]);
  }
  return r;
}

std::string SectorComplex::dump() const {
  std::ostringstream os;
  for (int g = 0; g < static_cast<int>(c_->generators().size()); ++g) {
    Key k{g, 0, Mono::one()};
    os << "d(" << label(k) << ") = " << format(diff(k)) << "\n";
  }
  return os.str();
}

SectorComplex build_sector(TwistedPtr c, const Character& chi) { return SectorComplex(std::move(c), chi); }

SectorComplex invariant_subcomplex(TwistedPtr c, const Character& chi) {
  Elem zero = c->spec().group().zero();
  return SectorComplex(std::move(c), chi, zero);
}

UpstairsComplex::UpstairsComplex(TwistedPtr c) : c_(std::move(c)), elems_(c_->spec().group().elements()) {}

std::vector<Key> UpstairsComplex::basis(int degree) const {
  std::vector<Key> out;
  for (const Key& k : c_->slice_basis(degree, c_->spec().group().zero()))
    for (int g = 0; g < static_cast<int>(elems_.size()); ++g) out.push_back({k.gen, g, k.mono});
  return out;
}

Chain UpstairsComplex::diff(const Key& k) const {
  const FinAbGroup& G = c_->spec().group();
  Chain r;
  for (int ci : c_->curves_from(k.gen)) {
    const CurveDatum& d = c_->curves()[ci];
    int h = static_cast<int>(G.index_of(G.add(elems_[k.aux], d.label)));
    chain_add(r, Key{d.output, h, k.mono * d.mono}, CycNum(d.sign));
  }
  return r;
}

Elem UpstairsComplex::weight_of(const Key& k) const { return elems_[k.aux]; }

std::string UpstairsComplex::label(const Key& k) const {
  return c_->key_label({k.gen, 0, k.mono}) + "_" + c_->spec().group().str(elems_[k.aux]);
}

Key UpstairsComplex::act(const Elem& h, const Key& k) const {
  const FinAbGroup& G = c_->spec().group();
  return {k.gen, static_cast<int>(G.index_of(G.add(elems_[k.aux], h))), k.mono};
}

Psi::Psi(TwistedPtr c) : c_(c), up_(c), chars_(enumerate_characters(c->spec().group())) {
  for (const Character& chi : chars_) sectors_.push_back(invariant_subcomplex(c_, chi));
}

Psi::SectorChain Psi::forward(const Chain& up) const {
  const CycNum inv_order = CycNum::rational(1, c_->spec().group().order());
  SectorChain out;
  for (const auto& [k, v] : up) {
    const Elem& g = up_.elements()[k.aux];
    for (int i = 0; i < static_cast<int>(chars_.size()); ++i)
      chain_add(out[i], Key{k.gen, 0, k.mono}, v * chars_[i](g) * inv_order);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

Chain Psi::inverse(const SectorChain& down) const {
  const FinAbGroup& G = c_->spec().group();
  Chain out;
  for (const auto& [i, chain] : down)
    for (const auto& [k, v] : chain)
      for (int g = 0; g < static_cast<int>(up_.elements().size()); ++g)
        chain_add(out, Key{k.gen, g, k.mono}, v * chars_[i](G.neg(up_.elements()[g])));
  return out;
}

void Psi::verify(int cutoff) const {
  const CoverSpec& spec = c_->spec();
  auto fail = [&](int d, const std::string& what, const std::string& who) {
    throw Error(ErrorKind::IntertwiningFailure,
                what + " fails at degree " + std::to_string(d) + " on " + who);
  };
  for (int d = 0; d <= cutoff; ++d) {
    for (const Key& k : up_.basis(d)) {
      const Chain unit{{k, CycNum(1)}};
      const SectorChain fk = forward(unit);
      SectorChain lhs = forward(up_.diff(k));
      SectorChain rhs;
      for (const auto& [i, ch] : fk) {
        Chain dc = sectors_[i].apply(ch);
        if (!dc.empty()) rhs[i] = std::move(dc);
      }
      if (lhs != rhs) fail(d, "Psi d = d Psi", up_.label(k));
      if (inverse(fk) != unit) fail(d, "Psi^-1 Psi = id", up_.label(k));
      for (int a = 0; a < 2; ++a) {
        const Elem& h = spec.end(a);
        SectorChain twisted;
        for (const auto& [i, ch] : fk) twisted[i] = chain_scaled(ch, chars_[i](h));
        if (forward(Chain{{up_.act(h, k), CycNum(1)}}) != twisted)
          fail(d, "G-equivariance", up_.label(k));
      }
    }
    for (int i = 0; i < static_cast<int>(chars_.size()); ++i) {
      for (const Key& a : sectors_[i].basis(d)) {
        const SectorChain unit{{i, Chain{{a, CycNum(1)}}}};
        if (forward(inverse(unit)) != unit)
          fail(d, "Psi Psi^-1 = id", sectors_[i].label(a) + " x " + chars_[i].str());
      }
    }
  }
}

LiftedCover lift_cover_and_psi(TwistedPtr c) {
  return {std::make_shared<UpstairsComplex>(c), std::make_shared<Psi>(c)};
}

SectorSum sector_sum_rule(TwistedPtr c, int cutoff) {
  SectorSum s;
  UpstairsComplex up(c);
  s.upstairs = cohomology_hilbert(up, cutoff);
  s.sector_sum.assign(s.upstairs.size(), 0);
  for (const Character& chi : enumerate_characters(c->spec().group())) {
    auto h = cohomology_hilbert(invariant_subcomplex(c, chi), cutoff);
    for (size_t d = 0; d < h.size(); ++d) s.sector_sum[d] += h[d];
    s.per_sector.push_back(std::move(h));
  }
  return s;
}

}  // namespace ppm
