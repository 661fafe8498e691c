#include "segcalc/formal_ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

#include "segcalc/errors.hpp"
#include "segcalc/keyvalue.hpp"

namespace segcalc {

namespace {

Int checked_add(Int x, Int y) {
  Int out;
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("coefficient overflow");
  return out;
}

Int checked_mul(Int x, Int y) {
  Int out;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("coefficient overflow");
  return out;
}

}  // namespace

Int reduce_exp(Int exp, Int modulus) {
  if (modulus <= 0) return exp;
  Int r = exp % modulus;
  return r < 0 ? r + modulus : r;
}

// ---------------------------------------------------------------- atoms

Atom::Atom(AtomKind kind, Int exp, Int len, Partition shape, AtomContext ctx)
    : kind_(kind),
      base_(std::move(ctx.base)),
      base_degree_(ctx.base_degree),
      modulus_(ctx.modulus),
      step_(reduce_exp(ctx.step, ctx.modulus)),
      exp_(reduce_exp(exp, ctx.modulus)),
      len_(len),
      shape_(std::move(shape)) {
  if (base_.empty()) throw DomainError("atom base label must be nonempty");
  for (char c : base_) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      throw DomainError("atom base label must be alphanumeric: '" + base_ + "'");
    }
  }
  if (base_degree_ < 1) throw DomainError("atom base degree must be >= 1");
  if (modulus_ < 0) throw DomainError("atom modulus must be >= 0");
  if (len_ < 1) throw DomainError("atom length must be >= 1");
}

Atom Atom::cusp(Int exp, AtomContext ctx) { return Atom(AtomKind::Cusp, exp, 1, Partition{}, std::move(ctx)); }

Atom Atom::zseg(Int exp, Int len, AtomContext ctx) {
  return Atom(AtomKind::Zseg, exp, len, Partition{}, std::move(ctx));
}

Atom Atom::zfin(Int exp, Int len, AtomContext ctx) {
  return Atom(AtomKind::Zfin, exp, len, Partition{}, std::move(ctx));
}

Atom Atom::st_fin(Int exp, Partition shape, AtomContext ctx) {
  const Int w = shape.weight();
  if (w < 1) throw DomainError("St shape must be a nonempty partition");
  return Atom(AtomKind::StFin, exp, w, std::move(shape), std::move(ctx));
}

Atom Atom::st_padic(Int exp, Partition shape, AtomContext ctx) {
  const Int w = shape.weight();
  if (w < 1) throw DomainError("St shape must be a nonempty partition");
  return Atom(AtomKind::StPadic, exp, w, std::move(shape), std::move(ctx));
}

Int Atom::degree() const noexcept { return base_degree_ * len_; }

Atom Atom::shifted(Int j) const {
  Atom out = *this;
  out.exp_ = reduce_exp(exp_ + j, modulus_);
  return out;
}

std::strong_ordering operator<=>(const Atom& x, const Atom& y) {
  if (auto c = static_cast<int>(x.kind_) <=> static_cast<int>(y.kind_); c != 0) return c;
  if (auto c = x.base_.compare(y.base_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = x.base_degree_ <=> y.base_degree_; c != 0) return c;
  if (auto c = x.modulus_ <=> y.modulus_; c != 0) return c;
  if (auto c = x.step_ <=> y.step_; c != 0) return c;
  if (auto c = x.exp_ <=> y.exp_; c != 0) return c;
  if (auto c = x.len_ <=> y.len_; c != 0) return c;
  return x.shape_.parts() <=> y.shape_.parts();
}

// ------------------------------------------------------------ monomials

Monomial make_monomial(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

Monomial multiply(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

Int degree(const Monomial& m) {
  Int d = 0;
  for (const auto& a : m) d += a.degree();
  return d;
}

// -------------------------------------------------------- ring elements

RingElement::RingElement(const Atom& atom) { terms_.emplace(Monomial{atom}, 1); }

RingElement RingElement::unit() { return constant(1); }

RingElement RingElement::constant(Int c) {
  RingElement out;
  out.add_term(Monomial{}, c);
  return out;
}

RingElement RingElement::from_monomial(Monomial m, Int coef) {
  RingElement out;
  out.add_term(make_monomial(std::move(m)), coef);
  return out;
}

void RingElement::add_term(const Monomial& m, Int coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second = checked_add(it->second, coef);
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Int> RingElement::homogeneous_degree() const {
  std::optional<Int> d;
  for (const auto& [m, c] : terms_) {
    const Int dm = degree(m);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

RingElement operator-(const RingElement& x) { return RingElement{} - x; }

RingElement operator*(const RingElement& x, const RingElement& y) {
  RingElement out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) out.add_term(multiply(mx, my), checked_mul(cx, cy));
  }
  return out;
}

RingElement operator*(Int c, const RingElement& x) { return RingElement::constant(c) * x; }

RingElement product(const RingElement& x, const RingElement& y) { return x * y; }

// -------------------------------------------------------------- tensors

Tensor Tensor::pure(const std::vector<RingElement>& factors) {
  Tensor out(factors.size());
  out.add_term(Key(factors.size()), 1);
  for (std::size_t slot = 0; slot < factors.size(); ++slot) {
    Tensor next(factors.size());
    for (const auto& [key, c] : out.terms_) {
      for (const auto& [m, cm] : factors[slot].terms()) {
        Key k = key;
        k[slot] = m;
        next.add_term(k, checked_mul(c, cm));
      }
    }
    out = std::move(next);
  }
  return out;
}

void Tensor::add_term(const Key& key, Int coef) {
  if (key.size() != arity_) throw DomainError("tensor key arity mismatch");
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coef);
  if (!inserted) {
    it->second = checked_add(it->second, coef);
    if (it->second == 0) terms_.erase(it);
  }
}

Int Tensor::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (other.arity_ != arity_) throw DomainError("tensor arity mismatch in sum");
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

Tensor operator*(const Tensor& x, const Tensor& y) {
  if (x.arity_ != y.arity_) throw DomainError("tensor arity mismatch in product");
  Tensor out(x.arity_);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      Tensor::Key k(x.arity_);
      for (std::size_t i = 0; i < x.arity_; ++i) k[i] = multiply(kx[i], ky[i]);
      out.add_term(k, checked_mul(cx, cy));
    }
  }
  return out;
}

Tensor Tensor::apply_coproduct(std::size_t slot) const {
  if (slot >= arity_) throw DomainError("apply_coproduct: slot out of range");
  Tensor out(arity_ + 1);
  for (const auto& [key, c] : terms_) {
    const Tensor split = coproduct(key[slot]);
    for (const auto& [pair, cs] : split.terms()) {
      Key k;
      k.reserve(arity_ + 1);
      k.insert(k.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
      k.push_back(pair[0]);
      k.push_back(pair[1]);
      k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
      out.add_term(k, checked_mul(c, cs));
    }
  }
  return out;
}

Tensor Tensor::twisted(Int j) const {
  Tensor out(arity_);
  for (const auto& [key, c] : terms_) {
    Key k;
    for (const auto& m : key) k.push_back(twist(m, j));
    out.add_term(k, c);
  }
  return out;
}

// ------------------------------------------------------------ coproduct

Tensor coproduct(const Atom& atom) {
  Tensor out(2);
  const AtomContext ctx = atom.context();
  switch (atom.kind()) {
    case AtomKind::Cusp:
      out.add_term({Monomial{atom}, Monomial{}}, 1);
      out.add_term({Monomial{}, Monomial{atom}}, 1);
      return out;
    case AtomKind::Zseg:
    case AtomKind::Zfin: {
      const Int n = atom.len();
      const bool seg = atom.kind() == AtomKind::Zseg;
      for (Int k = 0; k <= n; ++k) {
        Monomial left;
        Monomial right;
        if (k > 0) left.push_back(seg ? Atom::zseg(atom.exp(), k, ctx) : Atom::zfin(atom.exp(), k, ctx));
        if (k < n) {
          const Int right_exp = seg ? atom.exp() + k * atom.step() : atom.exp();
          right.push_back(seg ? Atom::zseg(right_exp, n - k, ctx) : Atom::zfin(right_exp, n - k, ctx));
        }
        out.add_term({left, right}, 1);
      }
      return out;
    }
    case AtomKind::StFin:
    case AtomKind::StPadic:
      break;
  }
  throw NotImplementedError("coproduct of St atoms is not modelled: " + format(atom));
}

Tensor coproduct(const Monomial& m) {
  Tensor out(2);
  out.add_term({Monomial{}, Monomial{}}, 1);
  for (const auto& atom : m) out = out * coproduct(atom);
  return out;
}

Tensor coproduct(const RingElement& x) {
  Tensor out(2);
  for (const auto& [m, c] : x.terms()) {
    const Tensor dm = coproduct(m);
    for (const auto& [k, ck] : dm.terms()) out.add_term(k, checked_mul(c, ck));
  }
  return out;
}

Tensor restrict(const RingElement& x, Int k) {
  Tensor out(2);
  if (x.is_zero()) return out;
  auto n = x.homogeneous_degree();
  if (!n) throw DomainError("restrict: element is not homogeneous");
  if (k < 0 || k > *n) throw DomainError("restrict: cut " + std::to_string(k) + " outside [0, " + std::to_string(*n) + "]");
  for (const auto& [m, c] : x.terms()) {
    const Tensor dm = coproduct(m);
    for (const auto& [key, ck] : dm.terms()) {
      if (degree(key[0]) == k) out.add_term(key, checked_mul(c, ck));
    }
  }
  return out;
}

Tensor restrict_chain(const RingElement& x, const std::vector<Int>& cuts) {
  Tensor current(1);
  for (const auto& [m, c] : x.terms()) current.add_term({m}, c);
  for (Int cut : cuts) {
    Tensor next(current.arity() + 1);
    for (const auto& [key, c] : current.terms()) {
      const Tensor piece = restrict(RingElement::from_monomial(key.back(), 1), cut);
      for (const auto& [pair, cp] : piece.terms()) {
        Tensor::Key k(key.begin(), key.end() - 1);
        k.push_back(pair[0]);
        k.push_back(pair[1]);
        next.add_term(k, checked_mul(c, cp));
      }
    }
    current = std::move(next);
  }
  return current;
}

// ----------------------------------------------------------- cusp chains

namespace {

class ChainBuilder {
 public:
  explicit ChainBuilder(Int base_degree) : base_degree_(base_degree) {}

  const ChainMultiset& chains(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    ChainMultiset out;
    if (m.empty()) {
      out.emplace(std::vector<Int>{}, 1);
    } else {
      const Tensor split = restrict(RingElement::from_monomial(m, 1), base_degree_);
      for (const auto& [pair, c] : split.terms()) {
        if (pair[0].size() != 1) throw DomainError("cusp_chain: base-degree piece is not a single atom");
        const Int head = pair[0].front().exp();
        const ChainMultiset& tails = chains(pair[1]);
        for (const auto& [tail, ct] : tails) {
          std::vector<Int> seq;
          seq.reserve(tail.size() + 1);
          seq.push_back(head);
          seq.insert(seq.end(), tail.begin(), tail.end());
          Int& slot = out[seq];
          slot = checked_add(slot, checked_mul(c, ct));
        }
      }
      std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    }
    return memo_.emplace(m, std::move(out)).first->second;
  }

 private:
  Int base_degree_;
  std::map<Monomial, ChainMultiset> memo_;
};

}  // namespace

ChainMultiset cusp_chain(const RingElement& x) {
  ChainMultiset out;
  if (x.is_zero()) return out;
  if (!x.homogeneous_degree()) throw DomainError("cusp_chain: element is not homogeneous");
  const Atom* first = nullptr;
  for (const auto& [m, c] : x.terms()) {
    for (const auto& a : m) {
      if (!first) first = &a;
      if (a.base() != first->base() || a.base_degree() != first->base_degree()) {
        throw DomainError("cusp_chain: mixed bases " + first->base() + " and " + a.base());
      }
    }
  }
  const Int base_degree = first ? first->base_degree() : 1;
  ChainBuilder builder(base_degree);
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [seq, cs] : builder.chains(m)) {
      Int& slot = out[seq];
      slot = checked_add(slot, checked_mul(c, cs));
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// ---------------------------------------------------------------- twist

Monomial twist(const Monomial& m, Int j) {
  std::vector<Atom> atoms;
  atoms.reserve(m.size());
  for (const auto& a : m) atoms.push_back(a.shifted(j));
  return make_monomial(std::move(atoms));
}

RingElement twist(const RingElement& x, Int j) {
  RingElement out;
  for (const auto& [m, c] : x.terms()) out.add_term(twist(m, j), c);
  return out;
}

Int multiplicity(const RingElement& x, const Monomial& t) {
  auto it = x.terms().find(make_monomial(t));
  return it == x.terms().end() ? 0 : it->second;
}

std::vector<Atom> pair_with_cuspidal(const Multisegment& mu, const AtomContext& sigma) {
  std::vector<Atom> out;
  for (const auto& s : mu.segments()) out.push_back(Atom::zseg(s.start * sigma.step, s.len, sigma));
  return out;
}

RingElement induced_product(const Multisegment& mu, const AtomContext& sigma) {
  return RingElement::from_monomial(pair_with_cuspidal(mu, sigma), 1);
}

// ----------------------------------------------------------------- text

namespace {

const char* kind_tag(AtomKind k) {
  switch (k) {
    case AtomKind::Cusp: return "C";
    case AtomKind::Zseg: return "Z";
    case AtomKind::Zfin: return "z";
    case AtomKind::StFin: return "st";
    case AtomKind::StPadic: return "St";
  }
  return "?";
}

constexpr const char* kMiddleDot = "·";
constexpr const char* kTimes = "×";
constexpr const char* kOtimes = " ⊗ ";

}  // namespace

std::string format(const Atom& a) {
  std::string out = kind_tag(a.kind());
  out += "(" + std::to_string(a.exp());
  switch (a.kind()) {
    case AtomKind::Cusp: break;
    case AtomKind::Zseg:
    case AtomKind::Zfin: out += "," + std::to_string(a.len()); break;
    case AtomKind::StFin:
    case AtomKind::StPadic: {
      out += ";";
      const auto& parts = a.shape().parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
      }
      break;
    }
  }
  out += ")";
  const AtomContext defaults;
  std::vector<std::string> attrs;
  if (a.base() != defaults.base) attrs.push_back("b=" + a.base());
  if (a.base_degree() != defaults.base_degree) attrs.push_back("d=" + std::to_string(a.base_degree()));
  if (a.modulus() != defaults.modulus) attrs.push_back("m=" + std::to_string(a.modulus()));
  if (a.step() != reduce_exp(defaults.step, a.modulus())) attrs.push_back("s=" + std::to_string(a.step()));
  if (!attrs.empty()) {
    out += "{";
    for (std::size_t i = 0; i < attrs.size(); ++i) {
      if (i) out += ",";
      out += attrs[i];
    }
    out += "}";
  }
  return out;
}

std::string format(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += kTimes;
    out += format(m[i]);
  }
  return out;
}

namespace {

template <typename Range, typename Body>
std::string format_signed_sum(const Range& terms, Body body) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    out += body(key, mag);
  }
  return out;
}

}  // namespace

std::string format(const RingElement& x) {
  return format_signed_sum(x.terms(), [](const Monomial& m, Int mag) {
    if (m.empty()) return std::to_string(mag);
    return mag == 1 ? format(m) : std::to_string(mag) + kMiddleDot + format(m);
  });
}

std::string format(const Tensor& t) {
  return format_signed_sum(t.terms(), [](const Tensor::Key& key, Int mag) {
    std::string body;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) body += kOtimes;
      body += format(key[i]);
    }
    return mag == 1 ? body : std::to_string(mag) + kMiddleDot + "(" + body + ")";
  });
}

std::string format(const ChainMultiset& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& [seq, mult] : c) {
    if (!first) out += ", ";
    first = false;
    if (mult != 1) out += std::to_string(mult) + kMiddleDot;
    out += format_composition(seq);
  }
  return out + "}";
}

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  RingElement parse_element() {
    skip_ws();
    RingElement out;
    if (at_end()) throw error("empty element");
    Int sign = 1;
    if (consume("-")) sign = -1;
    else consume("+");
    while (true) {
      auto [m, c] = parse_term();
      out.add_term(m, sign * c);
      skip_ws();
      if (at_end()) break;
      if (consume("+")) sign = 1;
      else if (consume("-")) sign = -1;
      else throw error("expected '+' or '-'");
    }
    return out;
  }

  Atom parse_single_atom() {
    skip_ws();
    Atom a = parse_atom_here();
    skip_ws();
    if (!at_end()) throw error("trailing text after atom");
    return a;
  }

 private:
  std::pair<Monomial, Int> parse_term() {
    skip_ws();
    Int coef = 1;
    if (peek_digit()) {
      coef = parse_integer();
      skip_ws();
      if (consume(kMiddleDot) || consume("*")) {
        skip_ws();
      } else {
        return {Monomial{}, coef};
      }
    }
    if (consume("1")) return {Monomial{}, coef};
    std::vector<Atom> atoms;
    atoms.push_back(parse_atom_here());
    while (true) {
      skip_ws();
      if (consume(kTimes) || consume("*")) {
        skip_ws();
        atoms.push_back(parse_atom_here());
      } else {
        break;
      }
    }
    return {make_monomial(std::move(atoms)), coef};
  }

  Atom parse_atom_here() {
    AtomKind kind;
    if (consume("St(")) kind = AtomKind::StPadic;
    else if (consume("st(")) kind = AtomKind::StFin;
    else if (consume("C(")) kind = AtomKind::Cusp;
    else if (consume("Z(")) kind = AtomKind::Zseg;
    else if (consume("z(")) kind = AtomKind::Zfin;
    else throw error("expected an atom");
    const Int exp = parse_signed();
    Int len = 1;
    std::vector<Int> shape;
    if (kind == AtomKind::Zseg || kind == AtomKind::Zfin) {
      expect(",");
      len = parse_signed();
    } else if (kind == AtomKind::StFin || kind == AtomKind::StPadic) {
      expect(";");
      shape.push_back(parse_signed());
      while (consume(",")) shape.push_back(parse_signed());
    }
    expect(")");
    AtomContext ctx;
    if (consume("{")) {
      while (true) {
        const std::size_t start = pos_;
        while (!at_end() && text_[pos_] != ',' && text_[pos_] != '}') ++pos_;
        const std::string_view attr = text_.substr(start, pos_ - start);
        if (attr.size() < 3 || attr[1] != '=') throw error("bad atom attribute");
        const std::string_view value = attr.substr(2);
        switch (attr[0]) {
          case 'b': ctx.base = std::string(value); break;
          case 'd': ctx.base_degree = parse_int(value); break;
          case 'm': ctx.modulus = parse_int(value); break;
          case 's': ctx.step = parse_int(value); break;
          default: throw error("unknown atom attribute");
        }
        if (consume("}")) break;
        expect(",");
      }
    }
    switch (kind) {
      case AtomKind::Cusp: return Atom::cusp(exp, ctx);
      case AtomKind::Zseg: return Atom::zseg(exp, len, ctx);
      case AtomKind::Zfin: return Atom::zfin(exp, len, ctx);
      case AtomKind::StFin: return Atom::st_fin(exp, Partition(shape), ctx);
      case AtomKind::StPadic: return Atom::st_padic(exp, Partition(shape), ctx);
    }
    throw error("unreachable");
  }

  Int parse_integer() {
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    return parse_int(text_.substr(start, pos_ - start));
  }

  Int parse_signed() {
    bool neg = consume("-");
    if (!peek_digit()) throw error("expected integer");
    Int v = parse_integer();
    return neg ? -v : v;
  }

  bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      // "1" is the unit only when it is not the start of a longer integer.
      if (token == "1" && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        return false;
      }
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) throw error("expected '" + std::string(token) + "'");
  }

  ParseError error(const std::string& what) const {
    return ParseError("ring element parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                      std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_ring_element(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return RingElement{};
  return ElementParser(trimmed).parse_element();
}

Atom parse_atom(std::string_view text) { return ElementParser(text).parse_single_atom(); }

nlohmann::json to_json(const Atom& a) {
  nlohmann::json j{{"kind", kind_tag(a.kind())}, {"base", a.base()},     {"base_degree", a.base_degree()},
                   {"exp", a.exp()},             {"modulus", a.modulus()}, {"step", a.step()}};
  if (a.kind() == AtomKind::StFin || a.kind() == AtomKind::StPadic) {
    j["shape"] = a.shape().parts();
  } else {
    j["len"] = a.len();
  }
  return j;
}

nlohmann::json to_json(const RingElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : x.terms()) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : m) atoms.push_back(to_json(a));
    terms.push_back({{"coef", c}, {"monomial", format(m)}, {"atoms", atoms}});
  }
  return {{"text", format(x)}, {"terms", terms}};
}

nlohmann::json to_json(const Tensor& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : t.terms()) {
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& m : key) slots.push_back(format(m));
    terms.push_back({{"coef", c}, {"slots", slots}});
  }
  return {{"arity", t.arity()}, {"terms", terms}};
}

}  // namespace segcalc
