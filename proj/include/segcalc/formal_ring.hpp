#pragma once

// Free graded commutative bigebra on segment-type atoms.
//
// Elements are integer combinations of monomials; a monomial is a sorted
// multiset of atoms and the empty monomial is the unit. Product is the free
// commutative one. The coproduct is defined on atoms and extended
// multiplicatively:
//
//   Z(c, n) -> sum_{k=0}^{n} Z(c, k) (x) Z(c + k*step, n - k)
//   z(c, n) -> sum_{k=0}^{n} z(c, k) (x) z(c, n - k)
//   C(c)    -> C(c) (x) 1 + 1 (x) C(c)
//
// with Z(., 0) = z(., 0) = 1. Exponents count powers of the unramified
// character nu; `step` is the exponent of nu_sigma = nu^step and `modulus`
// the period of the twist orbit (0 for an infinite orbit). Exponents and the
// step are stored reduced mod the modulus.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "segcalc/arith.hpp"
#include "segcalc/multisegment.hpp"

namespace segcalc {

enum class AtomKind { Cusp, Zseg, Zfin, StFin, StPadic };

struct AtomContext {
  std::string base = "sigma";
  Int base_degree = 1;
  Int modulus = 0;  // 0 = infinite orbit
  Int step = 1;

  friend bool operator==(const AtomContext&, const AtomContext&) = default;
};

class Atom {
 public:
  static Atom cusp(Int exp, AtomContext ctx = {});
  static Atom zseg(Int exp, Int len, AtomContext ctx = {});
  static Atom zfin(Int exp, Int len, AtomContext ctx = {});
  static Atom st_fin(Int exp, Partition shape, AtomContext ctx = {});
  static Atom st_padic(Int exp, Partition shape, AtomContext ctx = {});

  AtomKind kind() const noexcept { return kind_; }
  const std::string& base() const noexcept { return base_; }
  Int base_degree() const noexcept { return base_degree_; }
  Int modulus() const noexcept { return modulus_; }
  Int step() const noexcept { return step_; }
  Int exp() const noexcept { return exp_; }
  Int len() const noexcept { return len_; }
  const Partition& shape() const noexcept { return shape_; }
  AtomContext context() const { return {base_, base_degree_, modulus_, step_}; }

  /// Grading degree: base degree times the length (or |shape|).
  Int degree() const noexcept;

  /// Twist by nu^j.
  Atom shifted(Int j) const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& x, const Atom& y);

 private:
  Atom(AtomKind kind, Int exp, Int len, Partition shape, AtomContext ctx);

  AtomKind kind_ = AtomKind::Cusp;
  std::string base_;
  Int base_degree_ = 1;
  Int modulus_ = 0;
  Int step_ = 1;
  Int exp_ = 0;
  Int len_ = 1;
  Partition shape_;
};

/// Reduce an exponent modulo a modulus (0 = no reduction).
Int reduce_exp(Int exp, Int modulus);

using Monomial = std::vector<Atom>;  // sorted; empty = unit

Monomial make_monomial(std::vector<Atom> atoms);
Monomial multiply(const Monomial& x, const Monomial& y);
Int degree(const Monomial& m);

class RingElement {
 public:
  using Terms = std::map<Monomial, Int>;

  RingElement() = default;  // zero
  explicit RingElement(const Atom& atom);
  static RingElement unit();
  static RingElement constant(Int c);
  static RingElement from_monomial(Monomial m, Int coef = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Monomial& m, Int coef);

  /// Degree shared by all terms; nullopt for zero or mixed degrees.
  std::optional<Int> homogeneous_degree() const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator-(const RingElement& x);
  friend RingElement operator*(const RingElement& x, const RingElement& y);
  friend RingElement operator*(Int c, const RingElement& x);

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  Terms terms_;
};

/// Element of the r-fold tensor power, r = arity.
class Tensor {
 public:
  using Key = std::vector<Monomial>;
  using Terms = std::map<Key, Int>;

  explicit Tensor(std::size_t arity) : arity_(arity) {}
  /// x_1 (x) x_2 (x) ... (x) x_r.
  static Tensor pure(const std::vector<RingElement>& factors);

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Key& key, Int coef);
  Int coefficient(const Key& key) const;

  Tensor& operator+=(const Tensor& other);
  friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
  /// Slotwise product (a (x) b)(c (x) d) = ac (x) bd.
  friend Tensor operator*(const Tensor& x, const Tensor& y);
  friend bool operator==(const Tensor&, const Tensor&) = default;

  /// Apply the coproduct to one slot, raising the arity by one.
  Tensor apply_coproduct(std::size_t slot) const;
  /// Twist every slot.
  Tensor twisted(Int j) const;

 private:
  std::size_t arity_;
  Terms terms_;
};

RingElement product(const RingElement& x, const RingElement& y);

Tensor coproduct(const Atom& atom);
Tensor coproduct(const Monomial& m);
Tensor coproduct(const RingElement& x);

/// Degree-(k, n-k) component of the coproduct of a homogeneous element.
Tensor restrict(const RingElement& x, Int k);
/// Successive cuts: restrict, then restrict the last slot again, ...
Tensor restrict_chain(const RingElement& x, const std::vector<Int>& cuts);

/// Multiset of exponent sequences, with multiplicities.
using ChainMultiset = std::map<std::vector<Int>, Int>;

/// Fully iterated restriction into base-degree pieces.
ChainMultiset cusp_chain(const RingElement& x);

RingElement twist(const RingElement& x, Int j);
Monomial twist(const Monomial& m, Int j);

Int multiplicity(const RingElement& x, const Monomial& t);

/// [a, n] (x) sigma -> Z(a*step, n) on the given cuspidal atom.
std::vector<Atom> pair_with_cuspidal(const Multisegment& mu, const AtomContext& sigma);
/// Product of the paired segment atoms.
RingElement induced_product(const Multisegment& mu, const AtomContext& sigma);

// Text and JSON.
std::string format(const Atom& a);
std::string format(const Monomial& m);
std::string format(const RingElement& x);
std::string format(const Tensor& t);
std::string format(const ChainMultiset& c);
RingElement parse_ring_element(std::string_view text);
Atom parse_atom(std::string_view text);

nlohmann::json to_json(const Atom& a);
nlohmann::json to_json(const RingElement& x);
nlohmann::json to_json(const Tensor& t);

}  // namespace segcalc
