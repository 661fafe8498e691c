#include "segcalc/identity_suite.hpp"

#include <algorithm>
#include <numeric>

#include "segcalc/arith.hpp"
#include "segcalc/errors.hpp"

namespace segcalc {

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j{{"check", check}, {"params", params}, {"pass", pass}};
  if (witness) j["witness"] = *witness;
  return j;
}

// ------------------------------------------------- composition sums

std::vector<AtomContext> finite_bases(Int b) {
  if (b < 1) throw DomainError("need at least one finite base");
  std::vector<AtomContext> out;
  for (Int i = 1; i <= b; ++i) out.push_back(AtomContext{"tau" + std::to_string(i), 1, 0, 1});
  return out;
}

RingElement z_of(const Composition& alpha, const std::vector<AtomContext>& bases) {
  if (alpha.size() != bases.size()) throw DomainError("z_of: composition and bases differ in length");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] > 0) atoms.push_back(Atom::zfin(0, alpha[i], bases[i]));
  }
  return RingElement::from_monomial(std::move(atoms), 1);
}

RingElement lemma64_rhs(Int b, Int n) {
  const auto bases = finite_bases(b);
  RingElement out;
  for (const auto& alpha : compositions_of(n, b)) out += z_of(alpha, bases);
  return out;
}

Tensor split_composition_sum(Int b, Int n, Int k) {
  if (k < 0 || k > n) throw DomainError("split_composition_sum: cut outside [0, n]");
  const auto bases = finite_bases(b);
  Tensor out(2);
  for (const auto& alpha : compositions_of(k, b)) {
    for (const auto& beta : compositions_of(n - k, b)) {
      out += Tensor::pure({z_of(alpha, bases), z_of(beta, bases)});
    }
  }
  return out;
}

namespace {

std::optional<std::string> first_tensor_mismatch(const Tensor& x, const Tensor& y) {
  for (const auto& [key, c] : x.terms()) {
    if (y.coefficient(key) != c) {
      Tensor t(x.arity());
      t.add_term(key, 1);
      return format(t) + ": " + std::to_string(c) + " vs " + std::to_string(y.coefficient(key));
    }
  }
  for (const auto& [key, c] : y.terms()) {
    if (x.coefficient(key) != c) {
      Tensor t(y.arity());
      t.add_term(key, 1);
      return format(t) + ": " + std::to_string(x.coefficient(key)) + " vs " + std::to_string(c);
    }
  }
  return std::nullopt;
}

std::optional<std::string> first_chain_mismatch(const ChainMultiset& x, const ChainMultiset& y) {
  auto lookup = [](const ChainMultiset& m, const std::vector<Int>& key) {
    auto it = m.find(key);
    return it == m.end() ? Int{0} : it->second;
  };
  for (const auto& [seq, c] : x) {
    if (lookup(y, seq) != c) {
      return format_composition(seq) + ": " + std::to_string(c) + " vs " + std::to_string(lookup(y, seq));
    }
  }
  for (const auto& [seq, c] : y) {
    if (lookup(x, seq) != c) {
      return format_composition(seq) + ": " + std::to_string(lookup(x, seq)) + " vs " + std::to_string(c);
    }
  }
  return std::nullopt;
}

}  // namespace

MackeyResult check_mackey_rearrangement(Int b, Int n, Int k) {
  if (b < 1 || n < 1) throw DomainError("check_mackey_rearrangement: b, n must be >= 1");
  if (k < 0 || k > n) throw DomainError("check_mackey_rearrangement: cut outside [0, n]");
  const Tensor via_coproduct = restrict(lemma64_rhs(b, n), k);
  const Tensor rearranged = split_composition_sum(b, n, k);
  MackeyResult out;
  out.coproduct_terms = via_coproduct.size();
  out.rearranged_terms = rearranged.size();
  out.witness = first_tensor_mismatch(via_coproduct, rearranged);
  out.equal = !out.witness;
  return out;
}

// ------------------------------------------------- Jacquet chains

void check_conjecture77_params(Int a, Int n, Int s_tilde, Int eps, Int ell) {
  if (a < 1 || n < 1 || s_tilde < 1 || eps < 1) {
    throw DomainError("conjecture77: a, n, s_tilde, eps must be >= 1");
  }
  if (!is_prime(ell)) throw DomainError("conjecture77: ell must be prime");
  if ((ell - 1) % eps != 0) {
    throw DomainError("conjecture77: eps = " + std::to_string(eps) + " is not an order in (Z/" +
                      std::to_string(ell) + ")^x");
  }
  if (a > 1 && prime_to_ell_part(a, ell) != eps) {
    throw DomainError("conjecture77: prime-to-ell part of a = " + std::to_string(a) + " is not eps = " +
                      std::to_string(eps));
  }
}

RingElement conjecture77_rhs(Int a, Int n, Int s_tilde, Int eps) {
  // Mod-ell atoms: exponents live in Z/eps and nu_sigma = nu^(a * s_tilde).
  const AtomContext sigma{"sigma", 1, eps, a * s_tilde};
  RingElement out;
  for (const auto& alpha : compositions_of(n, a)) {
    std::vector<Atom> atoms;
    for (Int i = 0; i < a; ++i) {
      if (alpha[static_cast<std::size_t>(i)] > 0) atoms.push_back(Atom::zseg(i, alpha[static_cast<std::size_t>(i)], sigma));
    }
    out += RingElement::from_monomial(std::move(atoms), 1);
  }
  return out;
}

ChainMultiset conjecture77_lhs(Int a, Int n, Int s_tilde, Int eps) {
  // Position j carries sigma~ nu^(j s_tilde), whose reduction is
  // sum_{i < a} sigma nu^(i + j s_tilde); expand the tensor product.
  ChainMultiset out;
  out.emplace(std::vector<Int>{}, 1);
  for (Int j = 0; j < n; ++j) {
    ChainMultiset next;
    for (const auto& [seq, c] : out) {
      for (Int i = 0; i < a; ++i) {
        auto extended = seq;
        extended.push_back(reduce_exp(i + j * s_tilde, eps));
        next[extended] += c;
      }
    }
    out = std::move(next);
  }
  return out;
}

Conjecture77Result check_conjecture77(Int a, Int n, Int s_tilde, Int eps, Int ell) {
  check_conjecture77_params(a, n, s_tilde, eps, ell);
  Conjecture77Result out;
  out.rhs_chains = cusp_chain(conjecture77_rhs(a, n, s_tilde, eps));
  out.lhs_chains = conjecture77_lhs(a, n, s_tilde, eps);
  out.witness = first_chain_mismatch(out.rhs_chains, out.lhs_chains);
  out.consistent = !out.witness;
  return out;
}

// ------------------------------------------------- residue counting

bool y_count_admissible(Int e_prime, Int s_prime, Int k, Int delta, std::optional<Int> ell) {
  if (e_prime < 1 || s_prime < 1 || k < 1) return false;
  const Int e = std::gcd(e_prime, s_prime);
  if (delta % e != 0) return false;
  const Int omega = e_prime / e;
  if (ell) return is_prime(*ell) && prime_to_ell_part(k, *ell) == omega;
  if (k % omega != 0) return false;
  Int rest = k / omega;
  if (rest == 1) return true;
  // rest must be a power of a single prime p with p not dividing omega.
  Int p = 2;
  while (rest % p != 0) ++p;
  while (rest % p == 0) rest /= p;
  return rest == 1 && omega % p != 0;
}

Int y_count(Int e_prime, Int s_prime, Int k, Int delta, std::optional<Int> ell) {
  if (!y_count_admissible(e_prime, s_prime, k, delta, ell)) {
    throw DomainError("y_count: inadmissible tuple (e'=" + std::to_string(e_prime) + ", s'=" + std::to_string(s_prime) +
                      ", k=" + std::to_string(k) + ", delta=" + std::to_string(delta) + ")");
  }
  Int count = 0;
  for (Int t = 0; t < k; ++t) {
    if (reduce_exp(delta + t * s_prime, e_prime) == 0) ++count;
  }
  return count;
}

Int y_count_expected(Int e_prime, Int s_prime, Int k) {
  const Int e = std::gcd(e_prime, s_prime);
  if ((k * e) % e_prime != 0) throw DomainError("y_count_expected: e'/e does not divide k");
  return k * e / e_prime;
}

// ------------------------------------------------- unitriangular systems

namespace {

std::vector<std::size_t> linear_extension(const std::vector<Partition>& index) {
  std::vector<Partition> sorted = index;
  sort_by_dominance(sorted);
  std::vector<std::size_t> order;
  for (const auto& p : sorted) {
    auto it = std::find(index.begin(), index.end(), p);
    order.push_back(static_cast<std::size_t>(it - index.begin()));
  }
  return order;
}

void check_index(const std::vector<Partition>& index) {
  if (index.empty()) return;
  const Int n = index.front().weight();
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i].weight() != n) throw DomainError("unitriangular index mixes partitions of different n");
    for (std::size_t j = 0; j < i; ++j) {
      if (index[i] == index[j]) throw DomainError("unitriangular index repeats " + format(index[i]));
    }
  }
}

Int checked_add(Int x, Int y) {
  Int out;
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("matrix entry overflow");
  return out;
}

Int checked_mul(Int x, Int y) {
  Int out;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("matrix entry overflow");
  return out;
}

}  // namespace

bool is_unitriangular(const std::vector<Partition>& index, const std::vector<std::vector<Int>>& entries) {
  if (entries.size() != index.size()) return false;
  for (std::size_t r = 0; r < index.size(); ++r) {
    if (entries[r].size() != index.size()) return false;
    for (std::size_t c = 0; c < index.size(); ++c) {
      const Int v = entries[r][c];
      if (r == c) {
        if (v != 1) return false;
      } else if (v != 0 && !dominance_leq(index[c], index[r])) {
        return false;
      }
    }
  }
  return true;
}

UniTriMatrix::UniTriMatrix(std::vector<Partition> index, std::vector<std::vector<Int>> entries)
    : index_(std::move(index)), entries_(std::move(entries)) {
  check_index(index_);
  if (!is_unitriangular(index_, entries_)) {
    throw DomainError("matrix is not unitriangular with respect to dominance");
  }
  order_ = linear_extension(index_);
}

UniTriMatrix UniTriMatrix::identity(std::vector<Partition> index) {
  const std::size_t n = index.size();
  std::vector<std::vector<Int>> e(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  return UniTriMatrix(std::move(index), std::move(e));
}

std::vector<Int> UniTriMatrix::apply(const std::vector<Int>& d) const {
  if (d.size() != size()) throw DomainError("vector length does not match matrix");
  std::vector<Int> out(size(), 0);
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < size(); ++c) out[r] = checked_add(out[r], checked_mul(entries_[r][c], d[c]));
  }
  return out;
}

UniTriMatrix UniTriMatrix::operator*(const UniTriMatrix& other) const {
  if (other.index_ != index_) throw DomainError("matrix product over different indices");
  const std::size_t n = size();
  std::vector<std::vector<Int>> e(n, std::vector<Int>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      if (entries_[r][k] == 0) continue;
      for (std::size_t c = 0; c < n; ++c) e[r][c] = checked_add(e[r][c], checked_mul(entries_[r][k], other.entries_[k][c]));
    }
  }
  return UniTriMatrix(index_, std::move(e));
}

bool unitriangular_kernel_trivial(const UniTriMatrix& e) {
  // Walk mu upward through a linear extension. Assuming E x = 0 and x(nu) = 0
  // for every earlier nu, row mu reads e(mu, mu) x(mu) = 0, so x(mu) = 0.
  std::vector<bool> known_zero(e.size(), false);
  for (std::size_t mu : e.elimination_order()) {
    if (e.at(mu, mu) != 1) return false;
    for (std::size_t nu = 0; nu < e.size(); ++nu) {
      if (nu == mu || e.at(mu, nu) == 0) continue;
      if (!known_zero[nu] || !dominance_leq(e.index()[nu], e.index()[mu])) return false;
    }
    known_zero[mu] = true;
  }
  return std::all_of(known_zero.begin(), known_zero.end(), [](bool b) { return b; });
}

std::vector<Int> unitriangular_solve(const UniTriMatrix& e, const std::vector<Int>& rhs) {
  if (rhs.size() != e.size()) throw DomainError("unitriangular_solve: rhs length mismatch");
  std::vector<Int> d(e.size(), 0);
  for (std::size_t mu : e.elimination_order()) {
    Int acc = rhs[mu];
    for (std::size_t nu = 0; nu < e.size(); ++nu) {
      if (nu != mu && e.at(mu, nu) != 0) acc = checked_add(acc, -checked_mul(e.at(mu, nu), d[nu]));
    }
    d[mu] = acc;
  }
  return d;
}

UniTriMatrix unitriangular_inverse(const UniTriMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Int>> inv(n, std::vector<Int>(n, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Int> unit(n, 0);
    unit[col] = 1;
    const auto x = unitriangular_solve(m, unit);
    for (std::size_t row = 0; row < n; ++row) inv[row][col] = x[row];
  }
  return UniTriMatrix(m.index(), std::move(inv));
}

UniTriMatrix random_unitriangular(Int n, std::mt19937_64& rng, Int bound) {
  auto index = partitions_of(n);
  std::uniform_int_distribution<Int> dist(-bound, bound);
  const std::size_t size = index.size();
  std::vector<std::vector<Int>> e(size, std::vector<Int>(size, 0));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      if (r == c) e[r][c] = 1;
      else if (dominance_leq(index[c], index[r])) e[r][c] = dist(rng);
    }
  }
  return UniTriMatrix(std::move(index), std::move(e));
}

// ------------------------------------------------- twist symmetry

TwistSymmetryResult twist_multiplicity_symmetry(const RingElement& x, Int j) {
  TwistSymmetryResult out;
  const RingElement twisted = twist(x, j);
  out.invariant = twisted == x;
  out.multiplicities_match = true;
  for (const auto& [m, c] : x.terms()) {
    const Monomial image = twist(m, j);
    if (multiplicity(x, image) != c) {
      out.multiplicities_match = false;
      if (!out.witness) {
        out.witness = format(m) + " has multiplicity " + std::to_string(c) + " but its twist " + format(image) +
                      " has " + std::to_string(multiplicity(x, image));
      }
    }
  }
  return out;
}

RingElement residue_orbit_sum(Int modulus, Int n) {
  if (modulus < 1) throw DomainError("residue_orbit_sum: modulus must be >= 1");
  const AtomContext sigma{"sigma", 1, modulus, 0};
  RingElement out;
  for (const auto& alpha : compositions_of(n, modulus)) {
    std::vector<Atom> atoms;
    for (Int i = 0; i < modulus; ++i) {
      if (alpha[static_cast<std::size_t>(i)] > 0) atoms.push_back(Atom::zseg(i, alpha[static_cast<std::size_t>(i)], sigma));
    }
    out += RingElement::from_monomial(std::move(atoms), 1);
  }
  return out;
}

}  // namespace segcalc
