#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "segcalc/formal_ring.hpp"
#include "segcalc/multisegment.hpp"

namespace segcalc {

/// Outcome of one verification case, serialised as one JSON line.
struct CheckResult {
  std::string check;
  nlohmann::json params;
  bool pass = true;
  std::optional<std::string> witness;

  nlohmann::json to_json() const;
};

// ------------------------------------------------- composition sums

/// Distinct finite cuspidal bases tau_1, ..., tau_b of degree 1.
std::vector<AtomContext> finite_bases(Int b);

/// z(alpha) = z(tau_1, n_1) x ... x z(tau_b, n_b), with z(., 0) = 1.
RingElement z_of(const Composition& alpha, const std::vector<AtomContext>& bases);

/// Sum of z(alpha) over compositions alpha of n into b parts.
RingElement lemma64_rhs(Int b, Int n);

/// Sum over (alpha, beta), alpha a composition of k and beta of n - k, of
/// z(alpha) (x) z(beta).
Tensor split_composition_sum(Int b, Int n, Int k);

struct MackeyResult {
  bool equal = false;
  std::size_t coproduct_terms = 0;
  std::size_t rearranged_terms = 0;
  std::optional<std::string> witness;
};

/// Restriction of lemma64_rhs(b, n) at cut k computed through the coproduct
/// and through the split composition sum.
MackeyResult check_mackey_rearrangement(Int b, Int n, Int k);

// ------------------------------------------------- Jacquet chains

struct Conjecture77Result {
  bool consistent = false;
  ChainMultiset rhs_chains;
  ChainMultiset lhs_chains;
  std::optional<std::string> witness;
};

/// Throws DomainError on parameters that cannot come from a reduction:
/// eps must divide ell - 1 and, when a > 1, equal the prime-to-ell part of a.
void check_conjecture77_params(Int a, Int n, Int s_tilde, Int eps, Int ell);

/// Conjectured reduction sum_alpha Z(sigma, n_0) x ... x Z(sigma nu^(a-1), n_(a-1)).
RingElement conjecture77_rhs(Int a, Int n, Int s_tilde, Int eps);

/// Termwise reduction of sigma~ (x) sigma~ nu_sigma~ (x) ... as chains mod eps.
ChainMultiset conjecture77_lhs(Int a, Int n, Int s_tilde, Int eps);

Conjecture77Result check_conjecture77(Int a, Int n, Int s_tilde, Int eps, Int ell);

// ------------------------------------------------- residue counting

/// True when gcd(e', s') divides delta and e'/gcd(e', s') is the
/// prime-to-ell part of k for some prime ell (or for `ell` when given).
bool y_count_admissible(Int e_prime, Int s_prime, Int k, Int delta, std::optional<Int> ell = std::nullopt);

/// |{t in [0, k) : e' | delta + t s'}|, by enumeration. Throws DomainError
/// when the tuple is not admissible.
Int y_count(Int e_prime, Int s_prime, Int k, Int delta, std::optional<Int> ell = std::nullopt);

/// k' = k * gcd(e', s') / e'.
Int y_count_expected(Int e_prime, Int s_prime, Int k);

// ------------------------------------------------- unitriangular systems

/// Integer matrix indexed by partitions of one n, with unit diagonal and
/// entry (mu, nu) nonzero only when nu is dominated by mu.
class UniTriMatrix {
 public:
  /// Throws DomainError when the invariants fail.
  UniTriMatrix(std::vector<Partition> index, std::vector<std::vector<Int>> entries);
  static UniTriMatrix identity(std::vector<Partition> index);

  const std::vector<Partition>& index() const noexcept { return index_; }
  const std::vector<std::vector<Int>>& entries() const noexcept { return entries_; }
  Int at(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  std::size_t size() const noexcept { return index_.size(); }
  /// Row/column positions in a linear extension of dominance.
  const std::vector<std::size_t>& elimination_order() const noexcept { return order_; }

  std::vector<Int> apply(const std::vector<Int>& d) const;
  UniTriMatrix operator*(const UniTriMatrix& other) const;
  friend bool operator==(const UniTriMatrix& x, const UniTriMatrix& y) {
    return x.index_ == y.index_ && x.entries_ == y.entries_;
  }

 private:
  std::vector<Partition> index_;
  std::vector<std::vector<Int>> entries_;
  std::vector<std::size_t> order_;
};

/// Validates the invariants of a raw matrix without throwing.
bool is_unitriangular(const std::vector<Partition>& index, const std::vector<std::vector<Int>>& entries);

/// Replays the minimal-mu argument: if E x = 0, the dominance-minimal mu with
/// x(mu) != 0 would satisfy x(mu) = 0. Returns true when every step holds.
bool unitriangular_kernel_trivial(const UniTriMatrix& e);

/// Unique integer d with E d = rhs, by substitution along a linear extension.
std::vector<Int> unitriangular_solve(const UniTriMatrix& e, const std::vector<Int>& rhs);

UniTriMatrix unitriangular_inverse(const UniTriMatrix& m);

/// Random unitriangular matrix on the partitions of n; off-diagonal entries
/// on dominated pairs are drawn from [-bound, bound].
UniTriMatrix random_unitriangular(Int n, std::mt19937_64& rng, Int bound = 3);

// ------------------------------------------------- twist symmetry

struct TwistSymmetryResult {
  bool invariant = false;
  bool multiplicities_match = false;
  std::optional<std::string> witness;
};

/// Whether twist(x, j) = x, together with the termwise multiplicity
/// comparison [x : t] = [x : twist(t, j)].
TwistSymmetryResult twist_multiplicity_symmetry(const RingElement& x, Int j);

/// Sum over compositions alpha of n into `modulus` parts of
/// Z(0, n_0) x Z(1, n_1) x ... on mod-ell atoms with the given modulus.
RingElement residue_orbit_sum(Int modulus, Int n);

}  // namespace segcalc
