#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nchopf/combinatorics.hpp"
#include "nchopf/free_module.hpp"
#include "nchopf/pi_hopf.hpp"
#include "nchopf/sc_hopf.hpp"

namespace nchopf {

// ---------------------------------------------------------------------------
// SC* on the kappa* basis

/// Sum over k-subsets J of [k+m] of kappa*_{st_J^{-1}(mu) u st_{J^c}^{-1}(nu)}.
LabeledElement product_kappa_star(const LabeledSetPartition& mu, const LabeledSetPartition& nu, int q);

/// Sum over cuts k = 0..n of kappa*_{lambda_[k]} (x) kappa*_{lambda_[k]^c}, straightened.
/// Arcs crossing the cut are discarded.
LabeledTensor coproduct_kappa_star(const LabeledSetPartition& lambda, int q);

class KappaStarHopf : public GradedHopfAlgebra<LabeledSetPartition> {
 public:
  explicit KappaStarHopf(int q);

  LabeledSetPartition unit_key() const override { return {}; }
  int grade(const LabeledSetPartition& key) const override { return key.size(); }
  Element product_basis(const LabeledSetPartition& a, const LabeledSetPartition& b) const override {
    return product_kappa_star(a, b, q_);
  }
  Tensor coproduct_basis(const LabeledSetPartition& a) const override { return coproduct_kappa_star(a, q_); }

 private:
  int q_;
};

/// <kappa*_mu, kappa_nu> = delta, extended bilinearly.
CycRational duality_pairing(const LabeledElement& f, const LabeledElement& x);
CycRational duality_pairing(const LabeledTensor& f, const LabeledTensor& x);

// ---------------------------------------------------------------------------
// Permutations and the M basis

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation; throws InvalidInput unless `word` is a bijection of [n].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// Cycles over [n]; omitted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// Cycle notation "(31)(2)", or a plain one-line word "321"; "()" is the empty permutation.
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  /// Each cycle starts at its largest element; cycles ordered by their least element.
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& sigma);

/// Blocks are the supports of the cycles of sigma.
SetPartition csupp(const Permutation& sigma);

using PermutationElement = LinearCombination<Permutation>;

/// M_alpha M_beta by relabeling the cycles of alpha into each m-subset A and beta into A^c.
PermutationElement product_M(const Permutation& alpha, const Permutation& beta, int conductor = 1);
PermutationElement product_M(const PermutationElement& x, const PermutationElement& y);

// ---------------------------------------------------------------------------
// PiQSym: U and V bases

/// U_mu U_nu: count of splittings of lambda's blocks standardizing to (mu, nu).
PartitionElement product_U(const SetPartition& mu, const SetPartition& nu, int conductor = 1);
/// Deconcatenation at every cut that no block crosses.
PartitionTensor coproduct_U(const SetPartition& lambda, int conductor = 1);

class UHopf : public GradedHopfAlgebra<SetPartition> {
 public:
  explicit UHopf(int conductor = 1) : GradedHopfAlgebra(conductor) {}
  SetPartition unit_key() const override { return {}; }
  int grade(const SetPartition& key) const override { return key.size(); }
  Element product_basis(const SetPartition& a, const SetPartition& b) const override {
    return product_U(a, b, conductor());
  }
  Tensor coproduct_basis(const SetPartition& a) const override { return coproduct_U(a, conductor()); }
};

/// V_mu = sum of U_nu over refinements nu of mu.
PartitionElement V_from_U(const SetPartition& mu, int conductor = 1);
/// V-basis element to the U basis.
PartitionElement v_to_u(const PartitionElement& x);
/// U-basis element to the V basis.
PartitionElement u_to_v(const PartitionElement& x);

/// kappa*_mu -> V_{underlying partition of mu}, returned in the V basis. Only q = 2.
PartitionElement dual_ch(const LabeledElement& x);
/// Inverse of dual_ch: V_mu -> kappa*_{chain arcs of mu}.
LabeledElement dual_ch_inverse(const PartitionElement& v);

// ---------------------------------------------------------------------------
// Truncated realization in the variables x_ij

/// A commutative monomial in the x_ij: sorted (row, column) pairs with repetition.
using XMonomial = std::vector<std::pair<int, int>>;
using XPolynomial = std::map<XMonomial, long long>;

/// M_sigma summed over increasing tuples i_1 < ... < i_n <= N. Empty when N < n.
XPolynomial evaluate_M_truncated(const Permutation& sigma, int N);
/// Product modulo x_ij x_ik = 0 and x_ik x_jk = 0.
XPolynomial multiply_truncated(const XPolynomial& a, const XPolynomial& b);
XPolynomial evaluate_M_truncated(const PermutationElement& x, int N);

}  // namespace nchopf
