#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "nchopf/combinatorics.hpp"
#include "nchopf/free_module.hpp"
#include "nchopf/sc_hopf.hpp"

namespace nchopf {

using PartitionElement = LinearCombination<SetPartition>;
using PartitionTensor = TensorCombination<SetPartition>;

// ---------------------------------------------------------------------------
// Monomial and power-sum bases of symmetric functions in noncommuting variables

/// m_lambda m_mu = sum of m_nu over nu whose meet with ([k]|[k+1..n]) is lambda|mu.
/// Throws VerificationFailure if some nu would appear twice.
PartitionElement product_m(const SetPartition& lambda, const SetPartition& mu, int conductor = 2);
/// Sum over subsets of blocks J of m_{st(lambda_J)} (x) m_{st(lambda_{J^c})}.
PartitionTensor coproduct_m(const SetPartition& lambda, int conductor = 2);

/// The blocks listed in `chosen`, standardized onto [|union|].
SetPartition standardize_blocks(const SetPartition& lambda, const std::vector<std::size_t>& chosen);

PartitionElement product_p(const SetPartition& lambda, const SetPartition& mu, int conductor = 2);
PartitionTensor coproduct_p(const SetPartition& lambda, int conductor = 2);

/// p-basis element to the m basis: p_lambda = sum of m_mu over coarsenings mu.
PartitionElement p_to_m(const PartitionElement& x);
/// m-basis element to the p basis, by triangular solve over the refinement order.
PartitionElement m_to_p(const PartitionElement& x);

class MonomialHopf : public GradedHopfAlgebra<SetPartition> {
 public:
  explicit MonomialHopf(int conductor = 2) : GradedHopfAlgebra(conductor) {}
  SetPartition unit_key() const override { return {}; }
  int grade(const SetPartition& key) const override { return key.size(); }
  Element product_basis(const SetPartition& a, const SetPartition& b) const override {
    return product_m(a, b, conductor());
  }
  Tensor coproduct_basis(const SetPartition& a) const override { return coproduct_m(a, conductor()); }
};

class PowerSumHopf : public GradedHopfAlgebra<SetPartition> {
 public:
  explicit PowerSumHopf(int conductor = 2) : GradedHopfAlgebra(conductor) {}
  SetPartition unit_key() const override { return {}; }
  int grade(const SetPartition& key) const override { return key.size(); }
  Element product_basis(const SetPartition& a, const SetPartition& b) const override {
    return product_p(a, b, conductor());
  }
  Tensor coproduct_basis(const SetPartition& a) const override { return coproduct_p(a, conductor()); }
};

// ---------------------------------------------------------------------------
// Colored version and the k basis

/// An r-colored set partition: a set partition of [n] plus one color in Z/r per position.
struct ColoredIndex {
  SetPartition partition;
  std::vector<int> colors;
  int r = 1;

  auto operator<=>(const ColoredIndex&) const = default;
};

using ColoredElement = LinearCombination<ColoredIndex>;
using ColoredTensor = TensorCombination<ColoredIndex>;

/// Smallest generator of F_q^x; fixes the identification F_q^x = C_{q-1}.
int primitive_root(int q);
/// e with g^e = a in F_q, g the primitive root above.
int discrete_log(int a, int q);

/// k_lambda = sum of colored monomials on the underlying partition whose colors
/// satisfy color(j) - color(i) = log(label) for every arc i -> j.
ColoredElement expand_k_in_colored_m(const LabeledSetPartition& lambda, int q);
ColoredElement expand_k_in_colored_m(const LabeledElement& x, int q);

/// The monomial Hopf algebra on r-colored set partitions.
class ColoredMonomialHopf : public GradedHopfAlgebra<ColoredIndex> {
 public:
  ColoredMonomialHopf(int r, int conductor) : GradedHopfAlgebra(conductor), r_(r) {}
  ColoredIndex unit_key() const override { return {SetPartition(), {}, r_}; }
  int grade(const ColoredIndex& key) const override { return key.partition.size(); }
  Element product_basis(const ColoredIndex& a, const ColoredIndex& b) const override;
  Tensor coproduct_basis(const ColoredIndex& a) const override;

 private:
  int r_;
};

/// product_k / coproduct_k: the k basis multiplies like the kappa basis.
LabeledElement product_k(const LabeledSetPartition& mu, const LabeledSetPartition& nu, int q);
LabeledTensor coproduct_k(const LabeledSetPartition& lambda, int q);

/// ch for q = 2: kappa_mu -> m_{underlying partition of mu}.
PartitionElement ch_to_monomial(const LabeledElement& x);
/// ch for general q: kappa_mu -> k_mu (same index, k-basis tag).
LabeledElement ch_to_k(const LabeledElement& x);

}  // namespace nchopf
