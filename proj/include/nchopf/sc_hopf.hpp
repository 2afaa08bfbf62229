#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "nchopf/combinatorics.hpp"
#include "nchopf/free_module.hpp"
#include "nchopf/scalars.hpp"

namespace nchopf {

/// Basis tags understood by element I/O and the CLI.
enum class Basis { kappa, chi, m, p, k, kappa_star, chi_star, U, V, M };

std::string to_string(Basis basis);
Basis parse_basis(const std::string& name);

using LabeledElement = LinearCombination<LabeledSetPartition>;
using LabeledTensor = TensorCombination<LabeledSetPartition>;

// ---------------------------------------------------------------------------
// Superclass characteristic functions

/// kappa_mu * kappa_nu: every way of adding arcs from [k] into the shifted
/// copy of nu that keeps left and right endpoints distinct. All coefficients 1.
LabeledElement product_kappa(const LabeledSetPartition& mu, const LabeledSetPartition& nu, int q);

/// Sum over unions A of connected components of st_A(lambda|A) (x) st_{A^c}(lambda|A^c).
LabeledTensor coproduct_kappa(const LabeledSetPartition& lambda, int q);

/// The restriction of lambda to the positions in `subset`, relabeled onto [|subset|].
/// Arcs leaving the subset are dropped.
LabeledSetPartition straightened_restriction(const LabeledSetPartition& lambda, const std::vector<int>& subset);

/// SC on the kappa basis. The colored k basis of the noncommuting-variable side
/// shares these structure constants and is represented by the same class.
class SuperclassHopf : public GradedHopfAlgebra<LabeledSetPartition> {
 public:
  explicit SuperclassHopf(int q);

  int q() const { return q_; }
  LabeledSetPartition unit_key() const override { return {}; }
  int grade(const LabeledSetPartition& key) const override { return key.size(); }
  Element product_basis(const LabeledSetPartition& a, const LabeledSetPartition& b) const override;
  Tensor coproduct_basis(const LabeledSetPartition& a) const override;

 private:
  int q_;
};

// ---------------------------------------------------------------------------
// Supercharacters

/// chi^lambda(u_mu) by the closed supercharacter formula.
CycRational supercharacter_value(const LabeledSetPartition& lambda, const LabeledSetPartition& mu, int q);

/// chi^lambda(1) = prod over arcs i -> k of q^{k-i-1}.
Integer supercharacter_degree(const LabeledSetPartition& lambda, int q);

Integer group_order(int n, int q);

struct SupercharTable {
  int n = 0;
  int q = 2;
  std::vector<LabeledSetPartition> order;
  /// values[row][col] = chi^{order[row]}(u_{order[col]}).
  CycMatrix values;
  std::vector<Integer> class_sizes;

  std::size_t index_of(const LabeledSetPartition& lambda) const;
  void build_index();

 private:
  std::map<LabeledSetPartition, std::size_t> index_;
};

inline constexpr int kDefaultTableBound = 7;

/// Computes the table from the formula; class sizes are the unique solution of
/// sum_mu chi^lambda(mu) z_mu = |UT_n(q)| delta_{lambda, empty}.
SupercharTable compute_supercharacter_table(int n, int q, int bound = kDefaultTableBound);

/**
 * Memoizes supercharacter tables (and their inverses) per (n, q). When a
 * directory is configured, tables are also persisted as JSON files named by
 * (format version, n, q) and reloaded on later runs.
 */
class SupercharTableCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit SupercharTableCache(std::optional<std::filesystem::path> directory = std::nullopt,
                               int bound = kDefaultTableBound);

  /// NCHOPF_CACHE_DIR, else $XDG_CACHE_HOME/nchopf, else $HOME/.cache/nchopf.
  static std::filesystem::path default_directory();

  std::shared_ptr<const SupercharTable> table(int n, int q);
  /// Inverse of table(n, q).values.
  std::shared_ptr<const CycMatrix> inverse(int n, int q);

  int bound() const { return bound_; }
  const std::optional<std::filesystem::path>& directory() const { return directory_; }
  std::filesystem::path file_for(int n, int q) const;

 private:
  std::shared_ptr<const SupercharTable> load_or_compute(int n, int q);

  std::optional<std::filesystem::path> directory_;
  int bound_;
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, std::shared_ptr<const SupercharTable>> tables_;
  std::map<std::pair<int, int>, std::shared_ptr<const CycMatrix>> inverses_;
};

LabeledElement chi_to_kappa(const LabeledElement& x, int q, SupercharTableCache& cache);
LabeledElement kappa_to_chi(const LabeledElement& x, int q, SupercharTableCache& cache);

/// <x, y> = (1/|UT_n|) sum_u x(u) conj(y(u)), grade by grade, for kappa-basis inputs.
CycRational inner_product_kappa(const LabeledElement& x, const LabeledElement& y, int q,
                                SupercharTableCache& cache);

/// SC on the supercharacter basis; every operation routes through kappa.
class SupercharacterHopf : public GradedHopfAlgebra<LabeledSetPartition> {
 public:
  SupercharacterHopf(int q, SupercharTableCache& cache);

  LabeledSetPartition unit_key() const override { return {}; }
  int grade(const LabeledSetPartition& key) const override { return key.size(); }
  Element product_basis(const LabeledSetPartition& a, const LabeledSetPartition& b) const override;
  Tensor coproduct_basis(const LabeledSetPartition& a) const override;

 private:
  int q_;
  SuperclassHopf kappa_;
  SupercharTableCache& cache_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<LabeledSetPartition, LabeledSetPartition>, Element> product_memo_;
  mutable std::map<LabeledSetPartition, Tensor> coproduct_memo_;
};

/// Every arc satisfies right - left <= k.
bool filtration_membership(const LabeledSetPartition& lambda, int k);
/// Every arc joins consecutive positions.
bool is_linear_index(const LabeledSetPartition& lambda);

}  // namespace nchopf
