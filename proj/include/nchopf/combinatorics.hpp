#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace nchopf {

/// An arc left -(label)-> right of a labeled set partition; positions are 1-based.
struct Arc {
  int left = 0;
  int right = 0;
  int label = 1;

  auto operator<=>(const Arc&) const = default;
};

/**
 * An F_q^x-set partition of [n]: arcs i -(a)-> j with i < j, a != 0, and no
 * two arcs sharing a left endpoint or a right endpoint. Equivalently a
 * strictly upper-triangular matrix with at most one nonzero entry per row and
 * column. Arcs are kept sorted by (left, right).
 */
class LabeledSetPartition {
 public:
  LabeledSetPartition() = default;
  /// Validates and canonicalizes; throws InvalidInput on violated invariants.
  LabeledSetPartition(int n, std::vector<Arc> arcs);

  static LabeledSetPartition empty(int n) { return LabeledSetPartition(n, {}); }
  /// Parses "n; i-a-j, i-a-j" (left-label-right).
  static LabeledSetPartition parse(const std::string& text);

  int size() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arcs() const { return !arcs_.empty(); }
  /// Throws InvalidInput unless every label lies in 1..q-1.
  void check_labels(int q) const;

  std::string to_string() const;

  /// Orders by size, then by the sorted arc list.
  auto operator<=>(const LabeledSetPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

std::ostream& operator<<(std::ostream& os, const LabeledSetPartition& lambda);

/// A set partition of [n]; blocks sorted internally and ordered by least element.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  static SetPartition finest(int n);
  static SetPartition coarsest(int n);
  /// Parses "135|24"; multi-digit labels need commas ("1,10|2,...").
  /// An empty string or "{}" yields the partition of [0].
  static SetPartition parse(const std::string& text, int n = -1);
  /// Chain encoding: consecutive elements of each block joined by label-1 arcs.
  static SetPartition from_arcs(const LabeledSetPartition& lambda);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  /// block_index()[i-1] is the index of the block containing i.
  std::vector<int> block_index() const;
  LabeledSetPartition to_arcs() const;

  std::string to_string() const;

  auto operator<=>(const SetPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

std::ostream& operator<<(std::ostream& os, const SetPartition& lambda);

/// An ordered list of disjoint nonempty subsets covering [n].
class SetComposition {
 public:
  SetComposition() = default;
  explicit SetComposition(std::vector<std::vector<int>> parts);
  /// (A | A^c) for a subset A of [n].
  static SetComposition split(int n, const std::vector<int>& subset);
  /// Interval parts of sizes m_1, m_2, ...
  static SetComposition intervals(const std::vector<int>& sizes);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  /// part_index()[i-1] is the part containing i.
  std::vector<int> part_index() const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> parts_;
};

/// Every element of S_n(q), graded by arc count then lexicographic on arcs.
std::vector<LabeledSetPartition> enumerate_labeled_partitions(int n, int q);
/// Every set partition of [n], in canonical order.
std::vector<SetPartition> enumerate_set_partitions(int n);

SetPartition underlying_set_partition(const LabeledSetPartition& lambda);

LabeledSetPartition concat(const LabeledSetPartition& lambda, const LabeledSetPartition& mu);
SetPartition concat(const SetPartition& lambda, const SetPartition& mu);

/// st_J: one straightened partition per part of J. Throws InvalidInput when an
/// arc joins two different parts.
std::vector<LabeledSetPartition> straighten(const LabeledSetPartition& lambda, const SetComposition& parts);

/// Inverse straightening: relabels mu (on [k]) into the sorted subset `positions` of [n].
LabeledSetPartition unstraighten(const LabeledSetPartition& mu, const std::vector<int>& positions, int n);

/// Keeps the arcs with both endpoints in `subset`; positions are not relabeled.
LabeledSetPartition restrict_arcs(const LabeledSetPartition& lambda, const std::vector<int>& subset);

/// Blockwise intersection of two set partitions of the same [n].
SetPartition common_refinement(const SetPartition& rho, const SetPartition& sigma);

/// All partitions obtained by merging blocks of lambda (lambda included).
std::vector<SetPartition> coarsenings(const SetPartition& lambda);
/// All partitions refining lambda (lambda included).
std::vector<SetPartition> refinements(const SetPartition& lambda);
bool refines(const SetPartition& finer, const SetPartition& coarser);

/// Number of crossing pairs i -> k, j -> l with i < j < k < l.
int crossing_statistic(const LabeledSetPartition& lambda);

/// Subsets of [n] as sorted 1-based lists, from a bitmask over positions.
std::vector<int> subset_from_mask(std::uint32_t mask, int n);
std::vector<int> complement(const std::vector<int>& subset, int n);

}  // namespace nchopf
