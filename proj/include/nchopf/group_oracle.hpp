#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nchopf/combinatorics.hpp"
#include "nchopf/scalars.hpp"
#include "nchopf/sc_hopf.hpp"

namespace nchopf {

inline constexpr int kMaxOracleN = 6;
inline constexpr std::uint64_t kDefaultGroupBound = 1'000'000;

/// Dense n x n matrix over F_q (row-major, n <= 6). Used both for group
/// elements u (unit diagonal) and for functionals on n (strictly upper part).
using UTMatrix = std::array<std::uint8_t, kMaxOracleN * kMaxOracleN>;

/**
 * UT_n(q) with elements numbered by the mixed-radix code of their strictly
 * upper entries, read row by row. Code 0 is the identity.
 */
class UTGroup {
 public:
  UTGroup(int n, int q, std::uint64_t bound = kDefaultGroupBound);

  int n() const { return n_; }
  int q() const { return q_; }
  std::size_t order() const { return order_; }
  const std::vector<std::pair<int, int>>& positions() const { return positions_; }

  UTMatrix identity() const;
  UTMatrix zero() const;
  UTMatrix decode(std::size_t code) const;
  std::size_t encode(const UTMatrix& u) const;

  std::uint8_t& at(UTMatrix& m, int i, int j) const { return m[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }
  std::uint8_t at(const UTMatrix& m, int i, int j) const { return m[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }

  UTMatrix multiply(const UTMatrix& a, const UTMatrix& b) const;
  UTMatrix add(const UTMatrix& a, const UTMatrix& b) const;
  UTMatrix subtract(const UTMatrix& a, const UTMatrix& b) const;
  UTMatrix inverse(const UTMatrix& u) const;
  /// The generators 1 + e_ab, a < b.
  std::vector<UTMatrix> generators() const;

  /// 1 + sum of label * e_ij over the arcs of lambda.
  UTMatrix element_of(const LabeledSetPartition& lambda) const;

 private:
  int n_;
  int q_;
  std::size_t order_;
  std::vector<std::pair<int, int>> positions_;
};

/// Every element of UT_n(q) exactly once, in code order.
std::vector<UTMatrix> enumerate_group(int n, int q, std::uint64_t bound = kDefaultGroupBound);

/// Codes of the superclass of u_lambda: the two-sided orbit of u_lambda - 1, shifted back by 1.
std::vector<std::size_t> superclass_of(const UTGroup& group, const LabeledSetPartition& lambda);

/// All superclasses, indexed like enumerate_labeled_partitions(n, q).
struct SuperclassPartition {
  std::vector<LabeledSetPartition> order;
  std::vector<std::vector<std::size_t>> members;
  /// class_of[code] = index into order.
  std::vector<std::size_t> class_of;
};

/// Throws VerificationFailure if the orbits do not partition the group.
SuperclassPartition compute_superclasses(const UTGroup& group);

/**
 * The module V^lambda: basis indexed by the left orbit of -lambda in n*,
 * with u v_mu = theta(mu(u^{-1} - 1)) v_{u mu}, where (u mu)(X) = mu(u^{-1} X).
 */
class SupercharacterModule {
 public:
  SupercharacterModule(const UTGroup& group, const LabeledSetPartition& lambda);

  std::size_t dimension() const { return orbit_.size(); }
  CycRational trace(const UTMatrix& u) const;

 private:
  UTMatrix act(const UTMatrix& u_inverse, const UTMatrix& mu) const;
  int pair(const UTMatrix& mu, const UTMatrix& x) const;

  const UTGroup& group_;
  std::vector<UTMatrix> orbit_;
};

CycRational trace_supercharacter(const LabeledSetPartition& lambda, const UTMatrix& u, int q);

/// Table of traces at superclass representatives, with oracle class sizes.
SupercharTable oracle_supercharacter_table(int n, int q, std::uint64_t bound = kDefaultGroupBound);

/// Conjugacy classes by BFS under conjugation by generators; each a sorted list of codes.
std::vector<std::vector<std::size_t>> conjugacy_classes(const UTGroup& group);

struct AxiomReport {
  int n = 0;
  int q = 2;
  bool unions_of_conjugacy_classes = false;  // (a)
  bool trivial_blocks = false;               // (b)
  bool constant_on_superclasses = false;     // (c)
  bool counts_match = false;                 // (d)
  std::size_t superclass_count = 0;
  std::vector<std::string> witnesses;

  bool passed() const {
    return unions_of_conjugacy_classes && trivial_blocks && constant_on_superclasses && counts_match;
  }
};

AxiomReport verify_supercharacter_axioms(int n, int q, std::uint64_t bound = kDefaultGroupBound);

// ---------------------------------------------------------------------------
// Raw functions and the four functors

/**
 * A function on UT_{m_1}(q) x ... x UT_{m_l}(q), dense over the whole group.
 * The element (u_1, ..., u_l) sits at index sum code(u_t) * prod_{s<t} |UT_{m_s}|.
 */
struct RawFunction {
  int q = 2;
  std::vector<int> factors;
  std::vector<CycRational> values;

  std::size_t group_order() const { return values.size(); }
};

std::size_t product_group_order(const std::vector<int>& factors, int q);

/// chi^lambda on every element of UT_n(q), by module traces.
RawFunction raw_supercharacter(const LabeledSetPartition& lambda, int q, std::uint64_t bound = kDefaultGroupBound);
/// f_1 x ... x f_l on the product group.
RawFunction raw_outer_product(const std::vector<RawFunction>& parts);

/// (1/|H|) sum f(h) conj(g(h)).
CycRational raw_inner_product(const RawFunction& f, const RawFunction& g);

/// J-restriction: (u_1, ..., u_l) -> f(st_J^{-1}(u_1, ..., u_l)).
RawFunction res_J(const RawFunction& f, const SetComposition& J);
/// Superinduction from st_J(UT_J(q)) to UT_n(q), by direct summation over pairs (x, y).
RawFunction sind_J(const RawFunction& psi, const SetComposition& J, std::uint64_t bound = 50'000'000);
/// Inflation along tau: UT_n(q) -> UT_(m_1, ..., m_l)(q) for an integer composition.
RawFunction inf(const RawFunction& psi);
/// Deflation: average of f over each fiber of tau.
RawFunction def(const RawFunction& f, const std::vector<int>& sizes);

}  // namespace nchopf
