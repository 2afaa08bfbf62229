#include "nchopf/sc_hopf.hpp"

#include <algorithm>

#include "nchopf/error.hpp"

namespace nchopf {

std::string to_string(Basis basis) {
  switch (basis) {
    case Basis::kappa: return "kappa";
    case Basis::chi: return "chi";
    case Basis::m: return "m";
    case Basis::p: return "p";
    case Basis::k: return "k";
    case Basis::kappa_star: return "kappa_star";
    case Basis::chi_star: return "chi_star";
    case Basis::U: return "U";
    case Basis::V: return "V";
    case Basis::M: return "M";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  for (Basis b : {Basis::kappa, Basis::chi, Basis::m, Basis::p, Basis::k, Basis::kappa_star, Basis::chi_star,
                  Basis::U, Basis::V, Basis::M})
    if (to_string(b) == name) return b;
  if (name == "k_colored") return Basis::k;
  throw InvalidInput("unknown basis '" + name + "'");
}

// ---------------------------------------------------------------------------
// kappa basis

LabeledElement product_kappa(const LabeledSetPartition& mu, const LabeledSetPartition& nu, int q) {
  const int k = mu.size();
  const int n = k + nu.size();
  std::vector<Arc> base = mu.arcs();
  std::vector<char> left_taken(static_cast<std::size_t>(n + 1), 0), right_taken(static_cast<std::size_t>(n + 1), 0);
  for (const Arc& a : mu.arcs()) left_taken[static_cast<std::size_t>(a.left)] = 1;
  for (const Arc& a : nu.arcs()) {
    base.push_back({a.left + k, a.right + k, a.label});
    right_taken[static_cast<std::size_t>(a.right + k)] = 1;
  }
  std::vector<int> free_left;
  for (int i = 1; i <= k; ++i)
    if (!left_taken[static_cast<std::size_t>(i)]) free_left.push_back(i);

  LabeledElement out(q);
  std::vector<Arc> arcs = base;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == free_left.size()) {
      out.add(LabeledSetPartition(n, arcs), CycRational(q, 1));
      return;
    }
    self(self, idx + 1);
    const int i = free_left[idx];
    for (int l = k + 1; l <= n; ++l) {
      if (right_taken[static_cast<std::size_t>(l)]) continue;
      right_taken[static_cast<std::size_t>(l)] = 1;
      for (int a = 1; a < q; ++a) {
        arcs.push_back({i, l, a});
        self(self, idx + 1);
        arcs.pop_back();
      }
      right_taken[static_cast<std::size_t>(l)] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

LabeledSetPartition straightened_restriction(const LabeledSetPartition& lambda, const std::vector<int>& subset) {
  std::vector<int> rank(static_cast<std::size_t>(lambda.size() + 1), 0);
  for (std::size_t r = 0; r < subset.size(); ++r) rank[static_cast<std::size_t>(subset[r])] = static_cast<int>(r + 1);
  std::vector<Arc> arcs;
  for (const Arc& a : lambda.arcs()) {
    const int l = rank[static_cast<std::size_t>(a.left)], r = rank[static_cast<std::size_t>(a.right)];
    if (l && r) arcs.push_back({l, r, a.label});
  }
  return LabeledSetPartition(static_cast<int>(subset.size()), std::move(arcs));
}

LabeledTensor coproduct_kappa(const LabeledSetPartition& lambda, int q) {
  const int n = lambda.size();
  const SetPartition comps = underlying_set_partition(lambda);
  const auto& blocks = comps.blocks();
  if (blocks.size() >= 32) throw BoundExceeded("too many components for coproduct enumeration");
  LabeledTensor out(q);
  const std::uint32_t limit = 1u << blocks.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<int> a;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (mask & (1u << b)) a.insert(a.end(), blocks[b].begin(), blocks[b].end());
    std::sort(a.begin(), a.end());
    const auto ac = complement(a, n);
    out.add({straightened_restriction(lambda, a), straightened_restriction(lambda, ac)}, CycRational(q, 1));
  }
  return out;
}

SuperclassHopf::SuperclassHopf(int q) : GradedHopfAlgebra(q), q_(q) {
  if (q < 2 || !is_prime(q)) throw InvalidInput("q must be prime");
}

SuperclassHopf::Element SuperclassHopf::product_basis(const LabeledSetPartition& a,
                                                      const LabeledSetPartition& b) const {
  return product_kappa(a, b, q_);
}

SuperclassHopf::Tensor SuperclassHopf::coproduct_basis(const LabeledSetPartition& a) const {
  return coproduct_kappa(a, q_);
}

// ---------------------------------------------------------------------------
// supercharacters

Integer supercharacter_degree(const LabeledSetPartition& lambda, int q) {
  Integer out = 1;
  for (const Arc& a : lambda.arcs()) {
    Integer f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(a.right - a.left - 1));
    out *= f;
  }
  return out;
}

Integer group_order(int n, int q) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n * (n - 1) / 2));
  return out;
}

CycRational supercharacter_value(const LabeledSetPartition& lambda, const LabeledSetPartition& mu, int q) {
  if (lambda.size() != mu.size())
    throw DimensionMismatch("supercharacter and superclass indices have different sizes");
  if (q < 2 || !is_prime(q)) throw InvalidInput("q must be prime");
  long numerator_exp = 0;
  long nesting_exp = 0;
  CycRational roots(q, 1);
  for (const Arc& a : lambda.arcs()) {
    numerator_exp += a.right - a.left - 1;
    for (const Arc& b : mu.arcs()) {
      // An arc of mu from i into (i,k), or from (i,k) into k, kills the value.
      if (b.left == a.left && b.right < a.right) return CycRational(q);
      if (b.right == a.right && b.left > a.left) return CycRational(q);
      if (a.left < b.left && b.right < a.right) ++nesting_exp;
      if (a.left == b.left && a.right == b.right) roots *= theta(q, (a.label * b.label) % q);
    }
  }
  const long e = numerator_exp - nesting_exp;
  if (e < 0) throw VerificationFailure("negative power of q in supercharacter value");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return CycRational(q, Rational(scale)) * roots;
}

std::size_t SupercharTable::index_of(const LabeledSetPartition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) throw InvalidInput(lambda.to_string() + " does not index this table");
  return it->second;
}

void SupercharTable::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < order.size(); ++i) index_.emplace(order[i], i);
}

SupercharTable compute_supercharacter_table(int n, int q, int bound) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  if (n > bound)
    throw BoundExceeded("table size n=" + std::to_string(n) + " exceeds the configured bound " + std::to_string(bound));
  SupercharTable t;
  t.n = n;
  t.q = q;
  t.order = enumerate_labeled_partitions(n, q);
  const std::size_t size = t.order.size();
  t.values.assign(size, CycVector(size, CycRational(q)));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) t.values[r][c] = supercharacter_value(t.order[r], t.order[c], q);

  // Orthogonality against the trivial character: sum_mu chi^lambda(mu) z_mu = |G| delta.
  CycVector rhs(size, CycRational(q));
  rhs[0] = CycRational(q, Rational(group_order(n, q)));
  const CycVector sizes = solve_linear_system(t.values, rhs);
  for (const auto& s : sizes) {
    if (!s.is_rational() || s.rational_part().get_den() != 1 || s.rational_part() <= 0)
      throw VerificationFailure("superclass size " + s.to_string() + " is not a positive integer");
    t.class_sizes.push_back(s.rational_part().get_num());
  }
  t.build_index();
  return t;
}

LabeledElement chi_to_kappa(const LabeledElement& x, int q, SupercharTableCache& cache) {
  LabeledElement out(q);
  for (const auto& [lambda, c] : x.terms()) {
    const auto t = cache.table(lambda.size(), q);
    const auto& row = t->values[t->index_of(lambda)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) out.add(t->order[j], c * row[j]);
  }
  return out;
}

LabeledElement kappa_to_chi(const LabeledElement& x, int q, SupercharTableCache& cache) {
  LabeledElement out(q);
  for (const auto& [mu, c] : x.terms()) {
    const auto t = cache.table(mu.size(), q);
    const auto inv = cache.inverse(mu.size(), q);
    const auto& row = (*inv)[t->index_of(mu)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) out.add(t->order[j], c * row[j]);
  }
  return out;
}

CycRational inner_product_kappa(const LabeledElement& x, const LabeledElement& y, int q,
                                SupercharTableCache& cache) {
  CycRational out(q);
  for (const auto& [mu, cx] : x.terms()) {
    const CycRational cy = y.coefficient(mu);
    if (cy.is_zero()) continue;
    const auto t = cache.table(mu.size(), q);
    const Rational weight(t->class_sizes[t->index_of(mu)], group_order(mu.size(), q));
    out += CycRational(q, weight) * cx * cy.conj();
  }
  return out;
}

SupercharacterHopf::SupercharacterHopf(int q, SupercharTableCache& cache)
    : GradedHopfAlgebra(q), q_(q), kappa_(q), cache_(cache) {}

SupercharacterHopf::Element SupercharacterHopf::product_basis(const LabeledSetPartition& a,
                                                              const LabeledSetPartition& b) const {
  const auto key = std::make_pair(a, b);
  {
    std::lock_guard lock(memo_mutex_);
    auto it = product_memo_.find(key);
    if (it != product_memo_.end()) return it->second;
  }
  const auto xa = chi_to_kappa(basis(a), q_, cache_);
  const auto xb = chi_to_kappa(basis(b), q_, cache_);
  auto result = kappa_to_chi(kappa_.product(xa, xb), q_, cache_);
  std::lock_guard lock(memo_mutex_);
  return product_memo_.emplace(key, std::move(result)).first->second;
}

SupercharacterHopf::Tensor SupercharacterHopf::coproduct_basis(const LabeledSetPartition& a) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = coproduct_memo_.find(a);
    if (it != coproduct_memo_.end()) return it->second;
  }
  const auto delta = kappa_.coproduct(chi_to_kappa(basis(a), q_, cache_));
  // Convert each distinct kappa index once.
  std::map<LabeledSetPartition, Element> converted;
  auto to_chi = [&](const LabeledSetPartition& k) -> const Element& {
    auto it = converted.find(k);
    if (it == converted.end()) it = converted.emplace(k, kappa_to_chi(basis(k), q_, cache_)).first;
    return it->second;
  };
  auto result = map_tensor<LabeledSetPartition>(delta, q_, to_chi, to_chi);
  std::lock_guard lock(memo_mutex_);
  return coproduct_memo_.emplace(a, std::move(result)).first->second;
}

bool filtration_membership(const LabeledSetPartition& lambda, int k) {
  return std::all_of(lambda.arcs().begin(), lambda.arcs().end(),
                     [k](const Arc& a) { return a.right - a.left <= k; });
}

bool is_linear_index(const LabeledSetPartition& lambda) {
  return std::all_of(lambda.arcs().begin(), lambda.arcs().end(),
                     [](const Arc& a) { return a.right - a.left == 1; });
}

}  // namespace nchopf
