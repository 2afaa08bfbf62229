#include "nchopf/group_oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "nchopf/error.hpp"

namespace nchopf {

// ---------------------------------------------------------------------------
// UT_n(q)

UTGroup::UTGroup(int n, int q, std::uint64_t bound) : n_(n), q_(q), order_(1) {
  if (n < 0 || n > kMaxOracleN) throw BoundExceeded("the group oracle supports n <= " + std::to_string(kMaxOracleN));
  if (q < 2 || !is_prime(q)) throw InvalidInput("q must be prime");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) positions_.emplace_back(i, j);
  for (std::size_t t = 0; t < positions_.size(); ++t) {
    if (order_ > bound / static_cast<std::uint64_t>(q))
      throw BoundExceeded("|UT_" + std::to_string(n) + "(" + std::to_string(q) + ")| exceeds the group bound " +
                          std::to_string(bound));
    order_ *= static_cast<std::size_t>(q);
  }
}

UTMatrix UTGroup::zero() const { return UTMatrix{}; }

UTMatrix UTGroup::identity() const {
  UTMatrix m{};
  for (int i = 1; i <= n_; ++i) at(m, i, i) = 1;
  return m;
}

UTMatrix UTGroup::decode(std::size_t code) const {
  UTMatrix m = identity();
  for (const auto& [i, j] : positions_) {
    at(m, i, j) = static_cast<std::uint8_t>(code % static_cast<std::size_t>(q_));
    code /= static_cast<std::size_t>(q_);
  }
  return m;
}

std::size_t UTGroup::encode(const UTMatrix& u) const {
  std::size_t code = 0, scale = 1;
  for (const auto& [i, j] : positions_) {
    code += at(u, i, j) * scale;
    scale *= static_cast<std::size_t>(q_);
  }
  return code;
}

UTMatrix UTGroup::multiply(const UTMatrix& a, const UTMatrix& b) const {
  UTMatrix c{};
  for (int i = 1; i <= n_; ++i)
    for (int k = 1; k <= n_; ++k) {
      const int aik = at(a, i, k);
      if (!aik) continue;
      for (int j = 1; j <= n_; ++j) at(c, i, j) = static_cast<std::uint8_t>((at(c, i, j) + aik * at(b, k, j)) % q_);
    }
  return c;
}

UTMatrix UTGroup::add(const UTMatrix& a, const UTMatrix& b) const {
  UTMatrix c{};
  for (std::size_t t = 0; t < c.size(); ++t) c[t] = static_cast<std::uint8_t>((a[t] + b[t]) % q_);
  return c;
}

UTMatrix UTGroup::subtract(const UTMatrix& a, const UTMatrix& b) const {
  UTMatrix c{};
  for (std::size_t t = 0; t < c.size(); ++t) c[t] = static_cast<std::uint8_t>((a[t] + q_ - b[t]) % q_);
  return c;
}

UTMatrix UTGroup::inverse(const UTMatrix& u) const {
  // (1 + X)^{-1} = sum_k (-X)^k, X nilpotent.
  const UTMatrix one = identity();
  const UTMatrix minus_x = subtract(one, u);
  UTMatrix result = one, term = one;
  for (int k = 1; k < n_; ++k) {
    term = multiply(term, minus_x);
    result = add(result, term);
  }
  return result;
}

std::vector<UTMatrix> UTGroup::generators() const {
  std::vector<UTMatrix> out;
  for (const auto& [a, b] : positions_) {
    UTMatrix g = identity();
    at(g, a, b) = 1;
    out.push_back(g);
  }
  return out;
}

UTMatrix UTGroup::element_of(const LabeledSetPartition& lambda) const {
  if (lambda.size() != n_) throw DimensionMismatch("partition size does not match the group");
  lambda.check_labels(q_);
  UTMatrix u = identity();
  for (const Arc& a : lambda.arcs()) at(u, a.left, a.right) = static_cast<std::uint8_t>(a.label);
  return u;
}

std::vector<UTMatrix> enumerate_group(int n, int q, std::uint64_t bound) {
  const UTGroup g(n, q, bound);
  std::vector<UTMatrix> out;
  out.reserve(g.order());
  for (std::size_t c = 0; c < g.order(); ++c) out.push_back(g.decode(c));
  return out;
}

// ---------------------------------------------------------------------------
// Superclasses

std::vector<std::size_t> superclass_of(const UTGroup& group, const LabeledSetPartition& lambda) {
  const UTMatrix start = group.subtract(group.element_of(lambda), group.identity());
  const auto gens = group.generators();
  std::vector<char> seen(group.order(), 0);
  std::deque<UTMatrix> queue{start};
  seen[group.encode(start)] = 1;
  std::vector<std::size_t> out;
  while (!queue.empty()) {
    const UTMatrix x = queue.front();
    queue.pop_front();
    out.push_back(group.encode(x));
    for (const auto& g : gens) {
      for (const UTMatrix& y : {group.multiply(g, x), group.multiply(x, g)}) {
        const std::size_t c = group.encode(y);
        if (seen[c]) continue;
        seen[c] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SuperclassPartition compute_superclasses(const UTGroup& group) {
  SuperclassPartition out;
  out.order = enumerate_labeled_partitions(group.n(), group.q());
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  out.class_of.assign(group.order(), unset);
  for (std::size_t idx = 0; idx < out.order.size(); ++idx) {
    auto members = superclass_of(group, out.order[idx]);
    for (std::size_t c : members) {
      if (out.class_of[c] != unset)
        throw VerificationFailure("superclasses of " + out.order[idx].to_string() + " and " +
                                  out.order[out.class_of[c]].to_string() + " overlap");
      out.class_of[c] = idx;
    }
    out.members.push_back(std::move(members));
  }
  for (std::size_t c = 0; c < group.order(); ++c)
    if (out.class_of[c] == unset) throw VerificationFailure("group element " + std::to_string(c) + " lies in no superclass");
  return out;
}

// ---------------------------------------------------------------------------
// Supercharacter modules

SupercharacterModule::SupercharacterModule(const UTGroup& group, const LabeledSetPartition& lambda) : group_(group) {
  if (lambda.size() != group.n()) throw DimensionMismatch("partition size does not match the group");
  lambda.check_labels(group.q());
  UTMatrix start = group.zero();
  for (const Arc& a : lambda.arcs())
    group.at(start, a.left, a.right) = static_cast<std::uint8_t>((group.q() - a.label) % group.q());
  std::vector<UTMatrix> inverses;
  for (const auto& g : group.generators()) inverses.push_back(group.inverse(g));
  std::set<UTMatrix> seen{start};
  std::deque<UTMatrix> queue{start};
  while (!queue.empty()) {
    const UTMatrix mu = queue.front();
    queue.pop_front();
    orbit_.push_back(mu);
    for (const auto& ginv : inverses) {
      UTMatrix next = act(ginv, mu);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
}

UTMatrix SupercharacterModule::act(const UTMatrix& u_inverse, const UTMatrix& mu) const {
  // (u mu)_{kj} = sum_i (u^{-1})_{ik} mu_{ij}, kept on the strictly upper part.
  const int n = group_.n(), q = group_.q();
  UTMatrix out = group_.zero();
  for (int k = 1; k <= n; ++k)
    for (int j = k + 1; j <= n; ++j) {
      int s = 0;
      for (int i = 1; i <= k; ++i) s += group_.at(u_inverse, i, k) * group_.at(mu, i, j);
      group_.at(out, k, j) = static_cast<std::uint8_t>(s % q);
    }
  return out;
}

int SupercharacterModule::pair(const UTMatrix& mu, const UTMatrix& x) const {
  int s = 0;
  for (const auto& [i, j] : group_.positions()) s += group_.at(mu, i, j) * group_.at(x, i, j);
  return s % group_.q();
}

CycRational SupercharacterModule::trace(const UTMatrix& u) const {
  const int q = group_.q();
  const UTMatrix u_inverse = group_.inverse(u);
  const UTMatrix x = group_.subtract(u_inverse, group_.identity());
  std::vector<Rational> counts(static_cast<std::size_t>(q), 0);
  for (const auto& mu : orbit_)
    if (act(u_inverse, mu) == mu) counts[static_cast<std::size_t>(pair(mu, x))] += 1;
  CycRational out(q);
  for (int e = 0; e < q; ++e)
    if (counts[static_cast<std::size_t>(e)] != 0)
      out += CycRational(q, counts[static_cast<std::size_t>(e)]) * theta(q, e);
  return out;
}

CycRational trace_supercharacter(const LabeledSetPartition& lambda, const UTMatrix& u, int q) {
  const UTGroup group(lambda.size(), q);
  return SupercharacterModule(group, lambda).trace(u);
}

SupercharTable oracle_supercharacter_table(int n, int q, std::uint64_t bound) {
  const UTGroup group(n, q, bound);
  const SuperclassPartition classes = compute_superclasses(group);
  SupercharTable t;
  t.n = n;
  t.q = q;
  t.order = classes.order;
  const std::size_t size = t.order.size();
  std::vector<UTMatrix> reps;
  for (const auto& mu : t.order) reps.push_back(group.element_of(mu));
  for (std::size_t r = 0; r < size; ++r) {
    const SupercharacterModule module(group, t.order[r]);
    CycVector row;
    for (const auto& u : reps) row.push_back(module.trace(u));
    t.values.push_back(std::move(row));
  }
  for (const auto& m : classes.members) t.class_sizes.emplace_back(static_cast<unsigned long>(m.size()));
  t.build_index();
  return t;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const UTGroup& group) {
  std::vector<std::pair<UTMatrix, UTMatrix>> gens;
  for (const auto& g : group.generators()) gens.emplace_back(g, group.inverse(g));
  std::vector<char> seen(group.order(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t c = 0; c < group.order(); ++c) {
    if (seen[c]) continue;
    seen[c] = 1;
    std::vector<std::size_t> cls;
    std::deque<UTMatrix> queue{group.decode(c)};
    while (!queue.empty()) {
      const UTMatrix u = queue.front();
      queue.pop_front();
      cls.push_back(group.encode(u));
      for (const auto& [g, ginv] : gens) {
        const UTMatrix v = group.multiply(group.multiply(g, u), ginv);
        const std::size_t code = group.encode(v);
        if (seen[code]) continue;
        seen[code] = 1;
        queue.push_back(v);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

AxiomReport verify_supercharacter_axioms(int n, int q, std::uint64_t bound) {
  AxiomReport report;
  report.n = n;
  report.q = q;
  const UTGroup group(n, q, bound);
  const SuperclassPartition classes = compute_superclasses(group);
  report.superclass_count = classes.members.size();

  report.unions_of_conjugacy_classes = true;
  for (const auto& cls : conjugacy_classes(group)) {
    const std::size_t k = classes.class_of[cls.front()];
    for (std::size_t c : cls)
      if (classes.class_of[c] != k) {
        report.unions_of_conjugacy_classes = false;
        report.witnesses.push_back("(a) conjugacy class of element " + std::to_string(cls.front()) +
                                   " meets two superclasses");
        break;
      }
  }

  std::vector<RawFunction> chars;
  for (const auto& lambda : classes.order) chars.push_back(raw_supercharacter(lambda, q, bound));

  report.constant_on_superclasses = true;
  for (std::size_t r = 0; r < chars.size() && report.constant_on_superclasses; ++r)
    for (const auto& members : classes.members) {
      auto differs = std::find_if(members.begin(), members.end(), [&](std::size_t c) {
        return !(chars[r].values[c] == chars[r].values[members.front()]);
      });
      if (differs == members.end()) continue;
      report.constant_on_superclasses = false;
      report.witnesses.push_back("(c) chi^" + classes.order[r].to_string() + " differs on the superclass of element " +
                                 std::to_string(*differs));
      break;
    }

  // (b): {1} is a superclass, and the trivial character appears only in chi^{empty}, once.
  report.trivial_blocks = classes.members.front() == std::vector<std::size_t>{0};
  if (!report.trivial_blocks) report.witnesses.push_back("(b) the identity superclass is not {1}");
  for (std::size_t r = 0; r < chars.size(); ++r) {
    const CycRational ip = raw_inner_product(chars[0], chars[r]);
    if (!(ip == CycRational(q, r == 0 ? 1 : 0))) {
      report.trivial_blocks = false;
      report.witnesses.push_back("(b) <1, chi^" + classes.order[r].to_string() + "> = " + ip.to_string());
    }
  }

  // (d): the supercharacters are pairwise orthogonal and their constituents exhaust Irr(G),
  // so they index a partition of Irr(G) with as many blocks as there are superclasses.
  report.counts_match = classes.members.size() == classes.order.size();
  Rational total = 0;
  for (std::size_t r = 0; r < chars.size(); ++r) {
    for (std::size_t s = r + 1; s < chars.size(); ++s)
      if (!raw_inner_product(chars[r], chars[s]).is_zero()) {
        report.counts_match = false;
        report.witnesses.push_back("(d) chi^" + classes.order[r].to_string() + " and chi^" +
                                   classes.order[s].to_string() + " share a constituent");
      }
    const CycRational norm = raw_inner_product(chars[r], chars[r]);
    const CycRational degree = chars[r].values[0];
    total += ((degree * degree) / norm).to_rational();
  }
  if (total != Rational(static_cast<unsigned long>(group.order()))) {
    report.counts_match = false;
    report.witnesses.push_back("(d) constituent degrees squared sum to " + format_rational(total));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Raw functions

std::size_t product_group_order(const std::vector<int>& factors, int q) {
  std::size_t order = 1;
  for (int m : factors) order *= UTGroup(m, q).order();
  return order;
}

namespace {

struct ProductLayout {
  std::vector<UTGroup> groups;
  std::vector<std::size_t> strides;
  std::size_t order = 1;

  ProductLayout(const std::vector<int>& factors, int q) {
    for (int m : factors) {
      groups.emplace_back(m, q);
      strides.push_back(order);
      order *= groups.back().order();
    }
  }
};

// Index in UT_{|J_1|} x ... of st_J(w), for w in UT_J (entries outside J ignored).
std::size_t straightened_index(const UTGroup& big, const UTMatrix& w, const SetComposition& J,
                               const ProductLayout& layout) {
  std::size_t index = 0;
  for (std::size_t t = 0; t < J.parts().size(); ++t) {
    const auto& part = J.parts()[t];
    const auto& g = layout.groups[t];
    UTMatrix sub = g.identity();
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        g.at(sub, static_cast<int>(i + 1), static_cast<int>(j + 1)) = big.at(w, part[i], part[j]);
    index += g.encode(sub) * layout.strides[t];
  }
  return index;
}

// st_J^{-1}: the element of UT_J with the given product-group index.
UTMatrix unstraightened_element(const UTGroup& big, std::size_t index, const SetComposition& J,
                                const ProductLayout& layout) {
  UTMatrix w = big.identity();
  for (std::size_t t = 0; t < J.parts().size(); ++t) {
    const auto& part = J.parts()[t];
    const auto& g = layout.groups[t];
    const UTMatrix sub = g.decode((index / layout.strides[t]) % g.order());
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        big.at(w, part[i], part[j]) = g.at(sub, static_cast<int>(i + 1), static_cast<int>(j + 1));
  }
  return w;
}

bool in_UT_J(const UTGroup& big, const UTMatrix& w, const std::vector<int>& part_of) {
  for (const auto& [i, j] : big.positions())
    if (big.at(w, i, j) && part_of[static_cast<std::size_t>(i - 1)] != part_of[static_cast<std::size_t>(j - 1)])
      return false;
  return true;
}

std::vector<int> sizes_of(const SetComposition& J) {
  std::vector<int> out;
  for (const auto& p : J.parts()) out.push_back(static_cast<int>(p.size()));
  return out;
}

// counts[u][code(w)] = #{(x, y) : x (u - 1) y + 1 = w}, shared across compositions J.
using TwoSidedCounts = std::vector<std::map<std::size_t, std::uint64_t>>;

std::shared_ptr<const TwoSidedCounts> two_sided_counts(const UTGroup& group, std::uint64_t bound) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const TwoSidedCounts>> cache;
  const auto key = std::make_pair(group.n(), group.q());
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const std::uint64_t g = group.order();
  if (g > 0 && g * g > bound / g)
    throw BoundExceeded("superinduction over |G|^3 = " + std::to_string(g) + "^3 exceeds the bound");
  std::vector<UTMatrix> elems;
  for (std::size_t c = 0; c < group.order(); ++c) elems.push_back(group.decode(c));
  auto counts = std::make_shared<TwoSidedCounts>(group.order());
  for (std::size_t c = 0; c < group.order(); ++c) {
    const UTMatrix x_minus = group.subtract(elems[c], group.identity());
    for (const auto& x : elems) {
      const UTMatrix left = group.multiply(x, x_minus);
      for (const auto& y : elems) ++(*counts)[c][group.encode(group.multiply(left, y))];
    }
  }
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(counts)).first->second;
}

}  // namespace

RawFunction raw_supercharacter(const LabeledSetPartition& lambda, int q, std::uint64_t bound) {
  const UTGroup group(lambda.size(), q, bound);
  const SupercharacterModule module(group, lambda);
  RawFunction f;
  f.q = q;
  f.factors = {lambda.size()};
  f.values.reserve(group.order());
  for (std::size_t c = 0; c < group.order(); ++c) f.values.push_back(module.trace(group.decode(c)));
  return f;
}

RawFunction raw_outer_product(const std::vector<RawFunction>& parts) {
  RawFunction out;
  out.q = parts.empty() ? 2 : parts.front().q;
  std::size_t order = 1;
  for (const auto& p : parts) {
    if (p.factors.size() != 1) throw InvalidInput("outer product expects functions on single groups");
    out.factors.push_back(p.factors.front());
    order *= p.values.size();
  }
  out.values.assign(order, CycRational(out.q, 1));
  for (std::size_t index = 0; index < order; ++index) {
    std::size_t rest = index;
    for (const auto& p : parts) {
      out.values[index] *= p.values[rest % p.values.size()];
      rest /= p.values.size();
    }
  }
  return out;
}

CycRational raw_inner_product(const RawFunction& f, const RawFunction& g) {
  if (f.factors != g.factors || f.q != g.q) throw DimensionMismatch("functions live on different groups");
  CycRational out(f.q);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (!f.values[i].is_zero() && !g.values[i].is_zero()) out += f.values[i] * g.values[i].conj();
  return out * CycRational(f.q, Rational(1, static_cast<unsigned long>(f.values.size())));
}

RawFunction res_J(const RawFunction& f, const SetComposition& J) {
  if (f.factors.size() != 1 || f.factors.front() != J.size())
    throw DimensionMismatch("restriction needs a function on UT_n with n = |J|");
  const UTGroup big(J.size(), f.q);
  const ProductLayout layout(sizes_of(J), f.q);
  RawFunction out;
  out.q = f.q;
  out.factors = sizes_of(J);
  out.values.reserve(layout.order);
  for (std::size_t index = 0; index < layout.order; ++index)
    out.values.push_back(f.values[big.encode(unstraightened_element(big, index, J, layout))]);
  return out;
}

RawFunction sind_J(const RawFunction& psi, const SetComposition& J, std::uint64_t bound) {
  const auto sizes = sizes_of(J);
  if (psi.factors != sizes) throw DimensionMismatch("superinduction input does not live on UT_J");
  const UTGroup big(J.size(), psi.q);
  const ProductLayout layout(sizes, psi.q);
  const auto counts = two_sided_counts(big, bound);
  const auto part_of = J.part_index();
  // 1/(|G| |UT_J|) makes SInd the adjoint of Res under the normalized inner product.
  const Rational scale(1, static_cast<unsigned long>(big.order() * layout.order));
  RawFunction out;
  out.q = psi.q;
  out.factors = {J.size()};
  for (std::size_t u = 0; u < big.order(); ++u) {
    CycRational sum(psi.q);
    for (const auto& [w_code, count] : (*counts)[u]) {
      const UTMatrix w = big.decode(w_code);
      if (!in_UT_J(big, w, part_of)) continue;
      sum += CycRational(psi.q, Rational(static_cast<unsigned long>(count))) *
             psi.values[straightened_index(big, w, J, layout)];
    }
    out.values.push_back(sum * CycRational(psi.q, scale));
  }
  return out;
}

RawFunction inf(const RawFunction& psi) {
  const SetComposition J = SetComposition::intervals(psi.factors);
  const UTGroup big(J.size(), psi.q);
  const ProductLayout layout(psi.factors, psi.q);
  RawFunction out;
  out.q = psi.q;
  out.factors = {J.size()};
  // tau keeps the diagonal blocks, so st_J(tau(u)) reads them off directly.
  for (std::size_t u = 0; u < big.order(); ++u)
    out.values.push_back(psi.values[straightened_index(big, big.decode(u), J, layout)]);
  return out;
}

RawFunction def(const RawFunction& f, const std::vector<int>& sizes) {
  const SetComposition J = SetComposition::intervals(sizes);
  if (f.factors.size() != 1 || f.factors.front() != J.size())
    throw DimensionMismatch("deflation needs a function on UT_n with n = sum of sizes");
  const UTGroup big(J.size(), f.q);
  const ProductLayout layout(sizes, f.q);
  RawFunction out;
  out.q = f.q;
  out.factors = sizes;
  out.values.assign(layout.order, CycRational(f.q));
  for (std::size_t v = 0; v < big.order(); ++v) {
    if (f.values[v].is_zero()) continue;
    out.values[straightened_index(big, big.decode(v), J, layout)] += f.values[v];
  }
  const CycRational kernel_inverse(f.q, Rational(static_cast<unsigned long>(layout.order),
                                                 static_cast<unsigned long>(big.order())));
  for (auto& x : out.values) x *= kernel_inverse;
  return out;
}

}  // namespace nchopf
