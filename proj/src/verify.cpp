#include "nchopf/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "nchopf/dual_hopf.hpp"
#include "nchopf/error.hpp"
#include "nchopf/group_oracle.hpp"
#include "nchopf/pi_hopf.hpp"

namespace nchopf {

void CheckLog::check(bool ok, const std::function<std::string()>& describe) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < 20) failures.push_back(describe());
}

void CheckLog::merge(const CheckLog& other) {
  passed += other.passed;
  failed += other.failed;
  for (const auto& f : other.failures)
    if (failures.size() < 20) failures.push_back(other.name.empty() ? f : other.name + ": " + f);
}

std::vector<Integer> bell_numbers(int up_to) {
  std::vector<Integer> b{1};
  for (int n = 0; n < up_to; ++n) {
    Integer next = 0, binom = 1;
    for (int k = 0; k <= n; ++k) {
      next += binom * b[static_cast<std::size_t>(k)];
      binom = binom * (n - k) / (k + 1);
    }
    b.push_back(next);
  }
  return b;
}

namespace {

// ---------------------------------------------------------------------------
// Generic Hopf axiom checks

template <class Key>
using Triple = LinearCombination<std::tuple<Key, Key, Key>>;

template <class Key>
Triple<Key> coproduct_left(const GradedHopfAlgebra<Key>& h, const TensorCombination<Key>& d) {
  Triple<Key> out(h.conductor());
  for (const auto& [k, c] : d.terms())
    for (const auto& [k2, c2] : h.coproduct_basis(k.first).terms()) out.add({k2.first, k2.second, k.second}, c * c2);
  return out;
}

template <class Key>
Triple<Key> coproduct_right(const GradedHopfAlgebra<Key>& h, const TensorCombination<Key>& d) {
  Triple<Key> out(h.conductor());
  for (const auto& [k, c] : d.terms())
    for (const auto& [k2, c2] : h.coproduct_basis(k.second).terms()) out.add({k.first, k2.first, k2.second}, c * c2);
  return out;
}

template <class Key>
struct Family {
  std::string name;
  const GradedHopfAlgebra<Key>& algebra;
  std::vector<Key> keys;  // every basis key of grade <= n
  bool cocommutative = false;
  bool commutative = false;
};

template <class Key>
void check_element(CheckLog& log, const Family<Key>& f, const LinearCombination<Key>& x, const std::string& label) {
  const auto& h = f.algebra;
  const auto d = h.coproduct(x);

  log.check(coproduct_left(h, d) == coproduct_right(h, d),
            [&] { return f.name + " coassociativity fails on " + label; });

  LinearCombination<Key> left(h.conductor()), right(h.conductor());
  for (const auto& [k, c] : d.terms()) {
    if (h.grade(k.first) == 0) left.add(k.second, c);
    if (h.grade(k.second) == 0) right.add(k.first, c);
  }
  log.check(left == x && right == x, [&] { return f.name + " counit law fails on " + label; });

  if (f.cocommutative)
    log.check(swap_factors(d) == d, [&] { return f.name + " cocommutativity fails on " + label; });

  const auto unit_part = h.counit(x) * h.unit();
  LinearCombination<Key> s_left(h.conductor()), s_right(h.conductor());
  for (const auto& [k, c] : d.terms()) {
    s_left.add(h.product(h.antipode_basis(k.first), h.basis(k.second)), c);
    s_right.add(h.product(h.basis(k.first), h.antipode_basis(k.second)), c);
  }
  log.check(s_left == unit_part && s_right == unit_part, [&] { return f.name + " antipode identity fails on " + label; });
}

template <class Key>
void check_pair(CheckLog& log, const Family<Key>& f, const LinearCombination<Key>& x, const LinearCombination<Key>& y,
                const std::string& label) {
  const auto& h = f.algebra;
  const auto xy = h.product(x, y);
  log.check(h.coproduct(xy) == h.tensor_product(h.coproduct(x), h.coproduct(y)),
            [&] { return f.name + " bialgebra compatibility fails on " + label; });
  if (f.commutative) log.check(xy == h.product(y, x), [&] { return f.name + " commutativity fails on " + label; });
}

template <class Key>
std::string key_label(const Key& k) {
  if constexpr (requires { k.to_string(); }) return k.to_string();
  else return k.partition.to_string();
}

CycRational random_coefficient(std::mt19937_64& rng, int q) {
  std::uniform_int_distribution<int> mag(1, 3), sign(0, 1), root(0, q - 1);
  CycRational c(q, Rational(sign(rng) ? mag(rng) : -mag(rng)));
  if (q > 2) c *= CycRational::root_of_unity(q, root(rng));
  return c;
}

template <class Key>
LinearCombination<Key> random_combination(std::mt19937_64& rng, const Family<Key>& f, int max_grade, int q) {
  std::vector<const Key*> pool;
  for (const auto& k : f.keys)
    if (f.algebra.grade(k) <= max_grade) pool.push_back(&k);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), count(1, 3);
  LinearCombination<Key> out(f.algebra.conductor());
  const std::size_t terms = count(rng);
  for (std::size_t t = 0; t < terms; ++t) out.add(*pool[pick(rng)], random_coefficient(rng, q));
  return out;
}

template <class Key>
CheckLog check_family(const Family<Key>& f, const VerifyOptions& o) {
  CheckLog log;
  log.name = f.name;
  const auto& h = f.algebra;
  for (const auto& k : f.keys) check_element(log, f, h.basis(k), key_label(k));
  for (const auto& a : f.keys)
    for (const auto& b : f.keys)
      if (h.grade(a) + h.grade(b) <= o.n)
        check_pair(log, f, h.basis(a), h.basis(b), key_label(a) + " * " + key_label(b));

  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> split(0, o.n);
  for (int t = 0; t < o.random_combinations; ++t) {
    const auto x = random_combination(rng, f, o.n, o.q);
    check_element(log, f, x, "random combination #" + std::to_string(t));
    const int a = split(rng);
    const auto y = random_combination(rng, f, a, o.q);
    const auto z = random_combination(rng, f, o.n - a, o.q);
    check_pair(log, f, y, z, "random pair #" + std::to_string(t));
  }
  return log;
}

std::vector<LabeledSetPartition> labeled_up_to(int n, int q) {
  std::vector<LabeledSetPartition> out;
  for (int g = 0; g <= n; ++g)
    for (auto& k : enumerate_labeled_partitions(g, q)) out.push_back(std::move(k));
  return out;
}

std::vector<SetPartition> partitions_up_to(int n) {
  std::vector<SetPartition> out;
  for (int g = 0; g <= n; ++g)
    for (auto& k : enumerate_set_partitions(g)) out.push_back(std::move(k));
  return out;
}

std::vector<ColoredIndex> colored_up_to(int n, int r) {
  std::vector<ColoredIndex> out;
  for (int g = 0; g <= n; ++g)
    for (const auto& p : enumerate_set_partitions(g)) {
      std::vector<int> colors(static_cast<std::size_t>(g), 0);
      while (true) {
        out.push_back({p, colors, r});
        std::size_t i = 0;
        while (i < colors.size() && ++colors[i] == r) colors[i++] = 0;
        if (i == colors.size()) break;
      }
    }
  return out;
}

std::vector<Permutation> permutations_of(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(word);
  while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// Every ordered set partition of [n] with at least two parts.
std::vector<SetComposition> proper_set_compositions(int n) {
  std::vector<SetComposition> out;
  for (const auto& p : enumerate_set_partitions(n)) {
    if (p.block_count() < 2) continue;
    std::vector<std::size_t> perm(p.block_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::vector<int>> parts;
      for (std::size_t b : perm) parts.push_back(p.blocks()[b]);
      out.emplace_back(std::move(parts));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<std::vector<int>> integer_compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return {{}};
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int len = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(len);
        len = 1;
      } else {
        ++len;
      }
    }
    parts.push_back(len);
    out.push_back(std::move(parts));
  }
  return out;
}

std::size_t rank_of(CycMatrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const CycRational inv = m[rank][c].inverse();
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const CycRational f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

LabeledSetPartition chain(int k) {
  std::vector<Arc> arcs;
  for (int i = 1; i < k; ++i) arcs.push_back({i, i + 1, 1});
  return LabeledSetPartition(k, std::move(arcs));
}

}  // namespace

// ---------------------------------------------------------------------------

CheckLog verify_hopf(const VerifyOptions& o, SupercharTableCache& cache) {
  CheckLog log;
  log.name = "hopf";
  const int q = o.q;
  const auto labeled = labeled_up_to(o.n, q);

  const SuperclassHopf kappa(q);
  log.merge(check_family(Family<LabeledSetPartition>{"kappa", kappa, labeled, true, false}, o));
  const SupercharacterHopf chi(q, cache);
  log.merge(check_family(Family<LabeledSetPartition>{"chi", chi, labeled, true, false}, o));
  const KappaStarHopf kappa_star(q);
  log.merge(check_family(Family<LabeledSetPartition>{"kappa_star", kappa_star, labeled, false, true}, o));

  const auto partitions = partitions_up_to(o.n);
  const MonomialHopf m(q);
  log.merge(check_family(Family<SetPartition>{"m", m, partitions, true, false}, o));
  const PowerSumHopf p(q);
  log.merge(check_family(Family<SetPartition>{"p", p, partitions, true, false}, o));
  const UHopf u(q);
  log.merge(check_family(Family<SetPartition>{"U", u, partitions, false, true}, o));

  if (q > 2) {
    const ColoredMonomialHopf colored(q - 1, q);
    log.merge(check_family(Family<ColoredIndex>{"m_colored", colored, colored_up_to(o.n, q - 1), true, false}, o));
  }
  return log;
}

CheckLog verify_isomorphisms(const VerifyOptions& o) {
  CheckLog log;
  log.name = "iso";
  const int q = o.q;
  const SuperclassHopf kappa(q);
  const ColoredMonomialHopf colored(q - 1, q);
  const auto labeled = labeled_up_to(o.n, q);

  auto ch_colored = [&](const LabeledSetPartition& k) { return expand_k_in_colored_m(k, q); };
  for (const auto& a : labeled)
    for (const auto& b : labeled) {
      if (a.size() + b.size() > o.n) continue;
      const auto lhs = expand_k_in_colored_m(kappa.product_basis(a, b), q);
      const auto rhs = colored.product(ch_colored(a), ch_colored(b));
      log.check(lhs == rhs, [&] { return "ch (colored) fails on the product " + a.to_string() + " * " + b.to_string(); });
    }
  // Distinct indices expand over disjoint colored monomials, so ch is injective.
  std::map<ColoredIndex, LabeledSetPartition> owner;
  for (const auto& l : labeled) {
    const auto image = ch_colored(l);
    log.check(map_tensor<ColoredIndex>(kappa.coproduct_basis(l), q, ch_colored, ch_colored) == colored.coproduct(image),
              [&] { return "ch (colored) fails on the coproduct of " + l.to_string(); });
    bool disjoint = true;
    for (const auto& [key, c] : image.terms()) disjoint &= owner.emplace(key, l).second;
    log.check(disjoint, [&] { return "ch (colored) images overlap at " + l.to_string(); });
  }

  if (q == 2) {
    const MonomialHopf m(2);
    auto ch = [](const LabeledSetPartition& k) { return ch_to_monomial(LabeledElement::basis(k, 2)); };
    for (const auto& a : labeled)
      for (const auto& b : labeled) {
        if (a.size() + b.size() > o.n) continue;
        log.check(ch_to_monomial(kappa.product_basis(a, b)) == m.product(ch(a), ch(b)),
                  [&] { return "ch fails on the product " + a.to_string() + " * " + b.to_string(); });
      }
    for (const auto& l : labeled)
      log.check(map_tensor<SetPartition>(kappa.coproduct_basis(l), 2, ch, ch) == m.coproduct(ch(l)),
                [&] { return "ch fails on the coproduct of " + l.to_string(); });
    for (int g = 0; g <= o.n; ++g) {
      std::set<SetPartition> images;
      for (const auto& l : enumerate_labeled_partitions(g, 2)) images.insert(underlying_set_partition(l));
      log.check(images.size() == enumerate_set_partitions(g).size(),
                [&] { return "ch is not a bijection in grade " + std::to_string(g); });
    }

    const KappaStarHopf star(2);
    const UHopf u(2);
    auto dual = [](const LabeledSetPartition& k) { return v_to_u(dual_ch(LabeledElement::basis(k, 2))); };
    for (const auto& a : labeled)
      for (const auto& b : labeled) {
        if (a.size() + b.size() > o.n) continue;
        log.check(v_to_u(dual_ch(star.product_basis(a, b))) == u.product(dual(a), dual(b)),
                  [&] { return "dual_ch fails on the product " + a.to_string() + " * " + b.to_string(); });
      }
    for (const auto& l : labeled)
      log.check(map_tensor<SetPartition>(star.coproduct_basis(l), 2, dual, dual) == u.coproduct(dual(l)),
                [&] { return "dual_ch fails on the coproduct of " + l.to_string(); });
  }
  return log;
}

CheckLog verify_oracle(const VerifyOptions& o, SupercharTableCache& cache) {
  CheckLog log;
  log.name = "oracle";
  const int q = o.q;
  const auto bell = bell_numbers(o.n);
  for (int m = 0; m <= o.n; ++m) {
    const std::string at = " at n=" + std::to_string(m) + ", q=" + std::to_string(q);
    const auto formula = cache.table(m, q);
    const SupercharTable oracle = oracle_supercharacter_table(m, q);

    bool same_order = formula->order == oracle.order;
    log.check(same_order, [&] { return "index orders differ" + at; });
    if (!same_order) continue;
    const std::size_t size = oracle.order.size();
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c)
        log.check(formula->values[r][c] == oracle.values[r][c], [&] {
          return "chi^" + oracle.order[r].to_string() + "(" + oracle.order[c].to_string() + "): formula " +
                 formula->values[r][c].to_string() + ", oracle " + oracle.values[r][c].to_string() + at;
        });
    for (std::size_t c = 0; c < size; ++c)
      log.check(formula->class_sizes[c] == oracle.class_sizes[c],
                [&] { return "superclass size of " + oracle.order[c].to_string() + " differs" + at; });
    log.check(oracle.class_sizes.size() == enumerate_labeled_partitions(m, q).size(),
              [&] { return "superclass count differs from |S_n(q)|" + at; });
    if (q == 2)
      log.check(Integer(static_cast<unsigned long>(oracle.class_sizes.size())) == bell[static_cast<std::size_t>(m)],
                [&] { return "superclass count differs from Bell(n)" + at; });

    // Inner products on raw traces: <chi^l, chi^v> = delta q^{crossings(l)}.
    std::vector<RawFunction> chars;
    for (const auto& l : oracle.order) chars.push_back(raw_supercharacter(l, q));
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t s = 0; s < size; ++s) {
        Integer expected = 0;
        if (r == s)
          mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(q),
                        static_cast<unsigned long>(crossing_statistic(oracle.order[r])));
        const CycRational want(q, Rational(expected));
        log.check(raw_inner_product(chars[r], chars[s]) == want, [&] {
          return "<chi^" + oracle.order[r].to_string() + ", chi^" + oracle.order[s].to_string() + "> is not " +
                 want.to_string() + at;
        });
        const auto kr = chi_to_kappa(LabeledElement::basis(oracle.order[r], q), q, cache);
        const auto ks = chi_to_kappa(LabeledElement::basis(oracle.order[s], q), q, cache);
        log.check(inner_product_kappa(kr, ks, q, cache) == want, [&] {
          return "formula inner product <chi^" + oracle.order[r].to_string() + ", chi^" + oracle.order[s].to_string() +
                 "> is not " + want.to_string() + at;
        });
      }

    if (q != 2 || m < 2) continue;
    // Frobenius adjointness of SInd/Res and Inf/Def on supercharacters.
    std::map<int, std::vector<RawFunction>> small;
    for (int k = 0; k < m; ++k)
      for (const auto& l : enumerate_labeled_partitions(k, q)) small[k].push_back(raw_supercharacter(l, q));
    auto products = [&](const std::vector<int>& sizes) {
      std::vector<RawFunction> out{RawFunction{q, {}, {CycRational(q, 1)}}};
      std::vector<std::vector<RawFunction>> acc{{}};
      for (int s : sizes) {
        std::vector<std::vector<RawFunction>> next;
        for (const auto& prefix : acc)
          for (const auto& f : small[s]) {
            auto extended = prefix;
            extended.push_back(f);
            next.push_back(std::move(extended));
          }
        acc = std::move(next);
      }
      out.clear();
      for (const auto& parts : acc) out.push_back(raw_outer_product(parts));
      return out;
    };
    for (const auto& J : proper_set_compositions(m)) {
      std::vector<int> sizes;
      for (const auto& part : J.parts()) sizes.push_back(static_cast<int>(part.size()));
      for (const auto& psi : products(sizes)) {
        const RawFunction induced = sind_J(psi, J);
        for (std::size_t r = 0; r < size; ++r)
          log.check(raw_inner_product(induced, chars[r]) == raw_inner_product(psi, res_J(chars[r], J)),
                    [&] { return "<SInd psi, chi^" + oracle.order[r].to_string() + "> != <psi, Res chi>" + at; });
      }
    }
    for (const auto& sizes : integer_compositions(m)) {
      if (sizes.size() < 2) continue;
      const auto psis = products(sizes);
      for (const auto& psi : psis) {
        const RawFunction inflated = inf(psi);
        for (std::size_t r = 0; r < size; ++r)
          log.check(raw_inner_product(inflated, chars[r]) == raw_inner_product(psi, def(chars[r], sizes)),
                    [&] { return "<Inf psi, chi^" + oracle.order[r].to_string() + "> != <psi, Def chi>" + at; });
      }
    }
    // Inf(chi^a x chi^b) = chi^{a|b}.
    for (int k = 1; k < m; ++k)
      for (const auto& a : enumerate_labeled_partitions(k, q))
        for (const auto& b : enumerate_labeled_partitions(m - k, q)) {
          const auto lhs = inf(raw_outer_product({raw_supercharacter(a, q), raw_supercharacter(b, q)}));
          log.check(lhs.values == raw_supercharacter(concat(a, b), q).values,
                    [&] { return "Inf(chi^" + a.to_string() + " x chi^" + b.to_string() + ") != chi^{a|b}" + at; });
        }
  }
  return log;
}

CheckLog verify_axioms(const VerifyOptions& o) {
  CheckLog log;
  log.name = "axioms";
  for (int m = 0; m <= o.n; ++m) {
    const AxiomReport r = verify_supercharacter_axioms(m, o.q);
    const std::string at = " at n=" + std::to_string(m) + ", q=" + std::to_string(o.q);
    log.check(r.unions_of_conjugacy_classes, [&] { return "axiom (a) fails" + at; });
    log.check(r.trivial_blocks, [&] { return "axiom (b) fails" + at; });
    log.check(r.constant_on_superclasses, [&] { return "axiom (c) fails" + at; });
    log.check(r.counts_match, [&] { return "axiom (d) fails" + at; });
    for (const auto& w : r.witnesses) log.check(false, [&] { return w + at; });
  }
  return log;
}

CheckLog verify_duality(const VerifyOptions& o) {
  CheckLog log;
  log.name = "duality";
  const int q = o.q;
  const SuperclassHopf kappa(q);
  const KappaStarHopf star(q);
  std::vector<std::vector<LabeledSetPartition>> by_grade;
  for (int g = 0; g <= o.n; ++g) by_grade.push_back(enumerate_labeled_partitions(g, q));

  // <f g, x> = <f (x) g, Delta x> and <Delta f, x (x) y> = <f, x y>.
  for (int a = 0; a <= o.n; ++a)
    for (int b = 0; a + b <= o.n; ++b)
      for (const auto& f : by_grade[static_cast<std::size_t>(a)])
        for (const auto& g : by_grade[static_cast<std::size_t>(b)]) {
          const auto fg = star.product_basis(f, g);
          const auto xy = kappa.product_basis(f, g);
          const LabeledTensor fxg = tensor(star.basis(f), star.basis(g));
          for (const auto& x : by_grade[static_cast<std::size_t>(a + b)]) {
            log.check(duality_pairing(fg, kappa.basis(x)) == duality_pairing(fxg, kappa.coproduct_basis(x)), [&] {
              return "<f g, x> != <f (x) g, Delta x> for f=" + f.to_string() + ", g=" + g.to_string() +
                     ", x=" + x.to_string();
            });
            log.check(duality_pairing(star.coproduct_basis(x), fxg) == duality_pairing(star.basis(x), xy), [&] {
              return "<Delta f, x (x) y> != <f, x y> for f=" + x.to_string() + ", x=" + f.to_string() +
                     ", y=" + g.to_string();
            });
          }
        }

  // kappa*_mu = z_mu kappa_mu with z_mu = |G| / |K_mu| from the oracle.
  SupercharTableCache local;
  for (int g = 0; g <= o.n; ++g) {
    const SupercharTable oracle = oracle_supercharacter_table(g, q);
    for (std::size_t i = 0; i < oracle.order.size(); ++i) {
      const Rational z(group_order(g, q), oracle.class_sizes[i]);
      const auto scaled = CycRational(q, z) * LabeledElement::basis(oracle.order[i], q);
      for (const auto& nu : oracle.order)
        log.check(inner_product_kappa(scaled, LabeledElement::basis(nu, q), q, local) ==
                      CycRational(q, nu == oracle.order[i] ? 1 : 0),
                  [&] { return "z_mu does not dualize kappa_" + oracle.order[i].to_string(); });
    }
  }

  // Dual side: product_M commutes; U products agree with the M aggregation and the splitting count.
  for (int a = 0; a <= o.n; ++a)
    for (int b = 0; a + b <= o.n; ++b) {
      const auto pa = permutations_of(a), pb = permutations_of(b);
      for (const auto& alpha : pa)
        for (const auto& beta : pb)
          log.check(product_M(alpha, beta) == product_M(beta, alpha),
                    [&] { return "M product not commutative on " + alpha.to_string() + ", " + beta.to_string(); });
      for (const auto& mu : enumerate_set_partitions(a))
        for (const auto& nu : enumerate_set_partitions(b)) {
          const auto u = product_U(mu, nu);
          PermutationElement agg(1);
          for (const auto& alpha : pa)
            if (csupp(alpha) == mu)
              for (const auto& beta : pb)
                if (csupp(beta) == nu) agg += product_M(alpha, beta);
          PermutationElement expected(1);
          for (const auto& gamma : permutations_of(a + b))
            expected.add(gamma, u.coefficient(csupp(gamma)));
          log.check(agg == expected, [&] {
            return "U_" + mu.to_string() + " U_" + nu.to_string() + " disagrees with the M aggregation";
          });
          for (const auto& lambda : enumerate_set_partitions(a + b)) {
            long count = 0;
            for (std::uint32_t mask = 0; mask < (1u << lambda.block_count()); ++mask) {
              std::vector<std::size_t> in, out;
              for (std::size_t i = 0; i < lambda.block_count(); ++i) (mask & (1u << i) ? in : out).push_back(i);
              if (standardize_blocks(lambda, in) == mu && standardize_blocks(lambda, out) == nu) ++count;
            }
            log.check(u.coefficient(lambda) == CycRational(1, Rational(count)), [&] {
              return "U_" + mu.to_string() + " U_" + nu.to_string() + " coefficient of U_" + lambda.to_string() +
                     " disagrees with the splitting count";
            });
          }
        }
    }
  return log;
}

CheckLog verify_subalgebras(const VerifyOptions& o, SupercharTableCache& cache) {
  CheckLog log;
  log.name = "subalgebras";
  const int q = o.q;
  const SupercharacterHopf chi(q, cache);
  const auto labeled = labeled_up_to(o.n, q);
  for (int k : {1, 2}) {
    auto inside = [k](const LabeledSetPartition& l) { return filtration_membership(l, k); };
    for (const auto& a : labeled) {
      if (!inside(a)) continue;
      bool closed = true;
      for (const auto& [t, c] : chi.coproduct_basis(a).terms()) closed &= inside(t.first) && inside(t.second);
      log.check(closed, [&] { return "SC^(" + std::to_string(k) + ") not closed under the coproduct of " + a.to_string(); });
      for (const auto& b : labeled) {
        if (!inside(b) || a.size() + b.size() > o.n) continue;
        bool prod_closed = true;
        for (const auto& [t, c] : chi.product_basis(a, b).terms()) prod_closed &= inside(t);
        log.check(prod_closed, [&] {
          return "SC^(" + std::to_string(k) + ") not closed under " + a.to_string() + " * " + b.to_string();
        });
      }
    }
  }

  const SuperclassHopf kappa(q);
  for (int g = 0; g <= o.n; ++g) {
    const auto all = enumerate_labeled_partitions(g, q);
    const auto linear = std::count_if(all.begin(), all.end(), is_linear_index);
    Integer expected = 1;
    if (g > 0) mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(g - 1));
    log.check(Integer(static_cast<long>(linear)) == expected,
              [&] { return "LSC has dimension " + std::to_string(linear) + " in grade " + std::to_string(g); });
    if (g == 0) continue;

    std::map<LabeledSetPartition, std::size_t> column;
    for (std::size_t i = 0; i < all.size(); ++i) column.emplace(all[i], i);
    CycMatrix rows;
    for (const auto& parts : integer_compositions(g)) {
      LabeledElement prod = kappa.unit();
      for (int part : parts) prod = kappa.product(prod, kappa.basis(chain(part)));
      CycVector row(all.size(), CycRational(q));
      for (const auto& [l, c] : prod.terms()) row[column.at(l)] = c;
      rows.push_back(std::move(row));
      bool in_lsc = true;
      for (const auto& [l, c] : kappa_to_chi(prod, q, cache).terms()) in_lsc &= is_linear_index(l);
      log.check(in_lsc, [&] { return "a product of kappa_[k] leaves LSC in grade " + std::to_string(g); });
    }
    log.check(rank_of(rows) == rows.size(),
              [&] { return "kappa_[k] products are dependent in grade " + std::to_string(g); });
  }
  return log;
}

CheckLog verify_truncated(const VerifyOptions& o) {
  CheckLog log;
  log.name = "truncated";
  for (int a = 0; a <= o.n; ++a)
    for (int b = 0; a + b <= o.n; ++b) {
      const int N = a + b + 1;
      for (const auto& alpha : permutations_of(a))
        for (const auto& beta : permutations_of(b)) {
          const auto lhs = multiply_truncated(evaluate_M_truncated(alpha, N), evaluate_M_truncated(beta, N));
          const auto rhs = evaluate_M_truncated(product_M(alpha, beta), N);
          log.check(lhs == rhs, [&] {
            return "truncated product of M_" + alpha.to_string() + " and M_" + beta.to_string() + " at N=" +
                   std::to_string(N) + " disagrees with product_M";
          });
        }
    }
  return log;
}

CheckLog run_suite(const std::string& suite, const VerifyOptions& options, SupercharTableCache& cache) {
  if (options.n < 0) throw InvalidInput("n must be nonnegative");
  if (options.q < 2 || !is_prime(options.q)) throw InvalidInput("q must be prime");
  if (suite == "hopf") return verify_hopf(options, cache);
  if (suite == "iso") return verify_isomorphisms(options);
  if (suite == "oracle") return verify_oracle(options, cache);
  if (suite == "axioms") return verify_axioms(options);
  if (suite == "duality") return verify_duality(options);
  if (suite == "subalgebras") return verify_subalgebras(options, cache);
  if (suite == "truncated") return verify_truncated(options);
  throw InvalidInput("unknown suite '" + suite + "'");
}

}  // namespace nchopf
