#include "nchopf/dual_hopf.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

#include "nchopf/error.hpp"

namespace nchopf {

namespace {

// Visits every k-subset of [n] as (A, A^c), A sorted, in increasing mask order.
template <class F>
void for_each_k_subset(int n, int k, F&& visit) {
  if (n >= 32) throw BoundExceeded("too many positions for subset enumeration");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    const auto a = subset_from_mask(mask, n);
    visit(a, complement(a, n));
  }
}

std::vector<int> iota_range(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// kappa*

LabeledElement product_kappa_star(const LabeledSetPartition& mu, const LabeledSetPartition& nu, int q) {
  const int k = mu.size(), n = k + nu.size();
  LabeledElement out(q);
  for_each_k_subset(n, k, [&](const std::vector<int>& a, const std::vector<int>& ac) {
    std::vector<Arc> arcs = unstraighten(mu, a, n).arcs();
    const auto rest = unstraighten(nu, ac, n).arcs();
    arcs.insert(arcs.end(), rest.begin(), rest.end());
    out.add(LabeledSetPartition(n, std::move(arcs)), CycRational(q, 1));
  });
  return out;
}

LabeledTensor coproduct_kappa_star(const LabeledSetPartition& lambda, int q) {
  const int n = lambda.size();
  LabeledTensor out(q);
  for (int k = 0; k <= n; ++k)
    out.add({straightened_restriction(lambda, iota_range(1, k)), straightened_restriction(lambda, iota_range(k + 1, n))},
            CycRational(q, 1));
  return out;
}

KappaStarHopf::KappaStarHopf(int q) : GradedHopfAlgebra(q), q_(q) {
  if (q < 2 || !is_prime(q)) throw InvalidInput("q must be prime");
}

CycRational duality_pairing(const LabeledElement& f, const LabeledElement& x) {
  CycRational out(f.conductor() != 1 ? f.conductor() : x.conductor());
  for (const auto& [mu, c] : f.terms()) {
    const CycRational d = x.coefficient(mu);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

CycRational duality_pairing(const LabeledTensor& f, const LabeledTensor& x) {
  CycRational out(f.conductor() != 1 ? f.conductor() : x.conductor());
  for (const auto& [key, c] : f.terms()) {
    const CycRational d = x.coefficient(key);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size() + 1, 0);
  for (int x : word_) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
      throw InvalidInput("permutation word is not a bijection of [" + std::to_string(size()) + "]");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int n) { return Permutation(iota_range(1, n)); }

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> word = iota_range(1, n);
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int x = c[i];
      if (x < 1 || x > n) throw InvalidInput("cycle entry " + std::to_string(x) + " is outside [n]");
      if (used[static_cast<std::size_t>(x)]) throw InvalidInput("cycles are not disjoint");
      used[static_cast<std::size_t>(x)] = 1;
      word[static_cast<std::size_t>(x - 1)] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(word));
}

namespace {

// "312" -> {3,1,2}; "3,1,2" -> {3,1,2}.
std::vector<int> parse_entries(const std::string& text) {
  std::vector<int> out;
  const bool commas = text.find(',') != std::string::npos;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (!std::all_of(token.begin(), token.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw InvalidInput("bad permutation entry '" + token + "'");
    out.push_back(std::stoi(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ') continue;
    if (commas) {
      if (ch == ',') flush();
      else token += ch;
    } else {
      token = std::string(1, ch);
      flush();
    }
  }
  flush();
  return out;
}

}  // namespace

Permutation Permutation::parse(const std::string& text) {
  if (text.find('(') == std::string::npos) return Permutation(parse_entries(text));
  std::vector<std::vector<int>> cycles;
  int n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw InvalidInput("bad cycle notation '" + text + "'");
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw InvalidInput("unbalanced parenthesis in '" + text + "'");
    auto cycle = parse_entries(text.substr(pos + 1, close - pos - 1));
    for (int x : cycle) n = std::max(n, x);
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return from_cycles(n, cycles);
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(word_.size() + 1, 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
    }
    std::rotate(cycle.begin(), std::max_element(cycle.begin(), cycle.end()), cycle.end());
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  if (word_.empty()) return "()";
  const bool commas = size() > 9;
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i && commas ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& sigma) { return os << sigma.to_string(); }

SetPartition csupp(const Permutation& sigma) { return SetPartition(sigma.size(), sigma.cycles()); }

PermutationElement product_M(const Permutation& alpha, const Permutation& beta, int conductor) {
  const int m = alpha.size(), n = m + beta.size();
  PermutationElement out(conductor);
  for_each_k_subset(n, m, [&](const std::vector<int>& a, const std::vector<int>& ac) {
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 1; i <= m; ++i)
      word[static_cast<std::size_t>(a[static_cast<std::size_t>(i - 1)] - 1)] = a[static_cast<std::size_t>(alpha(i) - 1)];
    for (int j = 1; j <= beta.size(); ++j)
      word[static_cast<std::size_t>(ac[static_cast<std::size_t>(j - 1)] - 1)] = ac[static_cast<std::size_t>(beta(j) - 1)];
    out.add(Permutation(std::move(word)), CycRational(conductor, 1));
  });
  return out;
}

PermutationElement product_M(const PermutationElement& x, const PermutationElement& y) {
  const int p = x.conductor() != 1 ? x.conductor() : y.conductor();
  PermutationElement out(p);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add(product_M(a, b, p), ca * cb);
  return out;
}

// ---------------------------------------------------------------------------
// U and V

PartitionElement product_U(const SetPartition& mu, const SetPartition& nu, int conductor) {
  const int k = mu.size(), n = k + nu.size();
  PartitionElement out(conductor);
  for_each_k_subset(n, k, [&](const std::vector<int>& a, const std::vector<int>& ac) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : mu.blocks()) {
      std::vector<int> block;
      for (int x : b) block.push_back(a[static_cast<std::size_t>(x - 1)]);
      blocks.push_back(std::move(block));
    }
    for (const auto& b : nu.blocks()) {
      std::vector<int> block;
      for (int x : b) block.push_back(ac[static_cast<std::size_t>(x - 1)]);
      blocks.push_back(std::move(block));
    }
    out.add(SetPartition(n, std::move(blocks)), CycRational(conductor, 1));
  });
  return out;
}

PartitionTensor coproduct_U(const SetPartition& lambda, int conductor) {
  const int n = lambda.size();
  PartitionTensor out(conductor);
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<int>> left, right;
    bool straddles = false;
    for (const auto& b : lambda.blocks()) {
      if (b.back() <= k) {
        left.push_back(b);
      } else if (b.front() > k) {
        std::vector<int> shifted;
        for (int x : b) shifted.push_back(x - k);
        right.push_back(std::move(shifted));
      } else {
        straddles = true;
        break;
      }
    }
    if (straddles) continue;
    out.add({SetPartition(k, std::move(left)), SetPartition(n - k, std::move(right))}, CycRational(conductor, 1));
  }
  return out;
}

PartitionElement V_from_U(const SetPartition& mu, int conductor) {
  PartitionElement out(conductor);
  for (const auto& nu : refinements(mu)) out.add(nu, CycRational(conductor, 1));
  return out;
}

PartitionElement v_to_u(const PartitionElement& x) {
  PartitionElement out(x.conductor());
  for (const auto& [mu, c] : x.terms()) out.add(V_from_U(mu, x.conductor()), c);
  return out;
}

PartitionElement u_to_v(const PartitionElement& x) {
  // U_mu = V_mu - sum over strict refinements nu of U_nu, solved from the finest partitions up.
  std::map<SetPartition, PartitionElement> memo;
  const int p = x.conductor();
  auto solve = [&](auto&& self, const SetPartition& mu) -> const PartitionElement& {
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;
    PartitionElement result = PartitionElement::basis(mu, p);
    for (const auto& nu : refinements(mu))
      if (nu != mu) result -= self(self, nu);
    return memo.emplace(mu, std::move(result)).first->second;
  };
  PartitionElement out(p);
  for (const auto& [mu, c] : x.terms()) out.add(solve(solve, mu), c);
  return out;
}

PartitionElement dual_ch(const LabeledElement& x) {
  if (x.conductor() > 2) throw InvalidInput("dual_ch is only defined for q = 2");
  PartitionElement out(x.conductor());
  for (const auto& [mu, c] : x.terms()) {
    mu.check_labels(2);
    out.add(underlying_set_partition(mu), c);
  }
  return out;
}

LabeledElement dual_ch_inverse(const PartitionElement& v) {
  if (v.conductor() > 2) throw InvalidInput("dual_ch is only defined for q = 2");
  LabeledElement out(2);
  for (const auto& [mu, c] : v.terms()) out.add(mu.to_arcs(), c);
  return out;
}

// ---------------------------------------------------------------------------
// x_ij realization

XPolynomial evaluate_M_truncated(const Permutation& sigma, int N) {
  const int n = sigma.size();
  XPolynomial out;
  if (N < n) return out;
  for_each_k_subset(N, n, [&](const std::vector<int>& idx, const std::vector<int>&) {
    XMonomial mono;
    for (int t = 1; t <= n; ++t)
      mono.emplace_back(idx[static_cast<std::size_t>(t - 1)], idx[static_cast<std::size_t>(sigma(t) - 1)]);
    std::sort(mono.begin(), mono.end());
    out[mono] += 1;
  });
  return out;
}

XPolynomial evaluate_M_truncated(const PermutationElement& x, int N) {
  XPolynomial out;
  for (const auto& [sigma, c] : x.terms()) {
    if (!c.is_rational() || c.rational_part().get_den() != 1)
      throw InvalidInput("truncated evaluation needs integer coefficients");
    const long long k = c.rational_part().get_num().get_si();
    for (const auto& [mono, d] : evaluate_M_truncated(sigma, N)) {
      auto& slot = out[mono];
      slot += k * d;
      if (slot == 0) out.erase(mono);
    }
  }
  return out;
}

XPolynomial multiply_truncated(const XPolynomial& a, const XPolynomial& b) {
  XPolynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      XMonomial mono = ma;
      mono.insert(mono.end(), mb.begin(), mb.end());
      std::vector<int> rows, cols;
      for (const auto& [i, j] : mono) {
        rows.push_back(i);
        cols.push_back(j);
      }
      std::sort(rows.begin(), rows.end());
      std::sort(cols.begin(), cols.end());
      if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) continue;
      if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) continue;
      std::sort(mono.begin(), mono.end());
      auto& slot = out[mono];
      slot += ca * cb;
      if (slot == 0) out.erase(mono);
    }
  }
  return out;
}

}  // namespace nchopf
