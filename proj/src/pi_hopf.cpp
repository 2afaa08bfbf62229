#include "nchopf/pi_hopf.hpp"

#include <algorithm>
#include <set>

#include "nchopf/error.hpp"

namespace nchopf {

namespace {

// Visits every partial matching between [0, left) and [0, right) as a vector
// match[i] in {-1, 0..right-1}.
template <class F>
void for_each_partial_matching(std::size_t left, std::size_t right, F&& visit) {
  std::vector<int> match(left, -1);
  std::vector<char> used(right, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == left) {
      visit(match);
      return;
    }
    match[i] = -1;
    self(self, i + 1);
    for (std::size_t j = 0; j < right; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      match[i] = static_cast<int>(j);
      self(self, i + 1);
      used[j] = 0;
    }
    match[i] = -1;
  };
  rec(rec, 0);
}

std::vector<std::vector<int>> merged_blocks(const SetPartition& lambda, const SetPartition& mu,
                                            const std::vector<int>& match) {
  const int k = lambda.size();
  std::vector<std::vector<int>> shifted;
  for (auto b : mu.blocks()) {
    for (int& x : b) x += k;
    shifted.push_back(std::move(b));
  }
  std::vector<char> used(shifted.size(), 0);
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < lambda.blocks().size(); ++i) {
    auto b = lambda.blocks()[i];
    if (match[i] >= 0) {
      const auto& s = shifted[static_cast<std::size_t>(match[i])];
      b.insert(b.end(), s.begin(), s.end());
      used[static_cast<std::size_t>(match[i])] = 1;
    }
    blocks.push_back(std::move(b));
  }
  for (std::size_t j = 0; j < shifted.size(); ++j)
    if (!used[j]) blocks.push_back(shifted[j]);
  return blocks;
}

std::vector<int> union_of_blocks(const SetPartition& lambda, const std::vector<std::size_t>& chosen) {
  std::vector<int> a;
  for (std::size_t b : chosen) a.insert(a.end(), lambda.blocks()[b].begin(), lambda.blocks()[b].end());
  std::sort(a.begin(), a.end());
  return a;
}

template <class F>
void for_each_block_split(const SetPartition& lambda, F&& visit) {
  const std::size_t count = lambda.block_count();
  if (count >= 32) throw BoundExceeded("too many blocks for coproduct enumeration");
  for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
    std::vector<std::size_t> in, out;
    for (std::size_t b = 0; b < count; ++b) (mask & (1u << b) ? in : out).push_back(b);
    visit(in, out);
  }
}

}  // namespace

SetPartition standardize_blocks(const SetPartition& lambda, const std::vector<std::size_t>& chosen) {
  const auto a = union_of_blocks(lambda, chosen);
  std::vector<int> rank(static_cast<std::size_t>(lambda.size() + 1), 0);
  for (std::size_t r = 0; r < a.size(); ++r) rank[static_cast<std::size_t>(a[r])] = static_cast<int>(r + 1);
  std::vector<std::vector<int>> blocks;
  for (std::size_t b : chosen) {
    std::vector<int> block;
    for (int x : lambda.blocks()[b]) block.push_back(rank[static_cast<std::size_t>(x)]);
    blocks.push_back(std::move(block));
  }
  return SetPartition(static_cast<int>(a.size()), std::move(blocks));
}

PartitionElement product_m(const SetPartition& lambda, const SetPartition& mu, int conductor) {
  const int n = lambda.size() + mu.size();
  PartitionElement out(conductor);
  std::set<SetPartition> seen;
  for_each_partial_matching(lambda.block_count(), mu.block_count(), [&](const std::vector<int>& match) {
    SetPartition nu(n, merged_blocks(lambda, mu, match));
    if (!seen.insert(nu).second)
      throw VerificationFailure("monomial product produced " + nu.to_string() + " twice");
    out.add(nu, CycRational(conductor, 1));
  });
  return out;
}

PartitionTensor coproduct_m(const SetPartition& lambda, int conductor) {
  PartitionTensor out(conductor);
  for_each_block_split(lambda, [&](const auto& in, const auto& rest) {
    out.add({standardize_blocks(lambda, in), standardize_blocks(lambda, rest)}, CycRational(conductor, 1));
  });
  return out;
}

PartitionElement product_p(const SetPartition& lambda, const SetPartition& mu, int conductor) {
  return PartitionElement::basis(concat(lambda, mu), conductor);
}

PartitionTensor coproduct_p(const SetPartition& lambda, int conductor) { return coproduct_m(lambda, conductor); }

PartitionElement p_to_m(const PartitionElement& x) {
  PartitionElement out(x.conductor());
  for (const auto& [lambda, c] : x.terms())
    for (const auto& mu : coarsenings(lambda)) out.add(mu, c);
  return out;
}

PartitionElement m_to_p(const PartitionElement& x) {
  // m_lambda = p_lambda - sum_{mu strictly coarser} m_mu, solved from the top down.
  std::map<SetPartition, PartitionElement> memo;
  const int p = x.conductor();
  auto solve = [&](auto&& self, const SetPartition& lambda) -> const PartitionElement& {
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
    PartitionElement result = PartitionElement::basis(lambda, p);
    for (const auto& mu : coarsenings(lambda))
      if (mu != lambda) result -= self(self, mu);
    return memo.emplace(lambda, std::move(result)).first->second;
  };
  PartitionElement out(p);
  for (const auto& [lambda, c] : x.terms()) out.add(solve(solve, lambda), c);
  return out;
}

// ---------------------------------------------------------------------------

int primitive_root(int q) {
  if (q < 2 || !is_prime(q)) throw InvalidInput("q must be prime");
  if (q == 2) return 1;
  for (int g = 2; g < q; ++g) {
    int x = 1, order = 0;
    do {
      x = x * g % q;
      ++order;
    } while (x != 1);
    if (order == q - 1) return g;
  }
  throw InvalidInput("no primitive root found");
}

int discrete_log(int a, int q) {
  if (a <= 0 || a >= q) throw InvalidInput("discrete log argument must be a nonzero element of F_q");
  const int g = primitive_root(q);
  int x = 1;
  for (int e = 0; e < q - 1; ++e) {
    if (x == a) return e;
    x = x * g % q;
  }
  throw InvalidInput("discrete log failed");
}

ColoredElement expand_k_in_colored_m(const LabeledSetPartition& lambda, int q) {
  const int r = q - 1;
  if (r < 1) throw InvalidInput("the colored expansion needs q >= 2");
  lambda.check_labels(q);
  const int n = lambda.size();
  const SetPartition base = underlying_set_partition(lambda);
  // step[j] = color increment from the left end of the arc ending at j.
  std::vector<int> step(static_cast<std::size_t>(n + 1), 0);
  for (const Arc& a : lambda.arcs()) step[static_cast<std::size_t>(a.right)] = discrete_log(a.label, q);

  ColoredElement out(q);
  const std::size_t blocks = base.block_count();
  std::vector<int> start(blocks, 0);
  while (true) {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < blocks; ++b) {
      const auto& block = base.blocks()[b];
      int c = start[b];
      colors[static_cast<std::size_t>(block.front() - 1)] = c;
      for (std::size_t i = 1; i < block.size(); ++i) {
        c = (c + step[static_cast<std::size_t>(block[i])]) % r;
        colors[static_cast<std::size_t>(block[i] - 1)] = c;
      }
    }
    out.add(ColoredIndex{base, std::move(colors), r}, CycRational(q, 1));
    std::size_t b = 0;
    while (b < blocks && ++start[b] == r) start[b++] = 0;
    if (b == blocks) break;
  }
  return out;
}

ColoredElement expand_k_in_colored_m(const LabeledElement& x, int q) {
  ColoredElement out(q);
  for (const auto& [lambda, c] : x.terms()) out.add(expand_k_in_colored_m(lambda, q), c);
  return out;
}

ColoredMonomialHopf::Element ColoredMonomialHopf::product_basis(const ColoredIndex& a, const ColoredIndex& b) const {
  Element out(conductor());
  std::vector<int> colors = a.colors;
  colors.insert(colors.end(), b.colors.begin(), b.colors.end());
  for (const auto& [nu, c] : product_m(a.partition, b.partition, conductor()).terms())
    out.add(ColoredIndex{nu, colors, r_}, c);
  return out;
}

ColoredMonomialHopf::Tensor ColoredMonomialHopf::coproduct_basis(const ColoredIndex& a) const {
  Tensor out(conductor());
  auto restricted = [&](const std::vector<std::size_t>& chosen) {
    std::vector<int> colors;
    for (int x : union_of_blocks(a.partition, chosen)) colors.push_back(a.colors[static_cast<std::size_t>(x - 1)]);
    return ColoredIndex{standardize_blocks(a.partition, chosen), std::move(colors), r_};
  };
  for_each_block_split(a.partition, [&](const auto& in, const auto& rest) {
    out.add({restricted(in), restricted(rest)}, CycRational(conductor(), 1));
  });
  return out;
}

LabeledElement product_k(const LabeledSetPartition& mu, const LabeledSetPartition& nu, int q) {
  return product_kappa(mu, nu, q);
}

LabeledTensor coproduct_k(const LabeledSetPartition& lambda, int q) { return coproduct_kappa(lambda, q); }

PartitionElement ch_to_monomial(const LabeledElement& x) {
  if (x.conductor() > 2) throw InvalidInput("the monomial image of ch is defined for q = 2");
  PartitionElement out(2);
  for (const auto& [mu, c] : x.terms()) {
    mu.check_labels(2);
    out.add(underlying_set_partition(mu), c);
  }
  return out;
}

LabeledElement ch_to_k(const LabeledElement& x) { return x; }

}  // namespace nchopf
