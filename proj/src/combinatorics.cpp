#include "nchopf/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nchopf/error.hpp"
#include "nchopf/scalars.hpp"

namespace nchopf {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return (c >= '0' && c <= '9') || c == '-'; }))
    throw InvalidInput("expected an integer, got '" + s + "'");
  return std::stoi(t);
}

// Restricted growth strings of length n: a[i] <= 1 + max(a[0..i-1]).
template <class F>
void for_each_rgs(int n, F&& visit) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    visit(a, 0);
    return;
  }
  std::vector<int> maxes(static_cast<std::size_t>(n), 0);
  // Iterative odometer in lexicographic order.
  while (true) {
    visit(a, maxes.back() + 1);
    int i = n - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] == maxes[static_cast<std::size_t>(i - 1)] + 1) --i;
    if (i == 0) return;
    ++a[static_cast<std::size_t>(i)];
    maxes[static_cast<std::size_t>(i)] = std::max(maxes[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
    for (int k = i + 1; k < n; ++k) {
      a[static_cast<std::size_t>(k)] = 0;
      maxes[static_cast<std::size_t>(k)] = maxes[static_cast<std::size_t>(k - 1)];
    }
  }
}

// Union-find components of the arc graph on [n].
std::vector<std::vector<int>> components(const LabeledSetPartition& lambda) {
  const int n = lambda.size();
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const Arc& a : lambda.arcs()) parent[static_cast<std::size_t>(find(a.right))] = find(a.left);
  std::vector<std::vector<int>> blocks;
  std::vector<int> slot(static_cast<std::size_t>(n + 1), -1);
  for (int i = 1; i <= n; ++i) {
    const int r = find(i);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(i);
  }
  return blocks;
}

}  // namespace

// ---------------------------------------------------------------------------
// LabeledSetPartition

LabeledSetPartition::LabeledSetPartition(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 0) throw InvalidInput("partition size must be nonnegative");
  std::sort(arcs_.begin(), arcs_.end());
  std::vector<char> left_used(static_cast<std::size_t>(n_ + 1), 0), right_used(static_cast<std::size_t>(n_ + 1), 0);
  for (const Arc& a : arcs_) {
    if (a.left < 1 || a.right > n_ || a.left >= a.right)
      throw InvalidInput("arc " + std::to_string(a.left) + "-" + std::to_string(a.label) + "-" +
                         std::to_string(a.right) + " is not an arc i<j inside [" + std::to_string(n_) + "]");
    if (a.label < 1) throw InvalidInput("arc labels must be nonzero field elements");
    if (left_used[static_cast<std::size_t>(a.left)]++ || right_used[static_cast<std::size_t>(a.right)]++)
      throw InvalidInput("two arcs share an endpoint on the same side");
  }
}

LabeledSetPartition LabeledSetPartition::parse(const std::string& text) {
  const auto semi = text.find(';');
  const int n = parse_int(semi == std::string::npos ? text : text.substr(0, semi));
  std::vector<Arc> arcs;
  if (semi != std::string::npos) {
    const std::string rest = trim(text.substr(semi + 1));
    if (!rest.empty()) {
      for (const auto& item : split(rest, ',')) {
        const auto fields = split(trim(item), '-');
        if (fields.size() != 3) throw InvalidInput("arc '" + item + "' is not of the form i-a-j");
        arcs.push_back({parse_int(fields[0]), parse_int(fields[2]), parse_int(fields[1])});
      }
    }
  }
  return LabeledSetPartition(n, std::move(arcs));
}

void LabeledSetPartition::check_labels(int q) const {
  for (const Arc& a : arcs_)
    if (a.label < 1 || a.label >= q)
      throw InvalidInput("arc label " + std::to_string(a.label) + " is not a nonzero element of F_" +
                         std::to_string(q));
}

std::string LabeledSetPartition::to_string() const {
  std::ostringstream os;
  os << n_ << ";";
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    os << (i ? ", " : " ") << arcs_[i].left << "-" << arcs_[i].label << "-" << arcs_[i].right;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LabeledSetPartition& lambda) { return os << lambda.to_string(); }

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 0) throw InvalidInput("partition size must be nonnegative");
  std::vector<char> seen(static_cast<std::size_t>(n_ + 1), 0);
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidInput("set partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n_) throw InvalidInput("block element " + std::to_string(x) + " outside [n]");
      if (seen[static_cast<std::size_t>(x)]++) throw InvalidInput("blocks are not disjoint");
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), 1) != n_) throw InvalidInput("blocks do not cover [n]");
  std::sort(blocks_.begin(), blocks_.end());
}

SetPartition SetPartition::finest(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::coarsest(int n) {
  if (n == 0) return SetPartition();
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return SetPartition(n, {all});
}

SetPartition SetPartition::parse(const std::string& raw, int n) {
  const std::string text = trim(raw);
  std::vector<std::vector<int>> blocks;
  if (!text.empty() && text != "{}") {
    const bool commas = text.find(',') != std::string::npos;
    for (const auto& part : split(text, '|')) {
      std::vector<int> block;
      const std::string p = trim(part);
      if (commas) {
        for (const auto& tok : split(p, ',')) block.push_back(parse_int(tok));
      } else {
        for (char c : p) {
          if (c < '1' || c > '9') throw InvalidInput("bad character in set partition '" + raw + "'");
          block.push_back(c - '0');
        }
      }
      blocks.push_back(std::move(block));
    }
  }
  if (n < 0) {
    n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
  }
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::from_arcs(const LabeledSetPartition& lambda) { return underlying_set_partition(lambda); }

std::vector<int> SetPartition::block_index() const {
  std::vector<int> idx(static_cast<std::size_t>(n_), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int x : blocks_[b]) idx[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
  return idx;
}

LabeledSetPartition SetPartition::to_arcs() const {
  std::vector<Arc> arcs;
  for (const auto& b : blocks_)
    for (std::size_t i = 1; i < b.size(); ++i) arcs.push_back({b[i - 1], b[i], 1});
  return LabeledSetPartition(n_, std::move(arcs));
}

std::string SetPartition::to_string() const {
  if (n_ == 0) return "{}";
  const bool commas = n_ > 9;
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << "|";
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (commas && i) os << ",";
      os << blocks_[b][i];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SetPartition& lambda) { return os << lambda.to_string(); }

// ---------------------------------------------------------------------------
// SetComposition

SetComposition::SetComposition(std::vector<std::vector<int>> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_) n_ += static_cast<int>(p.size());
  std::vector<char> seen(static_cast<std::size_t>(n_ + 1), 0);
  for (auto& p : parts_) {
    if (p.empty()) throw InvalidInput("set composition parts must be nonempty");
    std::sort(p.begin(), p.end());
    for (int x : p) {
      if (x < 1 || x > n_ || seen[static_cast<std::size_t>(x)]++)
        throw InvalidInput("set composition parts must be disjoint and cover [n]");
    }
  }
}

SetComposition SetComposition::split(int n, const std::vector<int>& subset) {
  std::vector<std::vector<int>> parts;
  if (!subset.empty()) parts.push_back(subset);
  auto rest = complement(subset, n);
  if (!rest.empty()) parts.push_back(std::move(rest));
  return SetComposition(std::move(parts));
}

SetComposition SetComposition::intervals(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> parts;
  int next = 1;
  for (int s : sizes) {
    std::vector<int> part;
    for (int i = 0; i < s; ++i) part.push_back(next++);
    parts.push_back(std::move(part));
  }
  return SetComposition(std::move(parts));
}

std::vector<int> SetComposition::part_index() const {
  std::vector<int> idx(static_cast<std::size_t>(n_), -1);
  for (std::size_t b = 0; b < parts_.size(); ++b)
    for (int x : parts_[b]) idx[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
  return idx;
}

// ---------------------------------------------------------------------------
// Operations

std::vector<LabeledSetPartition> enumerate_labeled_partitions(int n, int q) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  if (q < 2 || !is_prime(q)) throw InvalidInput("q must be a prime, got " + std::to_string(q));
  std::vector<LabeledSetPartition> out;
  std::vector<Arc> arcs;
  std::vector<char> left_used(static_cast<std::size_t>(n + 1), 0);
  // Decide, for each right endpoint j, which free left endpoint (if any) feeds it.
  auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      out.emplace_back(n, arcs);
      return;
    }
    self(self, j + 1);
    for (int i = 1; i < j; ++i) {
      if (left_used[static_cast<std::size_t>(i)]) continue;
      left_used[static_cast<std::size_t>(i)] = 1;
      for (int a = 1; a < q; ++a) {
        arcs.push_back({i, j, a});
        self(self, j + 1);
        arcs.pop_back();
      }
      left_used[static_cast<std::size_t>(i)] = 0;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const LabeledSetPartition& a, const LabeledSetPartition& b) {
    if (a.arcs().size() != b.arcs().size()) return a.arcs().size() < b.arcs().size();
    return a.arcs() < b.arcs();
  });
  return out;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  std::vector<SetPartition> out;
  for_each_rgs(n, [&](const std::vector<int>& a, int count) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(n == 0 ? 0 : count));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.emplace_back(n, std::move(blocks));
  });
  std::sort(out.begin(), out.end());
  return out;
}

SetPartition underlying_set_partition(const LabeledSetPartition& lambda) {
  return SetPartition(lambda.size(), components(lambda));
}

LabeledSetPartition concat(const LabeledSetPartition& lambda, const LabeledSetPartition& mu) {
  std::vector<Arc> arcs = lambda.arcs();
  const int k = lambda.size();
  for (const Arc& a : mu.arcs()) arcs.push_back({a.left + k, a.right + k, a.label});
  return LabeledSetPartition(k + mu.size(), std::move(arcs));
}

SetPartition concat(const SetPartition& lambda, const SetPartition& mu) {
  auto blocks = lambda.blocks();
  const int k = lambda.size();
  for (auto b : mu.blocks()) {
    for (int& x : b) x += k;
    blocks.push_back(std::move(b));
  }
  return SetPartition(k + mu.size(), std::move(blocks));
}

std::vector<LabeledSetPartition> straighten(const LabeledSetPartition& lambda, const SetComposition& parts) {
  if (parts.size() != lambda.size())
    throw DimensionMismatch("set composition covers [" + std::to_string(parts.size()) + "], partition has size " +
                            std::to_string(lambda.size()));
  const auto idx = parts.part_index();
  // rank[i-1] = position of i inside its part, 1-based.
  std::vector<int> rank(static_cast<std::size_t>(lambda.size()), 0);
  for (const auto& p : parts.parts())
    for (std::size_t r = 0; r < p.size(); ++r) rank[static_cast<std::size_t>(p[r] - 1)] = static_cast<int>(r + 1);
  std::vector<std::vector<Arc>> arcs(parts.parts().size());
  for (const Arc& a : lambda.arcs()) {
    const int pl = idx[static_cast<std::size_t>(a.left - 1)];
    if (pl != idx[static_cast<std::size_t>(a.right - 1)])
      throw InvalidInput("arc " + std::to_string(a.left) + "-" + std::to_string(a.label) + "-" +
                         std::to_string(a.right) + " straddles two parts of the set composition");
    arcs[static_cast<std::size_t>(pl)].push_back(
        {rank[static_cast<std::size_t>(a.left - 1)], rank[static_cast<std::size_t>(a.right - 1)], a.label});
  }
  std::vector<LabeledSetPartition> out;
  for (std::size_t b = 0; b < arcs.size(); ++b)
    out.emplace_back(static_cast<int>(parts.parts()[b].size()), std::move(arcs[b]));
  return out;
}

LabeledSetPartition unstraighten(const LabeledSetPartition& mu, const std::vector<int>& positions, int n) {
  if (static_cast<int>(positions.size()) != mu.size())
    throw DimensionMismatch("subset has " + std::to_string(positions.size()) + " elements, partition has size " +
                            std::to_string(mu.size()));
  if (!std::is_sorted(positions.begin(), positions.end()) ||
      std::adjacent_find(positions.begin(), positions.end()) != positions.end())
    throw InvalidInput("subset must be strictly increasing");
  if (!positions.empty() && (positions.front() < 1 || positions.back() > n))
    throw InvalidInput("subset is not inside [n]");
  std::vector<Arc> arcs;
  for (const Arc& a : mu.arcs())
    arcs.push_back({positions[static_cast<std::size_t>(a.left - 1)], positions[static_cast<std::size_t>(a.right - 1)], a.label});
  return LabeledSetPartition(n, std::move(arcs));
}

LabeledSetPartition restrict_arcs(const LabeledSetPartition& lambda, const std::vector<int>& subset) {
  std::vector<char> in(static_cast<std::size_t>(lambda.size() + 1), 0);
  for (int x : subset) {
    if (x < 1 || x > lambda.size()) throw InvalidInput("subset is not inside [n]");
    in[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<Arc> arcs;
  for (const Arc& a : lambda.arcs())
    if (in[static_cast<std::size_t>(a.left)] && in[static_cast<std::size_t>(a.right)]) arcs.push_back(a);
  return LabeledSetPartition(lambda.size(), std::move(arcs));
}

SetPartition common_refinement(const SetPartition& rho, const SetPartition& sigma) {
  if (rho.size() != sigma.size()) throw DimensionMismatch("set partitions of different sizes");
  std::vector<std::vector<int>> blocks;
  for (const auto& a : rho.blocks())
    for (const auto& b : sigma.blocks()) {
      std::vector<int> meet;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
      if (!meet.empty()) blocks.push_back(std::move(meet));
    }
  return SetPartition(rho.size(), std::move(blocks));
}

std::vector<SetPartition> coarsenings(const SetPartition& lambda) {
  const int b = static_cast<int>(lambda.block_count());
  std::vector<SetPartition> out;
  for_each_rgs(b, [&](const std::vector<int>& a, int count) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(b == 0 ? 0 : count));
    for (int i = 0; i < b; ++i) {
      auto& target = blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
      const auto& src = lambda.blocks()[static_cast<std::size_t>(i)];
      target.insert(target.end(), src.begin(), src.end());
    }
    out.emplace_back(lambda.size(), std::move(blocks));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> refinements(const SetPartition& lambda) {
  std::vector<std::vector<std::vector<int>>> partial{{}};
  for (const auto& block : lambda.blocks()) {
    std::vector<std::vector<std::vector<int>>> next;
    const int m = static_cast<int>(block.size());
    std::vector<std::vector<std::vector<int>>> splits;
    for_each_rgs(m, [&](const std::vector<int>& a, int count) {
      std::vector<std::vector<int>> parts(static_cast<std::size_t>(count));
      for (int i = 0; i < m; ++i) parts[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])].push_back(block[static_cast<std::size_t>(i)]);
      splits.push_back(std::move(parts));
    });
    for (const auto& base : partial)
      for (const auto& s : splits) {
        auto merged = base;
        merged.insert(merged.end(), s.begin(), s.end());
        next.push_back(std::move(merged));
      }
    partial = std::move(next);
  }
  std::vector<SetPartition> out;
  for (auto& blocks : partial) out.emplace_back(lambda.size(), std::move(blocks));
  std::sort(out.begin(), out.end());
  return out;
}

bool refines(const SetPartition& finer, const SetPartition& coarser) {
  if (finer.size() != coarser.size()) return false;
  const auto idx = coarser.block_index();
  for (const auto& b : finer.blocks())
    for (int x : b)
      if (idx[static_cast<std::size_t>(x - 1)] != idx[static_cast<std::size_t>(b.front() - 1)]) return false;
  return true;
}

int crossing_statistic(const LabeledSetPartition& lambda) {
  int count = 0;
  const auto& arcs = lambda.arcs();
  for (const Arc& a : arcs)
    for (const Arc& b : arcs)
      if (a.left < b.left && b.left < a.right && a.right < b.right) ++count;
  return count;
}

std::vector<int> subset_from_mask(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

std::vector<int> complement(const std::vector<int>& subset, int n) {
  std::vector<char> in(static_cast<std::size_t>(n + 1), 0);
  for (int x : subset)
    if (x >= 1 && x <= n) in[static_cast<std::size_t>(x)] = 1;
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace nchopf
