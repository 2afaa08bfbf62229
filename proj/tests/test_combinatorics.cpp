#include <doctest.h>

#include <set>

#include "nchopf/error.hpp"
#include "nchopf/verify.hpp"
#include "support.hpp"

using namespace nchopf;
using nchopf::test::lsp;
using nchopf::test::sp;

namespace {

// Rook placements on the strict upper triangle, each rook weighted by q - 1 labels.
long brute_force_labeled_count(int n, int q) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) cells.emplace_back(i, j);
  long total = 0;
  for (std::uint32_t mask = 0; mask < (1u << cells.size()); ++mask) {
    std::set<int> rows, cols;
    bool ok = true;
    long weight = 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!(mask & (1u << c))) continue;
      ok &= rows.insert(cells[c].first).second && cols.insert(cells[c].second).second;
      weight *= q - 1;
    }
    if (ok) total += weight;
  }
  return total;
}

int brute_force_crossings(const LabeledSetPartition& lambda) {
  int count = 0;
  for (const Arc& a : lambda.arcs())
    for (const Arc& b : lambda.arcs())
      if (a.left < b.left && b.left < a.right && a.right < b.right) ++count;
  return count;
}

}  // namespace

TEST_CASE("S_n(q) has the rook-placement count") {
  for (int q : {2, 3, 5})
    for (int n = 0; n <= 5; ++n) {
      const auto all = enumerate_labeled_partitions(n, q);
      CHECK(static_cast<long>(all.size()) == brute_force_labeled_count(n, q));
      CHECK(std::set<LabeledSetPartition>(all.begin(), all.end()).size() == all.size());
      CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.arcs().size(), a.arcs()) < std::make_pair(b.arcs().size(), b.arcs());
      }));
    }
  CHECK(enumerate_labeled_partitions(3, 2).size() == 5);
}

TEST_CASE("set partitions are counted by the Bell numbers") {
  const auto bell = bell_numbers(7);
  CHECK(bell == std::vector<Integer>{1, 1, 2, 5, 15, 52, 203, 877});
  for (int n = 0; n <= 7; ++n)
    CHECK(Integer(static_cast<unsigned long>(enumerate_set_partitions(n).size())) == bell[static_cast<std::size_t>(n)]);
}

TEST_CASE("labeled set partitions parse, print and validate") {
  const auto lambda = lsp("5; 1-2-3, 3-1-4");
  CHECK(lambda.size() == 5);
  CHECK(lambda.to_string() == "5; 1-2-3, 3-1-4");
  CHECK(lsp(lambda.to_string()) == lambda);
  CHECK(lsp("3;").arcs().empty());
  CHECK_THROWS_AS(lsp("4; 1-1-3, 1-1-4"), InvalidInput);
  CHECK_THROWS_AS(lsp("4; 1-1-3, 2-1-3"), InvalidInput);
  CHECK_THROWS_AS(lsp("3; 2-1-1"), InvalidInput);
  CHECK_THROWS_AS(lsp("3; 1-0-2"), InvalidInput);
  CHECK_THROWS_AS(lsp("3; 1-2-2").check_labels(2), InvalidInput);
}

TEST_CASE("underlying set partitions and chain encodings") {
  CHECK(underlying_set_partition(lsp("4; 1-1-3, 3-1-4")) == sp("134|2"));
  for (const auto& p : enumerate_set_partitions(5)) CHECK(underlying_set_partition(p.to_arcs()) == p);
  CHECK(SetPartition::from_arcs(lsp("4; 1-1-3, 3-1-4")) == sp("134|2"));
  CHECK(sp("14|2|3").to_string() == "14|2|3");
  CHECK(sp("{}").size() == 0);
  CHECK(SetPartition::parse("1,10|2,3,4,5,6,7,8,9").size() == 10);
}

TEST_CASE("straightening by a set composition") {
  const SetComposition J({{1, 4}, {3}, {2, 5, 6}});
  std::vector<int> sizes;
  for (const auto& part : J.parts()) sizes.push_back(static_cast<int>(part.size()));
  CHECK(sizes == std::vector<int>{2, 1, 3});

  const auto pieces = straighten(lsp("6; 1-1-4, 2-2-6"), J);
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[0] == lsp("2; 1-1-2"));
  CHECK(pieces[1] == lsp("1;"));
  CHECK(pieces[2] == lsp("3; 1-2-3"));
  CHECK_THROWS_AS(straighten(lsp("6; 1-1-2"), J), InvalidInput);

  CHECK(unstraighten(lsp("3; 1-2-3"), {2, 5, 6}, 6) == lsp("6; 2-2-6"));
  CHECK(restrict_arcs(lsp("6; 1-1-4, 2-2-6"), {1, 3, 4}) == lsp("6; 1-1-4"));
}

TEST_CASE("refinement order") {
  const auto lambda = sp("13|24");
  const auto up = coarsenings(lambda);
  CHECK(up.size() == 2);
  for (const auto& mu : up) CHECK(refines(lambda, mu));
  CHECK(refinements(SetPartition::coarsest(4)).size() == 15);
  CHECK(coarsenings(SetPartition::finest(4)).size() == 15);
  CHECK(common_refinement(sp("12|34"), sp("13|24")) == SetPartition::finest(4));
  CHECK_FALSE(refines(sp("12|34"), sp("13|24")));
  CHECK(concat(sp("12"), sp("1|2")) == sp("12|3|4"));
}

TEST_CASE("crossings match a direct count") {
  CHECK(crossing_statistic(lsp("4; 1-1-3, 2-1-4")) == 1);
  CHECK(crossing_statistic(lsp("4; 1-1-4, 2-1-3")) == 0);
  for (const auto& l : enumerate_labeled_partitions(6, 2)) CHECK(crossing_statistic(l) == brute_force_crossings(l));
}

TEST_CASE("subset helpers") {
  CHECK(subset_from_mask(0b1011, 4) == std::vector<int>{1, 2, 4});
  CHECK(complement({1, 2, 4}, 5) == std::vector<int>{3, 5});
  CHECK(SetComposition::split(4, {2, 3}).parts() == std::vector<std::vector<int>>{{2, 3}, {1, 4}});
  CHECK(SetComposition::intervals({2, 1}).parts() == std::vector<std::vector<int>>{{1, 2}, {3}});
}
