#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nchopf/dual_hopf.hpp"
#include "nchopf/error.hpp"
#include "nchopf/group_oracle.hpp"
#include "support.hpp"

using namespace nchopf;
using nchopf::test::cyc;
using nchopf::test::lsp;
using nchopf::test::sp;

namespace {

// kappa*_lambda as a function on UT_n(q): z_lambda times the superclass indicator.
RawFunction dual_function(const LabeledSetPartition& lambda, int q) {
  const UTGroup g(lambda.size(), q);
  const auto members = superclass_of(g, lambda);
  const CycRational z(q, Rational(static_cast<unsigned long>(g.order()), static_cast<unsigned long>(members.size())));
  RawFunction f{q, {lambda.size()}, std::vector<CycRational>(g.order(), CycRational(q))};
  for (std::size_t c : members) f.values[c] = z;
  return f;
}

// z_lambda = |G| / |K_lambda|.
CycRational z_of(const UTGroup& g, const LabeledSetPartition& lambda, int q) {
  return CycRational(q, Rational(static_cast<unsigned long>(g.order()),
                                 static_cast<unsigned long>(superclass_of(g, lambda).size())));
}

// Coordinates of a superclass function in the kappa* basis.
LabeledElement dual_coordinates(const RawFunction& f, int n, int q) {
  const UTGroup g(n, q);
  LabeledElement out(q);
  for (const auto& lambda : enumerate_labeled_partitions(n, q))
    out.add(lambda, f.values[g.encode(g.element_of(lambda))] / z_of(g, lambda, q));
  return out;
}

LabeledTensor dual_tensor_coordinates(const RawFunction& f, int a, int b, int q) {
  const UTGroup ga(a, q), gb(b, q);
  LabeledTensor out(q);
  for (const auto& mu : enumerate_labeled_partitions(a, q))
    for (const auto& nu : enumerate_labeled_partitions(b, q)) {
      const std::size_t index = ga.encode(ga.element_of(mu)) + ga.order() * gb.encode(gb.element_of(nu));
      out.add({mu, nu}, f.values[index] / (z_of(ga, mu, q) * z_of(gb, nu, q)));
    }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_CASE("kappa* product: one arc times one arc") {
  const int q = 3;
  const auto result = product_kappa_star(lsp("2; 1-1-2"), lsp("3; 1-2-3"), q);
  LabeledElement expected(q);
  for (const char* text : {"5; 1-1-2, 3-2-5", "5; 1-1-3, 2-2-5", "5; 1-1-4, 2-2-5", "5; 1-1-5, 2-2-4",
                           "5; 1-2-5, 2-1-3", "5; 1-2-5, 2-1-4", "5; 1-2-4, 2-1-5", "5; 1-2-5, 3-1-4",
                           "5; 1-2-4, 3-1-5", "5; 1-2-3, 4-1-5"})
    expected.add(lsp(text), cyc(q, 1));
  CHECK(result == expected);
  CHECK(result.size() == 10);
}

TEST_CASE("kappa* coproduct drops arcs that cross the cut") {
  const int q = 3;
  const auto lambda = lsp("4; 1-1-2, 2-2-4");
  LabeledTensor expected(q);
  expected.add({lambda, lsp("0;")}, cyc(q, 1));
  expected.add({lsp("3; 1-1-2"), lsp("1;")}, cyc(q, 1));
  expected.add({lsp("2; 1-1-2"), lsp("2;")}, cyc(q, 1));
  expected.add({lsp("1;"), lsp("3; 1-2-3")}, cyc(q, 1));
  expected.add({lsp("0;"), lambda}, cyc(q, 1));
  CHECK(coproduct_kappa_star(lambda, q) == expected);
  CHECK(coproduct_kappa_star(lambda, q).size() == 5);
}

TEST_CASE("kappa* product is the sum of superinductions") {
  const int q = 2;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= 3; ++b)
      for (const auto& mu : enumerate_labeled_partitions(a, q))
        for (const auto& nu : enumerate_labeled_partitions(b, q)) {
          const int n = a + b;
          const RawFunction outer = raw_outer_product({dual_function(mu, q), dual_function(nu, q)});
          LabeledElement expected(q);
          for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const auto A = subset_from_mask(mask, n);
            if (static_cast<int>(A.size()) != a) continue;
            expected += dual_coordinates(sind_J(outer, SetComposition::split(n, A)), n, q);
          }
          CAPTURE(mu);
          CAPTURE(nu);
          CHECK(product_kappa_star(mu, nu, q) == expected);
        }
}

TEST_CASE("kappa* coproduct is the sum of deflations") {
  const int q = 2;
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : enumerate_labeled_partitions(n, q)) {
      LabeledTensor expected(q);
      expected.add({lsp("0;"), lambda}, cyc(q, 1));
      expected.add({lambda, lsp("0;")}, cyc(q, 1));
      const RawFunction f = dual_function(lambda, q);
      for (int a = 1; a < n; ++a) expected += dual_tensor_coordinates(def(f, {a, n - a}), a, n - a, q);
      CAPTURE(lambda);
      CHECK(coproduct_kappa_star(lambda, q) == expected);
    }
}

TEST_CASE("permutations parse and print") {
  const auto sigma = Permutation::parse("(31)(2)");
  CHECK(sigma.word() == std::vector<int>{3, 2, 1});
  CHECK(sigma.to_string() == "(31)(2)");
  CHECK(Permutation::parse("321") == sigma);
  CHECK(Permutation::parse(sigma.to_string()) == sigma);
  CHECK(Permutation::parse("()").size() == 0);
  CHECK(csupp(sigma) == sp("13|2"));
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), InvalidInput);
  for (const auto& p : all_permutations(4)) CHECK(Permutation::parse(p.to_string()) == p);
}

TEST_CASE("M product example") {
  const auto result = product_M(Permutation::parse("(1)(2)"), Permutation::parse("(31)(2)"));
  CHECK(result.size() == 6);
  CHECK(result.coefficient(Permutation::parse("(51)(2)(3)(4)")) == CycRational(1, 3));
  Rational total;
  for (const auto& [sigma, c] : result.terms()) total += c.rational_part();
  CHECK(total == Rational(10));
}

TEST_CASE("U product example") {
  PartitionElement expected(1);
  expected.add(sp("124|3|5"), CycRational(1, 1));
  expected.add(sp("125|3|4"), CycRational(1, 2));
  expected.add(sp("135|4|2"), CycRational(1, 1));
  expected.add(sp("235|4|1"), CycRational(1, 1));
  CHECK(product_U(sp("124|3"), sp("1")) == expected);
}

TEST_CASE("U coproduct deconcatenates at free cuts") {
  const auto d = coproduct_U(sp("12|34"));
  CHECK(d.size() == 3);
  CHECK(d.coefficient({sp("12"), sp("12")}) == CycRational(1, 1));
  CHECK(coproduct_U(sp("13|24")).size() == 2);
}

TEST_CASE("truncated products vanish on a repeated row or column") {
  CHECK(multiply_truncated({{{{1, 2}}, 1}}, {{{{1, 3}}, 1}}).empty());
  CHECK(multiply_truncated({{{{1, 3}}, 1}}, {{{{2, 3}}, 1}}).empty());
  const auto ok = multiply_truncated({{{{1, 2}}, 1}}, {{{{2, 3}}, 2}});
  REQUIRE(ok.size() == 1);
  CHECK(ok.begin()->second == 2);
  CHECK(evaluate_M_truncated(Permutation::identity(3), 2).empty());
}

TEST_CASE("dual_ch and its inverse") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& lambda : enumerate_labeled_partitions(n, 2)) {
      const auto x = LabeledElement::basis(lambda, 2);
      const auto v = dual_ch(x);
      CHECK(v == PartitionElement::basis(underlying_set_partition(lambda), 1));
      CHECK(dual_ch_inverse(v) == x);
    }
  for (const auto& mu : enumerate_set_partitions(4)) {
    const auto v = PartitionElement::basis(mu, 1);
    CHECK(u_to_v(v_to_u(v)) == v);
    CHECK(v_to_u(v) == V_from_U(mu));
  }
  CHECK_THROWS_AS(dual_ch(LabeledElement::basis(lsp("2; 1-2-2"), 3)), InvalidInput);
}
