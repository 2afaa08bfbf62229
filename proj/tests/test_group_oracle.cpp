#include <doctest.h>

#include <random>

#include "nchopf/error.hpp"
#include "nchopf/group_oracle.hpp"
#include "support.hpp"

using namespace nchopf;
using nchopf::test::cyc;
using nchopf::test::lsp;

namespace {

int brute_force_crossings(const LabeledSetPartition& lambda) {
  int count = 0;
  for (const Arc& a : lambda.arcs())
    for (const Arc& b : lambda.arcs())
      if (a.left < b.left && b.left < a.right && a.right < b.right) ++count;
  return count;
}

}  // namespace

TEST_CASE("group structure") {
  for (int q : {2, 3})
    for (int n = 1; n <= 4; ++n) {
      const UTGroup g(n, q);
      CHECK(Integer(static_cast<unsigned long>(g.order())) == group_order(n, q));
      CHECK(g.encode(g.identity()) == 0);
      std::mt19937_64 rng(static_cast<unsigned long>(n * 10 + q));
      std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
      for (int t = 0; t < 50; ++t) {
        const auto a = g.decode(pick(rng)), b = g.decode(pick(rng)), c = g.decode(pick(rng));
        CHECK(g.decode(g.encode(a)) == a);
        CHECK(g.multiply(a, g.inverse(a)) == g.identity());
        CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      }
      CHECK(enumerate_group(n, q).size() == g.order());
    }
  CHECK_THROWS_AS(UTGroup(6, 3), BoundExceeded);
}

TEST_CASE("conjugacy class counts") {
  CHECK(conjugacy_classes(UTGroup(3, 2)).size() == 5);
  CHECK(conjugacy_classes(UTGroup(3, 3)).size() == 11);
  CHECK(conjugacy_classes(UTGroup(4, 2)).size() == 16);
}

TEST_CASE("superclasses partition the group with the formula sizes") {
  for (int q : {2, 3})
    for (int n = 0; n <= 4; ++n) {
      const UTGroup g(n, q);
      const auto sc = compute_superclasses(g);
      CHECK(sc.order == enumerate_labeled_partitions(n, q));
      const auto formula = compute_supercharacter_table(n, q);
      for (std::size_t i = 0; i < sc.order.size(); ++i)
        CHECK(Integer(static_cast<unsigned long>(sc.members[i].size())) == formula.class_sizes[i]);
    }
}

TEST_CASE("supercharacter theory axioms") {
  for (int q : {2, 3})
    for (int n = 0; n <= 3; ++n) {
      const auto report = verify_supercharacter_axioms(n, q);
      CAPTURE(n);
      CAPTURE(q);
      CHECK(report.passed());
      CHECK(report.superclass_count == enumerate_labeled_partitions(n, q).size());
    }
}

TEST_CASE("module traces: degree at the identity and agreement with the formula") {
  for (int q : {2, 3})
    for (int n = 0; n <= 3; ++n) {
      const UTGroup g(n, q);
      for (const auto& lambda : enumerate_labeled_partitions(n, q))
        CHECK(trace_supercharacter(lambda, g.identity(), q) == CycRational(q, Rational(supercharacter_degree(lambda, q))));
      const auto oracle = oracle_supercharacter_table(n, q);
      const auto formula = compute_supercharacter_table(n, q);
      CHECK(oracle.values == formula.values);
      CHECK(oracle.class_sizes == formula.class_sizes);
    }
}

TEST_CASE("supercharacters are orthogonal with crossing weights") {
  for (int q : {2, 3})
    for (int n = 0; n <= 3; ++n) {
      const auto all = enumerate_labeled_partitions(n, q);
      std::vector<RawFunction> chars;
      for (const auto& l : all) chars.push_back(raw_supercharacter(l, q));
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          long expected = 0;
          if (i == j) {
            expected = 1;
            for (int c = 0; c < brute_force_crossings(all[i]); ++c) expected *= q;
          }
          CHECK(raw_inner_product(chars[i], chars[j]) == cyc(q, expected));
        }
    }
}

TEST_CASE("inflation of an outer product concatenates the indices") {
  const int q = 2;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= 4; ++b)
      for (const auto& mu : enumerate_labeled_partitions(a, q))
        for (const auto& nu : enumerate_labeled_partitions(b, q)) {
          std::vector<Arc> arcs = mu.arcs();
          for (Arc arc : nu.arcs()) arcs.push_back({arc.left + a, arc.right + a, arc.label});
          const LabeledSetPartition target(a + b, arcs);
          const auto lhs = inf(raw_outer_product({raw_supercharacter(mu, q), raw_supercharacter(nu, q)}));
          CHECK(lhs.values == raw_supercharacter(target, q).values);
        }
}

TEST_CASE("restriction and superinduction are adjoint") {
  const int q = 2;
  const int n = 3;
  const auto J = SetComposition::split(n, {1, 3});
  for (const auto& lambda : enumerate_labeled_partitions(n, q)) {
    const RawFunction f = raw_supercharacter(lambda, q);
    for (const auto& mu : enumerate_labeled_partitions(2, q))
      for (const auto& nu : enumerate_labeled_partitions(1, q)) {
        const RawFunction psi = raw_outer_product({raw_supercharacter(mu, q), raw_supercharacter(nu, q)});
        CHECK(raw_inner_product(res_J(f, J), psi) == raw_inner_product(f, sind_J(psi, J)));
      }
  }
  CHECK_THROWS_AS(sind_J(raw_outer_product({raw_supercharacter(lsp("3;"), 3), raw_supercharacter(lsp("2;"), 3)}),
                         SetComposition::split(5, {1, 2, 3}), 1000),
                  BoundExceeded);
}

TEST_CASE("inflation and deflation are adjoint") {
  const int q = 2;
  for (const auto& lambda : enumerate_labeled_partitions(4, q)) {
    const RawFunction f = raw_supercharacter(lambda, q);
    for (const auto& mu : enumerate_labeled_partitions(1, q))
      for (const auto& nu : enumerate_labeled_partitions(3, q)) {
        const RawFunction psi = raw_outer_product({raw_supercharacter(mu, q), raw_supercharacter(nu, q)});
        CHECK(raw_inner_product(def(f, {1, 3}), psi) == raw_inner_product(f, inf(psi)));
      }
  }
}
