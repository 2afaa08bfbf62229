#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "nchopf/error.hpp"
#include "nchopf/group_oracle.hpp"
#include "nchopf/sc_hopf.hpp"
#include "support.hpp"

using namespace nchopf;
using nchopf::test::lsp;

namespace {

// The indicator function of the superclass of lambda, computed in the group.
RawFunction indicator(const LabeledSetPartition& lambda, int q) {
  const UTGroup g(lambda.size(), q);
  RawFunction f{q, {lambda.size()}, std::vector<CycRational>(g.order(), CycRational(q))};
  for (std::size_t c : superclass_of(g, lambda)) f.values[c] = CycRational(q, 1);
  return f;
}

// Reads off kappa coordinates of a superclass function on UT_n(q) at the representatives.
LabeledElement kappa_coordinates(const RawFunction& f, int n, int q) {
  const UTGroup g(n, q);
  LabeledElement out(q);
  for (const auto& lambda : enumerate_labeled_partitions(n, q))
    out.add(lambda, f.values[g.encode(g.element_of(lambda))]);
  return out;
}

// Same on UT_a(q) x UT_b(q), into kappa (x) kappa.
LabeledTensor kappa_tensor_coordinates(const RawFunction& f, int a, int b, int q) {
  const UTGroup ga(a, q), gb(b, q);
  LabeledTensor out(q);
  for (const auto& mu : enumerate_labeled_partitions(a, q))
    for (const auto& nu : enumerate_labeled_partitions(b, q)) {
      const std::size_t index = ga.encode(ga.element_of(mu)) + ga.order() * gb.encode(gb.element_of(nu));
      out.add({mu, nu}, f.values[index]);
    }
  return out;
}

std::filesystem::path fresh_directory(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("nchopf-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("kappa product: two zero blocks times a chain of two arcs") {
  const int q = 3;
  const auto result = product_kappa(lsp("2;"), lsp("3; 1-1-2, 2-2-3"), q);
  LabeledElement expected(q);
  expected.add(lsp("5; 3-1-4, 4-2-5"), CycRational(q, 1));
  for (int c = 1; c < q; ++c) {
    expected.add(LabeledSetPartition(5, {{1, 3, c}, {3, 4, 1}, {4, 5, 2}}), CycRational(q, 1));
    expected.add(LabeledSetPartition(5, {{2, 3, c}, {3, 4, 1}, {4, 5, 2}}), CycRational(q, 1));
  }
  CHECK(result == expected);
  CHECK(result.size() == 1 + 2 * (q - 1));
}

TEST_CASE("kappa coproduct: two nested arcs") {
  const int q = 3;
  const auto lambda = lsp("4; 1-2-4, 2-1-3");
  LabeledTensor expected(q);
  expected.add({lambda, lsp("0;")}, CycRational(q, 1));
  expected.add({lsp("2; 1-1-2"), lsp("2; 1-2-2")}, CycRational(q, 1));
  expected.add({lsp("2; 1-2-2"), lsp("2; 1-1-2")}, CycRational(q, 1));
  expected.add({lsp("0;"), lambda}, CycRational(q, 1));
  CHECK(coproduct_kappa(lambda, q) == expected);
}

TEST_CASE("kappa product is inflation of the outer product in the group") {
  for (int q : {2, 3})
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; a + b <= (q == 2 ? 4 : 3); ++b)
        for (const auto& mu : enumerate_labeled_partitions(a, q))
          for (const auto& nu : enumerate_labeled_partitions(b, q)) {
            const RawFunction inflated = inf(raw_outer_product({indicator(mu, q), indicator(nu, q)}));
            CAPTURE(mu);
            CAPTURE(nu);
            CHECK(kappa_coordinates(inflated, a + b, q) == product_kappa(mu, nu, q));
          }
}

TEST_CASE("kappa coproduct is the sum of restrictions over (A | A^c)") {
  for (int q : {2, 3})
    for (int n = 0; n <= (q == 2 ? 4 : 3); ++n)
      for (const auto& lambda : enumerate_labeled_partitions(n, q)) {
        LabeledTensor expected(q);
        expected.add({LabeledSetPartition::empty(0), lambda}, CycRational(q, 1));
        if (n > 0) expected.add({lambda, LabeledSetPartition::empty(0)}, CycRational(q, 1));
        const RawFunction f = indicator(lambda, q);
        for (std::uint32_t mask = 1; n > 0 && mask + 1 < (1u << n); ++mask) {
          const auto A = subset_from_mask(mask, n);
          const RawFunction r = res_J(f, SetComposition::split(n, A));
          expected += kappa_tensor_coordinates(r, static_cast<int>(A.size()), n - static_cast<int>(A.size()), q);
        }
        CAPTURE(lambda);
        CHECK(coproduct_kappa(lambda, q) == expected);
      }
}

TEST_CASE("supercharacter degrees match module dimensions") {
  for (int q : {2, 3})
    for (int n = 0; n <= 4; ++n) {
      const UTGroup g(n, q);
      for (const auto& lambda : enumerate_labeled_partitions(n, q)) {
        const SupercharacterModule module(g, lambda);
        CHECK(Integer(static_cast<unsigned long>(module.dimension())) == supercharacter_degree(lambda, q));
        CHECK(supercharacter_value(lambda, LabeledSetPartition::empty(n), q) ==
              CycRational(q, Rational(supercharacter_degree(lambda, q))));
      }
    }
  CHECK(group_order(4, 3) == 729);
}

TEST_CASE("formula table and class sizes") {
  for (int q : {2, 3, 5})
    for (int n = 0; n <= 3; ++n) {
      const auto t = compute_supercharacter_table(n, q);
      Integer total = 0;
      for (const auto& s : t.class_sizes) total += s;
      CHECK(total == group_order(n, q));
      CHECK(t.order == enumerate_labeled_partitions(n, q));
    }
  CHECK_THROWS_AS(compute_supercharacter_table(8, 2), BoundExceeded);
}

TEST_CASE("chi and kappa conversions are inverse") {
  SupercharTableCache cache;
  for (int q : {2, 3})
    for (int n = 0; n <= 4; ++n)
      for (const auto& lambda : enumerate_labeled_partitions(n, q)) {
        const auto x = LabeledElement::basis(lambda, q);
        CHECK(kappa_to_chi(chi_to_kappa(x, q, cache), q, cache) == x);
        CHECK(chi_to_kappa(kappa_to_chi(x, q, cache), q, cache) == x);
      }
}

TEST_CASE("table cache persists and reloads") {
  const auto dir = fresh_directory("cache");
  {
    SupercharTableCache cache(dir);
    const auto t = cache.table(3, 3);
    CHECK(std::filesystem::exists(dir / "supertable-v1-n3-q3.json"));
    CHECK(cache.file_for(3, 3).filename() == "supertable-v1-n3-q3.json");
    SupercharTableCache reload(dir);
    const auto u = reload.table(3, 3);
    CHECK(u->order == t->order);
    CHECK(u->values == t->values);
    CHECK(u->class_sizes == t->class_sizes);
  }
  {
    std::ofstream(dir / "supertable-v1-n2-q2.json") << "{ not json";
    SupercharTableCache cache(dir);
    CHECK(cache.table(2, 2)->order.size() == 2);
  }
  SupercharTableCache bounded(std::nullopt, 3);
  CHECK_THROWS_AS(bounded.table(4, 2), BoundExceeded);
  std::filesystem::remove_all(dir);
}

TEST_CASE("supercharacter Hopf algebra conjugates the kappa structure") {
  SupercharTableCache cache;
  const int q = 3;
  const SupercharacterHopf chi(q, cache);
  const SuperclassHopf kappa(q);
  for (const auto& a : enumerate_labeled_partitions(2, q))
    for (const auto& b : enumerate_labeled_partitions(1, q)) {
      const auto lhs = chi_to_kappa(chi.product_basis(a, b), q, cache);
      const auto rhs = kappa.product(chi_to_kappa(chi.basis(a), q, cache), chi_to_kappa(chi.basis(b), q, cache));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("filtration and linear indices") {
  CHECK(filtration_membership(lsp("4; 1-1-3, 2-1-4"), 2));
  CHECK_FALSE(filtration_membership(lsp("4; 1-1-4"), 2));
  CHECK(is_linear_index(lsp("4; 1-1-2, 2-1-3")));
  CHECK_FALSE(is_linear_index(lsp("3; 1-1-3")));
}
