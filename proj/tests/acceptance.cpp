#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "nchopf/dual_hopf.hpp"
#include "nchopf/group_oracle.hpp"
#include "nchopf/pi_hopf.hpp"
#include "nchopf/verify.hpp"

using namespace nchopf;

namespace {

using Clock = std::chrono::steady_clock;

LabeledSetPartition lsp(const std::string& text) { return LabeledSetPartition::parse(text); }
SetPartition sp(const std::string& text) { return SetPartition::parse(text); }

int crossings(const LabeledSetPartition& lambda) { return crossing_statistic(lambda); }

struct Outcome {
  bool ok = true;
  std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.ok) o.detail = what;
  o.ok = o.ok && ok;
}

void absorb(Outcome& o, const CheckLog& log) {
  if (!log.ok())
    require(o, false, log.name + ": " + std::to_string(log.failed) + " failed" +
                          (log.failures.empty() ? "" : ", first: " + log.failures.front()));
  else
    o.detail += (o.detail.empty() ? "" : ", ") + log.name + " " + std::to_string(log.passed);
}

Outcome worked_examples() {
  Outcome o;
  const int q = 3;
  const CycRational one(q, 1);

  LabeledElement kp(q);
  kp.add(lsp("5; 3-1-4, 4-2-5"), one);
  for (int c = 1; c < q; ++c) {
    kp.add(LabeledSetPartition(5, {{1, 3, c}, {3, 4, 1}, {4, 5, 2}}), one);
    kp.add(LabeledSetPartition(5, {{2, 3, c}, {3, 4, 1}, {4, 5, 2}}), one);
  }
  require(o, product_kappa(lsp("2;"), lsp("3; 1-1-2, 2-2-3"), q) == kp, "kappa product");

  const auto nested = lsp("4; 1-2-4, 2-1-3");
  LabeledTensor kc(q);
  kc.add({nested, lsp("0;")}, one);
  kc.add({lsp("2; 1-1-2"), lsp("2; 1-2-2")}, one);
  kc.add({lsp("2; 1-2-2"), lsp("2; 1-1-2")}, one);
  kc.add({lsp("0;"), nested}, one);
  require(o, coproduct_kappa(nested, q) == kc, "kappa coproduct");

  PartitionTensor mc(2);
  auto add_m = [&](const char* a, const char* b, long c) { mc.add({sp(a), sp(b)}, CycRational(2, Rational(c))); };
  add_m("14|2|3", "", 1);
  add_m("13|2", "1", 2);
  add_m("12", "1|2", 1);
  add_m("1|2", "12", 1);
  add_m("1", "13|2", 2);
  add_m("", "14|2|3", 1);
  require(o, coproduct_m(sp("14|2|3")) == mc, "coproduct of m_{14|2|3}");

  const auto pieces = straighten(lsp("6; 1-1-4, 2-2-6"), SetComposition({{1, 4}, {3}, {2, 5, 6}}));
  require(o, pieces == std::vector<LabeledSetPartition>{lsp("2; 1-1-2"), lsp("1;"), lsp("3; 1-2-3")},
          "straightening");

  const auto sp_product = product_kappa_star(lsp("2; 1-1-2"), lsp("3; 1-2-3"), q);
  LabeledElement sp_expected(q);
  for (const char* text : {"5; 1-1-2, 3-2-5", "5; 1-1-3, 2-2-5", "5; 1-1-4, 2-2-5", "5; 1-1-5, 2-2-4",
                           "5; 1-2-5, 2-1-3", "5; 1-2-5, 2-1-4", "5; 1-2-4, 2-1-5", "5; 1-2-5, 3-1-4",
                           "5; 1-2-4, 3-1-5", "5; 1-2-3, 4-1-5"})
    sp_expected.add(lsp(text), one);
  require(o, sp_product == sp_expected && sp_product.size() == 10, "kappa* product");

  const auto lambda = lsp("4; 1-1-2, 2-2-4");
  LabeledTensor sc(q);
  sc.add({lambda, lsp("0;")}, one);
  sc.add({lsp("3; 1-1-2"), lsp("1;")}, one);
  sc.add({lsp("2; 1-1-2"), lsp("2;")}, one);
  sc.add({lsp("1;"), lsp("3; 1-2-3")}, one);
  sc.add({lsp("0;"), lambda}, one);
  require(o, coproduct_kappa_star(lambda, q) == sc, "kappa* coproduct");

  PartitionElement u(1);
  u.add(sp("124|3|5"), CycRational(1, 1));
  u.add(sp("125|3|4"), CycRational(1, 2));
  u.add(sp("135|4|2"), CycRational(1, 1));
  u.add(sp("235|4|1"), CycRational(1, 1));
  require(o, product_U(sp("124|3"), sp("1")) == u, "U_{124|3} U_1");

  const auto m = product_M(Permutation::parse("(1)(2)"), Permutation::parse("(31)(2)"));
  require(o, m.coefficient(Permutation::parse("(51)(2)(3)(4)")) == CycRational(1, 3), "C = 3");
  return o;
}

Outcome hopf_axioms(SupercharTableCache& cache) {
  Outcome o;
  for (int q : {2, 3}) absorb(o, verify_hopf({4, q, 1, 100}, cache));
  return o;
}

Outcome isomorphisms() {
  Outcome o;
  absorb(o, verify_isomorphisms({5, 2, 1, 100}));
  absorb(o, verify_isomorphisms({4, 3, 1, 100}));
  return o;
}

Outcome oracle_equivalence(SupercharTableCache& cache) {
  Outcome o;
  for (int q : {2, 3}) {
    absorb(o, verify_oracle({4, q, 1, 100}, cache));
    absorb(o, verify_axioms({4, q, 1, 100}));
  }
  return o;
}

Outcome crossing_orthogonality() {
  Outcome o;
  std::size_t pairs = 0;
  for (int q : {2, 3})
    for (int n = 0; n <= 4; ++n) {
      const auto all = enumerate_labeled_partitions(n, q);
      std::vector<RawFunction> chars;
      for (const auto& l : all) chars.push_back(raw_supercharacter(l, q));
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j) {
          Integer expected = 0;
          if (i == j) {
            expected = 1;
            for (int c = 0; c < crossings(all[i]); ++c) expected *= q;
          }
          require(o, raw_inner_product(chars[i], chars[j]) == CycRational(q, Rational(expected)),
                  "<chi^" + all[i].to_string() + ", chi^" + all[j].to_string() + "> at q=" + std::to_string(q));
          ++pairs;
        }
    }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome subalgebras(SupercharTableCache& cache) {
  Outcome o;
  absorb(o, verify_subalgebras({5, 2, 1, 100}, cache));
  return o;
}

Outcome duality() {
  Outcome o;
  for (int q : {2, 3}) absorb(o, verify_duality({4, q, 1, 100}));
  return o;
}

Outcome truncated() {
  Outcome o;
  absorb(o, verify_truncated({4, 2, 1, 100}));
  return o;
}

}  // namespace

int main() {
  SupercharTableCache cache;
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked examples", 1.0, worked_examples},
      {2, "Hopf axioms n<=4, q in {2,3}", 60.0, [&] { return hopf_axioms(cache); }},
      {3, "ch and dual_ch isomorphisms", 0.0, isomorphisms},
      {4, "oracle equivalence n<=4, q in {2,3}", 0.0, [&] { return oracle_equivalence(cache); }},
      {5, "crossing orthogonality", 0.0, crossing_orthogonality},
      {6, "subalgebras n<=5, q=2", 0.0, [&] { return subalgebras(cache); }},
      {7, "duality adjointness", 0.0, duality},
      {8, "truncated realization", 0.0, truncated},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds)
      require(o, false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    all_ok = all_ok && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << seconds << " s)";
    if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
    std::cout << '\n';
  }
  return all_ok ? 0 : 1;
}
