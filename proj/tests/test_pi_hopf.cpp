#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "nchopf/error.hpp"
#include "nchopf/pi_hopf.hpp"
#include "support.hpp"

using namespace nchopf;
using nchopf::test::lsp;
using nchopf::test::sp;

namespace {

using Word = std::vector<int>;

// Every word of shape lambda over the letters 0..alphabet-1.
std::vector<Word> words_of_shape(const SetPartition& lambda, int alphabet) {
  std::vector<Word> out;
  const auto idx = lambda.block_index();
  std::vector<int> letters(lambda.block_count(), -1);
  std::function<void(std::size_t)> assign = [&](std::size_t b) {
    if (b == letters.size()) {
      Word w;
      for (int i : idx) w.push_back(letters[static_cast<std::size_t>(i)]);
      out.push_back(std::move(w));
      return;
    }
    for (int a = 0; a < alphabet; ++a) {
      if (std::find(letters.begin(), letters.begin() + static_cast<long>(b), a) != letters.begin() + static_cast<long>(b))
        continue;
      letters[b] = a;
      assign(b + 1);
    }
  };
  assign(0);
  return out;
}

// The word of shape lambda using letters 0, 1, 2, ... in order of first appearance.
Word canonical_word(const SetPartition& lambda) {
  Word w(static_cast<std::size_t>(lambda.size()));
  std::map<int, int> letter;
  const auto idx = lambda.block_index();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    auto it = letter.try_emplace(idx[i], static_cast<int>(letter.size())).first;
    w[i] = it->second;
  }
  return w;
}

// m_lambda m_mu computed by concatenating words over an alphabet of a + b letters.
PartitionElement product_by_words(const SetPartition& lambda, const SetPartition& mu) {
  const int alphabet = lambda.size() + mu.size();
  std::map<Word, long> poly;
  for (const auto& u : words_of_shape(lambda, alphabet))
    for (const auto& v : words_of_shape(mu, alphabet)) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      ++poly[w];
    }
  PartitionElement out(2);
  for (const auto& nu : enumerate_set_partitions(alphabet)) {
    auto it = poly.find(canonical_word(nu));
    if (it != poly.end()) out.add(nu, CycRational(2, Rational(it->second)));
  }
  return out;
}

// Delta(m_lambda) read off m_lambda(X + Y): letters below n are x's, the rest y's.
PartitionTensor coproduct_by_words(const SetPartition& lambda) {
  const int n = lambda.size();
  PartitionTensor out(2);
  std::map<std::pair<Word, Word>, long> counts;
  for (const auto& w : words_of_shape(lambda, 2 * n)) {
    Word x, y;
    for (int letter : w) (letter < n ? x : y).push_back(letter < n ? letter : letter - n);
    ++counts[{x, y}];
  }
  for (int a = 0; a <= n; ++a)
    for (const auto& mu : enumerate_set_partitions(a))
      for (const auto& nu : enumerate_set_partitions(n - a)) {
        auto it = counts.find({canonical_word(mu), canonical_word(nu)});
        if (it != counts.end()) out.add({mu, nu}, CycRational(2, Rational(it->second)));
      }
  return out;
}

}  // namespace

TEST_CASE("monomial product matches the word expansion") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (const auto& lambda : enumerate_set_partitions(a))
        for (const auto& mu : enumerate_set_partitions(b)) {
          CAPTURE(lambda);
          CAPTURE(mu);
          CHECK(product_m(lambda, mu) == product_by_words(lambda, mu));
        }
}

TEST_CASE("monomial coproduct matches the two-alphabet expansion") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& lambda : enumerate_set_partitions(n)) {
      CAPTURE(lambda);
      CHECK(coproduct_m(lambda) == coproduct_by_words(lambda));
    }
}

TEST_CASE("coproduct of m_{14|2|3}") {
  PartitionTensor expected(2);
  auto add = [&](const char* a, const char* b, long c) { expected.add({sp(a), sp(b)}, CycRational(2, Rational(c))); };
  add("14|2|3", "", 1);
  add("13|2", "1", 2);
  add("12", "1|2", 1);
  add("1|2", "12", 1);
  add("1", "13|2", 2);
  add("", "14|2|3", 1);
  CHECK(coproduct_m(sp("14|2|3")) == expected);
}

TEST_CASE("power sums multiply by concatenation and convert back") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (const auto& lambda : enumerate_set_partitions(a))
        for (const auto& mu : enumerate_set_partitions(b)) {
          const auto lhs = p_to_m(product_p(lambda, mu));
          const auto rhs = MonomialHopf(2).product(p_to_m(PartitionElement::basis(lambda, 2)), p_to_m(PartitionElement::basis(mu, 2)));
          CHECK(lhs == rhs);
          CHECK(product_p(lambda, mu) == PartitionElement::basis(concat(lambda, mu), 2));
        }
  for (const auto& lambda : enumerate_set_partitions(4)) {
    const auto x = PartitionElement::basis(lambda, 2);
    CHECK(m_to_p(p_to_m(x)) == x);
    CHECK(p_to_m(x).size() == coarsenings(lambda).size());
  }
}

TEST_CASE("primitive roots and discrete logarithms") {
  CHECK(primitive_root(2) == 1);
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(7) == 3);
  for (int q : {3, 5, 7, 11}) {
    const int g = primitive_root(q);
    for (int a = 1; a < q; ++a) {
      long power = 1;
      for (int e = 0; e < discrete_log(a, q); ++e) power = power * g % q;
      CHECK(power == a);
    }
  }
  CHECK_THROWS_AS(discrete_log(0, 5), InvalidInput);
}

TEST_CASE("k expands over colorings of block minima") {
  for (int q : {2, 3, 5})
    for (int n = 0; n <= 4; ++n)
      for (const auto& lambda : enumerate_labeled_partitions(n, q)) {
        const auto expansion = expand_k_in_colored_m(lambda, q);
        const auto blocks = underlying_set_partition(lambda).block_count();
        long expected = 1;
        for (std::size_t b = 0; b < blocks; ++b) expected *= q - 1;
        CHECK(static_cast<long>(expansion.size()) == expected);
        for (const auto& [index, c] : expansion.terms()) {
          CHECK(index.partition == underlying_set_partition(lambda));
          for (const Arc& arc : lambda.arcs()) {
            const int diff = index.colors[static_cast<std::size_t>(arc.right - 1)] -
                             index.colors[static_cast<std::size_t>(arc.left - 1)];
            CHECK(((diff % (q - 1)) + (q - 1)) % (q - 1) == discrete_log(arc.label, q) % (q - 1));
          }
        }
      }
}

TEST_CASE("ch at q = 2 sends kappa to the monomial of the underlying partition") {
  CHECK(ch_to_monomial(LabeledElement::basis(lsp("4; 1-1-4"), 2)) == PartitionElement::basis(sp("14|2|3"), 2));
  CHECK_THROWS_AS(ch_to_monomial(LabeledElement::basis(lsp("2; 1-2-2"), 3)), InvalidInput);
  CHECK(ch_to_k(LabeledElement::basis(lsp("2; 1-2-2"), 3)) == LabeledElement::basis(lsp("2; 1-2-2"), 3));
  CHECK(product_k(lsp("1;"), lsp("1;"), 3) == product_kappa(lsp("1;"), lsp("1;"), 3));
}
