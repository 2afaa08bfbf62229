#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "nchopf/error.hpp"
#include "nchopf/scalars.hpp"

namespace nchopf {

/**
 * A finite linear combination of basis keys with coefficients in Q(zeta_p).
 * Zero coefficients are never stored. Terms iterate in key order, which makes
 * every derived output deterministic.
 */
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, CycRational>;

  explicit LinearCombination(int conductor = 1) : p_(conductor) {}

  static LinearCombination basis(const Key& key, int conductor) {
    LinearCombination out(conductor);
    out.add(key, CycRational(conductor, 1));
    return out;
  }

  int conductor() const { return p_; }
  const map_type& terms() const& { return terms_; }
  map_type terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  CycRational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? CycRational(p_) : it->second;
  }

  void add(const Key& key, const CycRational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff.with_conductor(p_));
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const CycRational& scale) {
    if (scale.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  LinearCombination& operator+=(const LinearCombination& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, -c);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const CycRational& s, const LinearCombination& x) {
    LinearCombination out(x.p_);
    out.add(x, s);
    return out;
  }
  LinearCombination operator-() const { return CycRational(p_, -1) * *this; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  int p_;
  map_type terms_;
};

template <class Key>
using TensorCombination = LinearCombination<std::pair<Key, Key>>;

template <class Key>
TensorCombination<Key> tensor(const LinearCombination<Key>& a, const LinearCombination<Key>& b) {
  TensorCombination<Key> out(a.conductor() != 1 ? a.conductor() : b.conductor());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add({ka, kb}, ca * cb);
  return out;
}

template <class Key>
TensorCombination<Key> swap_factors(const TensorCombination<Key>& t) {
  TensorCombination<Key> out(t.conductor());
  for (const auto& [k, c] : t.terms()) out.add({k.second, k.first}, c);
  return out;
}

/// Applies a linear map, given on basis keys, to a combination.
template <class KeyOut, class KeyIn, class F>
LinearCombination<KeyOut> map_linear(const LinearCombination<KeyIn>& x, int conductor, F&& on_basis) {
  LinearCombination<KeyOut> out(conductor);
  for (const auto& [k, c] : x.terms()) out.add(on_basis(k), c);
  return out;
}

/// f (x) g applied to a tensor, with f and g given on basis keys.
template <class KeyOut, class KeyIn, class F, class G>
TensorCombination<KeyOut> map_tensor(const TensorCombination<KeyIn>& t, int conductor, F&& f, G&& g) {
  TensorCombination<KeyOut> out(conductor);
  for (const auto& [k, c] : t.terms()) out.add(tensor(f(k.first), g(k.second)), c);
  return out;
}

/**
 * A graded connected bialgebra presented by its structure constants on basis
 * keys. Products, coproducts, the counit and the antipode extend linearly.
 * The antipode uses the graded recursion S(b) = -sum S(b_(1)) b_(2) over the
 * coproduct terms whose left factor has lower grade, memoized per basis key.
 */
template <class Key>
class GradedHopfAlgebra {
 public:
  using Element = LinearCombination<Key>;
  using Tensor = TensorCombination<Key>;

  explicit GradedHopfAlgebra(int conductor) : p_(conductor) {}
  virtual ~GradedHopfAlgebra() = default;

  int conductor() const { return p_; }

  virtual Key unit_key() const = 0;
  virtual int grade(const Key& key) const = 0;
  virtual Element product_basis(const Key& a, const Key& b) const = 0;
  virtual Tensor coproduct_basis(const Key& a) const = 0;

  Element unit() const { return Element::basis(unit_key(), p_); }
  Element basis(const Key& key) const { return Element::basis(key, p_); }

  Element product(const Element& x, const Element& y) const {
    Element out(p_);
    for (const auto& [kx, cx] : x.terms())
      for (const auto& [ky, cy] : y.terms()) out.add(product_basis(kx, ky), cx * cy);
    return out;
  }

  Tensor coproduct(const Element& x) const {
    Tensor out(p_);
    for (const auto& [k, c] : x.terms()) out.add(coproduct_basis(k), c);
    return out;
  }

  CycRational counit(const Element& x) const {
    CycRational out(p_);
    for (const auto& [k, c] : x.terms())
      if (grade(k) == 0) out += c;
    return out;
  }

  /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
  Tensor tensor_product(const Tensor& s, const Tensor& t) const {
    Tensor out(p_);
    for (const auto& [ks, cs] : s.terms())
      for (const auto& [kt, ct] : t.terms())
        out.add(tensor(product_basis(ks.first, kt.first), product_basis(ks.second, kt.second)), cs * ct);
    return out;
  }

  /// m: A (x) A -> A.
  Element multiply_out(const Tensor& t) const {
    Element out(p_);
    for (const auto& [k, c] : t.terms()) out.add(product_basis(k.first, k.second), c);
    return out;
  }

  Element antipode(const Element& x) const {
    Element out(p_);
    for (const auto& [k, c] : x.terms()) out.add(antipode_basis(k), c);
    return out;
  }

  Element antipode_basis(const Key& key) const {
    {
      std::lock_guard lock(memo_mutex_);
      auto it = antipode_memo_.find(key);
      if (it != antipode_memo_.end()) return it->second;
    }
    const int n = grade(key);
    Element result(p_);
    if (n == 0) {
      result = basis(key);
    } else {
      for (const auto& [pair, c] : coproduct_basis(key).terms()) {
        if (grade(pair.first) >= n) continue;
        result.add(product(antipode_basis(pair.first), basis(pair.second)), -c);
      }
    }
    std::lock_guard lock(memo_mutex_);
    antipode_memo_.emplace(key, result);
    return result;
  }

 private:
  int p_;
  mutable std::mutex memo_mutex_;
  mutable std::map<Key, Element> antipode_memo_;
};

}  // namespace nchopf
