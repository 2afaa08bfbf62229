#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace nchopf {

using Rational = mpq_class;
using Integer = mpz_class;

bool is_prime(long value);

/// Parses "num/den" or "num" (no decimal point) into a canonical rational.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& value);

/**
 * An element of the cyclotomic field Q(zeta_p), stored exactly as
 * sum_{i=0}^{p-2} c_i zeta^i. The relation 1 + zeta + ... + zeta^{p-1} = 0 is
 * applied eagerly so that every value has a unique coefficient vector.
 *
 * Conductor 1 denotes the plain rationals; such values combine with any
 * conductor. Two values with distinct conductors >= 2 cannot be mixed.
 */
class CycRational {
 public:
  CycRational() : CycRational(1) {}
  explicit CycRational(int conductor);
  CycRational(int conductor, const Rational& value);
  CycRational(int conductor, std::vector<Rational> coeffs);

  static CycRational rational(const Rational& value) { return CycRational(1, value); }
  /// zeta_p^exponent for any integer exponent (reduced mod p).
  static CycRational root_of_unity(int p, long exponent);

  int conductor() const { return p_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const Rational& rational_part() const { return c_.front(); }
  Rational to_rational() const;

  /// Same value expressed over conductor `p` (which must be compatible).
  CycRational with_conductor(int p) const;

  CycRational conj() const;
  CycRational inverse() const;

  CycRational& operator+=(const CycRational& rhs);
  CycRational& operator-=(const CycRational& rhs);
  CycRational& operator*=(const CycRational& rhs);
  CycRational& operator/=(const CycRational& rhs);

  friend CycRational operator+(CycRational a, const CycRational& b) { return a += b; }
  friend CycRational operator-(CycRational a, const CycRational& b) { return a -= b; }
  friend CycRational operator*(CycRational a, const CycRational& b) { return a *= b; }
  friend CycRational operator/(CycRational a, const CycRational& b) { return a /= b; }
  CycRational operator-() const;

  friend bool operator==(const CycRational& a, const CycRational& b);

  std::string to_string() const;

 private:
  static int common_conductor(const CycRational& a, const CycRational& b);
  void canonicalize_from_full(std::vector<Rational> full);

  int p_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const CycRational& value);

/// theta(x) = zeta_p^x, the fixed nontrivial character of (F_p, +).
CycRational theta(int p, int x);

using CycVector = std::vector<CycRational>;
using CycMatrix = std::vector<CycVector>;

/// Exact Gaussian elimination. Throws DimensionMismatch for shape errors and
/// SingularMatrix when A has no inverse.
CycVector solve_linear_system(const CycMatrix& a, const CycVector& b);
CycMatrix invert_matrix(const CycMatrix& a);
CycMatrix multiply(const CycMatrix& a, const CycMatrix& b);

}  // namespace nchopf
