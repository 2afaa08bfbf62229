#include "nchopf/scalars.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "nchopf/error.hpp"

namespace nchopf {

bool is_prime(long value) {
  if (value < 2) return false;
  for (long d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

Rational parse_rational(const std::string& text) {
  if (text.empty() || text.find_first_of(".eE ") != std::string::npos)
    throw InvalidInput("malformed rational '" + text + "'");
  Rational r;
  if (r.set_str(text, 10) != 0) throw InvalidInput("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw InvalidInput("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

CycRational::CycRational(int conductor) : p_(conductor) {
  if (p_ < 1) throw InvalidInput("conductor must be positive");
  if (p_ > 1 && !is_prime(p_)) throw InvalidInput("conductor must be prime");
  c_.assign(p_ == 1 ? 1 : static_cast<std::size_t>(p_ - 1), Rational(0));
}

CycRational::CycRational(int conductor, const Rational& value) : CycRational(conductor) {
  c_[0] = value;
  c_[0].canonicalize();
}

CycRational::CycRational(int conductor, std::vector<Rational> coeffs) : CycRational(conductor) {
  if (coeffs.size() != c_.size())
    throw DimensionMismatch("expected " + std::to_string(c_.size()) + " coefficients for conductor " +
                            std::to_string(p_));
  c_ = std::move(coeffs);
  for (auto& x : c_) x.canonicalize();
}

CycRational CycRational::root_of_unity(int p, long exponent) {
  if (p < 2 || !is_prime(p)) throw InvalidInput("roots of unity need a prime conductor");
  long e = ((exponent % p) + p) % p;
  std::vector<Rational> full(static_cast<std::size_t>(p), Rational(0));
  full[static_cast<std::size_t>(e)] = 1;
  CycRational out(p);
  out.canonicalize_from_full(std::move(full));
  return out;
}

void CycRational::canonicalize_from_full(std::vector<Rational> full) {
  // full holds exponents 0..p-1; rewrite zeta^{p-1} = -(1 + ... + zeta^{p-2}).
  const std::size_t p = full.size();
  const Rational top = full[p - 1];
  c_.resize(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) c_[i] = full[i] - top;
}

bool CycRational::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool CycRational::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

Rational CycRational::to_rational() const {
  if (!is_rational()) throw InvalidInput("value " + to_string() + " is not rational");
  return c_.front();
}

CycRational CycRational::with_conductor(int p) const {
  if (p == p_) return *this;
  if (p_ == 1) return CycRational(p, c_.front());
  if (p == 1 && is_rational()) return CycRational(1, c_.front());
  throw ConductorMismatch("cannot move a value of conductor " + std::to_string(p_) + " to conductor " +
                          std::to_string(p));
}

int CycRational::common_conductor(const CycRational& a, const CycRational& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 1) return b.p_;
  if (b.p_ == 1) return a.p_;
  throw ConductorMismatch("conductor mismatch: " + std::to_string(a.p_) + " vs " + std::to_string(b.p_));
}

CycRational& CycRational::operator+=(const CycRational& rhs) {
  const int p = common_conductor(*this, rhs);
  if (p_ != p) *this = with_conductor(p);
  if (rhs.p_ == p) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  } else {
    c_[0] += rhs.c_[0];
  }
  return *this;
}

CycRational& CycRational::operator-=(const CycRational& rhs) { return *this += -rhs; }

CycRational CycRational::operator-() const {
  CycRational out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

CycRational& CycRational::operator*=(const CycRational& rhs) {
  const int p = common_conductor(*this, rhs);
  if (p_ == 1 || rhs.p_ == 1 || p <= 2) {
    const Rational s = (p_ == 1 || p <= 2) ? c_[0] : rhs.c_[0];
    const CycRational& other = (p_ == 1 || p <= 2) ? rhs : *this;
    CycRational out = other.with_conductor(p);
    for (auto& x : out.c_) x *= s;
    return *this = std::move(out);
  }
  std::vector<Rational> full(static_cast<std::size_t>(p), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      full[(i + j) % static_cast<std::size_t>(p)] += c_[i] * rhs.c_[j];
    }
  }
  canonicalize_from_full(std::move(full));
  return *this;
}

CycRational& CycRational::operator/=(const CycRational& rhs) { return *this *= rhs.inverse(); }

CycRational CycRational::conj() const {
  if (p_ <= 2) return *this;
  std::vector<Rational> full(static_cast<std::size_t>(p_), Rational(0));
  full[0] = c_[0];
  for (std::size_t i = 1; i < c_.size(); ++i) full[static_cast<std::size_t>(p_) - i] = c_[i];
  CycRational out(p_);
  out.canonicalize_from_full(std::move(full));
  return out;
}

namespace {

// Solves a dense rational system in place; returns false when singular.
bool solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                    std::vector<Rational>& x) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return true;
}

}  // namespace

CycRational CycRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (p_ <= 2) return CycRational(p_, Rational(1) / c_[0]);
  // Multiplication by *this is a Q-linear map on the basis zeta^0..zeta^{p-2}.
  const std::size_t d = c_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t j = 0; j < d; ++j) {
    const CycRational col = *this * root_of_unity(p_, static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  std::vector<Rational> e0(d, Rational(0));
  e0[0] = 1;
  std::vector<Rational> x;
  if (!solve_rational(std::move(m), std::move(e0), x)) throw DivisionByZero("value is not invertible");
  return CycRational(p_, std::move(x));
}

bool operator==(const CycRational& a, const CycRational& b) {
  if (a.p_ == b.p_) return a.c_ == b.c_;
  if (a.p_ == 1 || b.p_ == 1) return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
  return a.is_zero() && b.is_zero();
}

std::string CycRational::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    } else if (v < 0 && i > 0) {
      os << "-";
      v = -v;
    }
    first = false;
    if (i == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << "z" << p_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycRational& value) { return os << value.to_string(); }

CycRational theta(int p, int x) {
  if (x < 0 || x >= p) throw InvalidInput("theta argument out of range for F_" + std::to_string(p));
  return CycRational::root_of_unity(p, x);
}

CycVector solve_linear_system(const CycMatrix& a, const CycVector& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("right-hand side length does not match matrix");
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("matrix is not square");
  CycMatrix m = a;
  CycVector rhs = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const CycRational inv = m[col][col].inverse();
    for (std::size_t k = col; k < n; ++k) m[col][k] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const CycRational f = m[row][col];
      for (std::size_t k = col; k < n; ++k)
        if (!m[col][k].is_zero()) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

CycMatrix invert_matrix(const CycMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("matrix is not square");
  int p = 1;
  for (const auto& row : a)
    for (const auto& x : row)
      if (x.conductor() != 1) p = x.conductor();
  // Gauss-Jordan on [A | I].
  CycMatrix m = a;
  CycMatrix inv(n, CycVector(n, CycRational(p)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = CycRational(p, 1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const CycRational s = m[col][col].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      if (!m[col][k].is_zero()) m[col][k] *= s;
      if (!inv[col][k].is_zero()) inv[col][k] *= s;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const CycRational f = m[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        if (!m[col][k].is_zero()) m[row][k] -= f * m[col][k];
        if (!inv[col][k].is_zero()) inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

CycMatrix multiply(const CycMatrix& a, const CycMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  for (const auto& row : a)
    if (row.size() != inner) throw DimensionMismatch("incompatible matrix shapes");
  CycMatrix out(rows, CycVector(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace nchopf
