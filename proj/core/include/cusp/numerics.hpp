#pragma once

// Exact integers, rationals, dense integer polynomials and truncated power
// series. Everything above this layer is computed without floating point.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cusp {

using Int = mpz_class;

/// Raised by exact polynomial division when the divisor does not divide.
class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a power-series quotient is requested for a denominator whose
/// constant term is not a unit of the integers.
class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed. Always a bug or an
/// input that violates a stated precondition.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reduced rational number with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& numerator, const Int& denominator);

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument on malformed text.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Dense polynomial with integer coefficients, indexed by exponent.
/// Trailing zeros are always trimmed; the zero polynomial stores nothing.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly monomial(const Int& coefficient, std::size_t exponent);
  static IntPoly constant(const Int& c) { return monomial(c, 0); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Coefficient of t^k; zero beyond the degree.
  Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
  const std::vector<Int>& coefficients() const { return c_; }
  const Int& leading() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  Int evaluate(const Int& x) const;
  /// p(t) -> p(t^k).
  IntPoly substitute_power(std::size_t k) const;

  std::string str(char var = 't') const;

 private:
  void trim();
  std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

enum class PolyOp { add, sub, mul, exact_div };

/// Quotient of p by q in Z[t]; throws DivisionError unless the remainder is 0.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

IntPoly poly_arith(const IntPoly& p, const IntPoly& q, PolyOp op);

/// Coefficients 0..upto of the power series num/den. den(0) must be +-1.
std::vector<Int> series_quotient_coeffs(const IntPoly& num, const IntPoly& den,
                                        std::size_t upto);

/// Product of (1 - t^e) factors, handy for cyclotomic-style closed forms.
IntPoly one_minus_t_pow(std::size_t e);

}  // namespace cusp
