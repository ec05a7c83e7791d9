#include "cusp/numerics.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cusp {

Rat::Rat(const Int& numerator, const Int& denominator) {
  if (denominator == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(numerator, denominator);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

std::string Rat::str() const { return v_.get_str(); }

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty component");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("Rat::parse: missing digits");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("Rat::parse: bad digit in '" + std::string(s) + "'");
    std::string body(s[0] == '+' ? s.substr(1) : s);
    return Int(body);
  };
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

// --- IntPoly ---------------------------------------------------------------

IntPoly::IntPoly(std::vector<Int> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  c_.reserve(coefficients.size());
  for (long c : coefficients) c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const Int& coefficient, std::size_t exponent) {
  if (coefficient == 0) return {};
  std::vector<Int> c(exponent + 1);
  c[exponent] = coefficient;
  return IntPoly(std::move(c));
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw std::domain_error("IntPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Int IntPoly::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::substitute_power(std::size_t k) const {
  if (k == 0) return constant(evaluate(1));
  if (is_zero()) return {};
  std::vector<Int> r((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return IntPoly(std::move(r));
}

std::string IntPoly::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

// --- free operations --------------------------------------------------------

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DivisionError("exact_div: division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree())
    throw DivisionError("exact_div: divisor degree exceeds dividend degree");
  std::vector<Int> rem = p.coefficients();
  const auto& qc = q.coefficients();
  const std::size_t dq = qc.size() - 1;
  const Int& lead = qc.back();
  std::vector<Int> quot(rem.size() - dq);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Int& top = rem[k + dq];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw DivisionError("exact_div: leading coefficient does not divide");
    Int f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dq; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), f.get_mpz_t(), qc[j].get_mpz_t());
    quot[k] = std::move(f);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Int& c) { return c != 0; }))
    throw DivisionError("exact_div: nonzero remainder");
  return IntPoly(std::move(quot));
}

IntPoly poly_arith(const IntPoly& p, const IntPoly& q, PolyOp op) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    case PolyOp::exact_div: return exact_div(p, q);
  }
  throw std::invalid_argument("poly_arith: unknown op");
}

std::vector<Int> series_quotient_coeffs(const IntPoly& num, const IntPoly& den,
                                        std::size_t upto) {
  const Int d0 = den.coeff(0);
  if (d0 != 1 && d0 != -1)
    throw SeriesError("series_quotient_coeffs: den(0) must be +1 or -1, got " + d0.get_str());
  const auto& dc = den.coefficients();
  std::vector<Int> out(upto + 1);
  for (std::size_t k = 0; k <= upto; ++k) {
    Int acc = num.coeff(k);
    const std::size_t jmax = std::min(k, dc.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j)
      if (dc[j] != 0) mpz_submul(acc.get_mpz_t(), dc[j].get_mpz_t(), out[k - j].get_mpz_t());
    out[k] = d0 == 1 ? acc : Int(-acc);
  }
  return out;
}

IntPoly one_minus_t_pow(std::size_t e) {
  if (e == 0) return {};
  return IntPoly::constant(1) - IntPoly::monomial(1, e);
}

}  // namespace cusp
