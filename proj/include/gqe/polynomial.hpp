#ifndef GQE_POLYNOMIAL_HPP
#define GQE_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gqe/error.hpp"
#include "gqe/rational.hpp"

namespace gqe {

/// Dense univariate polynomial, constant term first. The coefficient vector
/// never carries trailing zeros, so the zero polynomial has no coefficients
/// and degree -1.
template <typename T> class BasicPolynomial {
public:
  using value_type = T;

  BasicPolynomial() = default;
  BasicPolynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit BasicPolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static BasicPolynomial constant(const T &v) { return BasicPolynomial({v}); }

  /// a + b t
  static BasicPolynomial linear(const T &a, const T &b) {
    return BasicPolynomial({a, b});
  }

  static BasicPolynomial monomial(const T &coeff, std::size_t power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = coeff;
    return BasicPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T> &coefficients() const { return c_; }

  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <typename U> U operator()(const U &x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + U(*it);
    return acc;
  }

  BasicPolynomial &operator+=(const BasicPolynomial &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }

  BasicPolynomial &operator-=(const BasicPolynomial &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  BasicPolynomial &operator*=(const T &s) {
    for (auto &v : c_)
      v *= s;
    trim();
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial &b) {
    return a += b;
  }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial &b) {
    return a -= b;
  }
  friend BasicPolynomial operator-(BasicPolynomial a) { return a *= T(-1); }
  friend BasicPolynomial operator*(BasicPolynomial a, const T &s) { return a *= s; }
  friend BasicPolynomial operator*(const T &s, BasicPolynomial a) { return a *= s; }

  friend BasicPolynomial operator*(const BasicPolynomial &a,
                                   const BasicPolynomial &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] += a.c_[i] * b.c_[j];
    return BasicPolynomial(std::move(out));
  }

  friend bool operator==(const BasicPolynomial &a, const BasicPolynomial &b) {
    return a.c_ == b.c_;
  }

  BasicPolynomial pow(unsigned n) const {
    BasicPolynomial out = constant(T(1)), base = *this;
    while (n) {
      if (n & 1u)
        out = out * base;
      n >>= 1u;
      if (n)
        base = base * base;
    }
    return out;
  }

  BasicPolynomial derivative() const {
    if (c_.size() <= 1)
      return {};
    std::vector<T> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      out[i - 1] = c_[i] * T(static_cast<long>(i));
    return BasicPolynomial(std::move(out));
  }

  BasicPolynomial derivative(unsigned order) const {
    BasicPolynomial out = *this;
    for (unsigned i = 0; i < order && !out.is_zero(); ++i)
      out = out.derivative();
    return out;
  }

  /// Antiderivative with zero constant term.
  BasicPolynomial antiderivative() const {
    if (c_.empty())
      return {};
    std::vector<T> out(c_.size() + 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      out[i + 1] = c_[i] / T(static_cast<long>(i + 1));
    return BasicPolynomial(std::move(out));
  }

  /// Antiderivative vanishing at `lo`.
  BasicPolynomial antiderivative_from(const T &lo) const {
    BasicPolynomial a = antiderivative();
    return a - constant(a(lo));
  }

  T integrate(const T &lo, const T &hi) const {
    BasicPolynomial a = antiderivative();
    return a(hi) - a(lo);
  }

  /// Euclidean division over a field: *this = q * d + r, deg r < deg d.
  std::pair<BasicPolynomial, BasicPolynomial>
  divmod(const BasicPolynomial &d) const {
    if (d.is_zero())
      throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    if (degree() < d.degree())
      return {BasicPolynomial{}, *this};
    std::vector<T> rem = c_;
    std::vector<T> quo(c_.size() - d.c_.size() + 1, T(0));
    const T &lead = d.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
      T f = rem[k + d.c_.size() - 1] / lead;
      quo[k] = f;
      if (f == T(0))
        continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        rem[k + j] -= f * d.c_[j];
    }
    rem.resize(d.c_.size() - 1);
    return {BasicPolynomial(std::move(quo)), BasicPolynomial(std::move(rem))};
  }

  BasicPolynomial monic() const {
    if (is_zero())
      return {};
    return *this * (T(1) / leading());
  }

  template <typename U> BasicPolynomial<U> convert() const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto &v : c_)
      out.push_back(U(v));
    return BasicPolynomial<U>(std::move(out));
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0))
      c_.pop_back();
  }

  std::vector<T> c_;
};

using Polynomial = BasicPolynomial<Rational>;
using RealPolynomial = BasicPolynomial<Real>;

/// Monic gcd by the Euclidean algorithm (exact fields only).
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline Polynomial squarefree_part(const Polynomial &p) {
  if (p.is_zero())
    throw Error(ErrorKind::ZeroPolynomial, "square-free part of zero");
  if (p.degree() == 0)
    return Polynomial::constant(Rational(1));
  return p.divmod(gcd(p, p.derivative())).first.monic();
}

inline Polynomial exact_quotient(const Polynomial &p, const Polynomial &d) {
  auto [q, r] = p.divmod(d);
  if (!r.is_zero())
    throw Error(ErrorKind::NotDivisible, "divisor leaves a nonzero remainder");
  return q;
}

/// Divides out (1+t)^m_minus (1-t)^m_plus, which must divide p exactly.
inline Polynomial deflate_endpoint_factors(const Polynomial &p, unsigned m_minus,
                                           unsigned m_plus) {
  Polynomial q = p;
  const Polynomial one_plus_t = Polynomial::linear(1, 1);
  const Polynomial one_minus_t = Polynomial::linear(1, -1);
  for (unsigned i = 0; i < m_minus; ++i) {
    if (q(Rational(-1)) != 0)
      throw Error(ErrorKind::NotDivisible,
                  "(1+t)^" + std::to_string(m_minus) + " does not divide p");
    q = exact_quotient(q, one_plus_t);
  }
  for (unsigned i = 0; i < m_plus; ++i) {
    if (q(Rational(1)) != 0)
      throw Error(ErrorKind::NotDivisible,
                  "(1-t)^" + std::to_string(m_plus) + " does not divide p");
    q = exact_quotient(q, one_minus_t);
  }
  return q;
}

/// Order of vanishing of p at x (number of leading zero derivatives).
inline unsigned vanishing_order(const Polynomial &p, const Rational &x) {
  if (p.is_zero())
    throw Error(ErrorKind::ZeroPolynomial, "vanishing order of zero");
  unsigned order = 0;
  Polynomial d = p;
  while (d(x) == 0) {
    d = d.derivative();
    ++order;
  }
  return order;
}

inline std::string to_string(const Polynomial &p, const char *var = "t") {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p[i];
    if (c == 0)
      continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1)
      os << to_string(mag);
    if (i > 0) {
      if (mag != 1)
        os << "*";
      os << var;
      if (i > 1)
        os << "^" << i;
    }
  }
  return os.str();
}

} // namespace gqe

#endif
