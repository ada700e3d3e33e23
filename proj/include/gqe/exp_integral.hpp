#ifndef GQE_EXP_INTEGRAL_HPP
#define GQE_EXP_INTEGRAL_HPP

#include <cmath>
#include <vector>

#include "gqe/polynomial.hpp"

namespace gqe {

/// Evaluates H_k(z) = int_{-1}^z e^{-kt} P(t) dt for a fixed polynomial P.
///
/// Two routes, chosen by |k|:
///  * |k| >= k_switch: the antiderivative -e^{-kt} Q(t) with
///    Q = sum_j P^{(j)} / k^{j+1}, which is exact but cancels badly as k -> 0;
///  * |k| <  k_switch: the moment series sum_m (-k)^m / m! int_{-1}^z t^m P,
///    truncated once a term drops below `series_rel` of the accumulated mass.
/// k = 0 is served from the exact rational integral.
class ExpWeightedIntegral {
public:
  explicit ExpWeightedIntegral(const Polynomial &P, double k_switch = 1e-4,
                               double series_rel = 1e-18)
      : k_switch_(k_switch), series_rel_(series_rel) {
    for (Polynomial d = P; !d.is_zero(); d = d.derivative())
      derivs_.push_back(d.convert<Real>());
    const Rational lo(-1);
    total_ = P.integrate(lo, Rational(1));
    // Enough moments that k_switch^m / m! is far below the truncation level.
    std::size_t needed = 4;
    double term = 1;
    while (needed < 200) {
      term *= k_switch_ / static_cast<double>(needed);
      if (term < series_rel_ * 1e-6)
        break;
      ++needed;
    }
    Polynomial tm = P;
    for (std::size_t m = 0; m <= needed + 2; ++m) {
      moments_.push_back(tm.antiderivative_from(lo).convert<Real>());
      tm = tm * Polynomial::monomial(1, 1);
    }
  }

  /// Exact int_{-1}^1 P.
  const Rational &integral_at_zero() const { return total_; }

  double k_switch() const { return k_switch_; }

  Real H(const Real &k, const Real &z) const {
    if (derivs_.empty())
      return Real(0);
    if (k == 0)
      return moments_[0](z);
    if (abs(k) < k_switch_)
      return series(k, z);
    return closed_form(k, z);
  }

  Real I(const Real &k) const {
    if (k == 0)
      return to_real(total_);
    return H(k, Real(1));
  }

  Real closed_form(const Real &k, const Real &z) const {
    return Q(k, Real(-1)) * exp(k) - Q(k, z) * exp(-k * z);
  }

  Real series(const Real &k, const Real &z) const {
    Real sum = 0, mass = 0, coeff = 1;
    for (std::size_t m = 0; m < moments_.size(); ++m) {
      if (m > 0)
        coeff *= -k / static_cast<long>(m);
      Real term = coeff * moments_[m](z);
      sum += term;
      mass += abs(term);
      if (m > 0 && abs(term) <= series_rel_ * mass)
        break;
    }
    return sum;
  }

private:
  Real Q(const Real &k, const Real &t) const {
    Real sum = 0, inv = 1 / k, scale = inv;
    for (const auto &d : derivs_) {
      sum += d(t) * scale;
      scale *= inv;
    }
    return sum;
  }

  double k_switch_;
  double series_rel_;
  Rational total_;
  std::vector<RealPolynomial> derivs_;
  std::vector<RealPolynomial> moments_;
};

/// Largest absolute coefficient, the scale for the k-condition tolerance.
inline Real coefficient_norm(const Polynomial &p) {
  Real n = 0;
  for (const auto &c : p.coefficients()) {
    Real v = abs(to_real(c));
    if (v > n)
      n = v;
  }
  return n;
}

} // namespace gqe

#endif
