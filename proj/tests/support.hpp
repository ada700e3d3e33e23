#ifndef GQE_TESTS_SUPPORT_HPP
#define GQE_TESTS_SUPPORT_HPP

// Independent oracles shared by the unit tests and the acceptance binary.
// Nothing here calls into the closed-form machinery it is used to check.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "gqe/cli.hpp"

namespace oracle {

using gqe::AdmissibleData;
using gqe::Polynomial;
using gqe::Rational;

/// Adaptive Gauss-Kronrod in double.
inline double integrate(const std::function<double(double)> &f, double a, double b,
                        double *error = nullptr) {
  double err = 0;
  double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, 20, 1e-14, &err);
  if (error)
    *error = err;
  return v;
}

/// Fixed 40-point Gauss-Legendre, for smooth integrands whose value may be 0.
inline double integrate_fixed(const std::function<double(double)> &f, double a,
                              double b) {
  return boost::math::quadrature::gauss<double, 40>::integrate(f, a, b);
}

inline double eval(const Polynomial &p, double t) {
  double v = 0;
  const auto &c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;)
    v = v * t + gqe::to_double(c[i]);
  return v;
}

/// int_{-1}^{1} e^{-kt} p(t) dt by quadrature.
inline double weighted_integral(const Polynomial &p, double k) {
  return integrate([&](double t) { return std::exp(-k * t) * eval(p, t); }, -1, 1);
}

/// Exact int_{-1}^{1} p dt from monomial moments.
inline Rational moment_integral(const Polynomial &p) {
  Rational sum = 0;
  const auto &c = p.coefficients();
  for (std::size_t n = 0; n < c.size(); n += 2)
    sum += c[n] * Rational(2, static_cast<long>(n + 1));
  return sum;
}

/// Extended index set assembled directly from the data, as (d, s, x) triples.
struct Term {
  int d;
  Rational s;
  Rational x;
};

inline std::vector<Term> terms(const AdmissibleData &data) {
  std::vector<Term> out;
  for (const auto &f : data.factors)
    out.push_back({f.d, f.s, f.x});
  if (data.d0 > 0)
    out.push_back({data.d0, Rational(data.d0 + 1), Rational(1)});
  if (data.dinf > 0)
    out.push_back({data.dinf, Rational(-(data.dinf + 1)), Rational(-1)});
  return out;
}

inline double pc(const std::vector<Term> &ts, double z) {
  double v = 1;
  for (const auto &t : ts)
    v *= std::pow(1 + gqe::to_double(t.x) * z, t.d);
  return v;
}

inline double curvature_sum(const std::vector<Term> &ts, double z) {
  double v = 0;
  for (const auto &t : ts) {
    double x = gqe::to_double(t.x);
    v += t.d * gqe::to_double(t.s) * x / (1 + x * z);
  }
  return v;
}

/// alpha0, alpha1, beta0 by quadrature.
struct Moments {
  double alpha0, alpha1, beta0;
  double scal_bar() const { return 2 * beta0 / alpha0; }
  double ell() const { return -alpha1 / alpha0; }
};

inline Moments moments(const AdmissibleData &data) {
  auto ts = terms(data);
  Moments m;
  m.alpha0 = integrate([&](double z) { return pc(ts, z); }, -1, 1);
  m.alpha1 = integrate([&](double z) { return z * pc(ts, z); }, -1, 1);
  m.beta0 = pc(ts, 1) + pc(ts, -1) +
            integrate([&](double z) { return curvature_sum(ts, z) * pc(ts, z); }, -1, 1);
  return m;
}

/// Two-factor class d0 = dinf = 0, s1 = -s2 = -2.
inline AdmissibleData two_factor(const Rational &x1, const Rational &x2) {
  return {0, 0, {{1, Rational(-2), x1}, {1, Rational(2), x2}}};
}

/// Closed forms for the two-factor class on the line x2 = -x1 = -x.
inline Polynomial line_P(const Rational &x) {
  const Rational x2 = x * x, x3 = x2 * x;
  const Rational c = x2 * (1 - 4 * x - x2);
  const Rational den = x2 - 3;
  return Polynomial({Rational(0), 2 * (3 - 3 * x2 - 4 * x3) / den, Rational(0),
                     -2 * c / den});
}

inline Polynomial line_F(const Rational &x) {
  const Rational x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  const Rational c = x2 * (1 - 4 * x - x2);
  const Rational den = 2 * (3 - x2);
  Polynomial quad({(6 - 7 * x2 - 4 * x3 + x4) / den, Rational(0), -c / den});
  return Polynomial({Rational(1), Rational(0), Rational(-1)}) * quad;
}

/// Futaki shape (1 + x1 - x2)(x1 + x2)/(3 + x1 x2)^2.
inline Rational futaki_shape(const Rational &x1, const Rational &x2) {
  Rational d = 3 + x1 * x2;
  return (1 + x1 - x2) * (x1 + x2) / (d * d);
}

/// Random admissible data with d0, dinf <= 3 and at most three base factors.
class DataGen {
public:
  explicit DataGen(unsigned seed) : rng_(seed) {}

  Rational small_rational(int num_lo, int num_hi, int den) {
    return Rational(std::uniform_int_distribution<int>(num_lo, num_hi)(rng_), den);
  }

  /// Nonzero x with |x| <= bound_num / den.
  Rational cone_x(int bound_num, int den) {
    for (;;) {
      Rational x = small_rational(-bound_num, bound_num, den);
      if (x != 0)
        return x;
    }
  }

  AdmissibleData data(int max_num = 95, int den = 100, int max_d = 3,
                      int max_factors = 3) {
    for (;;) {
      AdmissibleData d;
      d.d0 = uniform(0, max_d);
      d.dinf = uniform(0, max_d);
      int n = uniform(0, max_factors);
      for (int i = 0; i < n; ++i)
        d.factors.push_back(
            {uniform(1, 2), small_rational(-6, 6, 2), cone_x(max_num, den)});
      if (d.d0 + d.dinf > 0 || !d.factors.empty())
        return d;
    }
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  std::mt19937 &engine() { return rng_; }

private:
  std::mt19937 rng_;
};

/// Random polynomial with small integer-over-den coefficients.
inline Polynomial random_poly(DataGen &g, int degree, int den = 7) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i)
    c.push_back(g.small_rational(-20, 20, den));
  if (c.back() == 0)
    c.back() = 1;
  return Polynomial(c);
}

} // namespace oracle

#endif
