#ifndef GQE_KSOLVE_HPP
#define GQE_KSOLVE_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "gqe/exp_integral.hpp"
#include "gqe/profile.hpp"
#include "gqe/roots.hpp"

namespace gqe {

struct SolverOptions {
  double kmax = 50;           // search window [-kmax, kmax]
  double tol = 1e-12;         // |I(k)| < tol * |P| at accepted roots
  double k_switch = 1e-4;     // series below, closed form above
  double series_rel = 1e-18;  // moment-series truncation
  double boundary_tol = 1e-10;
  int grid_intervals = 4000;  // sign scan for multi-root P
};

struct KSolution {
  std::vector<Real> roots; // ascending
  int interior_roots = 0;  // distinct roots of P in (-1, 1)
  bool single_root_path = false;
};

namespace detail {

/// Bisection on a sign change; f(lo) and f(hi) have opposite strict signs.
inline Real bisect_sign(const std::function<Real(const Real &)> &f, Real lo,
                        Real hi, int sign_lo) {
  for (int it = 0; it < 400; ++it) {
    Real mid = (lo + hi) / 2;
    Real scale = abs(mid) > 1 ? abs(mid) : Real(1);
    if (hi - lo <= Real(1e-45) * scale)
      return mid;
    int s = Real(f(mid)).sign();
    if (s == 0)
      return mid;
    if (s == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

} // namespace detail

/// Roots of I(k) = int_{-1}^1 e^{-kt} P(t) dt in [-kmax, kmax].
///
/// With exactly one interior root t0 of P, G(k) = e^{k t0} I(k) is strictly
/// increasing, so the unique root is bracketed outward from k = 0 and
/// bisected. Otherwise every sign change of I on a uniform grid is bisected.
inline KSolution solve_k(const ProfilePolynomial &profile,
                         const ExpWeightedIntegral &integral,
                         const SolverOptions &opts = {}) {
  KSolution out;
  RootIsolator iso(profile.P);
  auto interior = iso.isolate(Rational(-1), Rational(1));
  out.interior_roots = static_cast<int>(interior.size());
  const Real kmax(opts.kmax);
  auto I = [&](const Real &k) { return integral.I(k); };
  const int sign0 = sign(integral.integral_at_zero());

  auto no_root = [&]() {
    return Error(ErrorKind::NoRootInWindow,
                 "no sign change of I(k) in [-" + to_string(opts.kmax) + ", " +
                     to_string(opts.kmax) + "]");
  };

  if (interior.size() == 1) {
    out.single_root_path = true;
    if (sign0 == 0) {
      out.roots.push_back(Real(0));
      return out;
    }
    const Real t0 = to_real(iso.refine(interior[0], Rational(1, 1u << 30)).midpoint());
    auto G = [&](const Real &k) -> Real { return exp(k * t0) * I(k); };
    // G increasing: G(0) > 0 puts the root at negative k and vice versa.
    const int dir = sign0 > 0 ? -1 : 1;
    Real inner = 0, outer = 0;
    bool bracketed = false;
    for (Real step = 0.5;; step *= 2) {
      outer = step < kmax ? Real(dir * step) : Real(dir * kmax);
      if (G(outer).sign() != sign0) {
        bracketed = true;
        break;
      }
      if (abs(outer) >= kmax)
        break;
      inner = outer;
    }
    if (!bracketed)
      throw no_root();
    if (G(outer).sign() == 0) {
      out.roots.push_back(outer);
      return out;
    }
    Real lo = dir < 0 ? outer : inner;
    Real hi = dir < 0 ? inner : outer;
    int sign_lo = dir < 0 ? -sign0 : sign0;
    out.roots.push_back(detail::bisect_sign(G, lo, hi, sign_lo));
    return out;
  }

  const int n = std::max(2, opts.grid_intervals + (opts.grid_intervals % 2));
  std::vector<Real> ks(n + 1);
  std::vector<int> signs(n + 1);
  for (int i = 0; i <= n; ++i) {
    // Symmetric grid; index n/2 is exactly k = 0.
    ks[i] = i == n / 2 ? Real(0) : Real(kmax * (2 * i - n) / n);
    signs[i] = i == n / 2 ? sign0 : I(ks[i]).sign();
  }
  for (int i = 0; i <= n; ++i) {
    if (signs[i] == 0)
      out.roots.push_back(ks[i]);
    if (i < n && signs[i] != 0 && signs[i + 1] != 0 && signs[i] != signs[i + 1])
      out.roots.push_back(detail::bisect_sign(I, ks[i], ks[i + 1], signs[i]));
  }
  if (out.roots.empty())
    throw no_root();
  return out;
}

inline KSolution solve_k(const ProfilePolynomial &profile,
                         const SolverOptions &opts = {}) {
  ExpWeightedIntegral integral(profile.P, opts.k_switch, opts.series_rel);
  return solve_k(profile, integral, opts);
}

} // namespace gqe

#endif
