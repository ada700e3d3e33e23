#ifndef GQE_ASYMPTOTICS_HPP
#define GQE_ASYMPTOTICS_HPP

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "gqe/existence.hpp"

namespace gqe {

/// Root-structure taxonomy of the small-class limit:
/// 1: d0 > 0, dinf > 0;  2: d0 = 0, dinf > 0;  3: d0 > 0, dinf = 0;  4: both 0.
enum class LimitCase { case1 = 1, case2 = 2, case3 = 3, case4 = 4 };

inline LimitCase case_of(int d0, int dinf) {
  if (d0 > 0 && dinf > 0)
    return LimitCase::case1;
  if (d0 == 0 && dinf > 0)
    return LimitCase::case2;
  if (d0 > 0)
    return LimitCase::case3;
  return LimitCase::case4;
}

/// lim l as all x_a -> 0.
inline Rational limit_ell(int d0, int dinf) {
  return Rational(dinf - d0, 2 + d0 + dinf);
}

/// lim P'(t) as all x_a -> 0, optionally with the affine term -b (t + lim l) pc.
/// The limit is a polynomial, not the P' of any Kaehler class.
inline Polynomial limit_Pprime(int d0, int dinf,
                               const std::optional<Rational> &b = std::nullopt) {
  const Polynomial up = Polynomial::linear(1, 1);    // 1 + t
  const Polynomial down = Polynomial::linear(1, -1); // 1 - t
  const Polynomial pc = up.pow(d0) * down.pow(dinf);
  Polynomial out = pc * Rational(-(1 + d0 + dinf) * (2 + d0 + dinf));
  if (d0 > 0)
    out += up.pow(d0 - 1) * down.pow(dinf) * Rational(2 * d0 * (d0 + 1));
  if (dinf > 0)
    out += up.pow(d0) * down.pow(dinf - 1) * Rational(2 * dinf * (dinf + 1));
  if (b && *b != 0)
    out -= Polynomial::linear(limit_ell(d0, dinf), 1) * pc * *b;
  return out;
}

struct GeneralizedLimitChecks {
  Rational g_minus; // g(-1), expected 4 d0 (d0 + 1)
  Rational g_plus;  // g(1), expected 4 dinf (dinf + 1)
  Rational t0;      // -lim l
  Rational g_t0;    // expected -4 (1 + d0)(1 + dinf)/(2 + d0 + dinf)

  bool ok() const { return g_minus > 0 && g_plus > 0 && g_t0 < 0; }
};

struct LimitStructure {
  LimitCase case_id;
  Polynomial limit;
  Polynomial core;          // g
  unsigned deflate_minus = 0; // power of (1 + t) removed
  unsigned deflate_plus = 0;  // power of (1 - t) removed
  Rational normalizer = 1;    // constant divided out (1 + d in Cases 2 and 3)
  std::vector<RootInterval> roots;
  bool simple = true;
  std::optional<GeneralizedLimitChecks> generalized;
};

/// Deflates the fixed endpoint factors from lim P' and isolates the interior
/// roots of the remaining core g.
inline LimitStructure limit_root_structure(int d0, int dinf,
                                           const std::optional<Rational> &b = std::nullopt) {
  LimitStructure s;
  s.case_id = case_of(d0, dinf);
  s.limit = limit_Pprime(d0, dinf, b);
  s.deflate_minus = d0 > 0 ? static_cast<unsigned>(d0 - 1) : 0u;
  s.deflate_plus = dinf > 0 ? static_cast<unsigned>(dinf - 1) : 0u;
  if (s.case_id == LimitCase::case2)
    s.normalizer = 1 + dinf;
  else if (s.case_id == LimitCase::case3)
    s.normalizer = 1 + d0;
  s.core = deflate_endpoint_factors(s.limit, s.deflate_minus, s.deflate_plus) *
           (Rational(1) / s.normalizer);
  if (s.core.is_zero())
    throw Error(ErrorKind::DegenerateProfile, "limit core vanishes identically");
  s.roots = isolate_roots(s.core, -1, 1);
  Polynomial common = gcd(s.core, s.core.derivative());
  s.simple = common.degree() < 1 || count_roots(common, -1, 1) == 0;
  if (b && s.case_id == LimitCase::case1) {
    GeneralizedLimitChecks g;
    g.g_minus = s.core(Rational(-1));
    g.g_plus = s.core(Rational(1));
    g.t0 = -limit_ell(d0, dinf);
    g.g_t0 = s.core(g.t0);
    s.generalized = g;
  }
  return s;
}

/// Number of distinct interior roots the case analysis predicts for P'.
inline int expected_Pprime_roots(LimitCase c) {
  switch (c) {
  case LimitCase::case1: return 2;
  case LimitCase::case2:
  case LimitCase::case3: return 1;
  case LimitCase::case4: return 0;
  }
  return -1;
}

/// Sup norm of p on [-1, 1], attained at +-1 or at an interior critical point.
inline Real sup_norm_unit(const Polynomial &p) {
  if (p.is_zero())
    return 0;
  Real best = abs(to_real(p(Rational(-1))));
  Real right = abs(to_real(p(Rational(1))));
  if (right > best)
    best = right;
  Polynomial dp = p.derivative();
  if (dp.is_zero())
    return best;
  RootIsolator iso(dp);
  for (auto iv : iso.isolate(-1, 1)) {
    iv = iso.refine(iv, Rational(1, 1u << 30));
    // p is flat at its critical point; bound it by both interval ends too.
    for (const Rational &z : {iv.lo, iv.hi, iv.midpoint()}) {
      Real v = abs(to_real(p(z)));
      if (v > best)
        best = v;
    }
  }
  return best;
}

/// Class data with x_a = eps * u_a for directions u_a taken from `directions`.
inline AdmissibleData scaled_data(const AdmissibleData &directions,
                                  const Rational &eps) {
  AdmissibleData d = directions;
  for (auto &f : d.factors)
    f.x = f.x * eps;
  return d;
}

struct ConvergenceRow {
  Rational eps;
  double sup_distance = 0; // |P'_eps - lim P'| on [-1, 1]
  int P_roots = 0;
  int Pprime_roots = 0;
  int limit_Pprime_roots = 0;
};

inline std::vector<ConvergenceRow>
convergence_diagnostic(const AdmissibleData &directions,
                       std::span<const Rational> eps_list,
                       const ProfileMode &mode = {}) {
  std::optional<Rational> b;
  if (mode.kind == ModeKind::generalized)
    b = mode.b;
  const Polynomial limit = limit_Pprime(directions.d0, directions.dinf, b);
  const int limit_roots = count_roots(limit, -1, 1);
  std::vector<ConvergenceRow> rows;
  for (const auto &eps : eps_list) {
    auto data = validate(scaled_data(directions, eps));
    auto P = build_P(base_quantities(data), mode);
    ConvergenceRow r;
    r.eps = eps;
    r.sup_distance = sup_norm_unit(P.dP - limit).convert_to<double>();
    r.P_roots = count_roots(P.P, -1, 1);
    r.Pprime_roots = count_roots(P.dP, -1, 1);
    r.limit_Pprime_roots = limit_roots;
    rows.push_back(r);
  }
  return rows;
}

struct ExistenceRadius {
  std::optional<double> largest_exists; // largest tested eps with existence
  double smallest_failure = 1;          // smallest tested eps without it
  int evaluations = 0;
};

/// Geometric bisection over eps in [eps_lo, 1/max|u|) for the largest scale
/// at which the class eps * u still admits the metric.
inline ExistenceRadius existence_radius(const AdmissibleData &directions,
                                        const ProfileMode &mode = {},
                                        const SolverOptions &opts = {},
                                        double eps_lo = 1e-4, int iterations = 24) {
  double umax = 0;
  for (const auto &f : directions.factors)
    umax = std::max(umax, std::abs(to_double(f.x)));
  ExistenceRadius out;
  double hi = umax > 0 ? std::min(1.0, 1.0 / umax) : 1.0;
  out.smallest_failure = hi;
  auto exists_at = [&](double eps) {
    ++out.evaluations;
    auto data = validate(scaled_data(directions, from_double(eps)));
    return decide_existence(data, mode, opts).verdict == Verdict::exists;
  };
  if (!exists_at(eps_lo))
    return out;
  double lo = eps_lo;
  for (int i = 0; i < iterations; ++i) {
    double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi)
      break;
    if (exists_at(mid))
      lo = mid;
    else
      hi = mid;
  }
  out.largest_exists = lo;
  out.smallest_failure = hi;
  return out;
}

} // namespace gqe

#endif
