#ifndef GQE_EXISTENCE_HPP
#define GQE_EXISTENCE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gqe/geometry.hpp"
#include "gqe/positivity.hpp"

namespace gqe {

enum class Verdict { exists, fails_positivity, no_k_found, inconclusive };

inline const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::exists: return "exists";
  case Verdict::fails_positivity: return "fails_positivity";
  case Verdict::no_k_found: return "no_k_found";
  case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

/// |F(-1)|, |F(1)|, |F'(-1) - 2pc(-1)|, |F'(1) + 2pc(1)|
struct BoundaryResiduals {
  double F_minus = 0;
  double F_plus = 0;
  double dF_minus = 0;
  double dF_plus = 0;

  double max() const { return std::max({F_minus, F_plus, dF_minus, dF_plus}); }
};

inline BoundaryResiduals boundary_residuals(const ProfileFunction &f) {
  const Polynomial &pc = f.profile().source.pc;
  const Real pm = to_real(pc(Rational(-1))), pp = to_real(pc(Rational(1)));
  BoundaryResiduals r;
  r.F_minus = Real(abs(f.F(Real(-1)))).convert_to<double>();
  r.F_plus = Real(abs(f.F(Real(1)))).convert_to<double>();
  r.dF_minus = Real(abs(f.dF(Real(-1)) - 2 * pm)).convert_to<double>();
  r.dF_plus = Real(abs(f.dF(Real(1)) + 2 * pp)).convert_to<double>();
  return r;
}

enum class CandidateStatus { certified, fails_positivity, boundary, unresolved };

inline const char *to_string(CandidateStatus s) {
  switch (s) {
  case CandidateStatus::certified: return "certified";
  case CandidateStatus::fails_positivity: return "fails_positivity";
  case CandidateStatus::boundary: return "boundary";
  case CandidateStatus::unresolved: return "unresolved";
  }
  return "unknown";
}

struct CandidateResult {
  Real k;
  CandidateStatus status = CandidateStatus::unresolved;
  std::optional<double> margin;
  std::optional<double> witness;
  BoundaryResiduals residuals;
  double k_condition = 0; // |I(k)|
  std::string note;
};

struct ExistenceReport {
  Verdict verdict = Verdict::inconclusive;
  ProfileMode mode;
  std::optional<Real> k;
  std::optional<double> margin;
  std::optional<double> witness;
  BoundaryResiduals boundary;
  int root_count = 0;
  Rational futaki_k;
  ProfilePolynomial profile;
  std::vector<CandidateResult> candidates;
  double kmax = 0;
  std::string diagnostic;
};

/// Full check for one candidate k: positivity certificate and boundary data.
inline CandidateResult evaluate_candidate(const ProfileFunction &f,
                                          const SolverOptions &opts) {
  CandidateResult r;
  r.k = f.k();
  r.k_condition = Real(abs(f.k_condition())).convert_to<double>();
  r.residuals = boundary_residuals(f);
  try {
    auto cert = certify_positivity(f);
    r.margin = cert.margin.convert_to<double>();
    if (cert.witness) {
      r.witness = cert.witness->convert_to<double>();
      r.status = CandidateStatus::fails_positivity;
    } else if (r.residuals.max() >= opts.boundary_tol) {
      r.status = CandidateStatus::boundary;
    } else {
      r.status = CandidateStatus::certified;
    }
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::UnresolvedSign)
      throw;
    r.status = CandidateStatus::unresolved;
    r.note = e.what();
  }
  return r;
}

/// build_P -> solve_k -> build_F -> certify_positivity for one class.
inline ExistenceReport decide_existence(const ValidatedData &data,
                                        const ProfileMode &mode = {},
                                        const SolverOptions &opts = {}) {
  ExistenceReport rep;
  rep.mode = mode;
  rep.kmax = opts.kmax;
  rep.profile = build_P(base_quantities(data), mode);
  rep.futaki_k = futaki_on_K(rep.profile);
  auto integral = std::make_shared<const ExpWeightedIntegral>(
      rep.profile.P, opts.k_switch, opts.series_rel);

  KSolution sol;
  try {
    sol = solve_k(rep.profile, *integral, opts);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::NoRootInWindow)
      throw;
    rep.verdict = Verdict::no_k_found;
    rep.root_count = count_roots(rep.profile.P, -1, 1);
    rep.diagnostic = e.what();
    return rep;
  }
  rep.root_count = sol.interior_roots;

  for (const auto &k : sol.roots) {
    ProfileFunction f({k, rep.profile}, integral);
    rep.candidates.push_back(evaluate_candidate(f, opts));
  }

  auto pick = [&](const CandidateResult &c) {
    rep.k = c.k;
    rep.margin = c.margin;
    rep.witness = c.witness;
    rep.boundary = c.residuals;
  };
  for (const auto &c : rep.candidates)
    if (c.status == CandidateStatus::certified) {
      rep.verdict = Verdict::exists;
      pick(c);
      return rep;
    }
  if (std::any_of(rep.candidates.begin(), rep.candidates.end(), [](auto &c) {
        return c.status == CandidateStatus::unresolved;
      })) {
    rep.verdict = Verdict::inconclusive;
    for (const auto &c : rep.candidates)
      if (c.status == CandidateStatus::unresolved) {
        rep.diagnostic = c.note;
        pick(c);
        break;
      }
    return rep;
  }
  // Definite negative: report the candidate nearest k = 0.
  const CandidateResult *nearest = &rep.candidates.front();
  for (const auto &c : rep.candidates)
    if (abs(c.k) < abs(nearest->k))
      nearest = &c;
  rep.verdict = Verdict::fails_positivity;
  pick(*nearest);
  if (!nearest->witness)
    rep.diagnostic = "boundary residuals exceed tolerance";
  return rep;
}

/// Verification of an externally supplied k; never searches.
struct CertificationReport {
  Real k;
  double k_condition = 0; // |I(k)|
  bool k_condition_ok = false;
  BoundaryResiduals boundary;
  bool boundary_ok = false;
  double ode_residual = 0;
  bool ode_ok = false;
  std::optional<double> margin;
  std::optional<double> witness;
  bool positivity_ok = false;
  bool unresolved = false;
  std::string note;

  bool passed() const {
    return k_condition_ok && boundary_ok && ode_ok && positivity_ok;
  }
};

inline CertificationReport certify_candidate(const ValidatedData &data,
                                             const Real &k,
                                             const ProfileMode &mode = {},
                                             const SolverOptions &opts = {}) {
  CertificationReport rep;
  rep.k = k;
  ProfileFunction f({k, build_P(base_quantities(data), mode)}, opts);
  rep.k_condition = Real(abs(f.k_condition())).convert_to<double>();
  rep.k_condition_ok = rep.k_condition < opts.boundary_tol;
  rep.boundary = boundary_residuals(f);
  rep.boundary_ok = rep.boundary.max() < opts.boundary_tol;
  ScalarProfile geo(f, data.extended());
  const double scale = 1 + std::abs(to_double(f.profile().source.scal_bar));
  rep.ode_residual = geo.ode_residual(chebyshev_samples(100)).convert_to<double>();
  rep.ode_ok = rep.ode_residual < 1e-9 * scale;
  try {
    auto cert = certify_positivity(f);
    rep.margin = cert.margin.convert_to<double>();
    if (cert.witness)
      rep.witness = cert.witness->convert_to<double>();
    rep.positivity_ok = cert.positive();
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::UnresolvedSign)
      throw;
    rep.unresolved = true;
    rep.note = e.what();
  }
  return rep;
}

} // namespace gqe

#endif
