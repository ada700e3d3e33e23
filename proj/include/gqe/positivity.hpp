#ifndef GQE_POSITIVITY_HPP
#define GQE_POSITIVITY_HPP

#include <optional>
#include <vector>

#include "gqe/profile_function.hpp"

namespace gqe {

struct CriticalSample {
  Real z;
  Real H;
  bool at_root; // refined interior root of P, otherwise a midpoint
};

struct PositivityCertificate {
  Real margin;                 // min of H over the refined roots of P
  std::optional<Real> witness; // a z with F(z) <= 0, when positivity fails
  std::vector<CriticalSample> samples;

  bool positive() const { return !witness && margin > 0; }
};

/// Certifies F > 0 on (-1, 1). sign F = sign H and H' = e^{-kz} P, so H is
/// monotone between consecutive roots of P and its interior minima sit at
/// roots of P. Each root is refined to width 2^-140 before H is evaluated.
/// The zero tolerance applies to F = e^{kz} H, so a large |k| does not turn
/// an exponentially small but well-resolved H into an unresolved sign.
inline PositivityCertificate certify_positivity(const ProfileFunction &f) {
  const Polynomial &P = f.profile().P;
  RootIsolator iso(P);
  auto roots = iso.isolate(Rational(-1), Rational(1));
  const Real tol_zero = Real(1e-14) * (1 + coefficient_norm(P));
  const Rational width = Rational(1) / Rational(Integer(1) << 140);

  PositivityCertificate cert;
  std::vector<Real> points{Real(-1)};
  for (auto &iv : roots) {
    iv = iso.refine(iv, width);
    Real z = to_real(iv.midpoint());
    Real h = f.H(z);
    if (abs(exp(f.k() * z) * h) < tol_zero)
      throw Error(ErrorKind::UnresolvedSign,
                  "H at interior root z ~ " +
                      to_string(z.convert_to<double>()) +
                      " cannot be separated from 0");
    cert.samples.push_back({z, h, true});
    points.push_back(z);
  }
  points.push_back(Real(1));

  std::optional<Real> worst_mid;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    Real z = (points[i] + points[i + 1]) / 2;
    Real h = f.H(z);
    cert.samples.push_back({z, h, false});
    if (exp(f.k() * z) * h < -tol_zero && (!worst_mid || h < f.H(*worst_mid)))
      worst_mid = z;
  }

  bool have_root = false;
  Real best_z = 0;
  for (const auto &s : cert.samples) {
    if (!s.at_root)
      continue;
    if (!have_root || s.H < cert.margin) {
      cert.margin = s.H;
      best_z = s.z;
      have_root = true;
    }
  }
  if (!have_root) {
    // No interior root: only possible for data outside the admissible
    // setting. Fall back to the midpoint samples.
    cert.margin = cert.samples.front().H;
    best_z = cert.samples.front().z;
    for (const auto &s : cert.samples)
      if (s.H < cert.margin) {
        cert.margin = s.H;
        best_z = s.z;
      }
  }
  if (cert.margin <= 0)
    cert.witness = best_z;
  else if (worst_mid) {
    cert.witness = *worst_mid;
    cert.margin = f.H(*worst_mid);
  }
  return cert;
}

} // namespace gqe

#endif
