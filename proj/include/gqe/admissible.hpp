#ifndef GQE_ADMISSIBLE_HPP
#define GQE_ADMISSIBLE_HPP

#include <span>
#include <string>
#include <vector>

#include "gqe/polynomial.hpp"
#include "gqe/roots.hpp"

namespace gqe {

/// One CSC factor (+-g_a, +-omega_a) of the base: complex dimension d,
/// scalar curvature +-2 d s, and class parameter x whose sign is that of g_a.
struct BaseFactor {
  int d = 1;
  Rational s;
  Rational x;
};

/// Admissible data for one class: fiber ranks d0 + 1, dinf + 1 and the base
/// factors indexed by A.
struct AdmissibleData {
  int d0 = 0;
  int dinf = 0;
  std::vector<BaseFactor> factors;
};

enum class FactorRole { base, zero, infinity };

/// A member of the extended index set, with the frozen endpoint values
/// x_0 = 1, s_0 = d0 + 1 and x_inf = -1, s_inf = -(dinf + 1) attached.
struct ExtendedFactor {
  int d;
  Rational s;
  Rational x;
  FactorRole role;
};

class ValidatedData;
ValidatedData validate(const AdmissibleData &data);

/// Admissible data that passed validation. Only `validate` constructs it.
class ValidatedData {
public:
  const AdmissibleData &data() const { return data_; }
  int d0() const { return data_.d0; }
  int dinf() const { return data_.dinf; }
  std::span<const ExtendedFactor> extended() const { return extended_; }

private:
  friend ValidatedData validate(const AdmissibleData &data);
  ValidatedData(AdmissibleData data, std::vector<ExtendedFactor> ext)
      : data_(std::move(data)), extended_(std::move(ext)) {}

  AdmissibleData data_;
  std::vector<ExtendedFactor> extended_;
};

/// Extended index set without the cone check. Used for the x_a -> 0 limit
/// objects, which are not Kaehler classes; never feed these to the solver.
inline std::vector<ExtendedFactor> extended_factors(const AdmissibleData &data) {
  std::vector<ExtendedFactor> ext;
  for (const auto &f : data.factors)
    ext.push_back({f.d, f.s, f.x, FactorRole::base});
  if (data.d0 > 0)
    ext.push_back({data.d0, Rational(data.d0 + 1), Rational(1), FactorRole::zero});
  if (data.dinf > 0)
    ext.push_back(
        {data.dinf, Rational(-(data.dinf + 1)), Rational(-1), FactorRole::infinity});
  return ext;
}

inline ValidatedData validate(const AdmissibleData &data) {
  if (data.d0 < 0 || data.dinf < 0)
    throw Error(ErrorKind::InvalidDimension, "d0 and dinf must be nonnegative");
  for (std::size_t i = 0; i < data.factors.size(); ++i) {
    const auto &f = data.factors[i];
    const std::string where = "factors[" + std::to_string(i) + "]";
    if (f.d <= 0)
      throw Error(ErrorKind::InvalidDimension, where + ".d must be positive");
    Rational ax = abs(f.x);
    if (ax == 0 || ax >= 1)
      throw Error(ErrorKind::ConeViolation,
                  where + ".x = " + to_string(f.x) + " is outside 0 < |x| < 1");
  }
  auto ext = extended_factors(data);
  if (ext.empty())
    throw Error(ErrorKind::EmptyExtendedIndex,
                "no base factors and d0 = dinf = 0");
  return ValidatedData(data, std::move(ext));
}

/// prod over the extended set of (1 + x_a z)^{d_a}
inline Polynomial build_pc(std::span<const ExtendedFactor> ext) {
  Polynomial pc = Polynomial::constant(1);
  for (const auto &f : ext)
    pc = pc * Polynomial::linear(1, f.x).pow(static_cast<unsigned>(f.d));
  return pc;
}

inline Polynomial build_pc(const ValidatedData &data) {
  return build_pc(data.extended());
}

/// sum_a d_a s_a x_a pc(u) / (1 + x_a u), assembled without division: each
/// term is pc with one copy of its own linear factor removed.
inline Polynomial sigma_pc(std::span<const ExtendedFactor> ext) {
  Polynomial sum;
  for (std::size_t a = 0; a < ext.size(); ++a) {
    const auto &fa = ext[a];
    if (fa.x == 0 || fa.s == 0)
      continue;
    Polynomial term = Polynomial::constant(Rational(fa.d) * fa.s * fa.x);
    for (std::size_t b = 0; b < ext.size(); ++b) {
      unsigned power = static_cast<unsigned>(ext[b].d) - (a == b ? 1u : 0u);
      term = term * Polynomial::linear(1, ext[b].x).pow(power);
    }
    sum += term;
  }
  return sum;
}

/// Fiberwise moments of the class. Integrals use the measure pc(z) dz on
/// [-1, 1]; the constant base-volume factor is dropped throughout.
struct BaseQuantities {
  Polynomial pc;
  Polynomial sigma_pc;
  Rational alpha0;
  Rational alpha1;
  Rational beta0;
  Rational scal_bar; // 2 beta0 / alpha0
  Rational ell;      // -alpha1 / alpha0
};

inline BaseQuantities base_quantities(std::span<const ExtendedFactor> ext) {
  BaseQuantities q;
  q.pc = build_pc(ext);
  q.sigma_pc = sigma_pc(ext);
  const Rational lo(-1), hi(1);
  q.alpha0 = q.pc.integrate(lo, hi);
  q.alpha1 = (q.pc * Polynomial::monomial(1, 1)).integrate(lo, hi);
  q.beta0 = q.pc(hi) + q.pc(lo) + q.sigma_pc.integrate(lo, hi);
  q.scal_bar = 2 * q.beta0 / q.alpha0;
  q.ell = -q.alpha1 / q.alpha0;
  return q;
}

inline BaseQuantities base_quantities(const ValidatedData &data) {
  return base_quantities(data.extended());
}

} // namespace gqe

#endif
