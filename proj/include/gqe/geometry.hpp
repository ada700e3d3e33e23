#ifndef GQE_GEOMETRY_HPP
#define GQE_GEOMETRY_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "gqe/profile_function.hpp"

namespace gqe {

/// n Chebyshev points clipped to [-1 + clip, 1 - clip], ascending.
inline std::vector<Real> chebyshev_samples(int n = 200, double clip = 1e-6) {
  std::vector<Real> z;
  const Real pi = boost::math::constants::pi<Real>();
  const Real edge = 1 - Real(clip);
  for (int i = 0; i < n; ++i) {
    Real v = cos(pi * (2 * i + 1) / (2 * n));
    if (v > edge)
      v = edge;
    if (v < -edge)
      v = -edge;
    z.push_back(v);
  }
  std::sort(z.begin(), z.end());
  return z;
}

/// Scalar curvature, Laplacian and equation residuals of the admissible
/// metric defined by a candidate profile. Interior points only.
class ScalarProfile {
public:
  ScalarProfile(ProfileFunction f, std::span<const ExtendedFactor> ext)
      : f_(std::move(f)), ext_(ext.begin(), ext.end()) {}

  const ProfileFunction &profile() const { return f_; }
  const BaseQuantities &quantities() const { return f_.profile().source; }

  Real pc(const Real &z) const {
    Real v = 1;
    for (const auto &a : ext_)
      v *= pow(1 + to_real(a.x) * z, a.d);
    return v;
  }

  /// sum over the extended set of 2 d_a s_a x_a / (1 + x_a z)
  Real base_curvature(const Real &z) const {
    Real v = 0;
    for (const auto &a : ext_)
      v += 2 * a.d * to_real(a.s) * to_real(a.x) / (1 + to_real(a.x) * z);
    return v;
  }

  Real scal(const Real &z) const {
    check_interior(z);
    return base_curvature(z) - f_.d2F(z) / pc(z);
  }

  Real scal_bar() const { return to_real(quantities().scal_bar); }

  /// Lap z = -F'/pc
  Real laplacian_z(const Real &z) const {
    check_interior(z);
    return -f_.dF(z) / pc(z);
  }

  /// z -> -(F S')'/pc for a polynomial S(z).
  std::function<Real(const Real &)> laplacian(const Polynomial &S) const {
    RealPolynomial dS = S.derivative().convert<Real>();
    RealPolynomial d2S = S.derivative(2).convert<Real>();
    return [this, dS, d2S](const Real &z) {
      check_interior(z);
      return -(f_.dF(z) * dS(z) + f_.F(z) * d2S(z)) / pc(z);
    };
  }

  Real gqe_residual(const std::vector<Real> &samples) const {
    return generalized_residual(Rational(0), samples);
  }

  /// max |Scal - Scal_bar - k Lap z - b (z + l)|
  Real generalized_residual(const Rational &b,
                            const std::vector<Real> &samples) const {
    const auto &q = quantities();
    if (b != 0 && (q.pc * Polynomial::linear(q.ell, 1)).integrate(-1, 1) != 0)
      throw std::logic_error("z + l does not integrate to zero against pc");
    const Real rb = to_real(b), l = to_real(q.ell), sb = scal_bar();
    Real worst = 0;
    for (const auto &z : samples) {
      Real r = abs(scal(z) - sb - f_.k() * laplacian_z(z) - rb * (z + l));
      if (r > worst)
        worst = r;
    }
    return worst;
  }

  /// max |F'' - k F' - (2 sum d s x pc/(1+xz) - (Scal_bar + b(z+l)) pc)|,
  /// with the right-hand side evaluated from the data, not from P'.
  Real ode_residual(const std::vector<Real> &samples) const {
    const auto &q = quantities();
    const Real rb = to_real(f_.profile().mode.affine());
    const Real l = to_real(q.ell), sb = scal_bar();
    Real worst = 0;
    for (const auto &z : samples) {
      Real p = pc(z);
      Real rhs = base_curvature(z) * p - (sb + rb * (z + l)) * p;
      Real r = abs(f_.d2F(z) - f_.k() * f_.dF(z) - rhs);
      if (r > worst)
        worst = r;
    }
    return worst;
  }

private:
  static void check_interior(const Real &z) {
    if (!(abs(z) < 1))
      throw Error(ErrorKind::EndpointSingularity,
                  "z = " + to_string(z.convert_to<double>()) +
                      " is not in the open interval (-1, 1)");
  }

  ProfileFunction f_;
  std::vector<ExtendedFactor> ext_;
};

} // namespace gqe

#endif
