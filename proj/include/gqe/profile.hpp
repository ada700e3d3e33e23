#ifndef GQE_PROFILE_HPP
#define GQE_PROFILE_HPP

#include "gqe/admissible.hpp"

namespace gqe {

enum class ModeKind { gqe, generalized };

/// gqe: Scal - Scal_bar = k Lap z.
/// generalized(b): Scal - Scal_bar = k Lap z + b (z + l).
struct ProfileMode {
  ModeKind kind = ModeKind::gqe;
  Rational b = 0;

  static ProfileMode gqe() { return {}; }
  static ProfileMode generalized(Rational b) {
    return {ModeKind::generalized, std::move(b)};
  }
  /// Affine coefficient actually applied (zero in gqe mode).
  Rational affine() const { return kind == ModeKind::generalized ? b : Rational(0); }
};

inline const char *to_string(ModeKind kind) {
  return kind == ModeKind::gqe ? "gqe" : "generalized";
}

/// The profile polynomial P with P' = 2 sigma_pc - (Scal_bar + b (t + l)) pc
/// and P(-1) = 2 pc(-1). F(z) = e^{kz} int_{-1}^z e^{-kt} P(t) dt.
struct ProfilePolynomial {
  Polynomial P;
  Polynomial dP;
  ProfileMode mode;
  BaseQuantities source;
};

/// Right-hand side of the profile ODE, F'' - k F' = profile_derivative.
inline Polynomial profile_derivative(const BaseQuantities &q,
                                     const ProfileMode &mode = {}) {
  Polynomial rhs = q.sigma_pc * Rational(2) - q.pc * q.scal_bar;
  if (Rational b = mode.affine(); b != 0)
    rhs -= Polynomial::linear(q.ell, 1) * q.pc * b;
  return rhs;
}

inline ProfilePolynomial build_P(const BaseQuantities &q,
                                 const ProfileMode &mode = {}) {
  ProfilePolynomial out;
  out.dP = profile_derivative(q, mode);
  out.P = out.dP.antiderivative_from(Rational(-1)) +
          Polynomial::constant(2 * q.pc(Rational(-1)));
  out.mode = mode;
  out.source = q;
  return out;
}

inline ProfilePolynomial build_P(const ValidatedData &data,
                                 const ProfileMode &mode = {}) {
  return build_P(base_quantities(data), mode);
}

/// Behaviour of P next to the endpoints, read off exactly from the first
/// nonvanishing derivative.
struct EndpointProfile {
  unsigned order_minus = 0; // vanishing order at -1
  unsigned order_plus = 0;  // vanishing order at +1
  int derivative_sign_minus = 0; // sign of P^{(order_minus)}(-1)
  int derivative_sign_plus = 0;  // sign of P^{(order_plus)}(+1)
  int sign_near_minus = 0; // sign on a deleted right neighbourhood of -1
  int sign_near_plus = 0;  // sign on a deleted left neighbourhood of +1
};

inline EndpointProfile endpoint_sign_profile(const Polynomial &P) {
  auto probe = [&](const Rational &at, unsigned &order, int &dsign) {
    Polynomial d = P;
    order = 0;
    while (!d.is_zero()) {
      if (int s = sign(d(at)); s != 0) {
        dsign = s;
        return;
      }
      d = d.derivative();
      ++order;
    }
    throw Error(ErrorKind::DegenerateProfile,
                "every derivative of P vanishes at " + to_string(at));
  };
  EndpointProfile e;
  probe(Rational(-1), e.order_minus, e.derivative_sign_minus);
  probe(Rational(1), e.order_plus, e.derivative_sign_plus);
  e.sign_near_minus = e.derivative_sign_minus;
  // Taylor at +1 from the left: (t - 1)^m has sign (-1)^m.
  e.sign_near_plus = (e.order_plus % 2 == 0) ? e.derivative_sign_plus
                                             : -e.derivative_sign_plus;
  return e;
}

inline EndpointProfile endpoint_sign_profile(const ProfilePolynomial &P) {
  return endpoint_sign_profile(P.P);
}

/// Futaki invariant of the class on K = J grad z, per unit fiber volume:
/// -(1/2) int_{-1}^1 P dt / alpha0. Sign fixed so the two-factor example
/// (1 + x1 - x2)(x1 + x2)/(3 + x1 x2)^2 comes out with factor +6.
inline Rational futaki_on_K(const ProfilePolynomial &P) {
  return -P.P.integrate(Rational(-1), Rational(1)) / (2 * P.source.alpha0);
}

} // namespace gqe

#endif
