#ifndef GQE_PROFILE_FUNCTION_HPP
#define GQE_PROFILE_FUNCTION_HPP

#include <memory>

#include "gqe/ksolve.hpp"

namespace gqe {

/// A pair (k, P) encoding F(z) = e^{kz} int_{-1}^z e^{-kt} P(t) dt.
struct ProfileCandidate {
  Real k;
  ProfilePolynomial profile;
};

/// F and its first two derivatives for a candidate. With H' = e^{-kz} P:
///   F' = k F + P,   F'' = k F' + P' = k^2 F + k P + P'.
class ProfileFunction {
public:
  ProfileFunction(ProfileCandidate c, const SolverOptions &opts = {})
      : c_(std::move(c)),
        integral_(std::make_shared<const ExpWeightedIntegral>(
            c_.profile.P, opts.k_switch, opts.series_rel)),
        P_(c_.profile.P.convert<Real>()), dP_(c_.profile.dP.convert<Real>()) {}

  ProfileFunction(ProfileCandidate c,
                  std::shared_ptr<const ExpWeightedIntegral> integral)
      : c_(std::move(c)), integral_(std::move(integral)),
        P_(c_.profile.P.convert<Real>()), dP_(c_.profile.dP.convert<Real>()) {}

  const Real &k() const { return c_.k; }
  const ProfilePolynomial &profile() const { return c_.profile; }
  const ProfileCandidate &candidate() const { return c_; }
  const ExpWeightedIntegral &integral() const { return *integral_; }

  Real H(const Real &z) const { return integral_->H(c_.k, z); }
  Real F(const Real &z) const { return exp(c_.k * z) * H(z); }
  Real dF(const Real &z) const { return c_.k * F(z) + P_(z); }
  Real d2F(const Real &z) const {
    return c_.k * c_.k * F(z) + c_.k * P_(z) + dP_(z);
  }
  Real P(const Real &z) const { return P_(z); }
  Real dP(const Real &z) const { return dP_(z); }

  /// I(k), i.e. H(1); zero exactly when the k-condition holds.
  Real k_condition() const { return integral_->I(c_.k); }

private:
  ProfileCandidate c_;
  std::shared_ptr<const ExpWeightedIntegral> integral_;
  RealPolynomial P_;
  RealPolynomial dP_;
};

inline ProfileFunction build_F(ProfileCandidate c, const SolverOptions &opts = {}) {
  return ProfileFunction(std::move(c), opts);
}

} // namespace gqe

#endif
