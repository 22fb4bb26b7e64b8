// Model parameters for the curved-space oscillator: curvature, frequency,
// and the kappa/lambda sign convention.
#pragma once

#include <stdexcept>

#include "casimir/rational.hpp"

namespace casimir {

/// kappa is the curvature parameter, lambda the nonlinearity of the metric
/// factor 1 + lambda r^2. The default convention ties them by lambda = -kappa;
/// the switch exists so the identification can be tested rather than assumed.
enum class KappaConvention { LambdaIsMinusKappa, LambdaIsKappa };

struct ModelParams {
  Rational hbar{1};
  Rational kappa{1};
  Rational omega_sq{1};
  KappaConvention convention = KappaConvention::LambdaIsMinusKappa;

  Rational lambda() const {
    return convention == KappaConvention::LambdaIsMinusKappa ? -kappa : kappa;
  }

  static ModelParams from_lambda(const Rational& hbar, const Rational& lambda,
                                 const Rational& omega_sq,
                                 KappaConvention conv = KappaConvention::LambdaIsMinusKappa) {
    ModelParams p;
    p.hbar = hbar;
    p.kappa = conv == KappaConvention::LambdaIsMinusKappa ? -lambda : lambda;
    p.omega_sq = omega_sq;
    p.convention = conv;
    if (p.omega_sq.sign() <= 0) throw std::invalid_argument("ModelParams: omega^2 must be > 0");
    return p;
  }

  void validate() const {
    if (hbar.sign() <= 0) throw std::invalid_argument("ModelParams: hbar must be > 0");
    if (omega_sq.sign() <= 0) throw std::invalid_argument("ModelParams: omega^2 must be > 0");
  }

  /// The radicand t = hbar^4 kappa^4 + 4 hbar^2 kappa^2 omega^2 appearing in
  /// the closed-form u values and energies.
  Rational radicand() const {
    Rational h2 = hbar * hbar, k2 = kappa * kappa;
    return h2 * h2 * k2 * k2 + 4 * h2 * k2 * omega_sq;
  }
};

}  // namespace casimir
