// Cramer-Rao lower bound on single-target angle estimation: the general
// projection form for arbitrary waveforms and the closed form under the
// beamforming waveform.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "crbdesign/errors.hpp"
#include "crbdesign/geometry.hpp"
#include "crbdesign/rational.hpp"
#include "crbdesign/signal.hpp"

namespace crbdesign {

enum class CrbBranch { general, closed_form };

struct CrbResult {
  double value = 0.0;  // rad^2, lower bound on angle MSE
  CrbBranch branch = CrbBranch::general;
  int nt = 0;
  int nr = 0;
  double sigma2 = 0.0;
  double gamma_power = 0.0;  // |gamma|^2
  Rational chi_rx;           // Rx spatial variance of the scenario
};

// sigma2 = |gamma|^2 * 10^(-snr_db/10), from SNR = 10*log10(|gamma|^2/sigma2).
inline double snr_to_sigma2(double snr_db, Complex gamma) {
  return std::norm(gamma) * std::pow(10.0, -snr_db / 10.0);
}

// Closed form under the beamforming waveform:
// sigma2/(2|gamma|^2) * 1/(nt*nr) * 1/chi_rx. Independent of the target
// angle. chi_rx stays rational until this final evaluation, so scenarios
// with equal exact variance produce bitwise-identical bounds.
inline CrbResult crb_closed_form(int nt, int nr, const Rational& chi_rx,
                                 Complex gamma, double sigma2) {
  if (nt < 1 || nr < 1)
    throw std::invalid_argument("crb_closed_form: need nt, nr >= 1");
  if (sigma2 <= 0)
    throw std::invalid_argument("crb_closed_form: need sigma2 > 0");
  if (std::norm(gamma) == 0.0)
    throw std::invalid_argument("crb_closed_form: need gamma != 0");
  if (chi_rx.num() == 0)
    throw unidentifiable_error(
        "crb_closed_form: zero Rx spatial variance, angle is unidentifiable");
  if (chi_rx < Rational(0))
    throw std::invalid_argument("crb_closed_form: chi_rx must be positive");
  const double value =
      sigma2 * double(chi_rx.den()) /
      (2.0 * std::norm(gamma) * double(nt) * double(nr) * double(chi_rx.num()));
  return CrbResult{value,  CrbBranch::closed_form, nt, nr, sigma2,
                   std::norm(gamma), chi_rx};
}

// General form sigma2/(2|gamma|^2) / ||P_v^perp vdot||^2 with
// v = (S (x) I) a_tr and vdot = (S (x) I) da_tr. Since v is a single
// column the projection reduces to ||vdot||^2 - |v^H vdot|^2 / ||v||^2.
inline CrbResult crb_general(const SensorArray& tx, const SensorArray& rx,
                             const WaveformMatrix& s, double omega,
                             Complex gamma, double sigma2) {
  if (sigma2 <= 0)
    throw std::invalid_argument("crb_general: need sigma2 > 0");
  if (std::norm(gamma) == 0.0)
    throw std::invalid_argument("crb_general: need gamma != 0");
  if (s.cols() != tx.size())
    throw std::invalid_argument(
        "crb_general: waveform column count does not match Tx array size");

  const int nr = rx.size();
  const ComplexVector v =
      kron_identity_apply(s, nr, effective_steering(tx, rx, omega));
  const ComplexVector vdot = kron_identity_apply(
      s, nr, effective_steering_derivative(tx, rx, omega));

  const double v_sq = v.squaredNorm();
  const double vdot_sq = vdot.squaredNorm();
  const Complex cross = v.dot(vdot);  // v^H vdot
  const double denom =
      vdot_sq - (v_sq > 0.0 ? std::norm(cross) / v_sq : 0.0);
  // Distinguishes structural non-identifiability from roundoff.
  if (denom <= 1e-12 * vdot_sq || vdot_sq == 0.0)
    throw unidentifiable_error(
        "crb_general: projected derivative vanishes, angle is "
        "unidentifiable for this scenario");

  const double value = sigma2 / (2.0 * std::norm(gamma)) / denom;
  return CrbResult{value,
                   CrbBranch::general,
                   tx.size(),
                   nr,
                   sigma2,
                   std::norm(gamma),
                   spatial_variance(rx)};
}

}  // namespace crbdesign
