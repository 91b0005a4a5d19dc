// Complex baseband model: steering vectors and derivatives, transmit
// waveform synthesis, and reproducible noisy measurement generation.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

#include "crbdesign/geometry.hpp"

namespace crbdesign {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

// T x Nt spatio-temporal transmit waveform; rows are time samples, columns
// transmitters. Transmit power is the squared Frobenius norm and is
// constrained to <= 1 in every design produced here.
using WaveformMatrix = Eigen::MatrixXcd;

// Entry k = exp(j * d[k] * omega), in position order.
inline ComplexVector steering(const SensorArray& d, double omega) {
  ComplexVector a(d.size());
  for (int k = 0; k < d.size(); ++k)
    a[k] = std::polar(1.0, d[k] * omega);
  return a;
}

// Entry k = j * d[k] * exp(j * d[k] * omega).
inline ComplexVector steering_derivative(const SensorArray& d, double omega) {
  ComplexVector a(d.size());
  for (int k = 0; k < d.size(); ++k)
    a[k] = Complex(0.0, d[k]) * std::polar(1.0, d[k] * omega);
  return a;
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

// a_t(omega) (x) a_r(omega); the phase of entry (n, m) is the sum co-array
// lag d_t[n] + d_r[m] times omega.
inline ComplexVector effective_steering(const SensorArray& tx,
                                        const SensorArray& rx, double omega) {
  return kron(steering(tx, omega), steering(rx, omega));
}

// d/domega of the effective steering vector: da_t (x) a_r + a_t (x) da_r.
inline ComplexVector effective_steering_derivative(const SensorArray& tx,
                                                   const SensorArray& rx,
                                                   double omega) {
  return kron(steering_derivative(tx, omega), steering(rx, omega)) +
         kron(steering(tx, omega), steering_derivative(rx, omega));
}

// (S (x) I_nr) * z without forming the (T*nr) x (Nt*nr) Kronecker matrix.
// Reshapes z into an nr x Nt matrix Z column-by-column; the product is then
// vec(Z * S^T).
inline ComplexVector kron_identity_apply(const WaveformMatrix& s, int nr,
                                         const ComplexVector& z) {
  if (z.size() != s.cols() * nr)
    throw std::invalid_argument(
        "kron_identity_apply: vector length does not match Nt*nr");
  Eigen::Map<const Eigen::MatrixXcd> zmat(z.data(), nr, s.cols());
  Eigen::MatrixXcd out = zmat * s.transpose();  // nr x T
  return Eigen::Map<const ComplexVector>(out.data(), out.size());
}

// Rank-1 beamforming waveform S = u * a_t(omega)^H / sqrt(Nt) with the given
// unit-norm temporal profile u. Transmit power is exactly 1.
inline WaveformMatrix optimal_waveform(const SensorArray& tx, double omega,
                                       const ComplexVector& u) {
  if (u.size() < 1)
    throw std::invalid_argument("optimal_waveform: empty temporal profile");
  if (std::abs(u.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("optimal_waveform: u must have unit norm");
  return u * steering(tx, omega).adjoint() / std::sqrt(double(tx.size()));
}

// Default temporal profile: constant u = 1/sqrt(T).
inline WaveformMatrix optimal_waveform(const SensorArray& tx, double omega,
                                       int t_samples) {
  if (t_samples < 1)
    throw std::invalid_argument("optimal_waveform: need t_samples >= 1");
  const ComplexVector u =
      ComplexVector::Constant(t_samples, 1.0 / std::sqrt(double(t_samples)));
  return optimal_waveform(tx, omega, u);
}

// Scaled identity, T = Nt, transmit power 1. Full column rank; a reference
// point that does not minimize the single-target bound.
inline WaveformMatrix orthogonal_waveform(int nt) {
  if (nt < 1) throw std::invalid_argument("orthogonal_waveform: need nt >= 1");
  return WaveformMatrix::Identity(nt, nt) / std::sqrt(double(nt));
}

// Numerical rank test: rank(S) == Nt with singular values below
// tol * sigma_max treated as zero.
inline bool full_column_rank(const WaveformMatrix& s, double tol) {
  if (tol <= 0) throw std::invalid_argument("full_column_rank: need tol > 0");
  Eigen::JacobiSVD<WaveformMatrix> svd(s);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= 0.0) return false;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * sv[0]) ++rank;
  return rank == s.cols();
}

// Standard normal pair via Box-Muller on the top 53 bits of mt19937_64
// output. Fixed here instead of std::normal_distribution, whose output
// sequence is implementation-defined; with this routine equal seeds give
// equal samples under any standard library.
inline std::pair<double, double> standard_normal_pair(std::mt19937_64& rng) {
  const double u1 = ((rng() >> 11) + 1) * 0x1.0p-53;  // in (0, 1], log stays finite
  const double u2 = (rng() >> 11) * 0x1.0p-53;        // in [0, 1)
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

// One received snapshot block together with the scenario that generated it.
struct Measurement {
  ComplexVector y;  // length Nr*T
  double omega = 0.0;
  Complex gamma{1.0, 0.0};
  double sigma2 = 0.0;
  std::uint64_t seed = 0;
};

// y = (S (x) I)(a_t (x) a_r) gamma + n with i.i.d. circularly symmetric
// complex normal noise of per-entry variance sigma2 (real and imaginary
// parts each N(0, sigma2/2)). Deterministic given the seed.
inline Measurement synthesize(const SensorArray& tx, const SensorArray& rx,
                              const WaveformMatrix& s, double omega,
                              Complex gamma, double sigma2,
                              std::uint64_t rng_seed) {
  if (s.cols() != tx.size())
    throw std::invalid_argument(
        "synthesize: waveform column count does not match Tx array size");
  if (sigma2 < 0)
    throw std::invalid_argument("synthesize: need sigma2 >= 0");
  const ComplexVector sat = s * steering(tx, omega);
  ComplexVector y = kron(sat, steering(rx, omega)) * gamma;
  if (sigma2 > 0) {
    std::mt19937_64 rng(rng_seed);
    const double scale = std::sqrt(sigma2 / 2.0);
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const auto [g1, g2] = standard_normal_pair(rng);
      y[i] += Complex(g1 * scale, g2 * scale);
    }
  }
  return Measurement{std::move(y), omega, gamma, sigma2, rng_seed};
}

}  // namespace crbdesign
