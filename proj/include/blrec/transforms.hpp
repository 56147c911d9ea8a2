#pragma once

#include "blrec/sample_window.hpp"
#include "blrec/spectrum.hpp"

namespace blrec {

/// Unitary length-N transform of the window embedded at its native indices
/// mod N: bins[j] = N^{-1/2} * sum_k x(k) exp(-i*nu_j*k). Requires N >= window
/// length (and N even). The result carries band_fraction = pi.
DiscreteSpectrum z_forward(const SampleWindow& window, int n);

/// Inverse of z_forward on a native index range of at most N samples:
/// x(k) = N^{-1/2} * sum_j bins[j] exp(+i*nu_j*k).
SampleWindow z_inverse(const DiscreteSpectrum& spectrum, int k_min, int k_max, double step = 1.0);

/// Orthogonal projection onto the band |nu| <= W at transform size N:
/// forward transform, zero every out-of-band bin, transform back onto the
/// window's own index range. Identity for W = pi; exactly idempotent when the
/// window spans a full period (length == N).
SampleWindow bandlimit_project(const SampleWindow& window, double band_fraction, int n);

/// Fraction of spectral energy inside |nu| <= W; rejects an all-zero window.
double band_energy_ratio(const SampleWindow& window, double band_fraction, int n);

}  // namespace blrec
