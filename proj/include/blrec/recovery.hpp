#pragma once

#include <vector>

#include "blrec/sample_window.hpp"
#include "blrec/spectrum.hpp"

namespace blrec {

/// A window with missing samples plus the spectral model they are recovered
/// under: the sequence is assumed band-limited to |nu| <= band_fraction at
/// transform size N. For sampled continuous signals band_fraction = tau*Omega.
class RecoveryProblem {
public:
    RecoveryProblem(SampleWindow window, double band_fraction, int transform_size);

    const SampleWindow& window() const { return window_; }
    double band_fraction() const { return band_fraction_; }
    int transform_size() const { return transform_size_; }

    /// True when the unknown set is a contiguous run touching either window end
    /// (the half-series geometry, as opposed to interior gaps).
    bool one_sided() const;

private:
    SampleWindow window_;
    double band_fraction_;
    int transform_size_;
};

struct RecoveryReport {
    SampleWindow recovered;                // all-known
    std::vector<double> residual_history;  // per iteration ||y_{n+1} - y_n|| (PG) or ls residual (TSVD)
    std::vector<double> singular_values;   // descending; TSVD/certificate path
    double condition_estimate = 0.0;       // sigma_max / sigma_min of the recovery matrix
    int iterations_used = 0;
    bool converged = false;
};

/// Extreme singular values of the map from in-band spectral coefficients to
/// the known samples. sigma_min > 0 certifies that the known trace determines
/// every in-band degree of freedom at window scale; when there are more
/// in-band bins than knowns the map has a null space and sigma_min is 0.
struct Certificate {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double condition = 0.0;
};

Certificate uniqueness_certificate(const SampleWindow& mask_window, double band_fraction,
                                   int transform_size);

/// Alternating projections between the data-consistent affine set and the
/// band-limited subspace:
///   y <- (1 - relaxation) * y + relaxation * P_W(y with knowns imposed)
/// Stops when ||y_{n+1} - y_n|| <= tol * ||y_n|| or at max_iter (converged
/// flag false, still returns the iterate). Known values are re-imposed
/// exactly on output.
RecoveryReport pg_extrapolate(const RecoveryProblem& problem, int max_iter = 10000,
                              double tol = 1e-9, double relaxation = 1.0);

/// Direct least-squares recovery: solve A c ~= x_known for the in-band
/// coefficients by SVD, dropping singular values below sv_cutoff * sigma_max
/// (values exactly at the cutoff are kept), then resynthesize the window.
/// A has one row per known index k and one column per in-band bin j, entry
/// exp(i*nu_j*k) / sqrt(N). Rejects underdetermined problems (more in-band
/// bins than knowns).
RecoveryReport tsvd_extrapolate(const RecoveryProblem& problem, double sv_cutoff = 1e-10);

/// Missing-sample recovery for a finite interior unknown set; the same
/// iteration as pg_extrapolate with unit relaxation. Requires both window
/// boundary samples to be known.
RecoveryReport gap_recover(const RecoveryProblem& problem, int max_iter = 10000,
                           double tol = 1e-9);

}  // namespace blrec
