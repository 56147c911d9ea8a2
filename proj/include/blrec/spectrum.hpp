#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "blrec/errors.hpp"
#include "blrec/sample_window.hpp"

namespace blrec {

/// Frequency of bin j of a length-N transform, reduced to (-pi, pi].
/// Bit-exact convention (recovery matrices depend on it):
///   j <  N/2 : (2*pi*j)/N
///   j == N/2 : pi
///   j >  N/2 : (2*pi*(j-N))/N
inline double bin_frequency(int j, int n) {
    if (2 * j == n) return std::numbers::pi;
    const double jj = (j <= n / 2) ? static_cast<double>(j) : static_cast<double>(j - n);
    return (2.0 * std::numbers::pi * jj) / static_cast<double>(n);
}

/// Bins j in [0, N) with |bin_frequency(j, N)| <= W, ascending j.
/// The band edge is inclusive.
std::vector<int> in_band_bins(double band_fraction, int n);

/// Length-N frequency representation of a sample window under the unitary
/// transform convention. band_fraction is the claimed band limit W in (0, pi].
class DiscreteSpectrum {
public:
    DiscreteSpectrum(std::vector<cplx> bins, double band_fraction)
        : bins_(std::move(bins)), band_fraction_(band_fraction) {
        if (bins_.size() < 2 || bins_.size() % 2 != 0)
            throw InvariantError("DiscreteSpectrum: N must be even and >= 2");
        if (!(band_fraction_ > 0.0) || band_fraction_ > std::numbers::pi)
            throw InvariantError("DiscreteSpectrum: band fraction must be in (0, pi]");
    }

    int size() const { return static_cast<int>(bins_.size()); }
    double band_fraction() const { return band_fraction_; }
    const std::vector<cplx>& bins() const { return bins_; }
    std::vector<cplx>& bins() { return bins_; }
    double frequency(int j) const { return bin_frequency(j, size()); }

    /// Exact membership test: every bin beyond band_fraction is exactly zero.
    bool is_band_limited() const;

private:
    std::vector<cplx> bins_;
    double band_fraction_;
};

}  // namespace blrec
