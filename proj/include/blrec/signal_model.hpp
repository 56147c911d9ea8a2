#pragma once

#include <complex>
#include <vector>

#include "blrec/sample_window.hpp"

namespace blrec {

/// One modulated-sinc component:
///   t -> amplitude * exp(i*carrier*t) * sin(bandwidth*(t - shift)) / (pi*(t - shift)),
/// continuously extended at t == shift. Its spectrum is the indicator of
/// [carrier - bandwidth, carrier + bandwidth] with a linear phase from the shift.
struct Atom {
    cplx amplitude{0.0, 0.0};
    double shift = 0.0;      // seconds
    double carrier = 0.0;    // rad/s
    double bandwidth = 0.0;  // rad/s, > 0
};

/// Finite sum of modulated sinc atoms, all supported inside [-band_limit, band_limit].
/// Closed form in both domains, so sampling and spectra are exact.
class BandLimitedSignal {
public:
    explicit BandLimitedSignal(double band_limit, std::vector<Atom> atoms = {});

    double band_limit() const { return band_limit_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    void add_atom(const Atom& atom);

    /// Adds atom plus its conjugate mirror so the summed contribution is real-valued.
    void add_real_atom(const Atom& atom);

private:
    double band_limit_;
    std::vector<Atom> atoms_;
};

/// Equidistant grid t_k = origin + k*step with a cutoff index marking the
/// last index of the one-sided known trace.
struct SamplingGrid {
    double step = 1.0;  // tau, seconds, > 0
    double origin = 0.0;
    int cutoff_index = 0;

    double point(int k) const { return origin + step * k; }
    bool oversamples(double band_limit) const;
};

cplx evaluate(const BandLimitedSignal& signal, double t);
cplx fourier(const BandLimitedSignal& signal, double omega);

/// Total energy of the signal, (1/2pi) * integral of |F(i w)|^2, in closed form.
double energy(const BandLimitedSignal& signal);

/// Exact samples x(k) = f(t_k) on k in [k_min, k_max]; mask all-known,
/// window step = grid step.
SampleWindow sample(const BandLimitedSignal& signal, const SamplingGrid& grid, int k_min,
                    int k_max);

/// Pulse built from order+1 sinc atoms with binomial amplitudes spaced pi/bandwidth
/// apart. The envelope tail decays like |t - center|^-(order+1) instead of the bare
/// sinc 1/|t|, which keeps windowed fixtures numerically band-limited.
BandLimitedSignal make_smooth_pulse(double band_limit, cplx amplitude, double center,
                                    double carrier, double bandwidth, int order = 2);

}  // namespace blrec
