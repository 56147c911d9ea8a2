#include "blrec/signal_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace blrec {

namespace {

constexpr double kPi = std::numbers::pi;

void check_atom(const Atom& atom, double band_limit) {
    if (!(atom.bandwidth > 0.0)) throw InvariantError("atom: bandwidth must be > 0");
    if (atom.bandwidth > band_limit) {
        std::ostringstream msg;
        msg << "atom: bandwidth " << atom.bandwidth << " > band_limit " << band_limit;
        throw InvariantError(msg.str());
    }
    if (std::abs(atom.carrier) + atom.bandwidth > band_limit) {
        std::ostringstream msg;
        msg << "atom out of band: |carrier| + bandwidth = " << std::abs(atom.carrier) << " + "
            << atom.bandwidth << " > band_limit = " << band_limit;
        throw InvariantError(msg.str());
    }
}

// sin(x)/x with the removable singularity filled.
double sin_ratio(double x) {
    if (std::abs(x) < 1e-9) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

}  // namespace

BandLimitedSignal::BandLimitedSignal(double band_limit, std::vector<Atom> atoms)
    : band_limit_(band_limit), atoms_(std::move(atoms)) {
    if (!(band_limit_ > 0.0)) throw InvariantError("band_limit must be > 0");
    for (const auto& atom : atoms_) check_atom(atom, band_limit_);
}

void BandLimitedSignal::add_atom(const Atom& atom) {
    check_atom(atom, band_limit_);
    atoms_.push_back(atom);
}

void BandLimitedSignal::add_real_atom(const Atom& atom) {
    add_atom(atom);
    Atom mirror = atom;
    mirror.amplitude = std::conj(atom.amplitude);
    mirror.carrier = -atom.carrier;
    add_atom(mirror);
}

bool SamplingGrid::oversamples(double band_limit) const {
    return step > 0.0 && step * band_limit < kPi;
}

cplx evaluate(const BandLimitedSignal& signal, double t) {
    cplx acc{0.0, 0.0};
    for (const auto& atom : signal.atoms()) {
        const double u = t - atom.shift;
        const cplx mod = std::polar(1.0, atom.carrier * t);
        if (std::abs(u) < 1e-9 * std::max(1.0, std::abs(atom.shift))) {
            acc += atom.amplitude * mod * (atom.bandwidth / kPi);
        } else {
            acc += atom.amplitude * mod * (std::sin(atom.bandwidth * u) / (kPi * u));
        }
    }
    return acc;
}

cplx fourier(const BandLimitedSignal& signal, double omega) {
    if (std::abs(omega) > signal.band_limit()) return {0.0, 0.0};
    cplx acc{0.0, 0.0};
    for (const auto& atom : signal.atoms()) {
        if (std::abs(omega - atom.carrier) > atom.bandwidth) continue;
        acc += atom.amplitude * std::polar(1.0, -(omega - atom.carrier) * atom.shift);
    }
    return acc;
}

double energy(const BandLimitedSignal& signal) {
    // (1/2pi) sum over atom pairs of the overlap integral of their spectra.
    double total = 0.0;
    const auto& atoms = signal.atoms();
    for (std::size_t m = 0; m < atoms.size(); ++m) {
        for (std::size_t n = 0; n < atoms.size(); ++n) {
            const auto& a = atoms[m];
            const auto& b = atoms[n];
            const double lo = std::max(a.carrier - a.bandwidth, b.carrier - b.bandwidth);
            const double hi = std::min(a.carrier + a.bandwidth, b.carrier + b.bandwidth);
            if (hi <= lo) continue;
            // integral over [lo, hi] of exp(-i(w - wa) sa) * conj(exp(-i(w - wb) sb)) dw
            const double delta = a.shift - b.shift;
            const double mid = 0.5 * (lo + hi);
            const double half = 0.5 * (hi - lo);
            const cplx phase = std::polar(1.0, a.carrier * a.shift - b.carrier * b.shift -
                                                   delta * mid);
            const cplx overlap =
                phase * (2.0 * half * sin_ratio(delta * half)) * (a.amplitude * std::conj(b.amplitude));
            total += overlap.real();
        }
    }
    return total / (2.0 * kPi);
}

SampleWindow sample(const BandLimitedSignal& signal, const SamplingGrid& grid, int k_min,
                    int k_max) {
    if (k_min > k_max) throw PreconditionError("sample: k_min > k_max");
    if (!(grid.step > 0.0)) throw PreconditionError("sample: grid step must be > 0");
    const auto n = static_cast<std::size_t>(k_max - k_min + 1);
    std::vector<cplx> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = evaluate(signal, grid.point(k_min + static_cast<int>(i)));
    return SampleWindow(k_min, std::move(values), std::vector<std::uint8_t>(n, 1), grid.step);
}

BandLimitedSignal make_smooth_pulse(double band_limit, cplx amplitude, double center,
                                    double carrier, double bandwidth, int order) {
    if (order < 0) throw PreconditionError("make_smooth_pulse: order must be >= 0");
    BandLimitedSignal pulse(band_limit);
    const double spacing = kPi / bandwidth;
    // binomial weights; shifts symmetric around `center`
    double coeff = 1.0;
    for (int j = 0; j <= order; ++j) {
        Atom atom;
        atom.amplitude = amplitude * coeff;
        atom.shift = center + (j - 0.5 * order) * spacing;
        atom.carrier = carrier;
        atom.bandwidth = bandwidth;
        pulse.add_atom(atom);
        coeff = coeff * (order - j) / (j + 1);
    }
    return pulse;
}

}  // namespace blrec
