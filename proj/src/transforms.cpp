#include "blrec/transforms.hpp"

#include <cmath>
#include <sstream>

#include "fft_backend.hpp"

namespace blrec {

namespace {

void check_transform_size(std::size_t window_length, int n) {
    if (n < 2 || n % 2 != 0) throw PreconditionError("transform size N must be even and >= 2");
    if (static_cast<std::size_t>(n) < window_length) {
        std::ostringstream msg;
        msg << "transform size N = " << n << " smaller than window length " << window_length;
        throw PreconditionError(msg.str());
    }
}

std::vector<cplx> embed(const SampleWindow& window, int n) {
    std::vector<cplx> buf(static_cast<std::size_t>(n));
    for (int k = window.k_min(); k <= window.k_max(); ++k)
        buf[static_cast<std::size_t>(detail::mod_index(k, n))] = window.at(k);
    return buf;
}

}  // namespace

std::vector<int> in_band_bins(double band_fraction, int n) {
    std::vector<int> bins;
    for (int j = 0; j < n; ++j)
        if (std::abs(bin_frequency(j, n)) <= band_fraction) bins.push_back(j);
    return bins;
}

bool DiscreteSpectrum::is_band_limited() const {
    for (int j = 0; j < size(); ++j)
        if (std::abs(frequency(j)) > band_fraction_ && bins_[static_cast<std::size_t>(j)] != cplx{0.0, 0.0})
            return false;
    return true;
}

DiscreteSpectrum z_forward(const SampleWindow& window, int n) {
    check_transform_size(window.size(), n);
    auto buf = embed(window, n);
    detail::fft_in_place(buf, -1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& b : buf) b *= scale;
    return DiscreteSpectrum(std::move(buf), std::numbers::pi);
}

SampleWindow z_inverse(const DiscreteSpectrum& spectrum, int k_min, int k_max, double step) {
    if (k_min > k_max) throw PreconditionError("z_inverse: k_min > k_max");
    const int n = spectrum.size();
    if (k_max - k_min + 1 > n) {
        std::ostringstream msg;
        msg << "z_inverse: index range [" << k_min << ", " << k_max << "] wider than N = " << n;
        throw PreconditionError(msg.str());
    }
    std::vector<cplx> buf = spectrum.bins();
    detail::fft_in_place(buf, +1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const auto len = static_cast<std::size_t>(k_max - k_min + 1);
    std::vector<cplx> values(len);
    for (std::size_t i = 0; i < len; ++i)
        values[i] = buf[static_cast<std::size_t>(detail::mod_index(k_min + static_cast<int>(i), n))] * scale;
    return SampleWindow(k_min, std::move(values), std::vector<std::uint8_t>(len, 1), step);
}

SampleWindow bandlimit_project(const SampleWindow& window, double band_fraction, int n) {
    if (!(band_fraction > 0.0)) throw PreconditionError("bandlimit_project: W must be > 0");
    if (band_fraction > std::numbers::pi)
        throw PreconditionError("bandlimit_project: W must be <= pi");
    check_transform_size(window.size(), n);

    auto buf = embed(window, n);
    detail::fft_in_place(buf, -1);
    for (int j = 0; j < n; ++j)
        if (std::abs(bin_frequency(j, n)) > band_fraction) buf[static_cast<std::size_t>(j)] = 0.0;
    detail::fft_in_place(buf, +1);

    const double scale = 1.0 / static_cast<double>(n);  // forward+backward combined
    std::vector<cplx> values(window.size());
    for (int k = window.k_min(); k <= window.k_max(); ++k)
        values[static_cast<std::size_t>(k - window.k_min())] =
            buf[static_cast<std::size_t>(detail::mod_index(k, n))] * scale;
    return SampleWindow(window.k_min(), std::move(values),
                        std::vector<std::uint8_t>(window.known_mask()), window.step());
}

double band_energy_ratio(const SampleWindow& window, double band_fraction, int n) {
    if (!(band_fraction > 0.0) || band_fraction > std::numbers::pi)
        throw PreconditionError("band_energy_ratio: W must be in (0, pi]");
    auto spectrum = z_forward(window, n);
    double in_band = 0.0;
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        const double e = std::norm(spectrum.bins()[static_cast<std::size_t>(j)]);
        total += e;
        if (std::abs(bin_frequency(j, n)) <= band_fraction) in_band += e;
    }
    if (total == 0.0) throw PreconditionError("band_energy_ratio: zero window has no ratio");
    return in_band / total;
}

}  // namespace blrec
