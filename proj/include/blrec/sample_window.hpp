#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "blrec/errors.hpp"

namespace blrec {

using cplx = std::complex<double>;

/// Finite window of a sample sequence, indexed k in [k_min, k_max].
/// Each sample carries a known/unknown flag; the unknown set is the
/// complement of the data a recovery problem may rely on.
class SampleWindow {
public:
    SampleWindow(int k_min, std::vector<cplx> values, std::vector<std::uint8_t> known,
                 double step = 1.0)
        : k_min_(k_min), values_(std::move(values)), known_(std::move(known)), step_(step) {
        if (values_.empty()) throw InvariantError("SampleWindow: empty index range");
        if (known_.size() != values_.size())
            throw InvariantError("SampleWindow: mask/values length mismatch");
        if (!(step_ > 0.0)) throw InvariantError("SampleWindow: step must be positive");
    }

    /// All-known window of zeros.
    static SampleWindow zeros(int k_min, int k_max, double step = 1.0) {
        if (k_min > k_max) throw InvariantError("SampleWindow: k_min > k_max");
        const auto n = static_cast<std::size_t>(k_max - k_min + 1);
        return SampleWindow(k_min, std::vector<cplx>(n), std::vector<std::uint8_t>(n, 1), step);
    }

    int k_min() const { return k_min_; }
    int k_max() const { return k_min_ + static_cast<int>(values_.size()) - 1; }
    std::size_t size() const { return values_.size(); }
    double step() const { return step_; }

    cplx& at(int k) { return values_[index_of(k)]; }
    const cplx& at(int k) const { return values_[index_of(k)]; }
    bool known_at(int k) const { return known_[index_of(k)] != 0; }
    void set_known(int k, bool flag) { known_[index_of(k)] = flag ? 1 : 0; }

    const std::vector<cplx>& values() const { return values_; }
    std::vector<cplx>& values() { return values_; }
    const std::vector<std::uint8_t>& known_mask() const { return known_; }

    bool all_known() const {
        for (auto f : known_)
            if (!f) return false;
        return true;
    }

    std::size_t known_count() const {
        std::size_t n = 0;
        for (auto f : known_) n += f ? 1 : 0;
        return n;
    }

    std::vector<int> unknown_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < known_.size(); ++i)
            if (!known_[i]) out.push_back(k_min_ + static_cast<int>(i));
        return out;
    }

    std::vector<int> known_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < known_.size(); ++i)
            if (known_[i]) out.push_back(k_min_ + static_cast<int>(i));
        return out;
    }

    double l2_norm() const {
        double s = 0.0;
        for (const auto& v : values_) s += std::norm(v);
        return std::sqrt(s);
    }

private:
    std::size_t index_of(int k) const {
        if (k < k_min() || k > k_max()) throw PreconditionError("SampleWindow: index out of range");
        return static_cast<std::size_t>(k - k_min_);
    }

    int k_min_;
    std::vector<cplx> values_;
    std::vector<std::uint8_t> known_;
    double step_;
};

}  // namespace blrec
