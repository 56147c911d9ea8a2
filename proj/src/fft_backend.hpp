#pragma once

#include <complex>
#include <vector>

namespace blrec::detail {

/// Unnormalized in-place DFT of length buf.size():
///   sign = -1 : X[j] = sum_n x[n] exp(-2*pi*i*j*n/N)
///   sign = +1 : x[n] = sum_j X[j] exp(+2*pi*i*j*n/N)
/// Plans are cached per (N, sign); execution is thread-safe.
void fft_in_place(std::vector<std::complex<double>>& buf, int sign);

inline int mod_index(int k, int n) {
    int r = k % n;
    return r < 0 ? r + n : r;
}

}  // namespace blrec::detail
