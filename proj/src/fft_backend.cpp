#include "fft_backend.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace blrec::detail {

namespace {

// FFTW plan creation is not thread-safe; execution via fftw_execute_dft is.
std::mutex plan_mutex;
std::map<std::pair<int, int>, fftw_plan>& plan_cache() {
    static auto* cache = new std::map<std::pair<int, int>, fftw_plan>();
    return *cache;
}

fftw_plan plan_for(int n, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    const auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    // FFTW_UNALIGNED so the plan applies to any caller buffer.
    fftw_plan plan = fftw_plan_dft_1d(n, ptr, ptr, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

}  // namespace

void fft_in_place(std::vector<std::complex<double>>& buf, int sign) {
    const int n = static_cast<int>(buf.size());
    fftw_plan plan = plan_for(n, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    auto* ptr = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace blrec::detail
