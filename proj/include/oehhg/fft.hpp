#pragma once

#include <fftw3.h>

#include <complex>
#include <mutex>
#include <stdexcept>
#include <vector>

// Thin RAII wrapper over FFTW. Plans are created with FFTW_ESTIMATE so the
// transform algorithm (and therefore the rounding) is reproducible from run
// to run. The FFTW planner is not thread-safe; fftw_execute_dft is.

namespace oehhg {

namespace detail {
inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace detail

class Fft1D {
  public:
    explicit Fft1D(std::size_t n) : n_(n) {
        if (n == 0) throw std::invalid_argument("Fft1D: size must be positive");
        std::vector<std::complex<double>> tmp(n);
        auto* p = reinterpret_cast<fftw_complex*>(tmp.data());
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        fwd_ = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
        bwd_ = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!fwd_ || !bwd_) throw std::runtime_error("Fft1D: planner failed");
    }

    ~Fft1D() {
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }

    Fft1D(const Fft1D&) = delete;
    Fft1D& operator=(const Fft1D&) = delete;

    std::size_t size() const { return n_; }

    /// In-place forward transform (no normalization).
    void forward(std::complex<double>* data) const {
        auto* p = reinterpret_cast<fftw_complex*>(data);
        fftw_execute_dft(fwd_, p, p);
    }

    /// In-place inverse transform; scales by 1/n so forward+inverse is identity.
    void inverse(std::complex<double>* data) const {
        auto* p = reinterpret_cast<fftw_complex*>(data);
        fftw_execute_dft(bwd_, p, p);
        const double s = 1.0 / static_cast<double>(n_);
        for (std::size_t i = 0; i < n_; ++i) data[i] *= s;
    }

    void forward(std::vector<std::complex<double>>& v) const { forward(v.data()); }
    void inverse(std::vector<std::complex<double>>& v) const { inverse(v.data()); }

  private:
    std::size_t n_;
    fftw_plan fwd_;
    fftw_plan bwd_;
};

}  // namespace oehhg
