#include "core/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

#include "core/error.hpp"

namespace sarchroma {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

fftw_plan make_plan_1d(std::int64_t n, bool inverse) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    std::vector<fftw_complex> a(n), b(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), a.data(), b.data(),
                                   inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) fail(ErrorCode::internal, "transform planning failed");
    return p;
}

fftw_plan make_plan_2d(std::int64_t rows, std::int64_t cols, bool inverse) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    std::vector<fftw_complex> a(rows * cols), b(rows * cols);
    fftw_plan p = fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols),
                                   a.data(), b.data(),
                                   inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) fail(ErrorCode::internal, "transform planning failed");
    return p;
}

void destroy_plan(void* p) {
    if (!p) return;
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(p));
}

// FFTW's new-array execute; out-of-place c2c leaves the input untouched.
void run_plan(void* plan, const std::complex<double>* in, std::complex<double>* out) {
    fftw_execute_dft(static_cast<fftw_plan>(plan),
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

Dft1d::Dft1d(std::int64_t n, bool inverse) : n_(n), inverse_(inverse), plan_(nullptr) {
    if (n < 1) fail(ErrorCode::argument, "transform length must be >= 1");
    plan_ = make_plan_1d(n, inverse);
}

Dft1d::~Dft1d() { destroy_plan(plan_); }

void Dft1d::execute(const std::complex<double>* in, std::complex<double>* out) const {
    run_plan(plan_, in, out);
    if (inverse_) {
        double s = 1.0 / static_cast<double>(n_);
        for (std::int64_t i = 0; i < n_; ++i) out[i] *= s;
    }
}

Dft2d::Dft2d(std::int64_t rows, std::int64_t cols, bool inverse)
    : rows_(rows), cols_(cols), inverse_(inverse), plan_(nullptr) {
    if (rows < 1 || cols < 1) fail(ErrorCode::argument, "transform size must be >= 1");
    plan_ = make_plan_2d(rows, cols, inverse);
}

Dft2d::~Dft2d() { destroy_plan(plan_); }

void Dft2d::execute(const std::complex<double>* in, std::complex<double>* out) const {
    run_plan(plan_, in, out);
    if (inverse_) {
        double s = 1.0 / static_cast<double>(rows_ * cols_);
        std::int64_t total = rows_ * cols_;
        for (std::int64_t i = 0; i < total; ++i) out[i] *= s;
    }
}

double bin_frequency(std::int64_t i, std::int64_t n, double rate) {
    std::int64_t k = i < (n + 1) / 2 ? i : i - n;
    return static_cast<double>(k) * rate / static_cast<double>(n);
}

std::int64_t centered_to_raw(std::int64_t centered, std::int64_t n) {
    return (centered - n / 2 + n) % n;
}

}  // namespace sarchroma
