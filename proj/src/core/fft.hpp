#pragma once

#include <complex>
#include <cstdint>

namespace sarchroma {

// Thin RAII wrappers over FFTW double-precision complex transforms.
// Plan creation is serialized internally (FFTW's planner is not thread safe);
// execute() is safe to call concurrently from many threads as long as each
// call uses its own buffers. Inverse transforms are normalized by 1/N.
class Dft1d {
public:
    Dft1d(std::int64_t n, bool inverse);
    ~Dft1d();
    Dft1d(const Dft1d&) = delete;
    Dft1d& operator=(const Dft1d&) = delete;

    void execute(const std::complex<double>* in, std::complex<double>* out) const;
    std::int64_t size() const { return n_; }

private:
    std::int64_t n_;
    bool inverse_;
    void* plan_;
};

class Dft2d {
public:
    Dft2d(std::int64_t rows, std::int64_t cols, bool inverse);
    ~Dft2d();
    Dft2d(const Dft2d&) = delete;
    Dft2d& operator=(const Dft2d&) = delete;

    void execute(const std::complex<double>* in, std::complex<double>* out) const;

private:
    std::int64_t rows_, cols_;
    bool inverse_;
    void* plan_;
};

// Frequency of raw DFT bin i for an N-point transform at the given sample
// rate: bins [0, ceil(N/2)) are nonnegative, the rest negative.
double bin_frequency(std::int64_t i, std::int64_t n, double rate);

// Maps a centered-spectrum index (0 = most negative frequency) to the raw DFT
// bin it came from; centered index floor(n/2) is DC.
std::int64_t centered_to_raw(std::int64_t centered, std::int64_t n);

}  // namespace sarchroma
