#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace sarchroma {

struct SlcMeta {
    double sample_rate_hz = 0.0;  // range sample rate, > 0
    double oversample = 1.0;      // ratio of sample rate to processed bandwidth, in [1, 4]
    std::string description;
};

// Single-look complex image. Rows are azimuth lines, columns range samples.
// Samples are stored as float pairs so file round trips are bit-exact.
struct SlcImage {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    SlcMeta meta;
    std::vector<std::complex<float>> data;  // rows*cols, row-major

    SlcImage() = default;
    SlcImage(std::int64_t r, std::int64_t c, SlcMeta m)
        : rows(r), cols(c), meta(std::move(m)),
          data(r > 0 && c > 0 ? static_cast<std::size_t>(r) * static_cast<std::size_t>(c) : 0) {}

    std::complex<float>& at(std::int64_t r, std::int64_t c) { return data[r * cols + c]; }
    const std::complex<float>& at(std::int64_t r, std::int64_t c) const { return data[r * cols + c]; }
    std::complex<float>* row(std::int64_t r) { return data.data() + r * cols; }
    const std::complex<float>* row(std::int64_t r) const { return data.data() + r * cols; }
};

// Throws Error(argument) unless rows >= 1, cols >= 2, data sized rows*cols,
// sample_rate_hz > 0, oversample in [1, 4], and every sample is finite.
void validate(const SlcImage& img);

// Real-valued plane, double precision, row-major.
struct Plane {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<double> v;

    Plane() = default;
    Plane(std::int64_t r, std::int64_t c)
        : rows(r), cols(c), v(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0.0) {}

    double& at(std::int64_t r, std::int64_t c) { return v[r * cols + c]; }
    double at(std::int64_t r, std::int64_t c) const { return v[r * cols + c]; }
    double* row(std::int64_t r) { return v.data() + r * cols; }
    const double* row(std::int64_t r) const { return v.data() + r * cols; }
};

// Complex plane used for subband images and intermediate transforms.
struct CPlane {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<std::complex<double>> v;

    CPlane() = default;
    CPlane(std::int64_t r, std::int64_t c)
        : rows(r), cols(c), v(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    std::complex<double>& at(std::int64_t r, std::int64_t c) { return v[r * cols + c]; }
    const std::complex<double>& at(std::int64_t r, std::int64_t c) const { return v[r * cols + c]; }
    std::complex<double>* row(std::int64_t r) { return v.data() + r * cols; }
    const std::complex<double>* row(std::int64_t r) const { return v.data() + r * cols; }
};

struct RgbImage {
    Plane r, g, b;

    RgbImage() = default;
    RgbImage(std::int64_t rows, std::int64_t cols) : r(rows, cols), g(rows, cols), b(rows, cols) {}
    std::int64_t rows() const { return r.rows; }
    std::int64_t cols() const { return r.cols; }
};

struct HsvImage {
    Plane h, s, v;

    HsvImage() = default;
    HsvImage(std::int64_t rows, std::int64_t cols) : h(rows, cols), s(rows, cols), v(rows, cols) {}
    std::int64_t rows() const { return h.rows; }
    std::int64_t cols() const { return h.cols; }
};

Plane amplitude(const SlcImage& img);
Plane intensity(const SlcImage& img);   // |z|^2
Plane amplitude(const CPlane& img);
CPlane to_cplane(const SlcImage& img);

}  // namespace sarchroma
