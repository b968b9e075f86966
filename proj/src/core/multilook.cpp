#include "core/multilook.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace sarchroma {

namespace {

void check_looks(const LookParams& looks, std::int64_t rows, std::int64_t cols) {
    if (looks.n_az < 1 || looks.n_rg < 1) fail(ErrorCode::argument, "look counts must be >= 1");
    if (looks.n_az > rows || looks.n_rg > cols)
        fail(ErrorCode::argument, "look window exceeds image extent");
}

// Clipped window along one axis: indices [lo, hi) and their count for an
// n-point window centered at i with offset floor((n-1)/2).
struct Clip {
    std::int64_t lo, hi;
};

inline Clip clip_window(std::int64_t i, std::int64_t extent, int n) {
    std::int64_t off = (n - 1) / 2;
    std::int64_t lo = i - off;
    std::int64_t hi = lo + n;
    if (lo < 0) lo = 0;
    if (hi > extent) hi = extent;
    return {lo, hi};
}

// Separable clipped-window mean: a horizontal sum pass, then a vertical pass
// that divides by the covered sample count.
template <typename T>
void box_mean(const T* in, T* out, std::int64_t rows, std::int64_t cols, const LookParams& looks) {
    std::vector<T> tmp(static_cast<std::size_t>(rows) * cols);
    parallel_for(rows, [&](std::int64_t r0, std::int64_t r1) {
        for (std::int64_t r = r0; r < r1; ++r) {
            const T* src = in + r * cols;
            T* dst = tmp.data() + r * cols;
            for (std::int64_t c = 0; c < cols; ++c) {
                Clip w = clip_window(c, cols, looks.n_rg);
                T acc{};
                for (std::int64_t q = w.lo; q < w.hi; ++q) acc += src[q];
                dst[c] = acc;
            }
        }
    });
    parallel_for(rows, [&](std::int64_t r0, std::int64_t r1) {
        for (std::int64_t r = r0; r < r1; ++r) {
            Clip wr = clip_window(r, rows, looks.n_az);
            T* dst = out + r * cols;
            for (std::int64_t c = 0; c < cols; ++c) {
                Clip wc = clip_window(c, cols, looks.n_rg);
                T acc{};
                for (std::int64_t p = wr.lo; p < wr.hi; ++p) acc += tmp[p * cols + c];
                double count = static_cast<double>((wr.hi - wr.lo) * (wc.hi - wc.lo));
                dst[c] = acc / count;
            }
        }
    });
}

}  // namespace

Plane multilook(const Plane& img, const LookParams& looks) {
    if (img.rows < 1 || img.cols < 1) fail(ErrorCode::argument, "image must be non-empty");
    check_looks(looks, img.rows, img.cols);
    Plane out(img.rows, img.cols);
    box_mean(img.v.data(), out.v.data(), img.rows, img.cols, looks);
    return out;
}

CPlane multilook(const CPlane& img, const LookParams& looks) {
    if (img.rows < 1 || img.cols < 1) fail(ErrorCode::argument, "image must be non-empty");
    check_looks(looks, img.rows, img.cols);
    CPlane out(img.rows, img.cols);
    box_mean(img.v.data(), out.v.data(), img.rows, img.cols, looks);
    return out;
}

double estimate_enl(const Plane& img) { return estimate_enl(img, 0, img.rows, 0, img.cols); }

double estimate_enl(const Plane& img, std::int64_t r0, std::int64_t r1, std::int64_t c0,
                    std::int64_t c1) {
    if (r0 < 0 || c0 < 0 || r1 > img.rows || c1 > img.cols || r0 >= r1 || c0 >= c1)
        fail(ErrorCode::argument, "region is empty or outside the image");
    std::int64_t n = (r1 - r0) * (c1 - c0);
    if (n < 2) fail(ErrorCode::domain, "need at least 2 samples to estimate looks");

    double sum = 0.0, lo = img.at(r0, c0), hi = lo;
    for (std::int64_t r = r0; r < r1; ++r)
        for (std::int64_t c = c0; c < c1; ++c) {
            double v = img.at(r, c);
            sum += v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (lo == hi) fail(ErrorCode::domain, "looks are undefined for a constant plane");

    double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (std::int64_t r = r0; r < r1; ++r)
        for (std::int64_t c = c0; c < c1; ++c) {
            double d = img.at(r, c) - mean;
            ss += d * d;
        }
    double var = ss / static_cast<double>(n - 1);
    return mean * mean / var;
}

}  // namespace sarchroma
