#include "core/image.hpp"

#include <cmath>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace sarchroma {

void validate(const SlcImage& img) {
    if (img.rows < 1) fail(ErrorCode::argument, "image rows must be >= 1");
    if (img.cols < 2) fail(ErrorCode::argument, "image cols must be >= 2");
    std::size_t want = static_cast<std::size_t>(img.rows) * static_cast<std::size_t>(img.cols);
    if (img.data.size() != want)
        fail(ErrorCode::argument, "image buffer size does not match rows*cols");
    if (!(img.meta.sample_rate_hz > 0.0))
        fail(ErrorCode::argument, "sample_rate_hz must be > 0");
    if (!(img.meta.oversample >= 1.0 && img.meta.oversample <= 4.0))
        fail(ErrorCode::argument, "oversample must be in [1, 4]");
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        if (!std::isfinite(img.data[i].real()) || !std::isfinite(img.data[i].imag()))
            fail(ErrorCode::argument, "sample " + std::to_string(i) + " is not finite");
    }
}

Plane amplitude(const SlcImage& img) {
    Plane out(img.rows, img.cols);
    parallel_for(img.rows, [&](std::int64_t r0, std::int64_t r1) {
        for (std::int64_t r = r0; r < r1; ++r)
            for (std::int64_t c = 0; c < img.cols; ++c)
                out.at(r, c) = std::hypot(static_cast<double>(img.at(r, c).real()),
                                          static_cast<double>(img.at(r, c).imag()));
    });
    return out;
}

Plane intensity(const SlcImage& img) {
    Plane out(img.rows, img.cols);
    parallel_for(img.rows, [&](std::int64_t r0, std::int64_t r1) {
        for (std::int64_t r = r0; r < r1; ++r)
            for (std::int64_t c = 0; c < img.cols; ++c) {
                double re = img.at(r, c).real(), im = img.at(r, c).imag();
                out.at(r, c) = re * re + im * im;
            }
    });
    return out;
}

Plane amplitude(const CPlane& img) {
    Plane out(img.rows, img.cols);
    parallel_for(img.rows, [&](std::int64_t r0, std::int64_t r1) {
        for (std::int64_t r = r0; r < r1; ++r)
            for (std::int64_t c = 0; c < img.cols; ++c)
                out.at(r, c) = std::abs(img.at(r, c));
    });
    return out;
}

CPlane to_cplane(const SlcImage& img) {
    CPlane out(img.rows, img.cols);
    parallel_for(img.rows, [&](std::int64_t r0, std::int64_t r1) {
        for (std::int64_t r = r0; r < r1; ++r)
            for (std::int64_t c = 0; c < img.cols; ++c)
                out.at(r, c) = std::complex<double>(img.at(r, c).real(), img.at(r, c).imag());
    });
    return out;
}

}  // namespace sarchroma
