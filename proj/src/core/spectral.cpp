#include "core/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/error.hpp"
#include "core/fft.hpp"
#include "core/parallel.hpp"

namespace sarchroma {

SubbandLayout plan_layout(std::int64_t cols, double oversample, int n_sub) {
    if (cols < 2) fail(ErrorCode::argument, "cols must be >= 2");
    if (!(oversample >= 1.0) || !std::isfinite(oversample))
        fail(ErrorCode::argument, "oversample must be >= 1");
    if (n_sub < 2) fail(ErrorCode::argument, "subband count must be >= 2");

    SubbandLayout out;
    out.n_sub = n_sub;
    out.valid_len = std::llround(static_cast<double>(cols) / oversample);
    if (out.valid_len > cols) out.valid_len = cols;  // oversample == 1 rounding guard
    if (out.valid_len < n_sub)
        fail(ErrorCode::argument, "subband count exceeds valid band length");
    out.valid_start = (cols - out.valid_len) / 2;
    out.bounds.resize(n_sub + 1);
    for (int k = 0; k <= n_sub; ++k)
        out.bounds[k] = std::llround(static_cast<double>(k) * static_cast<double>(out.valid_len) /
                                     static_cast<double>(n_sub));
    return out;
}

std::vector<double> equalization_window(double a, std::int64_t len) {
    if (!(a >= 0.5 && a <= 1.0)) fail(ErrorCode::argument, "window coefficient must be in [0.5, 1]");
    if (len < 2) fail(ErrorCode::argument, "window length must be >= 2");
    std::vector<double> w(len);
    for (std::int64_t i = 0; i < len; ++i)
        w[i] = a - (1.0 - a) * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                        static_cast<double>(len));
    return w;
}

void equalize_spectrum_row(std::complex<double>* spec, std::int64_t cols,
                           const SubbandLayout& layout, const double* window) {
    for (std::int64_t i = 0; i < layout.valid_len; ++i)
        spec[centered_to_raw(layout.valid_start + i, cols)] /= window[i];
}

SubbandStack decompose(const SlcImage& img, int n_sub, double window_coeff, bool equalize) {
    validate(img);
    SubbandStack stack;
    stack.layout = plan_layout(img.cols, img.meta.oversample, n_sub);
    const SubbandLayout& lay = stack.layout;

    std::vector<double> window;
    if (equalize) {
        if (!(window_coeff > 0.5))
            fail(ErrorCode::domain,
                 "equalization needs window coefficient > 0.5; the window is zero at the band edge");
        window = equalization_window(window_coeff, lay.valid_len);
    }

    std::int64_t cols = img.cols;
    std::vector<std::int64_t> raw_bin(lay.valid_len);
    for (std::int64_t i = 0; i < lay.valid_len; ++i)
        raw_bin[i] = centered_to_raw(lay.valid_start + i, cols);

    stack.images.assign(n_sub, CPlane(img.rows, cols));

    Dft1d fwd(cols, false), inv(cols, true);
    parallel_for(img.rows, [&](std::int64_t r0, std::int64_t r1) {
        std::vector<std::complex<double>> row(cols), spec(cols), sub(cols);
        for (std::int64_t r = r0; r < r1; ++r) {
            const std::complex<float>* src = img.row(r);
            for (std::int64_t c = 0; c < cols; ++c)
                row[c] = std::complex<double>(src[c].real(), src[c].imag());
            fwd.execute(row.data(), spec.data());
            if (equalize) equalize_spectrum_row(spec.data(), cols, lay, window.data());
            for (int k = 0; k < n_sub; ++k) {
                std::fill(sub.begin(), sub.end(), std::complex<double>(0.0, 0.0));
                for (std::int64_t i = lay.bounds[k]; i < lay.bounds[k + 1]; ++i)
                    sub[raw_bin[i]] = spec[raw_bin[i]];
                inv.execute(sub.data(), stack.images[k].row(r));
            }
        }
    });
    return stack;
}

}  // namespace sarchroma
