#include "core/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "core/error.hpp"
#include "core/fft.hpp"

namespace sarchroma {

namespace {

constexpr double kSpeedOfLight = 299792458.0;

// Uniform draw in (0, 1], safe under log. Built directly on the engine's
// 64-bit output so results do not depend on the standard library's
// distribution implementations.
inline double uniform_unit(std::mt19937_64& eng) {
    return (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;
}

void check_span(const SlcImage& img, std::int64_t rb, std::int64_t re, std::int64_t cb,
                std::int64_t ce) {
    if (rb < 0 || cb < 0 || re > img.rows || ce > img.cols || rb >= re || cb >= ce)
        fail(ErrorCode::argument, "span is empty or outside the image");
}

inline void add_sample(std::complex<float>& dst, const std::complex<double>& v) {
    dst = std::complex<float>(static_cast<float>(dst.real() + v.real()),
                              static_cast<float>(dst.imag() + v.imag()));
}

}  // namespace

SlcImage gen_speckle(std::int64_t rows, std::int64_t cols, double sigma, std::uint64_t seed,
                     const SlcMeta& meta) {
    if (rows < 1 || cols < 2) fail(ErrorCode::argument, "speckle field needs rows >= 1, cols >= 2");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        fail(ErrorCode::argument, "speckle power must be > 0");

    SlcImage img(rows, cols, meta);
    std::mt19937_64 eng(seed);
    for (auto& z : img.data) {
        // Box-Muller: radius^2 = sigma * Exp(1) gives E|z|^2 = sigma.
        double r = std::sqrt(-sigma * std::log(uniform_unit(eng)));
        double th = 2.0 * std::numbers::pi * uniform_unit(eng);
        z = std::complex<float>(static_cast<float>(r * std::cos(th)),
                                static_cast<float>(r * std::sin(th)));
    }
    validate(img);
    return img;
}

void inject_nbi(SlcImage& img, const NbiParams& p) {
    validate(img);
    check_span(img, p.row_begin, p.row_end, p.col_begin, p.col_end);
    double fs = img.meta.sample_rate_hz;
    if (!std::isfinite(p.freq_hz) || std::abs(p.freq_hz) > fs / 2.0)
        fail(ErrorCode::argument, "tone frequency is beyond the Nyquist band");
    if (!(p.amp >= 0.0) || !std::isfinite(p.amp)) fail(ErrorCode::argument, "amp must be >= 0");
    if (!p.amp_per_row.empty() &&
        static_cast<std::int64_t>(p.amp_per_row.size()) != p.row_end - p.row_begin)
        fail(ErrorCode::argument, "per-row gain table must match the row span");
    for (double gain : p.amp_per_row)
        if (!(gain >= 0.0) || !std::isfinite(gain))
            fail(ErrorCode::argument, "per-row gains must be >= 0");
    if (p.amp == 0.0) return;  // bit-exact no-op

    for (std::int64_t r = p.row_begin; r < p.row_end; ++r) {
        double gain = p.amp_per_row.empty() ? 1.0 : p.amp_per_row[r - p.row_begin];
        if (gain == 0.0) continue;
        double a = p.amp * gain;
        for (std::int64_t c = p.col_begin; c < p.col_end; ++c) {
            double ph = 2.0 * std::numbers::pi * p.freq_hz * (static_cast<double>(c) / fs) +
                        p.phase_rad;
            add_sample(img.at(r, c), std::complex<double>(a * std::cos(ph), a * std::sin(ph)));
        }
    }
}

double lfm_derived_rate(const LfmParams& p) {
    if (!(p.kr_hz_per_s > 0.0)) fail(ErrorCode::argument, "reference FM rate must be > 0");
    if (p.ki_hz_per_s == p.kr_hz_per_s)
        fail(ErrorCode::argument, "interferer FM rate equal to the reference rate never compresses");
    return p.kr_hz_per_s * p.ki_hz_per_s / (p.ki_hz_per_s - p.kr_hz_per_s);
}

double lfm_derived_duration(const LfmParams& p) {
    if (!(p.ti_s > 0.0)) fail(ErrorCode::argument, "interferer duration must be > 0");
    if (!(p.kr_hz_per_s > 0.0)) fail(ErrorCode::argument, "reference FM rate must be > 0");
    return p.ti_s * std::abs(p.ki_hz_per_s - p.kr_hz_per_s) / p.kr_hz_per_s;
}

void inject_lfm(SlcImage& img, const LfmParams& p) {
    validate(img);
    if (!(p.amp >= 0.0) || !std::isfinite(p.amp)) fail(ErrorCode::argument, "amp must be >= 0");
    if (!(p.prf_hz > 0.0)) fail(ErrorCode::argument, "prf must be > 0");
    if (!(p.ta_s > 0.0)) fail(ErrorCode::argument, "azimuth aperture must be > 0");
    double rate = lfm_derived_rate(p);
    double dur = lfm_derived_duration(p);
    double fs = img.meta.sample_rate_hz;

    // Half-open sample windows: -dur/2 <= dt < dur/2 and -ta/2 <= da < ta/2,
    // evaluated at sample centers. The patch must fit inside the image.
    auto first_inside = [](double center, double half_width, double rate_hz) {
        return static_cast<std::int64_t>(std::ceil(center - half_width * rate_hz));
    };
    auto last_inside = [](double center, double half_width, double rate_hz) {
        double edge = center + half_width * rate_hz;
        std::int64_t i = static_cast<std::int64_t>(std::floor(edge));
        if (static_cast<double>(i) == edge) --i;  // right edge is exclusive
        return i;
    };
    std::int64_t r0 = first_inside(static_cast<double>(p.center_row), p.ta_s / 2.0, p.prf_hz);
    std::int64_t r1 = last_inside(static_cast<double>(p.center_row), p.ta_s / 2.0, p.prf_hz);
    std::int64_t c0 = first_inside(static_cast<double>(p.center_col), dur / 2.0, fs);
    std::int64_t c1 = last_inside(static_cast<double>(p.center_col), dur / 2.0, fs);
    if (r0 < 0 || c0 < 0 || r1 >= img.rows || c1 >= img.cols)
        fail(ErrorCode::argument, "interferer patch does not fit inside the image");
    if (p.amp == 0.0) return;  // bit-exact no-op

    for (std::int64_t r = r0; r <= r1; ++r) {
        double da = static_cast<double>(r - p.center_row) / p.prf_hz;
        double az_ph = -std::numbers::pi * p.ka_hz_per_s * da * da;
        for (std::int64_t c = c0; c <= c1; ++c) {
            double dt = static_cast<double>(c - p.center_col) / fs;
            double ph = az_ph + 2.0 * std::numbers::pi * p.fc_hz * dt +
                        std::numbers::pi * rate * dt * dt;
            add_sample(img.at(r, c),
                       std::complex<double>(p.amp * std::cos(ph), p.amp * std::sin(ph)));
        }
    }
}

double unfocused_coupling(const UnfocusedParams& p) {
    if (!(p.range_m > 0.0)) fail(ErrorCode::argument, "range must be > 0");
    if (!(p.velocity_mps > 0.0)) fail(ErrorCode::argument, "velocity must be > 0");
    if (!(p.center_freq_hz > 0.0)) fail(ErrorCode::argument, "carrier frequency must be > 0");
    double cd = kSpeedOfLight * p.doppler_shift_hz / (2.0 * p.center_freq_hz * p.velocity_mps);
    double under = 1.0 - cd * cd;
    if (!(under > 0.0))
        fail(ErrorCode::domain, "doppler mismatch too large; coupling term is undefined");
    return std::numbers::pi * p.range_m * kSpeedOfLight * p.doppler_shift_hz /
           (p.velocity_mps * p.velocity_mps * std::sqrt(under));
}

void inject_unfocused(SlcImage& img, const UnfocusedParams& p) {
    validate(img);
    if (!(p.amp >= 0.0) || !std::isfinite(p.amp)) fail(ErrorCode::argument, "amp must be >= 0");
    if (!(p.prf_hz > 0.0)) fail(ErrorCode::argument, "prf must be > 0");
    if (p.target_row < 0 || p.target_row >= img.rows || p.target_col < 0 ||
        p.target_col >= img.cols)
        fail(ErrorCode::argument, "target is outside the image");
    double alpha = unfocused_coupling(p);
    if (p.amp == 0.0) return;  // bit-exact no-op

    std::int64_t rows = img.rows, cols = img.cols;
    CPlane work(rows, cols);
    work.at(p.target_row, p.target_col) = 1.0;

    CPlane spec(rows, cols);
    Dft2d fwd(rows, cols, false), inv(rows, cols, true);
    fwd.execute(work.v.data(), spec.v.data());
    for (std::int64_t r = 0; r < rows; ++r) {
        double f_az = bin_frequency(r, rows, p.prf_hz);
        for (std::int64_t c = 0; c < cols; ++c) {
            double f_rg = bin_frequency(c, cols, img.meta.sample_rate_hz);
            double ph = alpha * f_az * f_rg;
            spec.at(r, c) *= std::complex<double>(std::cos(ph), std::sin(ph));
        }
    }
    inv.execute(spec.v.data(), work.v.data());

    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = 0; c < cols; ++c) add_sample(img.at(r, c), p.amp * work.at(r, c));
}

}  // namespace sarchroma
