#pragma once

#include <cstdint>

#include "core/image.hpp"

namespace sarchroma {

// Fully developed speckle: each sample circular complex Gaussian with
// E|z|^2 = sigma (per-component variance sigma/2), drawn row-major from a
// seeded generator. Bit-reproducible across platforms and thread counts.
SlcImage gen_speckle(std::int64_t rows, std::int64_t cols, double sigma, std::uint64_t seed,
                     const SlcMeta& meta);

// Continuous-wave tone added over a half-open row/col span:
//   amp * row_gain * exp(j*(2*pi*freq_hz*(col/fs) + phase_rad)).
// freq_hz is an offset from the range passband center, |freq_hz| <= fs/2.
// row_gain comes from amp_per_row (length = span rows) when present, else 1.
// amp == 0 (or a zero row gain) leaves those samples bit-exact.
struct NbiParams {
    std::int64_t row_begin = 0, row_end = 0;
    std::int64_t col_begin = 0, col_end = 0;
    double freq_hz = 0.0;
    double amp = 0.0;
    double phase_rad = 0.0;
    std::vector<double> amp_per_row;  // optional per-row gains
};
void inject_nbi(SlcImage& img, const NbiParams& p);

// Residual of a pulsed linear-FM interferer after range compression: a
// rectangular patch centered at (center_row, center_col) carrying a range
// chirp of rate derived_rate over derived_duration and an azimuth chirp of
// rate ka_hz_per_s over ta_s. dt = (col - center_col)/fs, da = (row -
// center_row)/prf; samples with -dur/2 <= dt < dur/2 and -ta/2 <= da < ta/2
// (dur = derived_duration, ta = ta_s) receive:
//   amp * exp(-j*pi*ka*da^2) * exp(j*(2*pi*fc_hz*dt + pi*derived_rate*dt^2)).
struct LfmParams {
    std::int64_t center_row = 0, center_col = 0;
    double fc_hz = 0.0;         // residual center frequency
    double ki_hz_per_s = 0.0;   // interferer FM rate, != kr_hz_per_s
    double kr_hz_per_s = 0.0;   // reference (compression) FM rate, > 0
    double ti_s = 0.0;          // interferer pulse duration, > 0
    double ka_hz_per_s = 0.0;   // azimuth FM rate
    double ta_s = 0.0;          // azimuth aperture, > 0
    double amp = 0.0;
    double prf_hz = 0.0;
};
double lfm_derived_rate(const LfmParams& p);      // kr*ki / (ki - kr)
double lfm_derived_duration(const LfmParams& p);  // ti*|ki - kr| / kr
void inject_lfm(SlcImage& img, const LfmParams& p);

// Echo of a moving point scatterer left unfocused by a Doppler mismatch: a
// unit impulse at (target_row, target_col) filtered in the 2-D spectrum by
// exp(j * alpha * f_az * f_rg), which smears it along azimuth with a
// frequency-dependent shift (a tilted ridge in the row/range-frequency view).
struct UnfocusedParams {
    std::int64_t target_row = 0, target_col = 0;
    double doppler_shift_hz = 0.0;  // mismatch Delta driving the defocus
    double range_m = 0.0;           // closest-approach range, > 0
    double velocity_mps = 0.0;      // platform speed, > 0
    double center_freq_hz = 0.0;    // carrier, > 0
    double amp = 0.0;
    double prf_hz = 0.0;
};
// alpha = pi*R0*c*Delta / (Va^2 * sqrt(1 - c^2*Delta^2 / (4*f0^2*Va^2))).
// Domain error when the square root's argument is not positive.
double unfocused_coupling(const UnfocusedParams& p);
void inject_unfocused(SlcImage& img, const UnfocusedParams& p);

}  // namespace sarchroma
