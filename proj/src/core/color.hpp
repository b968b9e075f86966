#pragma once

#include <vector>

#include "core/image.hpp"
#include "core/multilook.hpp"
#include "core/spectral.hpp"

namespace sarchroma {

struct Hsv {
    double h = 0.0, s = 0.0, v = 0.0;  // each in [0, 1]; h = 1 wraps to 0
};

struct Rgb {
    double r = 0.0, g = 0.0, b = 0.0;
};

// Hexcone model. hsv_to_rgb accepts h in [0, 1] (1 wraps); rgb_to_hsv returns
// h in [0, 1), with h = 0 and s = 0 for grays. Inputs outside [0, 1] raise
// argument errors. The pair round-trips exactly up to floating-point noise.
Rgb hsv_to_rgb(const Hsv& in);
Hsv rgb_to_hsv(const Rgb& in);

// Subband palette: n_sub fully saturated, full-value hues H_k = k/n_sub.
struct Palette {
    int n_sub = 0;
    std::vector<Hsv> hsv;
    std::vector<Rgb> rgb;
};

// Requires n_sub >= 2. Per-channel sums of palette.rgb are equal for
// n_sub % 3 == 0 and balanced within a few percent otherwise, which keeps an
// even spectrum achromatic after compositing.
Palette build_palette(int n_sub);

struct CoderConfig {
    int n_sub = 9;
    double window_coeff = 0.75;   // equalization window 'a'
    bool equalize = true;         // undo the processor's range taper (real scenes)
    LookParams looks{9, 9};
    double percentile = 95.0;     // brightness clip point, in (0, 100]
    bool complex_average = false; // multilook subbands coherently before taking amplitude
};

// Per-pixel scaling of each amplitude plane by the maximum across planes.
// Pixels where every plane is zero stay zero. Planes must share one shape and
// be nonnegative.
std::vector<Plane> normalize_subbands(const std::vector<Plane>& amps);

// I = (1/n) * sum_k norm[k] * palette.rgb[k]. Channels land in [0, 1].
RgbImage composite_rgb(const std::vector<Plane>& normalized, const Palette& palette);

// Linear-interpolation percentile (rank (p/100)*(N-1)) over all plane values.
double percentile_value(const Plane& img, double p);

// Replaces the composite's value channel with min(amp/clip, 1) where clip is
// the p-th percentile of amp; hue and saturation are preserved. A zero clip
// value (blank amplitude plane) is a domain error.
RgbImage encode_brightness(const RgbImage& composite, const Plane& amp, double percentile);

struct EncodeReport {
    SubbandLayout layout;
    double looks_estimate = 0.0;    // NaN when the multilooked plane is constant
    double percentile_value = 0.0;  // brightness clip point actually used
};

// Full pipeline: subband decomposition, per-subband amplitude multilook,
// per-pixel normalization, palette composite, multilooked-amplitude
// brightness coding. With complex_average the subbands and the full image are
// multilooked coherently before the amplitude is taken.
RgbImage encode_color(const SlcImage& img, const CoderConfig& cfg, EncodeReport* report = nullptr);

}  // namespace sarchroma
