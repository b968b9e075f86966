#include "core/color.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace sarchroma {

namespace {

void check_unit(double x, const char* name) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0)
        fail(ErrorCode::argument, std::string(name) + " must be in [0, 1]");
}

}  // namespace

Rgb hsv_to_rgb(const Hsv& in) {
    check_unit(in.h, "hue");
    check_unit(in.s, "saturation");
    check_unit(in.v, "value");
    double h6 = in.h * 6.0;
    if (h6 >= 6.0) h6 -= 6.0;  // h = 1 is the same hue as h = 0
    int sector = static_cast<int>(std::floor(h6));
    double f = h6 - sector;
    double p = in.v * (1.0 - in.s);
    double q = in.v * (1.0 - in.s * f);
    double t = in.v * (1.0 - in.s * (1.0 - f));
    switch (sector) {
        case 0: return {in.v, t, p};
        case 1: return {q, in.v, p};
        case 2: return {p, in.v, t};
        case 3: return {p, q, in.v};
        case 4: return {t, p, in.v};
        default: return {in.v, p, q};
    }
}

Hsv rgb_to_hsv(const Rgb& in) {
    check_unit(in.r, "red");
    check_unit(in.g, "green");
    check_unit(in.b, "blue");
    double hi = std::max({in.r, in.g, in.b});
    double lo = std::min({in.r, in.g, in.b});
    double d = hi - lo;
    Hsv out;
    out.v = hi;
    out.s = hi > 0.0 ? d / hi : 0.0;
    if (d > 0.0) {
        double h6;
        if (hi == in.r)
            h6 = (in.g - in.b) / d;
        else if (hi == in.g)
            h6 = 2.0 + (in.b - in.r) / d;
        else
            h6 = 4.0 + (in.r - in.g) / d;
        if (h6 < 0.0) h6 += 6.0;
        out.h = h6 / 6.0;
        if (out.h >= 1.0) out.h -= 1.0;
    }
    return out;
}

Palette build_palette(int n_sub) {
    if (n_sub < 2) fail(ErrorCode::argument, "palette needs at least 2 entries");
    Palette p;
    p.n_sub = n_sub;
    p.hsv.resize(n_sub);
    p.rgb.resize(n_sub);
    for (int k = 0; k < n_sub; ++k) {
        p.hsv[k] = {static_cast<double>(k) / static_cast<double>(n_sub), 1.0, 1.0};
        p.rgb[k] = hsv_to_rgb(p.hsv[k]);
    }
    return p;
}

std::vector<Plane> normalize_subbands(const std::vector<Plane>& amps) {
    if (amps.size() < 2) fail(ErrorCode::argument, "need at least 2 amplitude planes");
    std::int64_t rows = amps[0].rows, cols = amps[0].cols;
    if (rows < 1 || cols < 1) fail(ErrorCode::argument, "planes must be non-empty");
    for (const Plane& a : amps)
        if (a.rows != rows || a.cols != cols)
            fail(ErrorCode::argument, "amplitude planes must share one shape");

    int n = static_cast<int>(amps.size());
    std::vector<Plane> out(n, Plane(rows, cols));
    parallel_for(rows, [&](std::int64_t r0, std::int64_t r1) {
        std::vector<const double*> s(n);
        std::vector<double*> d(n);
        for (std::int64_t r = r0; r < r1; ++r) {
            for (int k = 0; k < n; ++k) {
                s[k] = amps[k].row(r);
                d[k] = out[k].row(r);
            }
            for (std::int64_t c = 0; c < cols; ++c) {
                double hi = 0.0;
                for (int k = 0; k < n; ++k) {
                    double v = s[k][c];
                    if (!(v >= 0.0))
                        fail(ErrorCode::argument, "amplitudes must be nonnegative and finite");
                    hi = std::max(hi, v);
                }
                if (hi > 0.0)
                    for (int k = 0; k < n; ++k) d[k][c] = s[k][c] / hi;
                // all-zero pixels stay zero: no spectral preference exists there
            }
        }
    });
    return out;
}

RgbImage composite_rgb(const std::vector<Plane>& normalized, const Palette& palette) {
    if (static_cast<int>(normalized.size()) != palette.n_sub)
        fail(ErrorCode::argument, "plane count must match the palette");
    if (palette.n_sub < 2) fail(ErrorCode::argument, "palette needs at least 2 entries");
    std::int64_t rows = normalized[0].rows, cols = normalized[0].cols;
    for (const Plane& a : normalized)
        if (a.rows != rows || a.cols != cols)
            fail(ErrorCode::argument, "planes must share one shape");

    int n = palette.n_sub;
    double inv_n = 1.0 / static_cast<double>(n);
    RgbImage out(rows, cols);
    parallel_for(rows, [&](std::int64_t r0, std::int64_t r1) {
        for (std::int64_t r = r0; r < r1; ++r) {
            double* pr = out.r.row(r);
            double* pg = out.g.row(r);
            double* pb = out.b.row(r);
            for (std::int64_t c = 0; c < cols; ++c) {
                double ar = 0.0, ag = 0.0, ab = 0.0;
                for (int k = 0; k < n; ++k) {
                    double w = normalized[k].at(r, c);
                    if (!(w >= 0.0 && w <= 1.0))
                        fail(ErrorCode::argument, "normalized amplitudes must be in [0, 1]");
                    ar += w * palette.rgb[k].r;
                    ag += w * palette.rgb[k].g;
                    ab += w * palette.rgb[k].b;
                }
                pr[c] = std::min(ar * inv_n, 1.0);
                pg[c] = std::min(ag * inv_n, 1.0);
                pb[c] = std::min(ab * inv_n, 1.0);
            }
        }
    });
    return out;
}

double percentile_value(const Plane& img, double p) {
    if (!(p > 0.0 && p <= 100.0)) fail(ErrorCode::argument, "percentile must be in (0, 100]");
    if (img.rows < 1 || img.cols < 1) fail(ErrorCode::argument, "plane must be non-empty");
    std::vector<double> sorted(img.v);
    std::sort(sorted.begin(), sorted.end());
    double rank = p / 100.0 * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(std::floor(rank));
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = rank - static_cast<double>(lo);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

RgbImage encode_brightness(const RgbImage& composite, const Plane& amp, double percentile) {
    std::int64_t rows = composite.rows(), cols = composite.cols();
    if (amp.rows != rows || amp.cols != cols)
        fail(ErrorCode::argument, "amplitude plane must match the composite shape");
    double clip = percentile_value(amp, percentile);
    if (!(clip > 0.0))
        fail(ErrorCode::domain, "brightness clip point is zero; amplitude plane is blank");

    RgbImage out(rows, cols);
    parallel_for(rows, [&](std::int64_t r0, std::int64_t r1) {
        for (std::int64_t r = r0; r < r1; ++r)
            for (std::int64_t c = 0; c < cols; ++c) {
                Hsv hsv = rgb_to_hsv({composite.r.at(r, c), composite.g.at(r, c), composite.b.at(r, c)});
                hsv.v = std::min(amp.at(r, c) / clip, 1.0);
                Rgb rgb = hsv_to_rgb(hsv);
                out.r.at(r, c) = rgb.r;
                out.g.at(r, c) = rgb.g;
                out.b.at(r, c) = rgb.b;
            }
    });
    return out;
}

RgbImage encode_color(const SlcImage& img, const CoderConfig& cfg, EncodeReport* report) {
    validate(img);
    if (!(cfg.percentile > 0.0 && cfg.percentile <= 100.0))
        fail(ErrorCode::argument, "percentile must be in (0, 100]");

    SubbandStack stack = decompose(img, cfg.n_sub, cfg.window_coeff, cfg.equalize);

    std::vector<Plane> looked(cfg.n_sub);
    for (int k = 0; k < cfg.n_sub; ++k) {
        if (cfg.complex_average)
            looked[k] = amplitude(multilook(stack.images[k], cfg.looks));
        else
            looked[k] = multilook(amplitude(stack.images[k]), cfg.looks);
        stack.images[k] = CPlane();  // free as we go; full stacks are large
    }

    std::vector<Plane> norm = normalize_subbands(looked);
    looked.clear();
    Palette palette = build_palette(cfg.n_sub);
    RgbImage composite = composite_rgb(norm, palette);
    norm.clear();

    Plane amp = cfg.complex_average ? amplitude(multilook(to_cplane(img), cfg.looks))
                                    : multilook(amplitude(img), cfg.looks);
    double clip = percentile_value(amp, cfg.percentile);
    RgbImage out = encode_brightness(composite, amp, cfg.percentile);

    if (report) {
        report->layout = stack.layout;
        report->percentile_value = clip;
        Plane looked_intensity = multilook(intensity(img), cfg.looks);
        try {
            report->looks_estimate = estimate_enl(looked_intensity);
        } catch (const Error&) {
            report->looks_estimate = std::numeric_limits<double>::quiet_NaN();
        }
    }
    return out;
}

}  // namespace sarchroma
