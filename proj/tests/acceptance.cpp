// End-to-end property checks for the chromatic coder, one numbered criterion
// per behavior the library promises: white-balanced palettes, achromatic
// speckle, hue signatures for the three interference classes, exact subband
// reconstruction, spectrum flattening, look estimation, color round trips,
// and bit-level determinism of the command-line tool. Each criterion prints
// one [PASS]/[FAIL] line with its measured numbers and elapsed time; the
// process exits nonzero if any line fails. Measurements use the independent
// helpers in oracles.hpp (quadratic DFTs, closed-form references), not the
// code paths under test.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "core/color.hpp"
#include "core/fft.hpp"
#include "core/image.hpp"
#include "core/multilook.hpp"
#include "core/slc_io.hpp"
#include "core/spectral.hpp"
#include "core/synth.hpp"
#include "oracles.hpp"

using namespace sarchroma;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int g_failures = 0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void criterion(int id, const char* label, double budget_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("unexpected exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && secs >= budget_s)
        out = {false, out.detail + "; exceeded " + num(budget_s) + " s budget"};
    if (!out.ok) ++g_failures;
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", out.ok ? "PASS" : "FAIL", id, label,
                out.detail.c_str(), secs);
    std::fflush(stdout);
}

SlcMeta meta_for(double fs, double oversample) {
    SlcMeta m;
    m.sample_rate_hz = fs;
    m.oversample = oversample;
    return m;
}

Hsv pixel_hsv(const RgbImage& im, std::int64_t r, std::int64_t c) {
    return rgb_to_hsv({im.r.at(r, c), im.g.at(r, c), im.b.at(r, c)});
}

// Chroma-weighted circular mean hue over a half-open pixel region.
double region_hue(const RgbImage& im, std::int64_t r0, std::int64_t r1, std::int64_t c0,
                  std::int64_t c1) {
    std::vector<double> hues, weights;
    for (std::int64_t r = r0; r < r1; ++r)
        for (std::int64_t c = c0; c < c1; ++c) {
            Hsv h = pixel_hsv(im, r, c);
            hues.push_back(h.h);
            weights.push_back(h.s * h.v);
        }
    return oracles::circular_mean_hue(hues, &weights);
}

// Runs the command-line tool, capturing interleaved stdout/stderr.
struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// 1. The nine-hue palette sums to an exactly gray vector; nearby sizes stay
// balanced within 5%.
Outcome check_palette_white() {
    Palette p = build_palette(9);
    double sums[3] = {0.0, 0.0, 0.0};
    for (const Rgb& c : p.rgb) {
        sums[0] += c.r;
        sums[1] += c.g;
        sums[2] += c.b;
    }
    const double target = 13.0 / 3.0;
    double worst = 0.0;
    for (double s : sums) worst = std::max(worst, std::fabs(s - target));
    worst = std::max(worst, std::fabs(sums[0] - sums[1]));
    worst = std::max(worst, std::fabs(sums[1] - sums[2]));
    if (worst > 1e-9)
        return {false, "n=9 channel sums deviate from 13/3 by " + num(worst)};

    double worst_spread = 0.0;
    for (int n : {7, 8, 10, 11}) {
        Palette q = build_palette(n);
        double s[3] = {0.0, 0.0, 0.0};
        for (const Rgb& c : q.rgb) {
            s[0] += c.r;
            s[1] += c.g;
            s[2] += c.b;
        }
        double lo = std::min({s[0], s[1], s[2]});
        double hi = std::max({s[0], s[1], s[2]});
        double spread = (hi - lo) / ((s[0] + s[1] + s[2]) / 3.0);
        worst_spread = std::max(worst_spread, spread);
        if (spread > 0.05)
            return {false, "n=" + std::to_string(n) + " channel spread " + num(spread)};
    }
    return {true, "n=9 sums off by " + num(worst) + "; worst spread elsewhere " +
                      num(worst_spread)};
}

// 2. Pure speckle encodes to a near-gray image: mean saturation under 0.12
// (a 20-seed survey put it at 0.088-0.090) with every channel finite.
Outcome check_speckle_achromatic() {
    SlcImage img = gen_speckle(512, 512, 1.0, 7, meta_for(512.0, 1.28));
    CoderConfig cfg;
    cfg.equalize = false;
    RgbImage out = encode_color(img, cfg);
    double mean_s = 0.0;
    for (std::size_t i = 0; i < out.r.v.size(); ++i) {
        if (!std::isfinite(out.r.v[i]) || !std::isfinite(out.g.v[i]) ||
            !std::isfinite(out.b.v[i]))
            return {false, "non-finite channel value"};
        mean_s += rgb_to_hsv({out.r.v[i], out.g.v[i], out.b.v[i]}).s;
    }
    mean_s /= static_cast<double>(out.r.v.size());
    if (!(mean_s < 0.12)) return {false, "mean saturation " + num(mean_s) + " >= 0.12"};
    return {true, "mean saturation " + num(mean_s) + " < 0.12, all channels finite"};
}

// 3. A tone at the center of subband k, 20 dB over the speckle, turns its
// span the palette hue k/9 within half a palette step.
Outcome check_tone_hue() {
    const std::int64_t rows = 512, cols = 512;
    const double fs = 512.0;
    SubbandLayout lay = plan_layout(cols, 1.28, 9);
    std::string seen;
    for (int k : {0, 4, 8}) {
        SlcImage img = gen_speckle(rows, cols, 1.0, 40 + k, meta_for(fs, 1.28));
        double center_bin = lay.valid_start + 0.5 * (lay.bounds[k] + lay.bounds[k + 1]);
        NbiParams tone;
        tone.row_begin = 156;
        tone.row_end = 356;
        tone.col_begin = 0;
        tone.col_end = cols;
        tone.freq_hz = (center_bin - cols / 2) * fs / cols;
        tone.amp = 10.0;  // power 100 over unit-mean speckle intensity
        inject_nbi(img, tone);

        CoderConfig cfg;
        cfg.equalize = false;
        RgbImage out = encode_color(img, cfg);
        double hue = region_hue(out, 165, 347, 0, cols);
        double dist = oracles::circ_hue_dist(hue, k / 9.0);
        seen += (seen.empty() ? "" : ", ") + std::string("k=") + std::to_string(k) + " hue " +
                num(hue) + " (dist " + num(dist) + ")";
        if (!(dist <= 1.0 / 18.0)) return {false, seen + " outside 1/18"};
    }
    return {true, seen};
}

// 4. A chirp patch sweeping the whole valid band walks the dominant subband
// monotonically from 0 to 8 along range, and the image hue tracks the
// palette in the same order.
Outcome check_chirp_sweep() {
    const std::int64_t rows = 192, cols = 512;
    const double fs = 512.0, prf = 64.0;
    SlcImage img(rows, cols, meta_for(fs, 1.28));

    LfmParams p;
    p.center_row = 96;
    p.center_col = 256;
    p.fc_hz = 0.0;
    p.kr_hz_per_s = 4096.0 / 3.0;   // derived rate kr*ki/(ki-kr) = +682.67 Hz/s
    p.ki_hz_per_s = -4096.0 / 3.0;  // derived duration 2*ti = 300/512 s
    p.ti_s = 150.0 / 512.0;
    p.ka_hz_per_s = 0.0;
    p.ta_s = 3.0;  // covers every azimuth line
    p.amp = 1.0;
    p.prf_hz = prf;
    inject_lfm(img, p);

    const double rate = lfm_derived_rate(p);
    SubbandLayout lay = plan_layout(cols, 1.28, 9);
    SubbandStack stack = decompose(img, 9, 0.75, false);
    CoderConfig cfg;
    cfg.equalize = false;
    RgbImage out = encode_color(img, cfg);

    int prev = -1, first = -1, last = -1, used = 0;
    for (std::int64_t c = 116; c <= 396; c += 4) {
        // Expected subband of the instantaneous frequency, when it sits at
        // least 10 bins inside one.
        double f = rate * (static_cast<double>(c) - 256.0) / fs;
        double rel = f * cols / fs + cols / 2.0 - lay.valid_start;
        int expect = -1;
        for (int k = 0; k < 9; ++k)
            if (rel >= lay.bounds[k] + 10 && rel < lay.bounds[k + 1] - 10) expect = k;
        if (expect < 0) continue;
        ++used;

        double best = -1.0;
        int dominant = -1;
        for (int k = 0; k < 9; ++k) {
            double e = 0.0;
            for (std::int64_t r = 0; r < rows; ++r) e += std::norm(stack.images[k].at(r, c));
            if (e > best) {
                best = e;
                dominant = k;
            }
        }
        if (dominant != expect)
            return {false, "col " + std::to_string(c) + " dominant subband " +
                               std::to_string(dominant) + ", expected " + std::to_string(expect)};
        if (dominant < prev)
            return {false, "dominant subband fell from " + std::to_string(prev) + " at col " +
                               std::to_string(c)};
        prev = dominant;
        if (first < 0) first = dominant;
        last = dominant;

        double hue = region_hue(out, 9, rows - 9, c - 1, c + 2);
        if (oracles::circ_hue_dist(hue, dominant / 9.0) > 1.0 / 18.0)
            return {false, "col " + std::to_string(c) + " hue " + num(hue) +
                               " off palette entry " + std::to_string(dominant)};
    }
    if (first != 0 || last != 8 || used < 30)
        return {false, "sweep sampled " + std::to_string(used) + " cols, subbands " +
                           std::to_string(first) + ".." + std::to_string(last)};
    return {true, std::to_string(used) + " sampled cols run subbands 0..8 in order, hues match"};
}

// Shared by criterion 5: injects a defocused point and measures the
// azimuth/range-frequency ridge and the azimuth hue ramp.
struct SmearProbe {
    double fit_residual = 0.0;  // RMS residual over ridge row span
    double slope = 0.0;         // rows per Hz
    double hue_net = 0.0;       // signed hue change across the smear
    bool hue_monotone = false;
    int ridge_rows = 0;
};

SmearProbe probe_unfocused(double doppler_shift_hz) {
    const std::int64_t n = 128;
    const double fs = 128.0, prf = 128.0;
    SlcImage img(n, n, meta_for(fs, 1.28));
    UnfocusedParams p;
    p.target_row = 64;
    p.target_col = 64;
    p.doppler_shift_hz = doppler_shift_hz;
    p.range_m = 7e5;
    p.velocity_mps = 7500.0;
    p.center_freq_hz = 5.3e9;
    p.amp = 1.0;
    p.prf_hz = prf;
    inject_unfocused(img, p);

    // Ridge: energy centroid row of each range-frequency bin, fit to a line.
    std::vector<std::vector<std::complex<double>>> spectra(n);
    for (std::int64_t r = 0; r < n; ++r) {
        std::vector<std::complex<double>> row(n);
        for (std::int64_t c = 0; c < n; ++c) {
            std::complex<float> z = img.at(r, c);
            row[c] = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
        }
        spectra[r] = oracles::naive_dft(row, false);
    }
    std::vector<double> freqs, centroids;
    for (std::int64_t raw = 0; raw < n; ++raw) {
        double f = static_cast<double>(oracles::centered_of_raw(raw, n) - n / 2) * fs / n;
        if (std::fabs(f) > 48.0) continue;
        double wsum = 0.0, rsum = 0.0;
        for (std::int64_t r = 0; r < n; ++r) {
            double e = std::norm(spectra[r][raw]);
            wsum += e;
            rsum += e * static_cast<double>(r);
        }
        freqs.push_back(f);
        centroids.push_back(rsum / wsum);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double m = static_cast<double>(freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        sx += freqs[i];
        sy += centroids[i];
        sxx += freqs[i] * freqs[i];
        sxy += freqs[i] * centroids[i];
    }
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    double inter = (sy - slope * sx) / m;
    double rss = 0.0, lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        double fit = slope * freqs[i] + inter;
        rss += (centroids[i] - fit) * (centroids[i] - fit);
        lo = std::min(lo, fit);
        hi = std::max(hi, fit);
    }
    SmearProbe probe;
    probe.slope = slope;
    probe.fit_residual = std::sqrt(rss / m) / (hi - lo);

    // Hue ramp: chroma-weighted hue of each energetic row of the encoded
    // image, unwrapped so the band's 0..8/9 hue range stays ordered.
    CoderConfig cfg;
    cfg.equalize = false;
    RgbImage out = encode_color(img, cfg);
    Plane inten = intensity(img);
    std::vector<double> row_energy(n, 0.0);
    double emax = 0.0;
    for (std::int64_t r = 0; r < n; ++r) {
        for (std::int64_t c = 0; c < n; ++c) row_energy[r] += inten.at(r, c);
        emax = std::max(emax, row_energy[r]);
    }
    std::int64_t r_lo = n, r_hi = -1;
    for (std::int64_t r = 0; r < n; ++r)
        if (row_energy[r] >= 0.25 * emax) {
            r_lo = std::min(r_lo, r);
            r_hi = std::max(r_hi, r);
        }
    r_lo += 5;  // keep clear of the multilook window at the smear's ends
    r_hi -= 5;
    probe.ridge_rows = static_cast<int>(r_hi - r_lo + 1);
    std::vector<double> ramp;
    for (std::int64_t r = r_lo; r <= r_hi; ++r) {
        double h = region_hue(out, r, r + 1, 0, n);
        ramp.push_back(h > 17.0 / 18.0 ? h - 1.0 : h);
    }
    probe.hue_monotone = ramp.size() >= 8;
    probe.hue_net = ramp.empty() ? 0.0 : ramp.back() - ramp.front();
    for (std::size_t i = 1; i < ramp.size(); ++i) {
        double step = ramp[i] - ramp[i - 1];
        if (probe.hue_net >= 0.0 ? step < -0.02 : step > 0.02) probe.hue_monotone = false;
    }
    return probe;
}

// 5. A defocused echo draws a straight ridge in the row/range-frequency
// plane and a monotone hue ramp along azimuth; negating the mismatch flips
// both directions.
Outcome check_unfocused_ridge() {
    SmearProbe pos = probe_unfocused(1.309e-9);
    SmearProbe neg = probe_unfocused(-1.309e-9);
    std::string detail = "residual " + num(pos.fit_residual) + ", slope " + num(pos.slope) +
                         " rows/Hz over " + std::to_string(pos.ridge_rows) + " rows, hue net " +
                         num(pos.hue_net) + " vs " + num(neg.hue_net) + " flipped";
    if (!(pos.fit_residual < 0.05)) return {false, "ridge fit residual " + num(pos.fit_residual)};
    if (!pos.hue_monotone || !neg.hue_monotone) return {false, detail + "; hue ramp not monotone"};
    if (!(std::fabs(pos.hue_net) >= 0.3) || !(std::fabs(neg.hue_net) >= 0.3))
        return {false, detail + "; hue span too small"};
    if (!(pos.hue_net * neg.hue_net < 0.0) || !(pos.slope * neg.slope < 0.0))
        return {false, detail + "; direction did not flip"};
    return {true, detail};
}

// 6. With equalization off, the subband images sum back to the band-filtered
// input within 1e-10 of its peak on random scenes.
Outcome check_reconstruction() {
    struct Case {
        std::int64_t rows, cols;
        double oversample;
        int n_sub;
        std::uint64_t seed;
    };
    double worst = 0.0;
    for (const Case& cs : {Case{64, 270, 1.35, 9, 5}, Case{96, 256, 1.28, 7, 6},
                           Case{64, 256, 1.28, 5, 7}}) {
        SlcImage img = gen_speckle(cs.rows, cs.cols, 1.0, cs.seed, meta_for(300.0, cs.oversample));
        SubbandStack stack = decompose(img, cs.n_sub, 0.75, false);
        CPlane ref = oracles::band_filter_reference(img);
        double peak = 0.0, err = 0.0;
        for (std::int64_t r = 0; r < cs.rows; ++r)
            for (std::int64_t c = 0; c < cs.cols; ++c) {
                std::complex<double> sum(0.0, 0.0);
                for (int k = 0; k < cs.n_sub; ++k) sum += stack.images[k].at(r, c);
                peak = std::max(peak, std::abs(ref.at(r, c)));
                err = std::max(err, std::abs(sum - ref.at(r, c)));
            }
        worst = std::max(worst, err / peak);
        if (err / peak > 1e-10)
            return {false, std::to_string(cs.rows) + "x" + std::to_string(cs.cols) +
                               " relative error " + num(err / peak)};
    }
    return {true, "3 scenes, worst relative error " + num(worst)};
}

// 7. A spectrum shaped exactly like the a=0.75 window equalizes to flat
// within 1e-9 ripple.
Outcome check_equalization_flat() {
    const std::int64_t cols = 270;
    SubbandLayout lay = plan_layout(cols, 1.35, 9);
    std::vector<std::complex<double>> spec(cols, {0.0, 0.0});
    for (std::int64_t i = 0; i < lay.valid_len; ++i) {
        double shape = 0.75 - 0.25 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                              static_cast<double>(lay.valid_len));
        spec[centered_to_raw(lay.valid_start + i, cols)] = {shape, 0.0};
    }
    std::vector<double> window = equalization_window(0.75, lay.valid_len);
    equalize_spectrum_row(spec.data(), cols, lay, window.data());
    double lo = 1e300, hi = -1e300;
    for (std::int64_t i = 0; i < lay.valid_len; ++i) {
        double v = spec[centered_to_raw(lay.valid_start + i, cols)].real();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double ripple = hi - lo;
    if (!(ripple <= 1e-9)) return {false, "ripple " + num(ripple)};
    return {true, "ripple " + num(ripple) + " across " + std::to_string(lay.valid_len) + " bins"};
}

// 8. Averaging 81 independent intensities per estimate reads back 81 looks
// within 10%; the sliding window's renormalized borders mix in fewer-sample
// means, so its estimate comes out strictly lower.
Outcome check_enl() {
    SlcImage img = gen_speckle(513, 513, 1.0, 36, meta_for(100.0, 1.0));
    Plane inten = intensity(img);

    Plane blocks(57, 57);
    for (std::int64_t br = 0; br < 57; ++br)
        for (std::int64_t bc = 0; bc < 57; ++bc) {
            double acc = 0.0;
            for (std::int64_t r = 0; r < 9; ++r)
                for (std::int64_t c = 0; c < 9; ++c) acc += inten.at(br * 9 + r, bc * 9 + c);
            blocks.at(br, bc) = acc / 81.0;
        }
    double enl_blocks = estimate_enl(blocks);

    Plane slid = multilook(inten, {9, 9});
    double enl_overlap = estimate_enl(slid);

    std::string detail = "non-overlapping " + num(enl_blocks) + ", overlapping " +
                         num(enl_overlap);
    if (!(std::fabs(enl_blocks - 81.0) <= 8.1)) return {false, detail + "; first not within 10%"};
    if (!(enl_overlap < enl_blocks) || !(enl_overlap < 81.0))
        return {false, detail + "; overlap estimate not smaller"};
    return {true, detail};
}

// 9. HSV to RGB and back is the identity to 1e-9 over a 64^3 grid.
Outcome check_hsv_roundtrip() {
    double worst = 0.0;
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j)
            for (int k = 0; k < 64; ++k) {
                Hsv in{i / 64.0, (j + 1) / 64.0, (k + 1) / 64.0};
                Hsv back = rgb_to_hsv(hsv_to_rgb(in));
                double err = std::max({oracles::circ_hue_dist(in.h, back.h),
                                       std::fabs(in.s - back.s), std::fabs(in.v - back.v)});
                worst = std::max(worst, err);
                if (err > 1e-9)
                    return {false, "error " + num(err) + " at h=" + num(in.h) +
                                       " s=" + num(in.s) + " v=" + num(in.v)};
            }
    return {true, "worst error " + num(worst) + " over 262144 samples"};
}

// 10. Replaying a manifest reproduces every output byte for byte, at one
// thread and at four.
Outcome check_determinism() {
    std::string dir = oracles::make_temp_dir("acceptance");
    oracles::write_file(dir + "/s.scene",
                        "[scene]\n"
                        "rows = 128\n"
                        "cols = 512\n"
                        "sample_rate_hz = 512.0\n"
                        "oversample = 1.28\n"
                        "prf_hz = 150\n"
                        "seed = 21\n"
                        "[nbi]\n"
                        "rows = 10:40\n"
                        "cols = 0:512\n"
                        "freq_hz = -44\n"
                        "amp = 3\n"
                        "[lfm]\n"
                        "center_row = 64\n"
                        "center_col = 256\n"
                        "fc_hz = 10\n"
                        "ki_hz_per_s = -1364\n"
                        "kr_hz_per_s = 1364\n"
                        "ti_s = 0.29296875\n"
                        "ka_hz_per_s = 200\n"
                        "ta_s = 0.4\n"
                        "amp = 2\n"
                        "[unfocused]\n"
                        "target_row = 100\n"
                        "target_col = 400\n"
                        "doppler_shift_hz = 1.5e-9\n"
                        "range_m = 7e5\n"
                        "velocity_mps = 7500\n"
                        "center_freq_hz = 5.3e9\n"
                        "amp = 1\n");

    if (run_cli("synth " + dir + "/s.scene -o " + dir + "/a --manifest " + dir + "/ms.json")
            .exit_code != 0)
        return {false, "recording synth run failed"};
    if (run_cli("encode " + dir + "/a -o " + dir + "/a.ppm --no-equalize --manifest " + dir +
                "/me.json")
            .exit_code != 0)
        return {false, "recording encode run failed"};

    struct Snapshot {
        std::string meta, cpx, truth, ppm, syn_report, enc_report;
    };
    auto replay = [&](const std::string& threads) -> Snapshot {
        RunResult syn = run_cli("--threads " + threads + " synth --manifest " + dir + "/ms.json");
        RunResult enc = run_cli("--threads " + threads + " encode --manifest " + dir +
                                "/me.json");
        if (syn.exit_code != 0 || enc.exit_code != 0) return {};
        return {oracles::read_file(dir + "/a.meta"), oracles::read_file(dir + "/a.cpx"),
                oracles::read_file(dir + "/a.truth"), oracles::read_file(dir + "/a.ppm"),
                syn.output, enc.output};
    };

    Snapshot first = replay("1");
    if (first.cpx.empty()) return {false, "replay failed"};
    int runs = 1;
    for (const std::string& threads : {"1", "4"}) {
        Snapshot again = replay(threads);
        ++runs;
        if (again.meta != first.meta || again.cpx != first.cpx || again.truth != first.truth)
            return {false, "scene outputs differ at " + threads + " threads"};
        if (again.ppm != first.ppm)
            return {false, "color output differs at " + threads + " threads"};
        if (again.syn_report != first.syn_report || again.enc_report != first.enc_report)
            return {false, "reports differ at " + threads + " threads"};
    }
    return {true, std::to_string(runs) + " replays at 1 and 4 threads, " +
                      std::to_string(first.cpx.size()) + "-byte image identical"};
}

}  // namespace

int main() {
    criterion(1, "palette channels sum white", 1.0, check_palette_white);
    criterion(2, "pure speckle encodes achromatic", 10.0, check_speckle_achromatic);
    criterion(3, "tones take their subband's hue", 10.0, check_tone_hue);
    criterion(4, "chirp sweep walks the palette in order", 10.0, check_chirp_sweep);
    criterion(5, "defocus ridge is linear and hue ramp flips with the mismatch sign", 10.0,
              check_unfocused_ridge);
    criterion(6, "subbands sum back to the band-filtered input", 5.0, check_reconstruction);
    criterion(7, "window-shaped spectrum equalizes flat", 1.0, check_equalization_flat);
    criterion(8, "look estimator reads 81 blocks and penalizes overlap", 10.0, check_enl);
    criterion(9, "HSV round trip is the identity", 5.0, check_hsv_roundtrip);
    criterion(10, "manifest replays are bit-identical across thread counts", 30.0,
              check_determinism);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
