#include "sarchroma.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "core/color.hpp"
#include "core/error.hpp"
#include "core/multilook.hpp"
#include "core/parallel.hpp"
#include "core/scene.hpp"
#include "core/slc_io.hpp"
#include "core/spectral.hpp"
#include "core/synth.hpp"

using namespace sarchroma;

struct sc_image {
    SlcImage img;
};

struct sc_rgb_image {
    RgbImage img;
};

struct sc_subband_stack {
    SubbandStack stack;
};

namespace {

thread_local std::string g_last_error = "no error";

sc_status set_error(ErrorCode code, const char* what) {
    g_last_error = what;
    switch (code) {
        case ErrorCode::argument: return SC_ERROR_ARGUMENT;
        case ErrorCode::format: return SC_ERROR_FORMAT;
        case ErrorCode::io: return SC_ERROR_IO;
        case ErrorCode::domain: return SC_ERROR_DOMAIN;
        default: return SC_ERROR_INTERNAL;
    }
}

sc_status null_arg(const char* what) {
    g_last_error = what;
    return SC_ERROR_ARGUMENT;
}

// Runs body, translating exceptions to status codes.
template <typename Fn>
sc_status guarded(Fn&& body) {
    try {
        body();
        return SC_OK;
    } catch (const Error& e) {
        return set_error(e.code(), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(ErrorCode::internal, "out of memory");
    } catch (const std::exception& e) {
        return set_error(ErrorCode::internal, e.what());
    }
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_last_error(void) { return g_last_error.c_str(); }

void sc_set_max_threads(int n) { set_max_threads(n); }

/* ---- complex images ---------------------------------------------------- */

sc_status sc_image_create(int64_t rows, int64_t cols, double sample_rate_hz, double oversample,
                          sc_image** out) {
    if (!out) return null_arg("out must not be NULL");
    *out = nullptr;
    return guarded([&] {
        SlcMeta meta;
        meta.sample_rate_hz = sample_rate_hz;
        meta.oversample = oversample;
        SlcImage img(rows > 0 ? rows : 0, cols > 0 ? cols : 0, meta);
        img.rows = rows;
        img.cols = cols;
        validate(img);
        *out = new sc_image{std::move(img)};
    });
}

void sc_image_free(sc_image* img) { delete img; }

int64_t sc_image_rows(const sc_image* img) { return img ? img->img.rows : 0; }
int64_t sc_image_cols(const sc_image* img) { return img ? img->img.cols : 0; }
double sc_image_sample_rate(const sc_image* img) { return img ? img->img.meta.sample_rate_hz : 0.0; }
double sc_image_oversample(const sc_image* img) { return img ? img->img.meta.oversample : 0.0; }

sc_status sc_image_set_oversample(sc_image* img, double oversample) {
    if (!img) return null_arg("img must not be NULL");
    return guarded([&] {
        if (!(oversample >= 1.0 && oversample <= 4.0))
            fail(ErrorCode::argument, "oversample must be in [1, 4]");
        img->img.meta.oversample = oversample;
    });
}

sc_status sc_image_set_data(sc_image* img, const float* values, size_t count) {
    if (!img || !values) return null_arg("img and values must not be NULL");
    return guarded([&] {
        size_t want = static_cast<size_t>(img->img.rows) * img->img.cols * 2;
        if (count != want)
            fail(ErrorCode::argument, "count must be 2*rows*cols = " + std::to_string(want));
        for (size_t i = 0; i < count; ++i)
            if (!std::isfinite(values[i]))
                fail(ErrorCode::argument, "value " + std::to_string(i) + " is not finite");
        std::memcpy(img->img.data.data(), values, count * sizeof(float));
    });
}

sc_status sc_image_get_data(const sc_image* img, float* values, size_t count) {
    if (!img || !values) return null_arg("img and values must not be NULL");
    return guarded([&] {
        size_t want = static_cast<size_t>(img->img.rows) * img->img.cols * 2;
        if (count != want)
            fail(ErrorCode::argument, "count must be 2*rows*cols = " + std::to_string(want));
        std::memcpy(values, img->img.data.data(), count * sizeof(float));
    });
}

sc_status sc_image_read(const char* path, sc_image** out) {
    if (!path || !out) return null_arg("path and out must not be NULL");
    *out = nullptr;
    return guarded([&] { *out = new sc_image{read_slc(path)}; });
}

sc_status sc_image_write(const sc_image* img, const char* path) {
    if (!img || !path) return null_arg("img and path must not be NULL");
    return guarded([&] { write_slc(img->img, path); });
}

/* ---- color images ------------------------------------------------------ */

sc_status sc_rgb_create(int64_t rows, int64_t cols, sc_rgb_image** out) {
    if (!out) return null_arg("out must not be NULL");
    *out = nullptr;
    return guarded([&] {
        if (rows < 1 || cols < 1) fail(ErrorCode::argument, "rows and cols must be >= 1");
        *out = new sc_rgb_image{RgbImage(rows, cols)};
    });
}

void sc_rgb_free(sc_rgb_image* img) { delete img; }

int64_t sc_rgb_rows(const sc_rgb_image* img) { return img ? img->img.rows() : 0; }
int64_t sc_rgb_cols(const sc_rgb_image* img) { return img ? img->img.cols() : 0; }

sc_status sc_rgb_set_data(sc_rgb_image* img, const double* values, size_t count) {
    if (!img || !values) return null_arg("img and values must not be NULL");
    return guarded([&] {
        size_t pixels = static_cast<size_t>(img->img.rows()) * img->img.cols();
        if (count != pixels * 3)
            fail(ErrorCode::argument, "count must be 3*rows*cols = " + std::to_string(pixels * 3));
        for (size_t i = 0; i < count; ++i)
            if (!std::isfinite(values[i]) || values[i] < 0.0 || values[i] > 1.0)
                fail(ErrorCode::argument, "value " + std::to_string(i) + " is outside [0, 1]");
        for (size_t i = 0; i < pixels; ++i) {
            img->img.r.v[i] = values[3 * i];
            img->img.g.v[i] = values[3 * i + 1];
            img->img.b.v[i] = values[3 * i + 2];
        }
    });
}

sc_status sc_rgb_get_data(const sc_rgb_image* img, double* values, size_t count) {
    if (!img || !values) return null_arg("img and values must not be NULL");
    return guarded([&] {
        size_t pixels = static_cast<size_t>(img->img.rows()) * img->img.cols();
        if (count != pixels * 3)
            fail(ErrorCode::argument, "count must be 3*rows*cols = " + std::to_string(pixels * 3));
        for (size_t i = 0; i < pixels; ++i) {
            values[3 * i] = img->img.r.v[i];
            values[3 * i + 1] = img->img.g.v[i];
            values[3 * i + 2] = img->img.b.v[i];
        }
    });
}

sc_status sc_rgb_export(const sc_rgb_image* img, const char* path) {
    if (!img || !path) return null_arg("img and path must not be NULL");
    return guarded([&] { export_color(img->img, path); });
}

/* ---- spectral layout and palette --------------------------------------- */

sc_status sc_plan_layout(int64_t cols, double oversample, int n_sub, int64_t* valid_len,
                         int64_t* valid_start, int64_t* bounds) {
    if (!valid_len || !valid_start) return null_arg("valid_len and valid_start must not be NULL");
    return guarded([&] {
        SubbandLayout lay = plan_layout(cols, oversample, n_sub);
        *valid_len = lay.valid_len;
        *valid_start = lay.valid_start;
        if (bounds)
            for (int k = 0; k <= n_sub; ++k) bounds[k] = lay.bounds[k];
    });
}

sc_status sc_palette(int n_sub, double* hsv, double* rgb) {
    return guarded([&] {
        Palette p = build_palette(n_sub);
        for (int k = 0; k < n_sub; ++k) {
            if (hsv) {
                hsv[3 * k] = p.hsv[k].h;
                hsv[3 * k + 1] = p.hsv[k].s;
                hsv[3 * k + 2] = p.hsv[k].v;
            }
            if (rgb) {
                rgb[3 * k] = p.rgb[k].r;
                rgb[3 * k + 1] = p.rgb[k].g;
                rgb[3 * k + 2] = p.rgb[k].b;
            }
        }
    });
}

sc_status sc_hsv_to_rgb(const double hsv[3], double rgb[3]) {
    if (!hsv || !rgb) return null_arg("hsv and rgb must not be NULL");
    return guarded([&] {
        Rgb out = hsv_to_rgb({hsv[0], hsv[1], hsv[2]});
        rgb[0] = out.r;
        rgb[1] = out.g;
        rgb[2] = out.b;
    });
}

sc_status sc_rgb_to_hsv(const double rgb[3], double hsv[3]) {
    if (!rgb || !hsv) return null_arg("rgb and hsv must not be NULL");
    return guarded([&] {
        Hsv out = rgb_to_hsv({rgb[0], rgb[1], rgb[2]});
        hsv[0] = out.h;
        hsv[1] = out.s;
        hsv[2] = out.v;
    });
}

/* ---- subband decomposition --------------------------------------------- */

sc_status sc_decompose(const sc_image* img, int n_sub, double window_coeff, int equalize,
                       sc_subband_stack** out) {
    if (!img || !out) return null_arg("img and out must not be NULL");
    *out = nullptr;
    return guarded([&] {
        *out = new sc_subband_stack{decompose(img->img, n_sub, window_coeff, equalize != 0)};
    });
}

void sc_stack_free(sc_subband_stack* stack) { delete stack; }

int sc_stack_count(const sc_subband_stack* stack) {
    return stack ? stack->stack.layout.n_sub : 0;
}

sc_status sc_stack_bounds(const sc_subband_stack* stack, int64_t* bounds) {
    if (!stack || !bounds) return null_arg("stack and bounds must not be NULL");
    return guarded([&] {
        for (int k = 0; k <= stack->stack.layout.n_sub; ++k)
            bounds[k] = stack->stack.layout.bounds[k];
    });
}

sc_status sc_stack_amplitude(const sc_subband_stack* stack, int index, double* out, size_t count) {
    if (!stack || !out) return null_arg("stack and out must not be NULL");
    return guarded([&] {
        if (index < 0 || index >= stack->stack.layout.n_sub)
            fail(ErrorCode::argument, "subband index out of range");
        const CPlane& plane = stack->stack.images[index];
        size_t want = static_cast<size_t>(plane.rows) * plane.cols;
        if (count != want)
            fail(ErrorCode::argument, "count must be rows*cols = " + std::to_string(want));
        Plane amp = amplitude(plane);
        std::memcpy(out, amp.v.data(), want * sizeof(double));
    });
}

sc_status sc_stack_max_amplitude(const sc_subband_stack* stack, double* out) {
    if (!stack || !out) return null_arg("stack and out must not be NULL");
    return guarded([&] {
        double hi = 0.0;
        for (const CPlane& plane : stack->stack.images)
            for (const std::complex<double>& z : plane.v) hi = std::max(hi, std::abs(z));
        *out = hi;
    });
}

sc_status sc_stack_export_gray(const sc_subband_stack* stack, int index, double scale,
                               const char* path) {
    if (!stack || !path) return null_arg("stack and path must not be NULL");
    return guarded([&] {
        if (index < 0 || index >= stack->stack.layout.n_sub)
            fail(ErrorCode::argument, "subband index out of range");
        export_gray(amplitude(stack->stack.images[index]), scale, path);
    });
}

/* ---- multilook and statistics ------------------------------------------ */

sc_status sc_estimate_looks(const sc_image* img, int64_t r0, int64_t r1, int64_t c0, int64_t c1,
                            double* out) {
    if (!img || !out) return null_arg("img and out must not be NULL");
    return guarded([&] {
        Plane inten = intensity(img->img);
        if (r0 == -1 && r1 == -1 && c0 == -1 && c1 == -1)
            *out = estimate_enl(inten);
        else
            *out = estimate_enl(inten, r0, r1, c0, c1);
    });
}

/* ---- chromatic coding --------------------------------------------------- */

void sc_coder_defaults(sc_coder_config* cfg) {
    if (!cfg) return;
    CoderConfig d;
    cfg->n_sub = d.n_sub;
    cfg->window_coeff = d.window_coeff;
    cfg->equalize = d.equalize ? 1 : 0;
    cfg->looks_az = d.looks.n_az;
    cfg->looks_rg = d.looks.n_rg;
    cfg->percentile = d.percentile;
    cfg->complex_average = d.complex_average ? 1 : 0;
}

sc_status sc_encode(const sc_image* img, const sc_coder_config* cfg, sc_rgb_image** out,
                    sc_encode_report* report) {
    if (!img || !cfg || !out) return null_arg("img, cfg and out must not be NULL");
    *out = nullptr;
    return guarded([&] {
        CoderConfig c;
        c.n_sub = cfg->n_sub;
        c.window_coeff = cfg->window_coeff;
        c.equalize = cfg->equalize != 0;
        c.looks = {cfg->looks_az, cfg->looks_rg};
        c.percentile = cfg->percentile;
        c.complex_average = cfg->complex_average != 0;
        EncodeReport rep;
        RgbImage rgb = encode_color(img->img, c, &rep);
        if (report) {
            report->valid_len = rep.layout.valid_len;
            report->valid_start = rep.layout.valid_start;
            report->looks_estimate = rep.looks_estimate;
            report->percentile_value = rep.percentile_value;
        }
        *out = new sc_rgb_image{std::move(rgb)};
    });
}

/* ---- synthetic scenes --------------------------------------------------- */

sc_status sc_gen_speckle(int64_t rows, int64_t cols, double sample_rate_hz, double oversample,
                         double sigma, uint64_t seed, sc_image** out) {
    if (!out) return null_arg("out must not be NULL");
    *out = nullptr;
    return guarded([&] {
        SlcMeta meta;
        meta.sample_rate_hz = sample_rate_hz;
        meta.oversample = oversample;
        *out = new sc_image{gen_speckle(rows, cols, sigma, seed, meta)};
    });
}

sc_status sc_inject_nbi(sc_image* img, const sc_nbi_params* p) {
    if (!img || !p) return null_arg("img and params must not be NULL");
    return guarded([&] {
        NbiParams q;
        q.row_begin = p->row_begin;
        q.row_end = p->row_end;
        q.col_begin = p->col_begin;
        q.col_end = p->col_end;
        q.freq_hz = p->freq_hz;
        q.amp = p->amp;
        q.phase_rad = p->phase_rad;
        if (p->amp_per_row)
            q.amp_per_row.assign(p->amp_per_row, p->amp_per_row + (p->row_end - p->row_begin));
        inject_nbi(img->img, q);
    });
}

namespace {

LfmParams lfm_to_core(const sc_lfm_params& p) {
    LfmParams q;
    q.center_row = p.center_row;
    q.center_col = p.center_col;
    q.fc_hz = p.fc_hz;
    q.ki_hz_per_s = p.ki_hz_per_s;
    q.kr_hz_per_s = p.kr_hz_per_s;
    q.ti_s = p.ti_s;
    q.ka_hz_per_s = p.ka_hz_per_s;
    q.ta_s = p.ta_s;
    q.amp = p.amp;
    q.prf_hz = p.prf_hz;
    return q;
}

UnfocusedParams unfocused_to_core(const sc_unfocused_params& p) {
    UnfocusedParams q;
    q.target_row = p.target_row;
    q.target_col = p.target_col;
    q.doppler_shift_hz = p.doppler_shift_hz;
    q.range_m = p.range_m;
    q.velocity_mps = p.velocity_mps;
    q.center_freq_hz = p.center_freq_hz;
    q.amp = p.amp;
    q.prf_hz = p.prf_hz;
    return q;
}

}  // namespace

sc_status sc_inject_lfm(sc_image* img, const sc_lfm_params* p) {
    if (!img || !p) return null_arg("img and params must not be NULL");
    return guarded([&] { inject_lfm(img->img, lfm_to_core(*p)); });
}

sc_status sc_lfm_derived(const sc_lfm_params* p, double* rate, double* duration) {
    if (!p || !rate || !duration) return null_arg("params, rate and duration must not be NULL");
    return guarded([&] {
        LfmParams q = lfm_to_core(*p);
        *rate = lfm_derived_rate(q);
        *duration = lfm_derived_duration(q);
    });
}

sc_status sc_inject_unfocused(sc_image* img, const sc_unfocused_params* p) {
    if (!img || !p) return null_arg("img and params must not be NULL");
    return guarded([&] { inject_unfocused(img->img, unfocused_to_core(*p)); });
}

sc_status sc_unfocused_coupling(const sc_unfocused_params* p, double* out) {
    if (!p || !out) return null_arg("params and out must not be NULL");
    return guarded([&] { *out = unfocused_coupling(unfocused_to_core(*p)); });
}

sc_status sc_synth_scene(const char* scene_path, const char* output_base, int use_seed_override,
                         uint64_t seed_override) {
    if (!scene_path || !output_base) return null_arg("scene_path and output_base must not be NULL");
    return guarded([&] {
        SceneSpec scene = parse_scene(scene_path);
        std::optional<std::uint64_t> seed;
        if (use_seed_override) seed = seed_override;
        SynthResult result = synth_scene(scene, seed);
        write_slc(result.image, output_base);
        std::string truth_path = std::string(output_base) + ".truth";
        std::FILE* f = std::fopen(truth_path.c_str(), "wb");
        if (!f) fail(ErrorCode::io, "cannot open '" + truth_path + "' for writing");
        bool ok = std::fwrite(result.truth.data(), 1, result.truth.size(), f) ==
                  result.truth.size();
        ok = std::fclose(f) == 0 && ok;
        if (!ok) fail(ErrorCode::io, "short write to '" + truth_path + "'");
    });
}

}  // extern "C"
