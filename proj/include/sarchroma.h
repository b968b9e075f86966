/* sarchroma: chromatic subband coding of single-look complex radar imagery.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed here; every fallible call returns sc_status, and
 * sc_last_error() describes the most recent failure on the calling thread.
 */
#ifndef SARCHROMA_H
#define SARCHROMA_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define SARCHROMA_API __attribute__((visibility("default")))
#else
#define SARCHROMA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
    SC_OK = 0,
    SC_ERROR_ARGUMENT = 1, /* invalid value or precondition violation */
    SC_ERROR_FORMAT = 2,   /* file contents do not match the expected format */
    SC_ERROR_IO = 3,       /* operating system refused a read or write */
    SC_ERROR_DOMAIN = 4,   /* the math is undefined for this input */
    SC_ERROR_INTERNAL = 5
} sc_status;

typedef struct sc_image sc_image;               /* complex image + metadata */
typedef struct sc_rgb_image sc_rgb_image;       /* three [0,1] channels */
typedef struct sc_subband_stack sc_subband_stack; /* decomposition result */

/* Library version, "major.minor.patch". */
SARCHROMA_API const char* sc_version(void);

/* Message for the calling thread's most recent error. Never NULL; valid
 * until the next failing call on the same thread. */
SARCHROMA_API const char* sc_last_error(void);

/* Worker threads for row-parallel stages. n <= 0 restores the default
 * (SARCHROMA_THREADS environment variable, else the hardware count).
 * Results never depend on the thread count. */
SARCHROMA_API void sc_set_max_threads(int n);

/* ---- complex images ---------------------------------------------------- */

/* New zero-filled image. rows >= 1, cols >= 2, sample_rate_hz > 0,
 * oversample in [1, 4]. */
SARCHROMA_API sc_status sc_image_create(int64_t rows, int64_t cols, double sample_rate_hz,
                                        double oversample, sc_image** out);
SARCHROMA_API void sc_image_free(sc_image* img);

SARCHROMA_API int64_t sc_image_rows(const sc_image* img);
SARCHROMA_API int64_t sc_image_cols(const sc_image* img);
SARCHROMA_API double sc_image_sample_rate(const sc_image* img);
SARCHROMA_API double sc_image_oversample(const sc_image* img);
SARCHROMA_API sc_status sc_image_set_oversample(sc_image* img, double oversample);

/* Interleaved (re, im) float pairs, row-major; count must be 2*rows*cols. */
SARCHROMA_API sc_status sc_image_set_data(sc_image* img, const float* values, size_t count);
SARCHROMA_API sc_status sc_image_get_data(const sc_image* img, float* values, size_t count);

/* Container on disk: <base>.meta (text) + <base>.cpx (float32 pairs).
 * path may name the base or either member file. */
SARCHROMA_API sc_status sc_image_read(const char* path, sc_image** out);
SARCHROMA_API sc_status sc_image_write(const sc_image* img, const char* path);

/* ---- color images ------------------------------------------------------ */

SARCHROMA_API sc_status sc_rgb_create(int64_t rows, int64_t cols, sc_rgb_image** out);
SARCHROMA_API void sc_rgb_free(sc_rgb_image* img);
SARCHROMA_API int64_t sc_rgb_rows(const sc_rgb_image* img);
SARCHROMA_API int64_t sc_rgb_cols(const sc_rgb_image* img);

/* Interleaved (r, g, b) doubles in [0, 1], row-major; count = 3*rows*cols. */
SARCHROMA_API sc_status sc_rgb_set_data(sc_rgb_image* img, const double* values, size_t count);
SARCHROMA_API sc_status sc_rgb_get_data(const sc_rgb_image* img, double* values, size_t count);

/* 8-bit binary PPM; quantization floor(255*v + 0.5). */
SARCHROMA_API sc_status sc_rgb_export(const sc_rgb_image* img, const char* path);

/* ---- spectral layout and palette --------------------------------------- */

/* Subband placement for an image of the given width: *valid_len bins carry
 * signal starting at centered bin *valid_start, and bounds (n_sub + 1
 * entries, relative to *valid_start) split them into n_sub slices whose
 * widths differ by at most one. bounds may be NULL. */
SARCHROMA_API sc_status sc_plan_layout(int64_t cols, double oversample, int n_sub,
                                       int64_t* valid_len, int64_t* valid_start, int64_t* bounds);

/* Palette of n_sub fully saturated hues k/n_sub. hsv and rgb are each
 * 3*n_sub doubles (may be NULL independently). */
SARCHROMA_API sc_status sc_palette(int n_sub, double* hsv, double* rgb);

/* Hexcone conversions on single triples; h in [0, 1] (1 wraps to 0). */
SARCHROMA_API sc_status sc_hsv_to_rgb(const double hsv[3], double rgb[3]);
SARCHROMA_API sc_status sc_rgb_to_hsv(const double rgb[3], double hsv[3]);

/* ---- subband decomposition --------------------------------------------- */

/* Splits the range spectrum of each azimuth line into n_sub adjacent
 * subbands, each returned as a full-size complex image with its bins kept in
 * place; their sum reproduces the valid-band-filtered input. equalize != 0
 * first divides the valid band by the raised-cosine window
 * a - (1-a)*cos(2*pi*i/valid_len) (window_coeff a must then be > 0.5). */
SARCHROMA_API sc_status sc_decompose(const sc_image* img, int n_sub, double window_coeff,
                                     int equalize, sc_subband_stack** out);
SARCHROMA_API void sc_stack_free(sc_subband_stack* stack);
SARCHROMA_API int sc_stack_count(const sc_subband_stack* stack);
SARCHROMA_API sc_status sc_stack_bounds(const sc_subband_stack* stack, int64_t* bounds);

/* Amplitude plane of one subband; count must be rows*cols. */
SARCHROMA_API sc_status sc_stack_amplitude(const sc_subband_stack* stack, int index, double* out,
                                           size_t count);
/* Largest amplitude across all subbands (grayscale export scale). */
SARCHROMA_API sc_status sc_stack_max_amplitude(const sc_subband_stack* stack, double* out);
/* 8-bit PGM of one subband's amplitude over scale (values clamp to [0,1]). */
SARCHROMA_API sc_status sc_stack_export_gray(const sc_subband_stack* stack, int index,
                                             double scale, const char* path);

/* ---- multilook and statistics ------------------------------------------ */

/* Equivalent number of looks (mean^2/variance) of the image's intensity over
 * the half-open region [r0, r1) x [c0, c1); pass all -1 for the full image.
 * Constant regions are a domain error. */
SARCHROMA_API sc_status sc_estimate_looks(const sc_image* img, int64_t r0, int64_t r1, int64_t c0,
                                          int64_t c1, double* out);

/* ---- chromatic coding --------------------------------------------------- */

typedef struct sc_coder_config {
    int n_sub;           /* subband count, >= 2 */
    double window_coeff; /* equalization 'a' in [0.5, 1]; > 0.5 when equalize */
    int equalize;        /* nonzero: divide out the processor's range taper */
    int looks_az;        /* multilook window rows, >= 1 */
    int looks_rg;        /* multilook window cols, >= 1 */
    double percentile;   /* brightness clip percentile in (0, 100] */
    int complex_average; /* nonzero: multilook coherently before amplitude */
} sc_coder_config;

/* Recommended settings: 9 subbands, a = 0.75, equalize on, 9x9 looks,
 * 95th percentile, incoherent averaging. */
SARCHROMA_API void sc_coder_defaults(sc_coder_config* cfg);

typedef struct sc_encode_report {
    int64_t valid_len;
    int64_t valid_start;
    double looks_estimate;   /* NaN when the multilooked plane is constant */
    double percentile_value; /* brightness clip point actually used */
} sc_encode_report;

/* Full pipeline: decompose, per-subband amplitude multilook, per-pixel
 * normalization, palette composite, multilooked-amplitude brightness.
 * report may be NULL. */
SARCHROMA_API sc_status sc_encode(const sc_image* img, const sc_coder_config* cfg,
                                  sc_rgb_image** out, sc_encode_report* report);

/* ---- synthetic scenes --------------------------------------------------- */

/* Fully developed speckle, E|z|^2 = sigma, reproducible for a given seed. */
SARCHROMA_API sc_status sc_gen_speckle(int64_t rows, int64_t cols, double sample_rate_hz,
                                       double oversample, double sigma, uint64_t seed,
                                       sc_image** out);

typedef struct sc_nbi_params {
    int64_t row_begin, row_end; /* half-open spans */
    int64_t col_begin, col_end;
    double freq_hz;   /* offset from band center, |freq| <= sample_rate/2 */
    double amp;       /* 0 leaves the image bit-exact */
    double phase_rad;
    const double* amp_per_row; /* optional, row_end - row_begin gains */
} sc_nbi_params;
SARCHROMA_API sc_status sc_inject_nbi(sc_image* img, const sc_nbi_params* p);

typedef struct sc_lfm_params {
    int64_t center_row, center_col;
    double fc_hz;       /* residual center frequency */
    double ki_hz_per_s; /* interferer FM rate, != kr */
    double kr_hz_per_s; /* reference FM rate, > 0 */
    double ti_s;        /* interferer pulse duration, > 0 */
    double ka_hz_per_s; /* azimuth FM rate */
    double ta_s;        /* azimuth aperture, > 0 */
    double amp;
    double prf_hz;
} sc_lfm_params;
SARCHROMA_API sc_status sc_inject_lfm(sc_image* img, const sc_lfm_params* p);
/* Post-compression chirp rate kr*ki/(ki - kr) and duration ti*|ki - kr|/kr. */
SARCHROMA_API sc_status sc_lfm_derived(const sc_lfm_params* p, double* rate, double* duration);

typedef struct sc_unfocused_params {
    int64_t target_row, target_col;
    double doppler_shift_hz; /* mismatch driving the defocus */
    double range_m;          /* closest-approach range, > 0 */
    double velocity_mps;     /* platform speed, > 0 */
    double center_freq_hz;   /* carrier, > 0 */
    double amp;
    double prf_hz;
} sc_unfocused_params;
SARCHROMA_API sc_status sc_inject_unfocused(sc_image* img, const sc_unfocused_params* p);
/* Azimuth/range spectral coupling constant (s^2); domain error when the
 * mismatch is too large for the model. */
SARCHROMA_API sc_status sc_unfocused_coupling(const sc_unfocused_params* p, double* out);

/* Renders a scene description file to <output_base>.meta/.cpx plus a
 * <output_base>.truth sidecar recording each event's expected signature.
 * use_seed_override != 0 replaces the scene's seed with seed_override. */
SARCHROMA_API sc_status sc_synth_scene(const char* scene_path, const char* output_base,
                                       int use_seed_override, uint64_t seed_override);

#ifdef __cplusplus
}
#endif

#endif /* SARCHROMA_H */
