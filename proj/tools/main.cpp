// Command-line front end for the sarchroma shared library: renders complex
// radar images to subband color composites, synthesizes test scenes, and
// inspects containers. Every run is reproducible; `--manifest` records a run
// to a JSON file and replays it when the file already exists.

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sarchroma.h"

using nlohmann::json;

namespace {

struct Fail {
    int code;
};

int exit_code(sc_status s) {
    switch (s) {
        case SC_OK: return 0;
        case SC_ERROR_ARGUMENT: return 2;
        case SC_ERROR_FORMAT: return 3;
        case SC_ERROR_DOMAIN: return 4;
        case SC_ERROR_IO: return 5;
        default: return 1;
    }
}

void check(sc_status s) {
    if (s != SC_OK) {
        std::cerr << "error: " << sc_last_error() << "\n";
        throw Fail{exit_code(s)};
    }
}

[[noreturn]] void usage_error(const std::string& what) {
    std::cerr << "error: " << what << "\n";
    throw Fail{2};
}

[[noreturn]] void manifest_error(const std::string& what) {
    std::cerr << "error: " << what << "\n";
    throw Fail{3};
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct ImageHandle {
    sc_image* p = nullptr;
    ~ImageHandle() { sc_image_free(p); }
};

struct RgbHandle {
    sc_rgb_image* p = nullptr;
    ~RgbHandle() { sc_rgb_free(p); }
};

struct StackHandle {
    sc_subband_stack* p = nullptr;
    ~StackHandle() { sc_stack_free(p); }
};

json load_manifest(const std::string& path, const std::string& command) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open manifest '" << path << "'\n";
        throw Fail{5};
    }
    json m;
    try {
        m = json::parse(in);
        if (m.at("tool").get<std::string>() != "sarchroma")
            manifest_error("manifest '" + path + "' was not written by this tool");
        if (m.at("command").get<std::string>() != command)
            manifest_error("manifest '" + path + "' records a '" +
                           m["command"].get<std::string>() + "' run, not '" + command + "'");
        m.at("version");
    } catch (const json::exception& e) {
        manifest_error("manifest '" + path + "' is malformed: " + e.what());
    }
    return m;
}

void save_manifest(const std::string& path, const json& m) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write manifest '" << path << "'\n";
        throw Fail{5};
    }
    out << m.dump(2) << "\n";
}

struct EncodeArgs {
    std::string input, output, subband_dir, manifest, looks = "9x9";
    sc_coder_config cfg{};
    bool equalize = true;
    bool complex_average = false;
    double oversample_override = 0.0;
};

void parse_looks(const std::string& text, sc_coder_config& cfg) {
    int az = 0, rg = 0;
    char extra;
    if (std::sscanf(text.c_str(), "%dx%d%c", &az, &rg, &extra) != 2 || az < 1 || rg < 1)
        usage_error("--looks needs the form AZxRG, e.g. 9x9");
    cfg.looks_az = az;
    cfg.looks_rg = rg;
}

void export_subband_dir(sc_image* img, const sc_coder_config& cfg, const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "error: cannot create directory '" << dir << "'\n";
        throw Fail{5};
    }
    StackHandle stack;
    check(sc_decompose(img, cfg.n_sub, cfg.window_coeff, cfg.equalize, &stack.p));
    double scale = 0.0;
    check(sc_stack_max_amplitude(stack.p, &scale));
    if (scale <= 0.0) scale = 1.0;
    for (int k = 0; k < cfg.n_sub; ++k) {
        std::string path = dir + "/subband_" + std::to_string(k) + ".pgm";
        check(sc_stack_export_gray(stack.p, k, scale, path.c_str()));
    }
    std::cout << "wrote_subbands: " << dir << " (" << cfg.n_sub << " files)\n";
}

int cmd_encode(CLI::App* cmd, EncodeArgs& a) {
    bool replay = !a.manifest.empty() && std::filesystem::exists(a.manifest);
    if (replay) {
        for (const char* opt : {"input", "--output", "--nsub", "--window-coeff", "--equalize",
                                "--looks", "--percentile", "--complex-average", "--oversample",
                                "--subbands"})
            if (cmd->count(opt) > 0)
                usage_error("manifest replay takes no options besides --manifest");
        json m = load_manifest(a.manifest, "encode");
        try {
            a.input = m.at("input").get<std::string>();
            a.output = m.at("output").get<std::string>();
            a.subband_dir = m.at("subband_dir").is_null() ? "" : m["subband_dir"].get<std::string>();
            const json& c = m.at("config");
            a.cfg.n_sub = c.at("n_sub").get<int>();
            a.cfg.window_coeff = c.at("window_coeff").get<double>();
            a.cfg.equalize = c.at("equalize").get<bool>() ? 1 : 0;
            a.cfg.looks_az = c.at("looks_az").get<int>();
            a.cfg.looks_rg = c.at("looks_rg").get<int>();
            a.cfg.percentile = c.at("percentile").get<double>();
            a.cfg.complex_average = c.at("complex_average").get<bool>() ? 1 : 0;
            a.oversample_override =
                m.at("oversample_override").is_null() ? 0.0 : m["oversample_override"].get<double>();
        } catch (const json::exception& e) {
            manifest_error("manifest '" + a.manifest + "' is malformed: " + e.what());
        }
    } else {
        if (a.input.empty()) usage_error("encode needs an input container");
        if (a.output.empty()) usage_error("encode needs --output");
        parse_looks(a.looks, a.cfg);
        a.cfg.equalize = a.equalize ? 1 : 0;
        a.cfg.complex_average = a.complex_average ? 1 : 0;
    }

    ImageHandle img;
    check(sc_image_read(a.input.c_str(), &img.p));
    if (a.oversample_override > 0.0)
        check(sc_image_set_oversample(img.p, a.oversample_override));

    RgbHandle rgb;
    sc_encode_report report{};
    check(sc_encode(img.p, &a.cfg, &rgb.p, &report));
    check(sc_rgb_export(rgb.p, a.output.c_str()));

    std::vector<int64_t> bounds(a.cfg.n_sub + 1);
    int64_t valid_len = 0, valid_start = 0;
    check(sc_plan_layout(sc_image_cols(img.p), sc_image_oversample(img.p), a.cfg.n_sub,
                         &valid_len, &valid_start, bounds.data()));

    std::cout << "input: " << a.input << "\n";
    std::cout << "size: " << sc_image_rows(img.p) << " x " << sc_image_cols(img.p) << "\n";
    std::cout << "sample_rate_hz: " << fmt(sc_image_sample_rate(img.p)) << "\n";
    std::cout << "oversample: " << fmt(sc_image_oversample(img.p)) << "\n";
    std::cout << "config: nsub=" << a.cfg.n_sub << " window_coeff=" << fmt(a.cfg.window_coeff)
              << " equalize=" << (a.cfg.equalize ? "on" : "off") << " looks=" << a.cfg.looks_az
              << "x" << a.cfg.looks_rg << " percentile=" << fmt(a.cfg.percentile)
              << " complex_average=" << (a.cfg.complex_average ? "on" : "off") << "\n";
    std::cout << "valid_len: " << valid_len << "\n";
    std::cout << "valid_start: " << valid_start << "\n";
    std::cout << "bounds:";
    for (int64_t b : bounds) std::cout << " " << b;
    std::cout << "\n";
    if (report.looks_estimate == report.looks_estimate)
        std::cout << "looks_estimate: " << fmt(report.looks_estimate) << "\n";
    else
        std::cout << "looks_estimate: n/a\n";
    std::cout << "percentile_value: " << fmt(report.percentile_value) << "\n";
    std::cout << "wrote: " << a.output << "\n";

    if (!a.subband_dir.empty()) export_subband_dir(img.p, a.cfg, a.subband_dir);

    if (!a.manifest.empty() && !replay) {
        json m;
        m["tool"] = "sarchroma";
        m["version"] = sc_version();
        m["command"] = "encode";
        m["input"] = a.input;
        m["output"] = a.output;
        m["subband_dir"] = a.subband_dir.empty() ? json(nullptr) : json(a.subband_dir);
        m["oversample_override"] =
            a.oversample_override > 0.0 ? json(a.oversample_override) : json(nullptr);
        m["config"] = {{"n_sub", a.cfg.n_sub},
                       {"window_coeff", a.cfg.window_coeff},
                       {"equalize", a.cfg.equalize != 0},
                       {"looks_az", a.cfg.looks_az},
                       {"looks_rg", a.cfg.looks_rg},
                       {"percentile", a.cfg.percentile},
                       {"complex_average", a.cfg.complex_average != 0}};
        save_manifest(a.manifest, m);
        std::cout << "manifest: " << a.manifest << "\n";
    }
    return 0;
}

struct SynthArgs {
    std::string scene, output, manifest;
    std::uint64_t seed = 0;
    bool has_seed = false;
};

int cmd_synth(CLI::App* cmd, SynthArgs& a) {
    bool replay = !a.manifest.empty() && std::filesystem::exists(a.manifest);
    if (replay) {
        for (const char* opt : {"scene", "--output", "--seed"})
            if (cmd->count(opt) > 0)
                usage_error("manifest replay takes no options besides --manifest");
        json m = load_manifest(a.manifest, "synth");
        try {
            a.scene = m.at("scene").get<std::string>();
            a.output = m.at("output").get<std::string>();
            a.has_seed = !m.at("seed").is_null();
            if (a.has_seed) a.seed = m["seed"].get<std::uint64_t>();
        } catch (const json::exception& e) {
            manifest_error("manifest '" + a.manifest + "' is malformed: " + e.what());
        }
    } else {
        if (a.scene.empty()) usage_error("synth needs a scene file");
        if (a.output.empty()) usage_error("synth needs --output");
        a.has_seed = cmd->count("--seed") > 0;
    }

    check(sc_synth_scene(a.scene.c_str(), a.output.c_str(), a.has_seed ? 1 : 0, a.seed));
    std::cout << "scene: " << a.scene << "\n";
    std::cout << "wrote: " << a.output << ".meta " << a.output << ".cpx " << a.output
              << ".truth\n";
    std::ifstream truth(a.output + ".truth");
    std::string line;
    while (std::getline(truth, line)) std::cout << "truth: " << line << "\n";

    if (!a.manifest.empty() && !replay) {
        json m;
        m["tool"] = "sarchroma";
        m["version"] = sc_version();
        m["command"] = "synth";
        m["scene"] = a.scene;
        m["output"] = a.output;
        m["seed"] = a.has_seed ? json(a.seed) : json(nullptr);
        save_manifest(a.manifest, m);
        std::cout << "manifest: " << a.manifest << "\n";
    }
    return 0;
}

int cmd_palette(int n_sub, const std::string& swatch) {
    std::vector<double> hsv(3 * n_sub), rgb(3 * n_sub);
    check(sc_palette(n_sub, hsv.data(), rgb.data()));
    std::cout << "palette: " << n_sub << " entries\n";
    double sums[3] = {0.0, 0.0, 0.0};
    for (int k = 0; k < n_sub; ++k) {
        std::cout << "entry " << k << ": hue=" << fmt(hsv[3 * k]) << " rgb=" << fmt(rgb[3 * k])
                  << " " << fmt(rgb[3 * k + 1]) << " " << fmt(rgb[3 * k + 2]) << "\n";
        for (int ch = 0; ch < 3; ++ch) sums[ch] += rgb[3 * k + ch];
    }
    std::cout << "channel_sums: r=" << fmt(sums[0]) << " g=" << fmt(sums[1])
              << " b=" << fmt(sums[2]) << "\n";

    if (!swatch.empty()) {
        const int64_t cell = 32;
        RgbHandle img;
        check(sc_rgb_create(cell, cell * n_sub, &img.p));
        std::vector<double> px(static_cast<std::size_t>(cell) * cell * n_sub * 3);
        for (int64_t r = 0; r < cell; ++r)
            for (int64_t c = 0; c < cell * n_sub; ++c) {
                int k = static_cast<int>(c / cell);
                std::size_t i = static_cast<std::size_t>(r * cell * n_sub + c) * 3;
                px[i] = rgb[3 * k];
                px[i + 1] = rgb[3 * k + 1];
                px[i + 2] = rgb[3 * k + 2];
            }
        check(sc_rgb_set_data(img.p, px.data(), px.size()));
        check(sc_rgb_export(img.p, swatch.c_str()));
        std::cout << "wrote: " << swatch << "\n";
    }
    return 0;
}

int cmd_enl(const std::string& input, const std::string& region) {
    ImageHandle img;
    check(sc_image_read(input.c_str(), &img.p));
    int64_t r0 = -1, r1 = -1, c0 = -1, c1 = -1;
    if (!region.empty()) {
        if (std::sscanf(region.c_str(), "%" SCNd64 ":%" SCNd64 ":%" SCNd64 ":%" SCNd64, &r0, &r1,
                        &c0, &c1) != 4)
            usage_error("--region needs the form r0:r1:c0:c1");
    }
    double enl = 0.0;
    check(sc_estimate_looks(img.p, r0, r1, c0, c1, &enl));
    if (region.empty()) {
        std::cout << "region: full (" << sc_image_rows(img.p) << " x " << sc_image_cols(img.p)
                  << ")\n";
    } else {
        std::cout << "region: " << r0 << ":" << r1 << ":" << c0 << ":" << c1 << "\n";
    }
    std::cout << "looks_estimate: " << fmt(enl) << "\n";
    return 0;
}

int cmd_subbands(const std::string& input, const std::string& dir, int n_sub, double a,
                 bool equalize) {
    ImageHandle img;
    check(sc_image_read(input.c_str(), &img.p));
    sc_coder_config cfg;
    sc_coder_defaults(&cfg);
    cfg.n_sub = n_sub;
    cfg.window_coeff = a;
    cfg.equalize = equalize ? 1 : 0;

    std::vector<int64_t> bounds(n_sub + 1);
    int64_t valid_len = 0, valid_start = 0;
    check(sc_plan_layout(sc_image_cols(img.p), sc_image_oversample(img.p), n_sub, &valid_len,
                         &valid_start, bounds.data()));
    std::cout << "valid_len: " << valid_len << "\n";
    std::cout << "valid_start: " << valid_start << "\n";
    std::cout << "bounds:";
    for (int64_t b : bounds) std::cout << " " << b;
    std::cout << "\n";
    export_subband_dir(img.p, cfg, dir);
    return 0;
}

int cmd_info(const std::string& input) {
    ImageHandle img;
    check(sc_image_read(input.c_str(), &img.p));
    int64_t rows = sc_image_rows(img.p), cols = sc_image_cols(img.p);
    std::cout << "size: " << rows << " x " << cols << "\n";
    std::cout << "sample_rate_hz: " << fmt(sc_image_sample_rate(img.p)) << "\n";
    std::cout << "oversample: " << fmt(sc_image_oversample(img.p)) << "\n";

    std::vector<float> data(static_cast<std::size_t>(rows) * cols * 2);
    check(sc_image_get_data(img.p, data.data(), data.size()));
    double lo = 0.0, hi = 0.0, sum = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < data.size(); i += 2) {
        double re = data[i], im = data[i + 1];
        double amp = std::sqrt(re * re + im * im);
        if (first) {
            lo = hi = amp;
            first = false;
        } else {
            lo = std::min(lo, amp);
            hi = std::max(hi, amp);
        }
        sum += amp;
    }
    std::cout << "amplitude_min: " << fmt(lo) << "\n";
    std::cout << "amplitude_mean: " << fmt(sum / (static_cast<double>(rows) * cols)) << "\n";
    std::cout << "amplitude_max: " << fmt(hi) << "\n";

    int64_t valid_len = 0, valid_start = 0;
    if (sc_plan_layout(cols, sc_image_oversample(img.p), 9, &valid_len, &valid_start, nullptr) ==
        SC_OK) {
        std::cout << "valid_len: " << valid_len << "\n";
        std::cout << "valid_start: " << valid_start << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subband color coding for single-look complex radar imagery"};
    app.set_version_flag("--version", std::string(sc_version()));
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = default)");

    EncodeArgs enc_args;
    sc_coder_defaults(&enc_args.cfg);
    CLI::App* enc = app.add_subcommand("encode", "render a complex image to a color composite");
    enc->add_option("input", enc_args.input, "input container (base, .meta or .cpx path)");
    enc->add_option("-o,--output", enc_args.output, "output PPM path");
    enc->add_option("--nsub", enc_args.cfg.n_sub, "subband count")->capture_default_str();
    enc->add_option("--window-coeff", enc_args.cfg.window_coeff, "equalization coefficient")
        ->capture_default_str();
    enc->add_flag("--equalize,!--no-equalize", enc_args.equalize,
                  "divide out the processor's range taper (default on)");
    enc->add_option("--looks", enc_args.looks, "multilook window, AZxRG")->capture_default_str();
    enc->add_option("--percentile", enc_args.cfg.percentile, "brightness clip percentile")
        ->capture_default_str();
    enc->add_flag("--complex-average", enc_args.complex_average,
                  "multilook coherently before taking amplitudes");
    enc->add_option("--oversample", enc_args.oversample_override,
                    "override the container's oversample ratio");
    enc->add_option("--subbands", enc_args.subband_dir, "also write subband PGMs into this directory");
    enc->add_option("--manifest", enc_args.manifest,
                    "replay this manifest if it exists, else record the run to it");

    SynthArgs syn_args;
    CLI::App* syn = app.add_subcommand("synth", "render a scene description to a container");
    syn->add_option("scene", syn_args.scene, "scene description file");
    syn->add_option("-o,--output", syn_args.output, "output container base path");
    syn->add_option("--seed", syn_args.seed, "override the scene's speckle seed");
    syn->add_option("--manifest", syn_args.manifest,
                    "replay this manifest if it exists, else record the run to it");

    int pal_nsub = 9;
    std::string pal_swatch;
    CLI::App* pal = app.add_subcommand("palette", "print the subband palette");
    pal->add_option("--nsub", pal_nsub, "subband count")->capture_default_str();
    pal->add_option("--swatch", pal_swatch, "also write a PPM swatch strip");

    std::string enl_input, enl_region;
    CLI::App* enl = app.add_subcommand("enl", "estimate the looks of an intensity image");
    enl->add_option("input", enl_input, "input container")->required();
    enl->add_option("--region", enl_region, "half-open region r0:r1:c0:c1");

    std::string sub_input, sub_dir;
    int sub_nsub = 9;
    double sub_a = 0.75;
    bool sub_equalize = true;
    CLI::App* sub = app.add_subcommand("subbands", "write each subband amplitude as a PGM");
    sub->add_option("input", sub_input, "input container")->required();
    sub->add_option("-o,--output", sub_dir, "output directory")->required();
    sub->add_option("--nsub", sub_nsub, "subband count")->capture_default_str();
    sub->add_option("--window-coeff", sub_a, "equalization coefficient")->capture_default_str();
    sub->add_flag("--equalize,!--no-equalize", sub_equalize,
                  "divide out the processor's range taper (default on)");

    std::string info_input;
    CLI::App* info = app.add_subcommand("info", "print container metadata and amplitude stats");
    info->add_option("input", info_input, "input container")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (threads > 0) sc_set_max_threads(threads);

    try {
        if (enc->parsed()) return cmd_encode(enc, enc_args);
        if (syn->parsed()) return cmd_synth(syn, syn_args);
        if (pal->parsed()) return cmd_palette(pal_nsub, pal_swatch);
        if (enl->parsed()) return cmd_enl(enl_input, enl_region);
        if (sub->parsed()) return cmd_subbands(sub_input, sub_dir, sub_nsub, sub_a, sub_equalize);
        if (info->parsed()) return cmd_info(info_input);
    } catch (const Fail& f) {
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
