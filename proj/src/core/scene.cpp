#include "core/scene.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <set>

#include "core/error.hpp"

namespace sarchroma {

namespace {

struct RawSection {
    std::string name;
    int line = 0;  // line of the [header]
    std::map<std::string, std::pair<std::string, int>> kv;  // key -> (value, line)
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(const std::string& path, int line, const std::string& what) {
    fail(ErrorCode::format, path + ":" + std::to_string(line) + ": " + what);
}

std::vector<RawSection> read_sections(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) fail(ErrorCode::io, "cannot open '" + path + "' for reading");
    std::string text;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
    std::fclose(f);

    std::vector<RawSection> sections;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail_at(path, line_no, "unterminated section header");
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name != "scene" && name != "nbi" && name != "lfm" && name != "unfocused")
                fail_at(path, line_no, "unknown section '" + name + "'");
            sections.push_back({name, line_no, {}});
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail_at(path, line_no, "expected key = value");
        if (sections.empty()) fail_at(path, line_no, "key outside any section");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail_at(path, line_no, "empty key");
        auto& kv = sections.back().kv;
        if (kv.count(key)) fail_at(path, line_no, "duplicate key '" + key + "'");
        kv[key] = {value, line_no};
    }
    if (sections.empty() || sections[0].name != "scene")
        fail(ErrorCode::format, path + ": first section must be [scene]");
    for (std::size_t i = 1; i < sections.size(); ++i)
        if (sections[i].name == "scene") fail_at(path, sections[i].line, "only one [scene] section");
    return sections;
}

class SectionReader {
public:
    SectionReader(const std::string& path, const RawSection& s) : path_(path), s_(s) {}

    double number(const std::string& key) {
        auto [value, line] = require(key);
        errno = 0;
        char* end = nullptr;
        double v = std::strtod(value.c_str(), &end);
        if (end == value.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
            fail_at(path_, line, "key '" + key + "' needs a number, got '" + value + "'");
        return v;
    }

    double number_or(const std::string& key, double fallback) {
        return s_.kv.count(key) ? number(key) : fallback;
    }

    std::int64_t integer(const std::string& key) {
        auto [value, line] = require(key);
        return parse_int(value, line, key);
    }

    std::int64_t integer_or(const std::string& key, std::int64_t fallback) {
        return s_.kv.count(key) ? integer(key) : fallback;
    }

    std::uint64_t uinteger_or(const std::string& key, std::uint64_t fallback) {
        if (!s_.kv.count(key)) return fallback;
        auto [value, line] = require(key);
        errno = 0;
        char* end = nullptr;
        unsigned long long v = std::strtoull(value.c_str(), &end, 10);
        if (end == value.c_str() || *end != '\0' || errno == ERANGE ||
            value.find('-') != std::string::npos)
            fail_at(path_, line, "key '" + key + "' needs a nonnegative integer, got '" + value + "'");
        return v;
    }

    std::string text_or(const std::string& key, const std::string& fallback) {
        return s_.kv.count(key) ? s_.kv.at(key).first : fallback;
    }

    // "begin:end", half-open.
    std::pair<std::int64_t, std::int64_t> span(const std::string& key) {
        auto [value, line] = require(key);
        std::size_t colon = value.find(':');
        if (colon == std::string::npos)
            fail_at(path_, line, "key '" + key + "' needs a span 'begin:end'");
        std::int64_t b = parse_int(trim(value.substr(0, colon)), line, key);
        std::int64_t e = parse_int(trim(value.substr(colon + 1)), line, key);
        if (b >= e) fail_at(path_, line, "span '" + key + "' is empty");
        return {b, e};
    }

    void finish(const std::set<std::string>& known) {
        for (const auto& [key, vl] : s_.kv)
            if (!known.count(key)) fail_at(path_, vl.second, "unknown key '" + key + "'");
    }

private:
    std::pair<std::string, int> require(const std::string& key) {
        auto it = s_.kv.find(key);
        if (it == s_.kv.end())
            fail_at(path_, s_.line, "section [" + s_.name + "] is missing key '" + key + "'");
        return it->second;
    }

    std::int64_t parse_int(const std::string& value, int line, const std::string& key) {
        errno = 0;
        char* end = nullptr;
        long long v = std::strtoll(value.c_str(), &end, 10);
        if (end == value.c_str() || *end != '\0' || errno == ERANGE)
            fail_at(path_, line, "key '" + key + "' needs an integer, got '" + value + "'");
        return v;
    }

    const std::string& path_;
    const RawSection& s_;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

SceneSpec parse_scene(const std::string& path) {
    std::vector<RawSection> sections = read_sections(path);
    SceneSpec scene;
    {
        SectionReader r(path, sections[0]);
        scene.rows = r.integer("rows");
        scene.cols = r.integer("cols");
        scene.meta.sample_rate_hz = r.number("sample_rate_hz");
        scene.meta.oversample = r.number("oversample");
        scene.prf_hz = r.number("prf_hz");
        scene.speckle_sigma = r.number_or("speckle_sigma", 1.0);
        scene.seed = r.uinteger_or("seed", 0);
        scene.nsub_hint = static_cast<int>(r.integer_or("nsub_hint", 9));
        scene.meta.description = r.text_or("description", "");
        r.finish({"rows", "cols", "sample_rate_hz", "oversample", "prf_hz", "speckle_sigma",
                  "seed", "nsub_hint", "description"});
        if (scene.rows < 1 || scene.cols < 2)
            fail_at(path, sections[0].line, "scene needs rows >= 1 and cols >= 2");
        if (!(scene.speckle_sigma >= 0.0))
            fail_at(path, sections[0].line, "speckle_sigma must be >= 0");
        if (!(scene.prf_hz > 0.0)) fail_at(path, sections[0].line, "prf_hz must be > 0");
        if (scene.nsub_hint < 2) fail_at(path, sections[0].line, "nsub_hint must be >= 2");
    }

    for (std::size_t i = 1; i < sections.size(); ++i) {
        SectionReader r(path, sections[i]);
        if (sections[i].name == "nbi") {
            NbiParams p;
            auto [rb, re] = r.span("rows");
            auto [cb, ce] = r.span("cols");
            p.row_begin = rb;
            p.row_end = re;
            p.col_begin = cb;
            p.col_end = ce;
            p.freq_hz = r.number("freq_hz");
            p.amp = r.number("amp");
            p.phase_rad = r.number_or("phase_rad", 0.0);
            r.finish({"rows", "cols", "freq_hz", "amp", "phase_rad"});
            scene.events.push_back({p});
        } else if (sections[i].name == "lfm") {
            LfmParams p;
            p.center_row = r.integer("center_row");
            p.center_col = r.integer("center_col");
            p.fc_hz = r.number("fc_hz");
            p.ki_hz_per_s = r.number("ki_hz_per_s");
            p.kr_hz_per_s = r.number("kr_hz_per_s");
            p.ti_s = r.number("ti_s");
            p.ka_hz_per_s = r.number("ka_hz_per_s");
            p.ta_s = r.number("ta_s");
            p.amp = r.number("amp");
            p.prf_hz = scene.prf_hz;
            r.finish({"center_row", "center_col", "fc_hz", "ki_hz_per_s", "kr_hz_per_s", "ti_s",
                      "ka_hz_per_s", "ta_s", "amp"});
            scene.events.push_back({p});
        } else {
            UnfocusedParams p;
            p.target_row = r.integer("target_row");
            p.target_col = r.integer("target_col");
            p.doppler_shift_hz = r.number("doppler_shift_hz");
            p.range_m = r.number("range_m");
            p.velocity_mps = r.number("velocity_mps");
            p.center_freq_hz = r.number("center_freq_hz");
            p.amp = r.number("amp");
            p.prf_hz = scene.prf_hz;
            r.finish({"target_row", "target_col", "doppler_shift_hz", "range_m", "velocity_mps",
                      "center_freq_hz", "amp"});
            scene.events.push_back({p});
        }
    }
    return scene;
}

int subband_of_frequency(const SubbandLayout& layout, std::int64_t cols, double fs,
                         double freq_hz) {
    // Centered bin holding freq_hz: DC sits at floor(cols/2).
    double bin = static_cast<double>(cols / 2) + freq_hz * static_cast<double>(cols) / fs;
    double rel = bin - static_cast<double>(layout.valid_start);
    for (int k = 0; k < layout.n_sub; ++k)
        if (rel >= static_cast<double>(layout.bounds[k]) &&
            rel < static_cast<double>(layout.bounds[k + 1]))
            return k;
    return -1;
}

SynthResult synth_scene(const SceneSpec& scene, std::optional<std::uint64_t> seed_override) {
    std::uint64_t seed = seed_override.value_or(scene.seed);
    SynthResult out;
    if (scene.speckle_sigma > 0.0) {
        out.image = gen_speckle(scene.rows, scene.cols, scene.speckle_sigma, seed, scene.meta);
    } else {
        out.image = SlcImage(scene.rows, scene.cols, scene.meta);
        validate(out.image);
    }

    SubbandLayout layout = plan_layout(scene.cols, scene.meta.oversample, scene.nsub_hint);
    double fs = scene.meta.sample_rate_hz;

    out.truth = "scene rows=" + std::to_string(scene.rows) + " cols=" + std::to_string(scene.cols) +
                " sample_rate_hz=" + fmt(fs) + " oversample=" + fmt(scene.meta.oversample) +
                " prf_hz=" + fmt(scene.prf_hz) + " speckle_sigma=" + fmt(scene.speckle_sigma) +
                " seed=" + std::to_string(seed) + " nsub=" + std::to_string(scene.nsub_hint) + "\n";

    for (const SceneEvent& ev : scene.events) {
        if (const NbiParams* p = std::get_if<NbiParams>(&ev.params)) {
            inject_nbi(out.image, *p);
            out.truth += "event=nbi rows=" + std::to_string(p->row_begin) + ":" +
                         std::to_string(p->row_end) + " cols=" + std::to_string(p->col_begin) +
                         ":" + std::to_string(p->col_end) + " freq_hz=" + fmt(p->freq_hz) +
                         " amp=" + fmt(p->amp) + " predicted_subband=" +
                         std::to_string(subband_of_frequency(layout, scene.cols, fs, p->freq_hz)) +
                         "\n";
        } else if (const LfmParams* p = std::get_if<LfmParams>(&ev.params)) {
            inject_lfm(out.image, *p);
            double rate = lfm_derived_rate(*p);
            double dur = lfm_derived_duration(*p);
            double f_lo = p->fc_hz - std::abs(rate) * dur / 2.0;
            double f_hi = p->fc_hz + std::abs(rate) * dur / 2.0;
            int sweep_from = subband_of_frequency(layout, scene.cols, fs, rate >= 0 ? f_lo : f_hi);
            int sweep_to = subband_of_frequency(layout, scene.cols, fs, rate >= 0 ? f_hi : f_lo);
            out.truth += "event=lfm center=" + std::to_string(p->center_row) + "," +
                         std::to_string(p->center_col) + " derived_rate_hz_per_s=" + fmt(rate) +
                         " derived_duration_s=" + fmt(dur) +
                         " sweep_start_subband=" + std::to_string(sweep_from) +
                         " sweep_end_subband=" + std::to_string(sweep_to) + " amp=" + fmt(p->amp) +
                         "\n";
        } else {
            const UnfocusedParams& u = std::get<UnfocusedParams>(ev.params);
            inject_unfocused(out.image, u);
            double alpha = unfocused_coupling(u);
            // The echo's ridge in the (row, range-frequency) view has slope
            // d(row)/d(f_rg) = -alpha*prf/(2*pi) rows/Hz; across the full
            // sampled band that smears alpha*fs*prf/(2*pi) rows of azimuth.
            double rows_per_hz = -alpha * u.prf_hz / (2.0 * std::numbers::pi);
            double smear = std::abs(alpha) * fs * u.prf_hz / (2.0 * std::numbers::pi);
            out.truth += "event=unfocused target=" + std::to_string(u.target_row) + "," +
                         std::to_string(u.target_col) +
                         " doppler_shift_hz=" + fmt(u.doppler_shift_hz) +
                         " coupling_s2=" + fmt(alpha) + " ridge_rows_per_hz=" + fmt(rows_per_hz) +
                         " smear_rows=" + fmt(smear) + " amp=" + fmt(u.amp) + "\n";
        }
    }
    return out;
}

}  // namespace sarchroma
