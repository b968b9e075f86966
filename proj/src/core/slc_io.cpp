#include "core/slc_io.hpp"

#include <bit>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <vector>

#include "core/error.hpp"

static_assert(std::endian::native == std::endian::little,
              "container payload is little-endian; big-endian hosts need a swap pass");
static_assert(sizeof(std::complex<float>) == 8, "complex<float> must be two packed floats");

namespace sarchroma {

namespace {

struct File {
    std::FILE* f = nullptr;
    explicit File(const std::string& path, const char* mode) : f(std::fopen(path.c_str(), mode)) {}
    ~File() {
        if (f) std::fclose(f);
    }
    File(const File&) = delete;
    File& operator=(const File&) = delete;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        fail(ErrorCode::format, "meta key '" + key + "' has non-integer value '" + value + "'");
    return v;
}

double parse_double(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
        fail(ErrorCode::format, "meta key '" + key + "' has non-numeric value '" + value + "'");
    return v;
}

std::vector<char> read_all(const std::string& path) {
    File in(path, "rb");
    if (!in.f) fail(ErrorCode::io, "cannot open '" + path + "' for reading");
    std::fseek(in.f, 0, SEEK_END);
    long size = std::ftell(in.f);
    if (size < 0) fail(ErrorCode::io, "cannot determine size of '" + path + "'");
    std::fseek(in.f, 0, SEEK_SET);
    std::vector<char> buf(static_cast<std::size_t>(size));
    if (size > 0 && std::fread(buf.data(), 1, buf.size(), in.f) != buf.size())
        fail(ErrorCode::io, "short read from '" + path + "'");
    return buf;
}

void write_all(const std::string& path, const void* data, std::size_t size) {
    File out(path, "wb");
    if (!out.f) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
    if (size > 0 && std::fwrite(data, 1, size, out.f) != size)
        fail(ErrorCode::io, "short write to '" + path + "'");
    if (std::fflush(out.f) != 0) fail(ErrorCode::io, "flush failed for '" + path + "'");
}

}  // namespace

std::string container_base(const std::string& path) {
    if (ends_with(path, ".meta")) return path.substr(0, path.size() - 5);
    if (ends_with(path, ".cpx")) return path.substr(0, path.size() - 4);
    return path;
}

SlcImage read_slc(const std::string& path) {
    std::string base = container_base(path);
    std::string meta_path = base + ".meta";
    std::string cpx_path = base + ".cpx";

    std::vector<char> meta_bytes = read_all(meta_path);
    std::string text(meta_bytes.begin(), meta_bytes.end());

    std::map<std::string, std::string> kv;
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
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::format, meta_path + ":" + std::to_string(line_no) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            fail(ErrorCode::format, meta_path + ":" + std::to_string(line_no) + ": empty key");
        if (kv.count(key))
            fail(ErrorCode::format, meta_path + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'");
        kv[key] = value;
    }

    for (const char* required : {"rows", "cols", "sample_rate_hz", "oversample"})
        if (!kv.count(required))
            fail(ErrorCode::format, meta_path + ": missing required key '" + std::string(required) + "'");
    for (const auto& [key, value] : kv) {
        (void)value;
        if (key != "rows" && key != "cols" && key != "sample_rate_hz" && key != "oversample" &&
            key != "description")
            fail(ErrorCode::format, meta_path + ": unknown key '" + key + "'");
    }

    SlcImage img;
    img.rows = parse_int("rows", kv["rows"]);
    img.cols = parse_int("cols", kv["cols"]);
    img.meta.sample_rate_hz = parse_double("sample_rate_hz", kv["sample_rate_hz"]);
    img.meta.oversample = parse_double("oversample", kv["oversample"]);
    if (kv.count("description")) img.meta.description = kv["description"];

    if (img.rows < 1 || img.cols < 1)
        fail(ErrorCode::format, meta_path + ": rows and cols must be positive");

    std::vector<char> payload = read_all(cpx_path);
    std::size_t want = static_cast<std::size_t>(img.rows) * static_cast<std::size_t>(img.cols) * 8;
    if (payload.size() != want)
        fail(ErrorCode::format, cpx_path + ": payload is " + std::to_string(payload.size()) +
                                    " bytes, expected " + std::to_string(want) + " (rows*cols*8)");

    img.data.resize(static_cast<std::size_t>(img.rows) * static_cast<std::size_t>(img.cols));
    std::memcpy(img.data.data(), payload.data(), payload.size());

    for (std::size_t i = 0; i < img.data.size(); ++i)
        if (!std::isfinite(img.data[i].real()) || !std::isfinite(img.data[i].imag()))
            fail(ErrorCode::format, cpx_path + ": sample " + std::to_string(i) + " is not finite");

    try {
        validate(img);
    } catch (const Error& e) {
        fail(ErrorCode::format, meta_path + ": " + e.what());
    }
    return img;
}

void write_slc(const SlcImage& img, const std::string& path) {
    validate(img);
    std::string base = container_base(path);

    std::string meta = "rows = " + std::to_string(img.rows) + "\n" +
                       "cols = " + std::to_string(img.cols) + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", img.meta.sample_rate_hz);
    meta += std::string("sample_rate_hz = ") + buf + "\n";
    std::snprintf(buf, sizeof buf, "%.17g", img.meta.oversample);
    meta += std::string("oversample = ") + buf + "\n";
    if (!img.meta.description.empty()) {
        if (img.meta.description.find('\n') != std::string::npos ||
            img.meta.description.find('#') != std::string::npos)
            fail(ErrorCode::argument, "description must be a single line without '#'");
        meta += "description = " + img.meta.description + "\n";
    }
    write_all(base + ".meta", meta.data(), meta.size());
    write_all(base + ".cpx", img.data.data(), img.data.size() * 8);
}

void export_color(const RgbImage& img, const std::string& path) {
    std::int64_t rows = img.rows(), cols = img.cols();
    if (rows < 1 || cols < 1) fail(ErrorCode::argument, "color image must be non-empty");
    if (img.g.rows != rows || img.g.cols != cols || img.b.rows != rows || img.b.cols != cols)
        fail(ErrorCode::argument, "color channels must share one shape");

    std::string header = "P6\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
    std::vector<unsigned char> out(header.size() + static_cast<std::size_t>(rows) * cols * 3);
    std::memcpy(out.data(), header.data(), header.size());
    unsigned char* px = out.data() + header.size();
    const Plane* planes[3] = {&img.r, &img.g, &img.b};
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = 0; c < cols; ++c)
            for (int ch = 0; ch < 3; ++ch) {
                double v = planes[ch]->at(r, c);
                if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                    fail(ErrorCode::argument, "color channel value out of [0, 1]");
                *px++ = static_cast<unsigned char>(std::floor(255.0 * v + 0.5));
            }
    write_all(path, out.data(), out.size());
}

void export_gray(const Plane& img, double scale, const std::string& path) {
    if (img.rows < 1 || img.cols < 1) fail(ErrorCode::argument, "gray image must be non-empty");
    if (!(scale > 0.0) || !std::isfinite(scale)) fail(ErrorCode::argument, "gray scale must be > 0");

    std::string header = "P5\n" + std::to_string(img.cols) + " " + std::to_string(img.rows) + "\n255\n";
    std::vector<unsigned char> out(header.size() + static_cast<std::size_t>(img.rows) * img.cols);
    std::memcpy(out.data(), header.data(), header.size());
    unsigned char* px = out.data() + header.size();
    for (std::int64_t r = 0; r < img.rows; ++r)
        for (std::int64_t c = 0; c < img.cols; ++c) {
            double v = img.at(r, c) / scale;
            if (!std::isfinite(v)) fail(ErrorCode::argument, "gray value is not finite");
            v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
            *px++ = static_cast<unsigned char>(std::floor(255.0 * v + 0.5));
        }
    write_all(path, out.data(), out.size());
}

}  // namespace sarchroma
