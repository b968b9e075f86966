#pragma once

#include <string>

#include "core/image.hpp"

namespace sarchroma {

// A complex image on disk is a pair of files sharing one base path:
//   <base>.meta  UTF-8 "key = value" lines; required keys rows, cols,
//                sample_rate_hz, oversample; optional description; '#' starts
//                a comment; duplicate or unknown keys are format errors.
//   <base>.cpx   little-endian float32 (re, im) pairs, row-major, exactly
//                rows*cols samples.
// Paths may name the base or either member file.

std::string container_base(const std::string& path);

SlcImage read_slc(const std::string& path);
void write_slc(const SlcImage& img, const std::string& path);

// 8-bit binary PPM (P6). Channels must be finite and in [0, 1];
// quantization is floor(255*v + 0.5).
void export_color(const RgbImage& img, const std::string& path);

// 8-bit binary PGM (P5) of v/scale clamped to [0, 1]; scale must be > 0.
void export_gray(const Plane& img, double scale, const std::string& path);

}  // namespace sarchroma
