#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/spectral.hpp"
#include "core/synth.hpp"

namespace sarchroma {

// Text description of a synthetic scene. Grammar:
//   [scene]                    exactly one, first section
//   rows = 512                 required: rows, cols, sample_rate_hz,
//   cols = 512                 oversample, prf_hz
//   speckle_sigma = 1.0        optional (default 1; 0 disables speckle)
//   seed = 42                  optional (default 0)
//   nsub_hint = 9              optional (default 9; used for truth predictions)
//   description = ...          optional
//   [nbi] / [lfm] / [unfocused]   zero or more, applied in file order
// '#' starts a comment. Spans are written "begin:end" (half-open).
// Parse errors carry "<path>:<line>:".

struct SceneEvent {
    std::variant<NbiParams, LfmParams, UnfocusedParams> params;
};

struct SceneSpec {
    std::int64_t rows = 0, cols = 0;
    SlcMeta meta;
    double prf_hz = 0.0;
    double speckle_sigma = 1.0;
    std::uint64_t seed = 0;
    int nsub_hint = 9;
    std::vector<SceneEvent> events;
};

SceneSpec parse_scene(const std::string& path);

struct SynthResult {
    SlcImage image;
    std::string truth;  // one line per event with its predicted signature
};

// Builds the scene: speckle (when sigma > 0) plus every event in order.
// seed_override replaces the scene's seed. The truth text records, per event,
// where its energy should land: the dominant subband for tones, the swept
// subband range for chirps, and the ridge slope and smeared rows for
// unfocused echoes (predictions use nsub_hint subbands).
SynthResult synth_scene(const SceneSpec& scene, std::optional<std::uint64_t> seed_override);

// Subband whose centered-spectrum slice contains freq_hz (offset from band
// center), or -1 when the frequency falls outside the valid band.
int subband_of_frequency(const SubbandLayout& layout, std::int64_t cols, double fs, double freq_hz);

}  // namespace sarchroma
