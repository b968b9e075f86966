#pragma once

#include <vector>

#include "core/image.hpp"

namespace sarchroma {

// Placement of the processed range band and its subbands inside a centered
// cols-point spectrum. Only valid_len = round(cols/oversample) bins carry
// signal; they start at valid_start = floor((cols - valid_len)/2). Subband k
// covers centered bins [valid_start + bounds[k], valid_start + bounds[k+1]).
struct SubbandLayout {
    int n_sub = 0;
    std::int64_t valid_len = 0;
    std::int64_t valid_start = 0;
    std::vector<std::int64_t> bounds;  // n_sub + 1 offsets, bounds[0] = 0, bounds[n_sub] = valid_len

    std::int64_t width(int k) const { return bounds[k + 1] - bounds[k]; }
};

// Requires cols >= 2, oversample >= 1, 2 <= n_sub <= valid_len.
// bounds[k] = round(k * valid_len / n_sub), so widths differ by at most one.
SubbandLayout plan_layout(std::int64_t cols, double oversample, int n_sub);

// Raised-cosine taper across the valid band, w(i) = a - (1-a)*cos(2*pi*i/len),
// i in [0, len). Requires a in [0.5, 1] and len >= 2. Values lie in [2a-1, 1].
std::vector<double> equalization_window(double a, std::int64_t len);

struct SubbandStack {
    SubbandLayout layout;
    std::vector<CPlane> images;  // n_sub full-size complex images
};

// Divides the valid-band bins of one raw-order spectrum row (cols bins) by
// the equalization window (layout.valid_len values). This is the exact
// operation decompose applies per row when equalization is on.
void equalize_spectrum_row(std::complex<double>* spec, std::int64_t cols,
                           const SubbandLayout& layout, const double* window);

// Splits the range spectrum of every azimuth row into n_sub adjacent subbands
// and returns each as a full-size complex image with the subband's bins kept
// at their original positions (zero elsewhere). With equalize, spectrum bins
// are divided by the window first to undo a processor's range taper; that
// needs window_coeff > 0.5 (at 0.5 the window reaches zero at the band edge).
// Summing the subband images reproduces the valid-band-filtered input.
SubbandStack decompose(const SlcImage& img, int n_sub, double window_coeff, bool equalize);

}  // namespace sarchroma
