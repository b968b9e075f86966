#pragma once

#include "core/image.hpp"

namespace sarchroma {

struct LookParams {
    int n_az = 1;  // window rows
    int n_rg = 1;  // window cols
};

// Box mean over an n_az x n_rg window centered with offset floor((n-1)/2).
// Windows that cross the image border are clipped and renormalized by the
// number of samples actually covered, so a constant image stays constant.
// Output has the input's shape.
Plane multilook(const Plane& img, const LookParams& looks);
CPlane multilook(const CPlane& img, const LookParams& looks);

// Equivalent number of looks of an intensity plane: mean^2 / unbiased
// variance. Requires at least 2 samples and a nonconstant plane.
double estimate_enl(const Plane& img);
// Same, over the half-open region [r0, r1) x [c0, c1).
double estimate_enl(const Plane& img, std::int64_t r0, std::int64_t r1, std::int64_t c0,
                    std::int64_t c1);

}  // namespace sarchroma
