#pragma once

#include <vector>

#include "aligncr/data/sample.hpp"

namespace aligncr::data {

// Slides congruent 300x300 (optical/mask) and 90x90 (SAR/landcover) windows
// over a full AOI. stride_opt is in optical pixels and must be divisible by
// 10 so the SAR stride stride_opt*3/10 is integral. Windows per axis:
// floor((H-300)/stride)+1.
std::vector<SampleQuartet> tile_aoi(const RasterGrid& cloudy, const RasterGrid& cloudfree,
                                    const RasterGrid& sar, const RasterGrid& landcover,
                                    const RasterGrid& cloudmask, int stride_opt,
                                    const std::string& aoi_base_id);

int tile_count_per_axis(int extent, int window, int stride);

}  // namespace aligncr::data
