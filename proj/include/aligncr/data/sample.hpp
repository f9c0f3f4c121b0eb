#pragma once

#include <string>

#include "aligncr/raster.hpp"

namespace aligncr::data {

// One training/eval unit. Optical grids are 300x300 at 3 m, SAR/landcover
// 90x90 at 10 m; training crops keep the same 10/3 congruence at smaller
// extents.
struct SampleQuartet {
  RasterGrid cloudy;     // optical4
  RasterGrid cloudfree;  // optical4
  RasterGrid sar;        // sar2
  RasterGrid landcover;  // landcover
  RasterGrid cloudmask;  // cloudmask
  double cloud_fraction = 0.0;
  std::string aoi_id;
  // Displacement applied to the SAR sampling grid by the synthetic
  // generator, in optical pixels; (0,0) for real or tiled data. Recorded
  // for evaluation only, never fed to the network.
  float shift_x = 0.f;
  float shift_y = 0.f;
};

// Shape/congruence/range checks plus cloud_fraction == mean(mask) (1e-6).
void validate_sample(const SampleQuartet& s, const std::string& context);

// Directory layout per sample:
//   <dir>/{cloudy.bin, cloudfree.bin, sar.bin, lc.bin, mask.bin, meta.txt}
void save_sample(const SampleQuartet& s, const std::string& dir);
SampleQuartet load_sample(const std::string& dir);

}  // namespace aligncr::data
