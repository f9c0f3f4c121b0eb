#pragma once

#include <utility>

#include "aligncr/raster.hpp"

namespace aligncr::data {

// Optical reflectance: clamp to [0, 10000], divide by 10000.
RasterGrid preprocess_optical(const Tensor<float>& raw_reflectance, float pixel_size_m = 3.f);

// SAR backscatter in dB: VV clamped to [-25, 0], VH to [-32.5, 0], both
// rescaled to [0, 1].
RasterGrid preprocess_sar(const Tensor<float>& raw_vv_db, const Tensor<float>& raw_vh_db,
                          float pixel_size_m = 10.f);

// Six basic land cover classes.
enum LandCoverClass : int {
  lc_forest = 0,
  lc_rangeland = 1,
  lc_agriculture = 2,
  lc_urban = 3,
  lc_barren = 4,
  lc_water = 5,
};
inline constexpr int kNumClasses = 6;
const char* landcover_class_name(int cls);

// WorldCover source codes -> the 6 basic classes:
//   10 tree cover -> forest; 20 shrubland, 30 grassland, 100 moss/lichen ->
//   rangeland; 40 cropland -> agriculture; 50 built-up -> urban; 60
//   bare/sparse vegetation, 70 snow/ice -> barren; 80 permanent water
//   bodies, 90 herbaceous wetland, 95 mangroves -> water.
int reclassify_worldcover_code(int source_code);
RasterGrid reclassify_landcover(const Tensor<int>& source_codes, float pixel_size_m = 10.f);

// Fraction of cloudy pixels plus its coverage bin. Bin edges are half-open
// [0,.2), [.2,.4), [.4,.6), [.6,.8) and closed [.8,1]; bin = min(floor(5f),4).
struct CloudFraction {
  double fraction;
  int bin;
};
CloudFraction cloud_fraction(const RasterGrid& mask);
int cloud_bin_of(double fraction);

}  // namespace aligncr::data
