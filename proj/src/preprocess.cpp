#include "aligncr/data/preprocess.hpp"

#include <algorithm>
#include <cmath>

namespace aligncr::data {

static void require_finite(const Tensor<float>& t, const char* what) {
  for (std::size_t i = 0; i < t.numel(); i++)
    if (!std::isfinite(t.data[i]))
      throw data_error(std::string(what) + ": non-finite input value at flat index " +
                       std::to_string(i));
}

RasterGrid preprocess_optical(const Tensor<float>& raw, float pixel_size_m) {
  require_data(raw.rank() == 3 && raw.channels() == 4,
               "preprocess_optical expects a [4,H,W] array");
  require_finite(raw, "preprocess_optical");
  RasterGrid g = make_raster(RasterKind::optical4, raw.height(), raw.width(), pixel_size_m);
  for (std::size_t i = 0; i < raw.numel(); i++)
    g.values.data[i] = std::clamp(raw.data[i], 0.f, 10000.f) / 10000.f;
  return g;
}

RasterGrid preprocess_sar(const Tensor<float>& vv, const Tensor<float>& vh,
                          float pixel_size_m) {
  require_data(vv.rank() == 2 || (vv.rank() == 3 && vv.channels() == 1),
               "preprocess_sar expects [H,W] polarization arrays");
  require_data(vv.dims == vh.dims, "preprocess_sar: VV and VH extents differ");
  require_finite(vv, "preprocess_sar(VV)");
  require_finite(vh, "preprocess_sar(VH)");
  int h = vv.rank() == 2 ? vv.dims[0] : vv.dims[1];
  int w = vv.rank() == 2 ? vv.dims[1] : vv.dims[2];
  RasterGrid g = make_raster(RasterKind::sar2, h, w, pixel_size_m);
  std::size_t plane = static_cast<std::size_t>(h) * w;
  for (std::size_t i = 0; i < plane; i++) {
    g.values.data[i] = (std::clamp(vv.data[i], -25.f, 0.f) + 25.f) / 25.f;
    g.values.data[plane + i] = (std::clamp(vh.data[i], -32.5f, 0.f) + 32.5f) / 32.5f;
  }
  return g;
}

const char* landcover_class_name(int cls) {
  switch (cls) {
    case lc_forest: return "forest";
    case lc_rangeland: return "rangeland";
    case lc_agriculture: return "agriculture";
    case lc_urban: return "urban";
    case lc_barren: return "barren";
    case lc_water: return "water";
  }
  return "?";
}

int reclassify_worldcover_code(int code) {
  switch (code) {
    case 10: return lc_forest;       // tree cover
    case 20: return lc_rangeland;    // shrubland
    case 30: return lc_rangeland;    // grassland
    case 100: return lc_rangeland;   // moss and lichen
    case 40: return lc_agriculture;  // cropland
    case 50: return lc_urban;        // built-up
    case 60: return lc_barren;       // bare / sparse vegetation
    case 70: return lc_barren;       // snow and ice
    case 80: return lc_water;        // permanent water bodies
    case 90: return lc_water;        // herbaceous wetland
    case 95: return lc_water;        // mangroves
    default:
      throw data_error("reclassify_landcover: unknown source code " + std::to_string(code));
  }
}

RasterGrid reclassify_landcover(const Tensor<int>& codes, float pixel_size_m) {
  require_data(codes.rank() == 2 || (codes.rank() == 3 && codes.channels() == 1),
               "reclassify_landcover expects a [H,W] code array");
  int h = codes.rank() == 2 ? codes.dims[0] : codes.dims[1];
  int w = codes.rank() == 2 ? codes.dims[1] : codes.dims[2];
  RasterGrid g = make_raster(RasterKind::landcover, h, w, pixel_size_m);
  for (std::size_t i = 0; i < codes.numel(); i++)
    g.values.data[i] = static_cast<float>(reclassify_worldcover_code(codes.data[i]));
  return g;
}

int cloud_bin_of(double fraction) {
  return std::min(static_cast<int>(std::floor(fraction * 5.0)), 4);
}

CloudFraction cloud_fraction(const RasterGrid& mask) {
  require_data(mask.kind == RasterKind::cloudmask, "cloud_fraction expects a cloudmask raster");
  double ones = 0;
  for (std::size_t i = 0; i < mask.values.numel(); i++) {
    float v = mask.values.data[i];
    if (v != 0.f && v != 1.f)
      throw data_error("cloud_fraction: non-binary mask value " + std::to_string(v));
    ones += v;
  }
  double f = ones / static_cast<double>(mask.values.numel());
  return {f, cloud_bin_of(f)};
}

}  // namespace aligncr::data
