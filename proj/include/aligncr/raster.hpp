#pragma once

#include <string>

#include "aligncr/tensor.hpp"

namespace aligncr {

enum class RasterKind { optical4, sar2, landcover, cloudmask };

const char* raster_kind_name(RasterKind k);
RasterKind raster_kind_from_name(const std::string& name);
int raster_kind_channels(RasterKind k);

struct ValueRange {
  float lo = 0.f;
  float hi = 1.f;
};

// Declared per-kind range contract: optical/sar in [0,1], landcover codes
// 0..5, cloudmask in {0,1}.
ValueRange raster_kind_range(RasterKind k);

// Multi-channel 2-D float raster with pixel size metadata.
struct RasterGrid {
  Tensor<float> values;  // [channels, height, width]
  float pixel_size_m = 0.f;
  RasterKind kind = RasterKind::optical4;

  int channels() const { return values.channels(); }
  int height() const { return values.height(); }
  int width() const { return values.width(); }
};

RasterGrid make_raster(RasterKind kind, int height, int width, float pixel_size_m);

// Checks channel count, value range and (for landcover/cloudmask) integrality.
void validate_raster(const RasterGrid& g, const std::string& context);

// Container format: one text header line
//   "kind channels height width pixel_size\n"
// followed by the flat little-endian float32 payload.
void save_raster(const RasterGrid& g, const std::string& path);
RasterGrid load_raster(const std::string& path);

// Header-only read used for manifest validation.
struct RasterHeader {
  RasterKind kind;
  int channels, height, width;
  float pixel_size_m;
};
RasterHeader peek_raster_header(const std::string& path);

}  // namespace aligncr
