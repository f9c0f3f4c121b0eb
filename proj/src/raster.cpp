#include "aligncr/raster.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace aligncr {

static_assert(std::endian::native == std::endian::little,
              "raster container is little-endian; big-endian hosts unsupported");

const char* raster_kind_name(RasterKind k) {
  switch (k) {
    case RasterKind::optical4: return "optical4";
    case RasterKind::sar2: return "sar2";
    case RasterKind::landcover: return "landcover";
    case RasterKind::cloudmask: return "cloudmask";
  }
  return "?";
}

RasterKind raster_kind_from_name(const std::string& name) {
  if (name == "optical4") return RasterKind::optical4;
  if (name == "sar2") return RasterKind::sar2;
  if (name == "landcover") return RasterKind::landcover;
  if (name == "cloudmask") return RasterKind::cloudmask;
  throw data_error("unknown raster kind '" + name + "'");
}

int raster_kind_channels(RasterKind k) {
  switch (k) {
    case RasterKind::optical4: return 4;
    case RasterKind::sar2: return 2;
    case RasterKind::landcover: return 1;
    case RasterKind::cloudmask: return 1;
  }
  return 0;
}

ValueRange raster_kind_range(RasterKind k) {
  switch (k) {
    case RasterKind::optical4: return {0.f, 1.f};
    case RasterKind::sar2: return {0.f, 1.f};
    case RasterKind::landcover: return {0.f, 5.f};
    case RasterKind::cloudmask: return {0.f, 1.f};
  }
  return {};
}

RasterGrid make_raster(RasterKind kind, int height, int width, float pixel_size_m) {
  RasterGrid g;
  g.kind = kind;
  g.pixel_size_m = pixel_size_m;
  g.values = Tensor<float>({raster_kind_channels(kind), height, width});
  return g;
}

void validate_raster(const RasterGrid& g, const std::string& context) {
  require_data(g.values.rank() == 3, context + ": raster tensor must be [C,H,W]");
  require_data(g.channels() == raster_kind_channels(g.kind),
               context + ": kind " + raster_kind_name(g.kind) + " expects " +
                   std::to_string(raster_kind_channels(g.kind)) + " channels, got " +
                   std::to_string(g.channels()));
  require_data(g.pixel_size_m > 0.f, context + ": pixel size must be positive");
  ValueRange r = raster_kind_range(g.kind);
  bool integral = g.kind == RasterKind::landcover || g.kind == RasterKind::cloudmask;
  for (std::size_t i = 0; i < g.values.numel(); i++) {
    float v = g.values.data[i];
    if (!std::isfinite(v) || v < r.lo || v > r.hi)
      throw data_error(context + ": value " + std::to_string(v) + " at index " +
                       std::to_string(i) + " outside range contract [" +
                       std::to_string(r.lo) + ", " + std::to_string(r.hi) + "] of " +
                       raster_kind_name(g.kind));
    if (integral && v != std::floor(v))
      throw data_error(context + ": non-integral value " + std::to_string(v) + " in " +
                       raster_kind_name(g.kind) + " raster");
  }
}

void save_raster(const RasterGrid& g, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  require_data(f.good(), "cannot open " + path + " for writing");
  char header[128];
  std::snprintf(header, sizeof(header), "%s %d %d %d %.9g\n", raster_kind_name(g.kind),
                g.channels(), g.height(), g.width(), g.pixel_size_m);
  f << header;
  f.write(reinterpret_cast<const char*>(g.values.ptr()),
          static_cast<std::streamsize>(g.values.numel() * sizeof(float)));
  require_data(f.good(), "short write to " + path);
}

static RasterHeader parse_header_line(const std::string& line, const std::string& path) {
  std::istringstream is(line);
  std::string kind;
  RasterHeader h{};
  is >> kind >> h.channels >> h.height >> h.width >> h.pixel_size_m;
  require_data(!is.fail(), path + ": malformed raster header '" + line + "'");
  h.kind = raster_kind_from_name(kind);
  require_data(h.channels > 0 && h.height > 0 && h.width > 0,
               path + ": non-positive raster extent in header");
  require_data(h.channels == raster_kind_channels(h.kind),
               path + ": header channel count " + std::to_string(h.channels) +
                   " inconsistent with kind " + kind);
  return h;
}

RasterHeader peek_raster_header(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require_data(f.good(), "cannot open " + path);
  std::string line;
  std::getline(f, line);
  require_data(f.good(), path + ": missing raster header");
  return parse_header_line(line, path);
}

RasterGrid load_raster(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require_data(f.good(), "cannot open " + path);
  std::string line;
  std::getline(f, line);
  require_data(f.good(), path + ": missing raster header");
  RasterHeader h = parse_header_line(line, path);

  RasterGrid g = make_raster(h.kind, h.height, h.width, h.pixel_size_m);
  f.read(reinterpret_cast<char*>(g.values.ptr()),
         static_cast<std::streamsize>(g.values.numel() * sizeof(float)));
  require_data(f.gcount() == static_cast<std::streamsize>(g.values.numel() * sizeof(float)),
               path + ": payload shorter than header-declared shape");
  char extra;
  require_data(!f.read(&extra, 1), path + ": payload longer than header-declared shape");
  validate_raster(g, path);
  return g;
}

}  // namespace aligncr
