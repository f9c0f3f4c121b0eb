#include "aligncr/data/sample.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aligncr/data/geometry.hpp"
#include "aligncr/data/preprocess.hpp"

namespace fs = std::filesystem;

namespace aligncr::data {

void validate_sample(const SampleQuartet& s, const std::string& context) {
  validate_raster(s.cloudy, context + "/cloudy");
  validate_raster(s.cloudfree, context + "/cloudfree");
  validate_raster(s.sar, context + "/sar");
  validate_raster(s.landcover, context + "/lc");
  validate_raster(s.cloudmask, context + "/mask");
  require_data(s.cloudy.kind == RasterKind::optical4 && s.cloudfree.kind == RasterKind::optical4,
               context + ": cloudy/cloudfree must be optical4");
  require_data(s.sar.kind == RasterKind::sar2, context + ": sar raster kind mismatch");
  require_data(s.landcover.kind == RasterKind::landcover, context + ": lc raster kind mismatch");
  require_data(s.cloudmask.kind == RasterKind::cloudmask, context + ": mask raster kind mismatch");

  require_data(s.cloudy.values.dims == s.cloudfree.values.dims,
               context + ": cloudy/cloudfree extents differ");
  require_data(s.cloudmask.height() == s.cloudy.height() &&
                   s.cloudmask.width() == s.cloudy.width(),
               context + ": mask extent differs from optical");
  require_data(s.sar.values.dims[1] == s.landcover.values.dims[1] &&
                   s.sar.values.dims[2] == s.landcover.values.dims[2],
               context + ": sar/landcover extents differ");
  require_ratio(s.cloudy.height(), s.sar.height(), context.c_str());
  require_ratio(s.cloudy.width(), s.sar.width(), context.c_str());

  CloudFraction cf = cloud_fraction(s.cloudmask);
  require_data(std::abs(cf.fraction - s.cloud_fraction) <= 1e-6,
               context + ": cloud_fraction metadata " + std::to_string(s.cloud_fraction) +
                   " != mask mean " + std::to_string(cf.fraction));
}

void save_sample(const SampleQuartet& s, const std::string& dir) {
  fs::create_directories(dir);
  save_raster(s.cloudy, dir + "/cloudy.bin");
  save_raster(s.cloudfree, dir + "/cloudfree.bin");
  save_raster(s.sar, dir + "/sar.bin");
  save_raster(s.landcover, dir + "/lc.bin");
  save_raster(s.cloudmask, dir + "/mask.bin");
  std::ofstream meta(dir + "/meta.txt");
  require_data(meta.good(), "cannot write " + dir + "/meta.txt");
  char buf[256];
  std::snprintf(buf, sizeof(buf), "aoi_id %s\ncloud_fraction %.17g\nshift %.9g %.9g\n",
                s.aoi_id.c_str(), s.cloud_fraction, s.shift_x, s.shift_y);
  meta << buf;
}

SampleQuartet load_sample(const std::string& dir) {
  SampleQuartet s;
  s.cloudy = load_raster(dir + "/cloudy.bin");
  s.cloudfree = load_raster(dir + "/cloudfree.bin");
  s.sar = load_raster(dir + "/sar.bin");
  s.landcover = load_raster(dir + "/lc.bin");
  s.cloudmask = load_raster(dir + "/mask.bin");

  std::ifstream meta(dir + "/meta.txt");
  require_data(meta.good(), "cannot open " + dir + "/meta.txt");
  std::string key;
  while (meta >> key) {
    if (key == "aoi_id") {
      meta >> s.aoi_id;
    } else if (key == "cloud_fraction") {
      meta >> s.cloud_fraction;
    } else if (key == "shift") {
      meta >> s.shift_x >> s.shift_y;
    } else {
      throw data_error(dir + "/meta.txt: unknown key '" + key + "'");
    }
    require_data(!meta.fail(), dir + "/meta.txt: malformed value for '" + key + "'");
  }
  validate_sample(s, dir);
  return s;
}

}  // namespace aligncr::data
