#include "aligncr/data/tiling.hpp"

#include "aligncr/data/geometry.hpp"
#include "aligncr/data/preprocess.hpp"

namespace aligncr::data {

static RasterGrid crop_raster(const RasterGrid& g, int y0, int x0, int h, int w) {
  RasterGrid out = make_raster(g.kind, h, w, g.pixel_size_m);
  for (int c = 0; c < g.channels(); c++)
    for (int y = 0; y < h; y++)
      for (int x = 0; x < w; x++) out.values.at(c, y, x) = g.values.at(c, y0 + y, x0 + x);
  return out;
}

int tile_count_per_axis(int extent, int window, int stride) {
  if (extent < window) return 0;
  return (extent - window) / stride + 1;
}

std::vector<SampleQuartet> tile_aoi(const RasterGrid& cloudy, const RasterGrid& cloudfree,
                                    const RasterGrid& sar, const RasterGrid& landcover,
                                    const RasterGrid& cloudmask, int stride_opt,
                                    const std::string& aoi_base_id) {
  const int H = cloudy.height(), W = cloudy.width();
  require_data(cloudfree.height() == H && cloudfree.width() == W &&
                   cloudmask.height() == H && cloudmask.width() == W,
               "tile_aoi: optical/mask extents differ");
  require_data(sar.height() == landcover.height() && sar.width() == landcover.width(),
               "tile_aoi: sar/landcover extents differ");
  require_ratio(H, sar.height(), "tile_aoi");
  require_ratio(W, sar.width(), "tile_aoi");
  require_data(stride_opt > 0 && stride_opt % 10 == 0,
               "tile_aoi: stride must be a positive multiple of 10, got " +
                   std::to_string(stride_opt));
  require_data(H >= 300 && W >= 300, "tile_aoi: AOI smaller than one 300x300 window");

  const int wo = 300, ws = 90;
  const int stride_sar = stride_opt * kScaleDen / kScaleNum;
  std::vector<SampleQuartet> out;
  for (int ty = 0; ty < tile_count_per_axis(H, wo, stride_opt); ty++) {
    for (int tx = 0; tx < tile_count_per_axis(W, wo, stride_opt); tx++) {
      int oy = ty * stride_opt, ox = tx * stride_opt;
      int sy = ty * stride_sar, sx = tx * stride_sar;
      SampleQuartet q;
      q.cloudy = crop_raster(cloudy, oy, ox, wo, wo);
      q.cloudfree = crop_raster(cloudfree, oy, ox, wo, wo);
      q.cloudmask = crop_raster(cloudmask, oy, ox, wo, wo);
      q.sar = crop_raster(sar, sy, sx, ws, ws);
      q.landcover = crop_raster(landcover, sy, sx, ws, ws);
      q.cloud_fraction = cloud_fraction(q.cloudmask).fraction;
      q.aoi_id = aoi_base_id + "_r" + std::to_string(oy) + "_c" + std::to_string(ox);
      out.push_back(std::move(q));
    }
  }
  return out;
}

}  // namespace aligncr::data
