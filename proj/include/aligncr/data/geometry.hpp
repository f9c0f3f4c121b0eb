#pragma once

#include "aligncr/common.hpp"

namespace aligncr::data {

// Optical grids are exactly 10/3 x the SAR/landcover grids (3 m vs 10 m).
inline constexpr int kScaleNum = 10;  // optical pixels
inline constexpr int kScaleDen = 3;   // per sar pixel group of kScaleDen

inline bool ratio_is_10_3(int optical_extent, int sar_extent) {
  return optical_extent * kScaleDen == sar_extent * kScaleNum;
}

// Destination index rule for nearest-neighbour 10/3 upsampling:
// src = floor(i * 3/10).
inline int nearest_src_index(int dst_index) { return dst_index * kScaleDen / kScaleNum; }

inline void require_ratio(int optical_extent, int sar_extent, const char* what) {
  if (!ratio_is_10_3(optical_extent, sar_extent))
    throw data_error(std::string(what) + ": optical/sar extent ratio must be 10/3, got " +
                     std::to_string(optical_extent) + " vs " + std::to_string(sar_extent));
}

}  // namespace aligncr::data
