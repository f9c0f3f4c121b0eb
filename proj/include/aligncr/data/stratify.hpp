#pragma once

#include <cstdint>
#include <vector>

#include "aligncr/data/manifest.hpp"
#include "aligncr/data/sample.hpp"

namespace aligncr::data {

// Deterministic stratified selection of n candidates, balancing the five
// cloud-coverage bins: per-bin counts differ by at most one where
// availability permits; short bins borrow from the nearest non-empty bin
// and every borrow is recorded as a manifest note. Candidates are sorted
// canonically by aoi_id before the seeded shuffle, so the result does not
// depend on input order.
DatasetManifest stratified_select(std::vector<ManifestEntry> candidates, int n,
                                  std::uint64_t seed, Split split);

ManifestEntry manifest_entry_of(const SampleQuartet& q, Split split);

}  // namespace aligncr::data
