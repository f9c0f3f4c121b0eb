#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "aligncr/data/preprocess.hpp"

namespace aligncr::data {

enum class Split { train, test };
const char* split_name(Split s);
Split split_from_name(const std::string& name);

struct ManifestEntry {
  std::string rel_path;  // "<split>/<aoi_id>" relative to the dataset root
  std::string aoi_id;
  Split split = Split::train;
  double cloud_fraction = 0.0;
  float shift_x = 0.f, shift_y = 0.f;
  std::array<std::int64_t, kNumClasses> class_histogram{};  // landcover pixels per class
  int cloud_bin() const { return cloud_bin_of(cloud_fraction); }
};

// Ordered sample list for one split plus generator/selection provenance.
struct DatasetManifest {
  Split split = Split::train;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::vector<ManifestEntry> entries;
  std::vector<std::string> notes;  // e.g. stratification fallbacks
};

// On-disk format at <root>/manifest.txt, line oriented; both splits live in
// one file. Writing replaces only the lines of the given split.
void write_manifest(const std::string& root, const std::vector<DatasetManifest>& manifests);
DatasetManifest read_manifest(const std::string& root, Split split, bool check_files = true);

std::string render_manifest(const std::vector<DatasetManifest>& manifests);
std::vector<DatasetManifest> parse_manifest(const std::string& text);

}  // namespace aligncr::data
