#include "aligncr/data/manifest.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aligncr/raster.hpp"

namespace fs = std::filesystem;

namespace aligncr::data {

const char* split_name(Split s) { return s == Split::train ? "train" : "test"; }

Split split_from_name(const std::string& name) {
  if (name == "train") return Split::train;
  if (name == "test") return Split::test;
  throw data_error("unknown split '" + name + "'");
}

std::string render_manifest(const std::vector<DatasetManifest>& manifests) {
  std::ostringstream os;
  os << "aligncr-manifest v1\n";
  for (const auto& m : manifests) {
    if (m.has_seed) os << "seed " << split_name(m.split) << " " << m.seed << "\n";
    for (const auto& n : m.notes) os << "note " << split_name(m.split) << " " << n << "\n";
    for (const auto& e : m.entries) {
      char buf[512];
      std::snprintf(buf, sizeof(buf),
                    "sample %s %s %s %.17g %.9g %.9g %lld %lld %lld %lld %lld %lld\n",
                    split_name(m.split), e.aoi_id.c_str(), e.rel_path.c_str(),
                    e.cloud_fraction, e.shift_x, e.shift_y,
                    static_cast<long long>(e.class_histogram[0]),
                    static_cast<long long>(e.class_histogram[1]),
                    static_cast<long long>(e.class_histogram[2]),
                    static_cast<long long>(e.class_histogram[3]),
                    static_cast<long long>(e.class_histogram[4]),
                    static_cast<long long>(e.class_histogram[5]));
      os << buf;
    }
  }
  return os.str();
}

std::vector<DatasetManifest> parse_manifest(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  require_data(line == "aligncr-manifest v1", "manifest: bad format line '" + line + "'");

  DatasetManifest train, test;
  train.split = Split::train;
  test.split = Split::test;
  auto of = [&](Split s) -> DatasetManifest& { return s == Split::train ? train : test; };

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag, split;
    ls >> tag >> split;
    if (tag == "seed") {
      auto& m = of(split_from_name(split));
      ls >> m.seed;
      m.has_seed = true;
    } else if (tag == "note") {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
      of(split_from_name(split)).notes.push_back(rest);
    } else if (tag == "sample") {
      ManifestEntry e;
      e.split = split_from_name(split);
      ls >> e.aoi_id >> e.rel_path >> e.cloud_fraction >> e.shift_x >> e.shift_y;
      for (auto& h : e.class_histogram) ls >> h;
      require_data(!ls.fail(), "manifest: malformed sample line '" + line + "'");
      of(e.split).entries.push_back(std::move(e));
    } else {
      throw data_error("manifest: unknown line tag '" + tag + "'");
    }
  }

  // No sample may appear in both splits.
  for (const auto& a : train.entries)
    for (const auto& b : test.entries)
      require_data(a.rel_path != b.rel_path,
                   "manifest: sample " + a.rel_path + " listed in both splits");

  std::vector<DatasetManifest> out;
  out.push_back(std::move(train));
  out.push_back(std::move(test));
  return out;
}

void write_manifest(const std::string& root, const std::vector<DatasetManifest>& manifests) {
  fs::create_directories(root);
  // Keep the other split's lines when only one split is rewritten.
  std::vector<DatasetManifest> merged = manifests;
  std::string path = root + "/manifest.txt";
  if (fs::exists(path)) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    for (auto& old : parse_manifest(ss.str())) {
      bool replaced = false;
      for (const auto& m : manifests)
        if (m.split == old.split) replaced = true;
      if (!replaced && (!old.entries.empty() || old.has_seed)) merged.push_back(std::move(old));
    }
  }
  std::ofstream f(path);
  require_data(f.good(), "cannot write " + path);
  f << render_manifest(merged);
}

DatasetManifest read_manifest(const std::string& root, Split split, bool check_files) {
  std::ifstream f(root + "/manifest.txt");
  require_data(f.good(), "cannot open " + root + "/manifest.txt");
  std::stringstream ss;
  ss << f.rdbuf();
  auto manifests = parse_manifest(ss.str());
  for (auto& m : manifests) {
    if (m.split != split) continue;
    if (check_files) {
      for (const auto& e : m.entries) {
        std::string dir = root + "/" + e.rel_path;
        for (const char* name : {"cloudy.bin", "cloudfree.bin", "sar.bin", "lc.bin", "mask.bin"})
          peek_raster_header(dir + "/" + name);  // exists and parses
      }
    }
    return m;
  }
  throw data_error("manifest has no '" + std::string(split_name(split)) + "' split");
}

}  // namespace aligncr::data
