#include "aligncr/data/stratify.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace aligncr::data {

ManifestEntry manifest_entry_of(const SampleQuartet& q, Split split) {
  ManifestEntry e;
  e.aoi_id = q.aoi_id;
  e.rel_path = std::string(split_name(split)) + "/" + q.aoi_id;
  e.split = split;
  e.cloud_fraction = q.cloud_fraction;
  e.shift_x = q.shift_x;
  e.shift_y = q.shift_y;
  for (std::size_t i = 0; i < q.landcover.values.numel(); i++)
    e.class_histogram[static_cast<int>(q.landcover.values.data[i])]++;
  return e;
}

DatasetManifest stratified_select(std::vector<ManifestEntry> candidates, int n,
                                  std::uint64_t seed, Split split) {
  require_data(n >= 0, "stratified_select: negative n");
  require_data(n <= static_cast<int>(candidates.size()),
               "stratified_select: n=" + std::to_string(n) + " exceeds candidate count " +
                   std::to_string(candidates.size()));

  DatasetManifest m;
  m.split = split;
  m.seed = seed;
  m.has_seed = true;
  if (n == 0) return m;

  std::sort(candidates.begin(), candidates.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) { return a.aoi_id < b.aoi_id; });

  std::array<std::vector<ManifestEntry>, 5> bins;
  for (auto& c : candidates) bins[c.cloud_bin()].push_back(c);

  std::mt19937_64 rng(seed);
  for (auto& b : bins) std::shuffle(b.begin(), b.end(), rng);

  // Base quotas n/5 each; remainder goes to the bins with most availability
  // (ties broken by bin index).
  std::array<int, 5> quota{};
  quota.fill(n / 5);
  std::array<int, 5> order{0, 1, 2, 3, 4};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (bins[a].size() != bins[b].size()) return bins[a].size() > bins[b].size();
    return a < b;
  });
  for (int r = 0; r < n % 5; r++) quota[order[r]]++;

  std::array<int, 5> taken{};
  for (int b = 0; b < 5; b++) taken[b] = std::min<int>(quota[b], bins[b].size());

  // Short bins borrow from the nearest bin with spare candidates.
  int total = taken[0] + taken[1] + taken[2] + taken[3] + taken[4];
  while (total < n) {
    bool progressed = false;
    for (int b = 0; b < 5 && total < n; b++) {
      int deficit = quota[b] - taken[b];
      if (deficit <= 0) continue;
      for (int d = 1; d < 5 && deficit > 0; d++) {
        for (int nb : {b - d, b + d}) {
          if (nb < 0 || nb > 4 || deficit <= 0) continue;
          int spare = static_cast<int>(bins[nb].size()) - taken[nb];
          if (spare <= 0) continue;
          int k = std::min(spare, deficit);
          taken[nb] += k;
          deficit -= k;
          total += k;
          progressed = true;
          m.notes.push_back("borrowed " + std::to_string(k) + " samples from bin " +
                            std::to_string(nb) + " for bin " + std::to_string(b));
        }
      }
      quota[b] = taken[b];  // the rest of the deficit is unfulfillable here
    }
    if (!progressed) break;
  }

  for (int b = 0; b < 5; b++)
    for (int i = 0; i < taken[b]; i++) m.entries.push_back(bins[b][i]);
  return m;
}

}  // namespace aligncr::data
