// Copyright 2026 The qpuzzle developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpuzzle/landscape.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace qpuzzle {

namespace {

void check_complete(const LossMap& map, const char* who) {
  if (map.depth < 1 || map.values.size() != (std::size_t{1} << map.depth))
    throw std::invalid_argument(std::string(who) + ": incomplete loss map");
}

}  // namespace

LossMap enumerate_losses(const LossFn& loss_fn, int depth) {
  if (depth < 1 || depth > 16)
    throw std::invalid_argument("enumerate_losses: D must be in [1, 16]");
  LossMap map;
  map.depth = depth;
  map.values.resize(std::size_t{1} << depth);
  for (std::size_t i = 0; i < map.values.size(); ++i)
    map.values[i] = loss_fn(Bitstring::from_index(depth, i));
  return map;
}

Bitstring lossmap_argmin(const LossMap& map) {
  check_complete(map, "lossmap_argmin");
  const auto it = std::min_element(map.values.begin(), map.values.end());
  return Bitstring::from_index(map.depth, static_cast<std::uint64_t>(it - map.values.begin()));
}

std::vector<double> shell_means(const LossMap& map, const Bitstring& s_star) {
  check_complete(map, "shell_means");
  if (s_star.size() != map.depth) throw std::invalid_argument("shell_means: |s*| != D");
  const std::uint64_t ref = s_star.to_index();
  std::vector<double> sum(map.depth + 1, 0.0);
  std::vector<std::size_t> cnt(map.depth + 1, 0);
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    const int h = std::popcount(i ^ ref);
    sum[h] += map.values[i];
    cnt[h] += 1;
  }
  for (int h = 0; h <= map.depth; ++h) sum[h] /= static_cast<double>(cnt[h]);
  return sum;
}

bool is_unimodal(const LossMap& map, double tol) {
  check_complete(map, "is_unimodal");
  const std::size_t count = map.values.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < count; ++i)
    if (map.values[i] < map.values[best]) best = i;
  // Unique global minimum within tol.
  for (std::size_t i = 0; i < count; ++i)
    if (i != best && map.values[i] <= map.values[best] + tol) return false;
  for (std::size_t i = 0; i < count; ++i) {
    if (i == best) continue;
    bool improving = false;
    for (int b = 0; b < map.depth; ++b) {
      if (map.values[i ^ (std::size_t{1} << b)] < map.values[i] - tol) {
        improving = true;
        break;
      }
    }
    if (!improving) return false;
  }
  return true;
}

bool is_monotonic(const LossMap& map, const Bitstring& s_star, double tol) {
  check_complete(map, "is_monotonic");
  if (s_star.size() != map.depth) throw std::invalid_argument("is_monotonic: |s*| != D");
  const std::uint64_t ref = s_star.to_index();
  const std::size_t count = map.values.size();
  // For every disagreement mask b and strict submask a: l(ref^a) <= l(ref^b).
  for (std::size_t b = 1; b < count; ++b) {
    const double upper = map.values[ref ^ b] + tol;
    for (std::size_t a = (b - 1) & b;; a = (a - 1) & b) {
      if (map.values[ref ^ a] > upper) return false;
      if (a == 0) break;
    }
  }
  return true;
}

bool is_separable(const LossMap& map, double tol) {
  check_complete(map, "is_separable");
  const std::size_t count = map.values.size();
  for (int b = 0; b < map.depth; ++b) {
    const std::size_t mask = std::size_t{1} << b;
    double ref_diff = 0.0;
    bool have_ref = false;
    for (std::size_t i = 0; i < count; ++i) {
      if (i & mask) continue;
      const double diff = map.values[i | mask] - map.values[i];
      if (!have_ref) {
        ref_diff = diff;
        have_ref = true;
      } else if (std::abs(diff - ref_diff) > tol) {
        return false;
      }
    }
  }
  return true;
}

double sliding_step(const LossMap& map, const Bitstring& s_star) {
  const std::vector<double> means = shell_means(map, s_star);
  double acc = 0.0;
  for (int h = 1; h <= map.depth; ++h) acc += means[h] - means[h - 1];
  return acc / map.depth;
}

double gap_delta(const LossMap& map, const Bitstring& s_star) {
  check_complete(map, "gap_delta");
  if (s_star.size() != map.depth) throw std::invalid_argument("gap_delta: |s*| != D");
  const int h_star = (map.depth + 1) / 2;
  const std::uint64_t ref = s_star.to_index();
  std::vector<double> shell;
  for (std::size_t i = 0; i < map.values.size(); ++i)
    if (std::popcount(i ^ ref) == h_star) shell.push_back(map.values[i]);
  if (shell.size() < 2) throw std::invalid_argument("gap_delta: shell has fewer than 2 points");
  std::sort(shell.begin(), shell.end());
  double acc = 0.0;
  for (std::size_t i = 1; i < shell.size(); ++i) acc += shell[i] - shell[i - 1];
  return acc / static_cast<double>(shell.size() - 1);
}

LandscapeReport classify_landscape(const LossMap& map, const Bitstring& s_star) {
  LandscapeReport rep;
  rep.unimodal = is_unimodal(map);
  rep.monotonic = is_monotonic(map, s_star);
  rep.separable = is_separable(map);
  rep.delta_s = sliding_step(map, s_star);
  rep.delta_gap = gap_delta(map, s_star);
  rep.argmin = lossmap_argmin(map);
  return rep;
}

void lossmap_save(const LossMap& map, const std::string& base_path) {
  check_complete(map, "lossmap_save");
  static_assert(std::endian::native == std::endian::little,
                "loss map export assumes a little-endian host");
  {
    std::ofstream bin(base_path + ".bin", std::ios::binary);
    if (!bin) throw std::runtime_error("lossmap_save: cannot open " + base_path + ".bin");
    bin.write(reinterpret_cast<const char*>(map.values.data()),
              static_cast<std::streamsize>(map.values.size() * sizeof(double)));
  }
  nlohmann::json j;
  j["format_version"] = 1;
  j["D"] = map.depth;
  j["count"] = map.values.size();
  j["dtype"] = "float64";
  j["byte_order"] = "little";
  j["index_convention"] = "s1_msb";
  std::ofstream side(base_path + ".json");
  if (!side) throw std::runtime_error("lossmap_save: cannot open " + base_path + ".json");
  side << j.dump(2) << "\n";
}

LossMap lossmap_load(const std::string& base_path) {
  std::ifstream side(base_path + ".json");
  if (!side) throw std::runtime_error("lossmap_load: cannot open " + base_path + ".json");
  nlohmann::json j;
  side >> j;
  LossMap map;
  map.depth = j.at("D").get<int>();
  const auto count = j.at("count").get<std::size_t>();
  if (count != (std::size_t{1} << map.depth))
    throw std::runtime_error("lossmap_load: sidecar count does not match D");
  map.values.resize(count);
  std::ifstream bin(base_path + ".bin", std::ios::binary);
  if (!bin) throw std::runtime_error("lossmap_load: cannot open " + base_path + ".bin");
  bin.read(reinterpret_cast<char*>(map.values.data()),
           static_cast<std::streamsize>(count * sizeof(double)));
  if (bin.gcount() != static_cast<std::streamsize>(count * sizeof(double)))
    throw std::runtime_error("lossmap_load: truncated binary table");
  return map;
}

}  // namespace qpuzzle
