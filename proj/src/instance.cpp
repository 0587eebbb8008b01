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

#include "qpuzzle/instance.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qpuzzle/evaluator.hpp"

namespace qpuzzle {

// ---- Bitstring ----

Bitstring Bitstring::flipped(int i) const {
  Bitstring out = *this;
  out.bits.at(i) ^= 1;
  return out;
}

int Bitstring::hamming(const Bitstring& o) const {
  if (size() != o.size()) throw std::invalid_argument("Bitstring::hamming: length mismatch");
  int h = 0;
  for (int i = 0; i < size(); ++i) h += bits[i] != o.bits[i];
  return h;
}

int Bitstring::weight() const {
  return static_cast<int>(std::accumulate(bits.begin(), bits.end(), 0));
}

std::uint64_t Bitstring::to_index() const {
  std::uint64_t idx = 0;
  for (std::uint8_t b : bits) idx = (idx << 1) | b;
  return idx;
}

Bitstring Bitstring::from_index(int d, std::uint64_t index) {
  Bitstring s(d);
  for (int i = 0; i < d; ++i) s.bits[i] = (index >> (d - 1 - i)) & 1;
  return s;
}

std::string Bitstring::to_string() const {
  std::string out(bits.size(), '0');
  for (int i = 0; i < size(); ++i)
    if (bits[i]) out[i] = '1';
  return out;
}

std::string Bitstring::to_hex() const {
  std::ostringstream os;
  os << std::hex << to_index();
  return os.str();
}

Bitstring Bitstring::parse(std::string_view s) {
  Bitstring out(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      out.bits[i] = 1;
    else if (s[i] != '0')
      throw std::invalid_argument("Bitstring::parse: expected only 0/1");
  }
  return out;
}

Bitstring Bitstring::random(int d, Rng& rng) {
  Bitstring s(d);
  for (int i = 0; i < d; ++i) s.bits[i] = static_cast<std::uint8_t>(rng.bit());
  return s;
}

Bitstring Bitstring::all_ones(int d) {
  Bitstring s(d);
  std::fill(s.bits.begin(), s.bits.end(), std::uint8_t{1});
  return s;
}

// ---- PuzzleInstance ----

namespace {

std::vector<int> draw_targets(int n, int depth, Rng rng) {
  std::vector<int> q;
  if (depth <= n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    for (int i = n - 1; i > 0; --i)
      std::swap(all[i], all[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    q.assign(all.begin(), all.begin() + depth);
  } else {
    q.reserve(depth);
    for (int i = 0; i < depth; ++i)
      q.push_back(static_cast<int>(rng.below(n)) + 1);
  }
  return q;
}

}  // namespace

PuzzleInstance build_instance(int n, int depth, double beta_w, double beta_v, int k,
                              std::uint64_t seed, const std::optional<Bitstring>& s_star) {
  if (n < 1) throw std::invalid_argument("build_instance: n must be >= 1");
  if (depth < 1) throw std::invalid_argument("build_instance: D must be >= 1");
  if (k < 1) throw std::invalid_argument("build_instance: k must be >= 1");
  if (beta_w < 0 || beta_v < 0)
    throw std::invalid_argument("build_instance: beta must be nonnegative");
  if (s_star && s_star->size() != depth)
    throw std::invalid_argument("build_instance: |s_star| must equal D");

  PuzzleInstance inst;
  inst.n = n;
  inst.depth = depth;
  inst.beta_w = beta_w;
  inst.beta_v = beta_v;
  inst.k = k;
  inst.seed = seed;

  Rng root(seed);
  inst.targets = draw_targets(n, depth, root.derive("targets"));
  if (s_star) {
    inst.s_star = *s_star;
  } else {
    Rng hidden = root.derive("hidden");
    inst.s_star = Bitstring::random(depth, hidden);
  }
  Rng rng_w = root.derive("blocks_w");
  Rng rng_v = root.derive("blocks_v");
  inst.herm_w.reserve(depth);
  inst.herm_v.reserve(depth);
  for (int i = 0; i < depth; ++i) {
    inst.herm_w.push_back(sample_random_hermitian(n, k, rng_w.derive(i)));
    inst.herm_v.push_back(sample_random_hermitian(n, k, rng_v.derive(i)));
  }

  PuzzleEngine engine(inst, PuzzleEngine::Mode::MatrixFree);
  Statevector sv = Statevector::zero_state(n);
  for (int i = 0; i < depth; ++i) {
    engine.apply_w(i, sv, false);
    if (inst.s_star[i]) engine.apply_puzzle(i, sv, false);
  }
  inst.target_state = std::move(sv);
  return inst;
}

Statevector prepare_target(const PuzzleInstance& inst) {
  PuzzleEngine engine(inst, PuzzleEngine::Mode::MatrixFree);
  Statevector sv = Statevector::zero_state(inst.n);
  for (int i = 0; i < inst.depth; ++i) {
    engine.apply_w(i, sv, false);
    if (inst.s_star[i]) engine.apply_puzzle(i, sv, false);
  }
  return sv;
}

double loss(const PuzzleInstance& inst, const Bitstring& s) {
  if (s.size() != inst.depth) throw std::invalid_argument("loss: |s| must equal D");
  PuzzleEngine engine(inst, PuzzleEngine::Mode::MatrixFree);
  Statevector sv = inst.target_state;
  apply_ansatz(engine, s, sv);
  return fidelity_loss_of_state(sv);
}

double parity_loss(const PuzzleInstance& inst, const Bitstring& s) {
  if (s.size() != inst.depth) throw std::invalid_argument("parity_loss: |s| must equal D");
  PuzzleEngine engine(inst, PuzzleEngine::Mode::MatrixFree);
  Statevector sv = inst.target_state;
  apply_ansatz(engine, s, sv);
  return parity_loss_of_state(sv);
}

double noisy_loss(const PuzzleInstance& inst, const Bitstring& s, NoisyLossModel& model) {
  return model.observe(loss(inst, s));
}

// ---- JSON persistence ----

namespace {
constexpr int kFormatVersion = 1;
}

std::string instance_to_json(const PuzzleInstance& inst) {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["n"] = inst.n;
  j["D"] = inst.depth;
  j["beta_w"] = inst.beta_w;
  j["beta_v"] = inst.beta_v;
  j["k"] = inst.k;
  j["seed"] = inst.seed;
  j["s_star"] = inst.s_star.to_string();
  j["q"] = inst.targets;
  return j.dump(2);
}

PuzzleInstance instance_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("format_version").get<int>() != kFormatVersion)
    throw std::invalid_argument("instance_from_json: unsupported format_version");
  const Bitstring s_star = Bitstring::parse(j.at("s_star").get<std::string>());
  PuzzleInstance inst =
      build_instance(j.at("n").get<int>(), j.at("D").get<int>(), j.at("beta_w").get<double>(),
                     j.at("beta_v").get<double>(), j.at("k").get<int>(),
                     j.at("seed").get<std::uint64_t>(), s_star);
  const auto q = j.at("q").get<std::vector<int>>();
  if (q != inst.targets)
    throw std::invalid_argument(
        "instance_from_json: stored target qubits disagree with the seed derivation");
  return inst;
}

void save_instance(const PuzzleInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_instance: cannot open " + path);
  out << instance_to_json(inst) << "\n";
  if (!out) throw std::runtime_error("save_instance: write failed for " + path);
}

PuzzleInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_instance: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

}  // namespace qpuzzle
