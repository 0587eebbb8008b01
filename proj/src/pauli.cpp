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

#include "qpuzzle/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qpuzzle {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
  }
  throw std::invalid_argument(std::string("unknown Pauli letter: ") + c);
}

PauliString PauliString::parse(std::string_view word, std::complex<double> ph) {
  std::vector<Pauli> ls;
  ls.reserve(word.size());
  for (char c : word) ls.push_back(pauli_from_char(c));
  return PauliString(std::move(ls), ph);
}

bool PauliString::off_diagonal() const {
  return std::any_of(letters.begin(), letters.end(),
                     [](Pauli p) { return p == Pauli::X || p == Pauli::Y; });
}

bool PauliString::xy_only() const {
  return std::none_of(letters.begin(), letters.end(), [](Pauli p) { return p == Pauli::Z; });
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(letters.size());
  for (Pauli p : letters) s.push_back(pauli_char(p));
  return s;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (width() != other.width())
    throw std::invalid_argument("PauliString::commutes_with: width mismatch");
  int anti = 0;
  for (int j = 0; j < width(); ++j) {
    Pauli a = letters[j], b = other.letters[j];
    if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
  }
  return (anti % 2) == 0;
}

std::uint64_t PauliString::x_mask() const {
  std::uint64_t m = 0;
  const int n = width();
  for (int j = 0; j < n; ++j)
    if (letters[j] == Pauli::X || letters[j] == Pauli::Y) m |= 1ull << (n - 1 - j);
  return m;
}

std::uint64_t PauliString::z_mask() const {
  std::uint64_t m = 0;
  const int n = width();
  for (int j = 0; j < n; ++j)
    if (letters[j] == Pauli::Z || letters[j] == Pauli::Y) m |= 1ull << (n - 1 - j);
  return m;
}

std::complex<double> PauliString::amplitude_prefactor() const {
  int ny = static_cast<int>(std::count(letters.begin(), letters.end(), Pauli::Y));
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return phase * ipow[ny % 4];
}

RandomHermitian::RandomHermitian(std::vector<PauliString> strings)
    : strings_(std::move(strings)) {
  if (strings_.empty()) throw std::invalid_argument("RandomHermitian: empty term list");
  n_ = strings_.front().width();
  for (const auto& p : strings_) {
    if (p.width() != n_) throw std::invalid_argument("RandomHermitian: mixed widths");
    if (!p.off_diagonal()) throw std::invalid_argument("RandomHermitian: diagonal term");
    if (p.phase.imag() != 0.0)
      throw std::invalid_argument("RandomHermitian: non-real term phase");
  }
  norm_ = 1.0 / std::sqrt(static_cast<double>(strings_.size()));
  masks_.reserve(strings_.size());
  for (const auto& p : strings_)
    masks_.push_back({p.x_mask(), p.z_mask(), norm_ * p.amplitude_prefactor()});
}

std::vector<PauliString> sample_offdiagonal_strings(int n, int k, Rng rng, bool dedup) {
  if (n < 1) throw std::invalid_argument("sample_offdiagonal_strings: n must be >= 1");
  if (k < 1) throw std::invalid_argument("sample_offdiagonal_strings: k must be >= 1");
  if (dedup) {
    // Exactly 3^n - 1 distinct off-diagonal words exist over {I, X, Y}.
    double options = std::pow(3.0, n) - 1.0;
    if (n < 40 && static_cast<double>(k) > options)
      throw std::invalid_argument("sample_offdiagonal_strings: k exceeds 3^n - 1 distinct words");
  }
  std::vector<PauliString> out;
  out.reserve(k);
  std::set<std::vector<Pauli>> seen;
  while (static_cast<int>(out.size()) < k) {
    std::vector<Pauli> letters(n);
    bool diag = true;
    for (int j = 0; j < n; ++j) {
      auto c = static_cast<Pauli>(rng.below(3));  // I, X or Y
      letters[j] = c;
      if (c != Pauli::I) diag = false;
    }
    if (diag) continue;
    if (dedup && !seen.insert(letters).second) continue;
    out.emplace_back(std::move(letters));
  }
  return out;
}

RandomHermitian sample_random_hermitian(int n, int k, Rng rng) {
  return RandomHermitian(sample_offdiagonal_strings(n, k, rng));
}

}  // namespace qpuzzle
