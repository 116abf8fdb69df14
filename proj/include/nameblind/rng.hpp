// Copyright 2026 The Nameblind Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NAMEBLIND_RNG_HPP_
#define NAMEBLIND_RNG_HPP_

#include <cassert>
#include <cstdint>
#include <string_view>
#include <vector>

namespace nameblind {

// SplitMix64. Standard-library engines and distributions are not guaranteed
// to produce identical streams across implementations; every seeded draw in
// this toolkit goes through this generator so outputs are reproducible
// everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, n). Rejection loop terminates with probability 1.
  std::uint64_t below(std::uint64_t n) {
    assert(n > 0);
    std::uint64_t x, r;
    do {
      x = next();
      r = x % n;
    } while (x - r > UINT64_MAX - (n - 1));
    return r;
  }

  // Uniform double in [0, 1) with 53 bits of entropy.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// FNV-1a over raw bytes.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Stable per-record seed: a function of the global seed and the record
// identifier only, so parallel or reordered corpus processing cannot change
// any record's output.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view record_id) {
  SplitMix64 mix(seed ^ fnv1a64(record_id));
  return mix.next();
}

template <typename T>
void seeded_shuffle(std::vector<T>& values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    using std::swap;
    swap(values[i - 1], values[j]);
  }
}

// k distinct indices drawn from [0, n) in draw order.
inline std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                           std::size_t k,
                                                           SplitMix64& rng) {
  if (k > n) k = n;
  std::vector<std::size_t> indices(n);
  for (std::size_t i = 0; i < n; ++i) indices[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(k);
  return indices;
}

}  // namespace nameblind

#endif  // NAMEBLIND_RNG_HPP_
