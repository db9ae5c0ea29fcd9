// Copyright 2026 The graphcumulants Authors
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
#ifndef GRAPHCUMULANTS_RNG_HPP_
#define GRAPHCUMULANTS_RNG_HPP_

#include <cstdint>

namespace gc {

inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based generator: draw i of stream s under seed k is a pure function
// of (k, s, i), so parallel schedules cannot change results.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream)
      : key_(SplitMix64(seed ^ SplitMix64(stream + 0x632be59bd9b4e019ULL))) {}

  uint64_t at(uint64_t index) const { return SplitMix64(key_ + SplitMix64(index)); }
  uint64_t next() { return at(counter_++); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform_at(uint64_t index) const {
    return static_cast<double>(at(index) >> 11) * 0x1.0p-53;
  }
  // Uniform in [0, n) without modulo bias.
  uint64_t below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do x = next(); while (x >= limit);
    return x % n;
  }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace gc

#endif  // GRAPHCUMULANTS_RNG_HPP_
