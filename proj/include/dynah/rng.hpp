// Copyright 2026 The dynah Authors
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

#ifndef DYNAH_RNG_HPP_
#define DYNAH_RNG_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace dynah {

/// Seedable pseudo-random source shared by every stochastic operation.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are not, so the conversions to
/// integers, reals and normals are implemented here; the same seed and call
/// sequence give the same numbers on every conforming platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform_real();

  /// Normal(mean, stddev^2) via the Marsaglia polar method.
  double normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Derives a child seed from a parent seed, a tag and an index. Pure.
std::uint64_t derive_seed(std::uint64_t parent, std::string_view tag,
                          std::uint64_t index);

}  // namespace dynah

#endif  // DYNAH_RNG_HPP_
