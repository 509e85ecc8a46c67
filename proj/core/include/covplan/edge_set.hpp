// Copyright 2026 The covplan Authors
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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace covplan {

/// Fixed-size bit vector over the edges of a grid, one bit per decision
/// variable x_e.
///
/// Ordering is lexicographic over the bit string read from edge 0 upward:
/// at the first differing edge, the set with the inactive bit sorts first.
/// This is the order used for deterministic tie-breaking in the solvers.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t size);

  /// Parses a string of '0'/'1' characters, character i giving edge i.
  static EdgeSet from_string(std::string_view bits);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool test(std::size_t edge) const;
  void set(std::size_t edge, bool value = true);
  void flip(std::size_t edge);
  void reset() noexcept;

  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool none() const noexcept;

  /// Active edge indices in ascending order.
  [[nodiscard]] std::vector<std::size_t> active() const;

  /// '0'/'1' string, character i is edge i.
  [[nodiscard]] std::string to_string() const;

  /// Low 64 bits as an integer (bit i = edge i). Requires size() <= 64.
  [[nodiscard]] std::uint64_t to_u64() const;
  static EdgeSet from_u64(std::uint64_t bits, std::size_t size);

  [[nodiscard]] std::size_t hash() const noexcept;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend std::strong_ordering operator<=>(const EdgeSet& lhs,
                                          const EdgeSet& rhs) noexcept;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& set) const noexcept {
    return set.hash();
  }
};

}  // namespace covplan
