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

#include "covplan/edge_set.hpp"

#include <bit>
#include <stdexcept>

namespace covplan {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

}  // namespace

EdgeSet::EdgeSet(std::size_t size) : size_(size), words_(words_for(size), 0) {}

EdgeSet EdgeSet::from_string(std::string_view bits) {
  EdgeSet out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("EdgeSet::from_string: expected only '0'/'1'");
    }
  }
  return out;
}

bool EdgeSet::test(std::size_t edge) const {
  if (edge >= size_) throw std::out_of_range("EdgeSet::test: edge out of range");
  return (words_[edge / kWordBits] >> (edge % kWordBits)) & 1U;
}

void EdgeSet::set(std::size_t edge, bool value) {
  if (edge >= size_) throw std::out_of_range("EdgeSet::set: edge out of range");
  const std::uint64_t mask = std::uint64_t{1} << (edge % kWordBits);
  if (value) {
    words_[edge / kWordBits] |= mask;
  } else {
    words_[edge / kWordBits] &= ~mask;
  }
}

void EdgeSet::flip(std::size_t edge) {
  if (edge >= size_) throw std::out_of_range("EdgeSet::flip: edge out of range");
  words_[edge / kWordBits] ^= std::uint64_t{1} << (edge % kWordBits);
}

void EdgeSet::reset() noexcept {
  for (auto& w : words_) w = 0;
}

std::size_t EdgeSet::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool EdgeSet::none() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<std::size_t> EdgeSet::active() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::string EdgeSet::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

std::uint64_t EdgeSet::to_u64() const {
  if (size_ > kWordBits) {
    throw std::length_error("EdgeSet::to_u64: more than 64 edges");
  }
  return words_.empty() ? 0 : words_[0];
}

EdgeSet EdgeSet::from_u64(std::uint64_t bits, std::size_t size) {
  if (size > kWordBits) {
    throw std::length_error("EdgeSet::from_u64: more than 64 edges");
  }
  EdgeSet out(size);
  if (size == 0) return out;
  if (size < kWordBits) bits &= (std::uint64_t{1} << size) - 1;
  out.words_[0] = bits;
  return out;
}

std::size_t EdgeSet::hash() const noexcept {
  // FNV-1a over the words, then the length.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  h ^= size_;
  h *= 1099511628211ULL;
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const EdgeSet& lhs, const EdgeSet& rhs) noexcept {
  const std::size_t common = std::min(lhs.words_.size(), rhs.words_.size());
  for (std::size_t wi = 0; wi < common; ++wi) {
    const std::uint64_t diff = lhs.words_[wi] ^ rhs.words_[wi];
    if (diff != 0) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (lhs.words_[wi] & lowest) ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    }
  }
  return lhs.size_ <=> rhs.size_;
}

}  // namespace covplan
