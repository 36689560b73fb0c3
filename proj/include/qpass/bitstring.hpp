// Copyright 2026 The qpass Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qpass {

/// Fixed-length string over {0,1}.
///
/// Position 0 is the leftmost character of the textual form and the most
/// significant bit of the matching amplitude index, so "10" names the basis
/// ket |1,0⟩ with index 2. The canonical '0'/'1' text doubles as the map key
/// and wire format everywhere in this library.
class BitString {
 public:
  BitString() = default;

  explicit BitString(std::string_view text) : bits_(text) {
    for (char c : bits_) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument(
            "BitString: expected only '0' and '1' characters, got \"" +
            bits_ + "\"");
      }
    }
  }

  static BitString zeros(std::size_t n) { return BitString(std::string(n, '0')); }

  /// MSB-first expansion of `index` into `n` bits. Requires n <= 64.
  static BitString from_index(std::uint64_t index, std::size_t n) {
    if (n > 64) throw std::invalid_argument("BitString: from_index supports at most 64 bits");
    std::string text(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if ((index >> (n - 1 - i)) & 1u) text[i] = '1';
    }
    return BitString(text);
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  bool bit(std::size_t i) const {
    check_index(i);
    return bits_[i] == '1';
  }

  BitString flipped(std::size_t i) const {
    check_index(i);
    BitString out = *this;
    out.bits_[i] = out.bits_[i] == '0' ? '1' : '0';
    return out;
  }

  /// XOR of all bits.
  bool parity() const {
    bool odd = false;
    for (char c : bits_) odd ^= (c == '1');
    return odd;
  }

  /// MSB-first integer value. Requires size() <= 64.
  std::uint64_t to_index() const {
    if (size() > 64) throw std::invalid_argument("BitString: to_index supports at most 64 bits");
    std::uint64_t index = 0;
    for (char c : bits_) index = (index << 1) | (c == '1' ? 1u : 0u);
    return index;
  }

  const std::string& str() const { return bits_; }

  friend BitString operator^(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) {
      throw std::invalid_argument("BitString: xor of strings with different lengths (" +
                                  std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
    BitString out = a;
    for (std::size_t i = 0; i < out.bits_.size(); ++i) {
      out.bits_[i] = (a.bits_[i] != b.bits_[i]) ? '1' : '0';
    }
    return out;
  }

  bool operator==(const BitString&) const = default;
  auto operator<=>(const BitString&) const = default;

 private:
  void check_index(std::size_t i) const {
    if (i >= bits_.size()) {
      throw std::out_of_range("BitString: position " + std::to_string(i) +
                              " out of range for length " + std::to_string(bits_.size()));
    }
  }

  std::string bits_;
};

}  // namespace qpass
