// Copyright 2026 The spikecost Authors
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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spikecost {

/// Row-major integer tensor. `bits` is 1 for spike tensors (values 0/1) or 8
/// for two's-complement int8 payloads. One byte per element in memory; 1-bit
/// tensors are bit-packed only on disk.
class QuantTensor {
 public:
  QuantTensor() = default;
  QuantTensor(std::vector<std::size_t> dims, unsigned bits);

  const std::vector<std::size_t>& dims() const { return dims_; }
  unsigned bits() const { return bits_; }
  std::size_t size() const { return data_.size(); }

  std::int8_t* data() { return data_.data(); }
  const std::int8_t* data() const { return data_.data(); }

  std::int8_t& operator[](std::size_t i) { return data_[i]; }
  std::int8_t operator[](std::size_t i) const { return data_[i]; }

  /// Flat offset of a rank-3 coordinate.
  std::size_t index(std::size_t a, std::size_t b, std::size_t c) const {
    return (a * dims_[1] + b) * dims_[2] + c;
  }
  std::size_t index(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return ((a * dims_[1] + b) * dims_[2] + c) * dims_[3] + d;
  }

  std::size_t count_nonzero() const;

  /// Throws ConfigError if a 1-bit tensor holds anything but 0/1.
  void validate() const;

  bool operator==(const QuantTensor&) const = default;

 private:
  std::vector<std::size_t> dims_;
  unsigned bits_ = 8;
  std::vector<std::int8_t> data_;
};

// On-disk layout, all integers little-endian:
//   bytes 0..3   magic "SQT1"
//   byte  4      element width in bits (1 or 8)
//   byte  5      rank r (1..8)
//   bytes 6..7   reserved, zero
//   r x u64      dimensions, outermost first
//   payload      8-bit: one int8 per element in row-major order;
//                1-bit: ceil(n/8) bytes, element i in bit (i % 8) of byte i/8
void write_tensor(std::ostream& out, const QuantTensor& t);
QuantTensor read_tensor(std::istream& in);
void save_tensor(const QuantTensor& t, const std::string& path);
QuantTensor load_tensor(const std::string& path);

}  // namespace spikecost
