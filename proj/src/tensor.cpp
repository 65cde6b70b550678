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

#include "spikecost/tensor.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include "spikecost/error.hpp"

namespace spikecost {

namespace {

constexpr std::array<char, 4> kMagic = {'S', 'Q', 'T', '1'};
constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 32;

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  if (!in) throw ConfigError("truncated tensor header");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

QuantTensor::QuantTensor(std::vector<std::size_t> dims, unsigned bits)
    : dims_(std::move(dims)), bits_(bits) {
  if (bits_ != 1 && bits_ != 8) throw ConfigError("tensor width must be 1 or 8 bits");
  if (dims_.empty()) throw ConfigError("tensor needs at least one dimension");
  std::size_t n = 1;
  for (auto d : dims_) {
    if (d != 0 && n > SIZE_MAX / d) throw ConfigError("tensor dimensions overflow");
    n *= d;
  }
  data_.assign(n, 0);
}

std::size_t QuantTensor::count_nonzero() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](std::int8_t v) { return v != 0; }));
}

void QuantTensor::validate() const {
  if (bits_ == 1 &&
      std::any_of(data_.begin(), data_.end(), [](std::int8_t v) { return v != 0 && v != 1; })) {
    throw ConfigError("1-bit tensor holds values other than 0/1");
  }
}

void write_tensor(std::ostream& out, const QuantTensor& t) {
  t.validate();
  out.write(kMagic.data(), kMagic.size());
  const char hdr[4] = {static_cast<char>(t.bits()), static_cast<char>(t.dims().size()), 0, 0};
  out.write(hdr, 4);
  for (auto d : t.dims()) put_u64(out, d);
  if (t.bits() == 8) {
    out.write(reinterpret_cast<const char*>(t.data()), static_cast<std::streamsize>(t.size()));
  } else {
    std::vector<char> packed((t.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i]) packed[i / 8] = static_cast<char>(packed[i / 8] | (1 << (i % 8)));
    }
    out.write(packed.data(), static_cast<std::streamsize>(packed.size()));
  }
  if (!out) throw ComputeError("tensor write failed");
}

QuantTensor read_tensor(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw ConfigError("not a tensor file (bad magic)");
  unsigned char hdr[4];
  in.read(reinterpret_cast<char*>(hdr), 4);
  if (!in) throw ConfigError("truncated tensor header");
  const unsigned bits = hdr[0];
  const unsigned rank = hdr[1];
  if (rank < 1 || rank > 8) throw ConfigError("tensor rank must be in [1, 8]");
  std::vector<std::size_t> dims(rank);
  std::uint64_t elements = 1;
  for (auto& d : dims) {
    const std::uint64_t v = get_u64(in);
    if (v != 0 && elements > kMaxElements / v) throw ConfigError("tensor header declares too many elements");
    elements *= v;
    d = static_cast<std::size_t>(v);
  }

  QuantTensor t(std::move(dims), bits);
  if (bits == 8) {
    in.read(reinterpret_cast<char*>(t.data()), static_cast<std::streamsize>(t.size()));
    if (!in) throw ConfigError("truncated tensor payload");
  } else {
    std::vector<unsigned char> packed((t.size() + 7) / 8);
    in.read(reinterpret_cast<char*>(packed.data()), static_cast<std::streamsize>(packed.size()));
    if (!in) throw ConfigError("truncated tensor payload");
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = (packed[i / 8] >> (i % 8)) & 1;
  }
  return t;
}

void save_tensor(const QuantTensor& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ComputeError("cannot write '" + path + "'");
  write_tensor(out, t);
}

QuantTensor load_tensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open tensor file '" + path + "'");
  return read_tensor(in);
}

}  // namespace spikecost
