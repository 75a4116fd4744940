// Copyright 2026 The cagegen Authors
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

#ifndef CAGEGEN_BITSET_HPP_
#define CAGEGEN_BITSET_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cagegen {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Word-level helpers over rows of packed bits. Bit i lives in word i/64,
// position i%64.
namespace bits {

inline bool test(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}
inline void set(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] |= Word{1} << (i % kWordBits);
}
inline void reset(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return c;
}

inline bool any(std::span<const Word> row) {
  for (Word w : row) {
    if (w != 0) return true;
  }
  return false;
}

// Smallest set bit at index >= from, or -1.
inline int next(std::span<const Word> row, std::size_t from) {
  std::size_t wi = from / kWordBits;
  if (wi >= row.size()) return -1;
  Word w = row[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) {
      return static_cast<int>(wi * kWordBits +
                              static_cast<std::size_t>(std::countr_zero(w)));
    }
    if (++wi >= row.size()) return -1;
    w = row[wi];
  }
}

inline int first(std::span<const Word> row) { return next(row, 0); }

// Smallest set bit of (a & b), or -1.
inline int first_and(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Word w = a[i] & b[i];
    if (w != 0) {
      return static_cast<int>(i * kWordBits +
                              static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return -1;
}

template <typename F>
void for_each(std::span<const Word> row, F&& f) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    Word w = row[i];
    while (w != 0) {
      f(static_cast<int>(i * kWordBits +
                         static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
}

}  // namespace bits

// A set of vertices drawn from the universe {0, ..., universe-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}

  std::size_t universe() const { return universe_; }
  bool contains(int v) const {
    return bits::test(words_, static_cast<std::size_t>(v));
  }
  void insert(int v) { bits::set(words_, static_cast<std::size_t>(v)); }
  void erase(int v) { bits::reset(words_, static_cast<std::size_t>(v)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  void fill() {
    std::fill(words_.begin(), words_.end(), ~Word{0});
    trim();
  }

  std::size_t size() const { return bits::count(words_); }
  bool empty() const { return !bits::any(words_); }
  int first() const { return bits::first(words_); }
  int next(int v) const {
    return bits::next(words_, static_cast<std::size_t>(v) + 1);
  }

  template <typename F>
  void for_each(F&& f) const {
    bits::for_each(words_, std::forward<F>(f));
  }
  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
    }
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

// rows x cols bits stored contiguously, one padded word-run per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)),
        data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  std::span<const Word> row(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }
  std::span<Word> row(std::size_t r) {
    return {data_.data() + r * stride_, stride_};
  }
  bool test(std::size_t r, std::size_t c) const { return bits::test(row(r), c); }
  void set(std::size_t r, std::size_t c) { bits::set(row(r), c); }
  void reset(std::size_t r, std::size_t c) { bits::reset(row(r), c); }
  void clear() { std::fill(data_.begin(), data_.end(), 0); }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace cagegen

#endif  // CAGEGEN_BITSET_HPP_
