#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <type_traits>
#include <vector>

#include "mss/zeroed_buffer.hpp"

namespace mss {

// Fixed-size array of T that reads as all zeros until written. Storage is
// allocated in small chunks on first write, so the cost of a large array is
// proportional to the part that is actually touched.
template <typename T>
class LazyArray {
  static_assert(std::is_trivially_copyable_v<T>);

 public:
  static constexpr std::size_t kChunk = 64;

  LazyArray() = default;
  explicit LazyArray(std::size_t size)
      : size_(size), directory_((size + kChunk - 1) / kChunk) {}

  std::size_t size() const { return size_; }

  LazyArray(const LazyArray& other)
      : size_(other.size_), directory_(other.directory_), used_(other.used_) {
    for (const auto& block : other.blocks_) {
      blocks_.push_back(std::make_unique<Chunk[]>(kBlock));
      std::copy(block.get(), block.get() + kBlock, blocks_.back().get());
    }
  }
  LazyArray(LazyArray&&) noexcept = default;
  LazyArray& operator=(LazyArray other) noexcept {
    std::swap(size_, other.size_);
    directory_.swap(other.directory_);
    std::swap(blocks_, other.blocks_);
    std::swap(used_, other.used_);
    return *this;
  }

  T get(std::size_t i) const {
    const std::uint32_t c = directory_[i / kChunk];
    return c == 0 ? T{} : chunk(c - 1)[i % kChunk];
  }

  T& ref(std::size_t i) {
    std::uint32_t& c = directory_[i / kChunk];
    if (c == 0) {
      if (used_ == blocks_.size() * kBlock) blocks_.push_back(std::make_unique<Chunk[]>(kBlock));
      c = static_cast<std::uint32_t>(++used_);
    }
    return chunk(c - 1)[i % kChunk];
  }

 private:
  using Chunk = std::array<T, kChunk>;
  // Chunks per separately allocated block; blocks never move.
  static constexpr std::size_t kBlock = 64;

  Chunk& chunk(std::size_t k) const { return blocks_[k / kBlock][k % kBlock]; }

  std::size_t size_ = 0;
  // Chunk index + 1, or 0 for an untouched chunk.
  ZeroedBuffer<std::uint32_t> directory_;
  std::vector<std::unique_ptr<Chunk[]>> blocks_;
  std::size_t used_ = 0;
};

}  // namespace mss
