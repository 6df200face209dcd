#pragma once

#include <sys/mman.h>

#include <cstddef>
#include <cstring>
#include <new>
#include <type_traits>
#include <utility>

namespace mss {

// Fixed-size array of trivially-constructible T whose storage starts zeroed.
// Large buffers come from anonymous mappings, so untouched pages are never
// materialized and construction does not pay for the full size.
template <typename T>
class ZeroedBuffer {
  static_assert(std::is_trivially_copyable_v<T>);

 public:
  ZeroedBuffer() = default;

  explicit ZeroedBuffer(std::size_t size) : size_(size) {
    if (size == 0) return;
    bytes_ = size * sizeof(T);
    if (bytes_ >= kMapThreshold) {
      void* p = ::mmap(nullptr, bytes_, PROT_READ | PROT_WRITE,
                       MAP_PRIVATE | MAP_ANONYMOUS, -1, 0);
      if (p == MAP_FAILED) throw std::bad_alloc();
      data_ = static_cast<T*>(p);
      mapped_ = true;
    } else {
      data_ = static_cast<T*>(::operator new(bytes_));
      std::memset(static_cast<void*>(data_), 0, bytes_);
    }
  }

  ZeroedBuffer(const ZeroedBuffer& other) : ZeroedBuffer(other.size_) {
    if (size_ != 0) std::memcpy(static_cast<void*>(data_), other.data_, bytes_);
  }

  ZeroedBuffer(ZeroedBuffer&& other) noexcept { swap(other); }

  ZeroedBuffer& operator=(ZeroedBuffer other) noexcept {
    swap(other);
    return *this;
  }

  ~ZeroedBuffer() { release(); }

  void swap(ZeroedBuffer& other) noexcept {
    std::swap(data_, other.data_);
    std::swap(size_, other.size_);
    std::swap(bytes_, other.bytes_);
    std::swap(mapped_, other.mapped_);
  }

  std::size_t size() const { return size_; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

 private:
  static constexpr std::size_t kMapThreshold = 1 << 16;

  void release() noexcept {
    if (data_ == nullptr) return;
    if (mapped_) {
      ::munmap(data_, bytes_);
    } else {
      ::operator delete(data_);
    }
    data_ = nullptr;
  }

  T* data_ = nullptr;
  std::size_t size_ = 0;
  std::size_t bytes_ = 0;
  bool mapped_ = false;
};

}  // namespace mss
