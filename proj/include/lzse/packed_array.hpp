#pragma once

#include <vector>

#include "lzse/common.hpp"

namespace lzse {

// Fixed-width bit-packed array (0-based). Cell width is chosen by the owner;
// the workspace uses ceil(lg(n+1)) bits per cell.
class PackedArray {
 public:
  PackedArray() = default;
  PackedArray(u64 size, u32 width) : size_(size), width_(width) {
    if (width == 0 || width > 64) throw std::invalid_argument("PackedArray: bad width");
    words_.assign((size * width + 63) / 64 + 1, 0);
    mask_ = width == 64 ? ~u64(0) : (u64(1) << width) - 1;
  }

  u64 size() const { return size_; }
  u32 width() const { return width_; }
  u64 size_in_bits() const { return size_ * width_; }

  u64 get(u64 i) const {
    const u64 bit = i * width_;
    const u64 w = bit / 64, off = bit % 64;
    u64 v = words_[w] >> off;
    if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
    return v & mask_;
  }

  void set(u64 i, u64 v) {
    const u64 bit = i * width_;
    const u64 w = bit / 64, off = bit % 64;
    words_[w] = (words_[w] & ~(mask_ << off)) | ((v & mask_) << off);
    if (off + width_ > 64) {
      const u64 hi = width_ - (64 - off);  // bits spilling into the next word
      const u64 himask = (u64(1) << hi) - 1;
      words_[w + 1] = (words_[w + 1] & ~himask) | ((v & mask_) >> (64 - off));
    }
  }

  void fill(u64 v) {
    for (u64 i = 0; i < size_; ++i) set(i, v);
  }

 private:
  std::vector<u64> words_;
  u64 size_ = 0;
  u32 width_ = 0;
  u64 mask_ = 0;
};

}  // namespace lzse
