#pragma once

#include <span>
#include <vector>

#include "lzse/common.hpp"

namespace lzse {

// Read-only input text over an integer alphabet, 1-based, with a unique
// sentinel appended at position n that compares smaller than every symbol.
// Input values are remapped to dense ranks 1..sigma (order-preserving); the
// sentinel is rank 0. The factorization is invariant under this remap, and
// literals are translated back through `original` when serialized.
class TextBuffer {
 public:
  static TextBuffer from_bytes(std::span<const u8> bytes);
  static TextBuffer from_values(std::span<const u32> values);
  static TextBuffer from_string(const std::string& s);  // convenience for tests

  u64 n() const { return symbols_.size(); }  // includes the sentinel
  u32 sigma() const { return sigma_; }       // distinct symbols incl. sentinel

  // Dense symbol at 1-based position i; at(n) == 0 (the sentinel).
  u32 at(u64 i) const { return symbols_[i - 1]; }
  bool is_sentinel(u64 i) const { return at(i) == 0; }

  // Original input value of a dense symbol (1 <= sym <= sigma-1).
  u32 original(u32 sym) const { return alphabet_[sym - 1]; }

  const std::vector<u32>& symbols() const { return symbols_; }

 private:
  std::vector<u32> symbols_;   // dense symbols, sentinel 0 at the end
  std::vector<u32> alphabet_;  // dense rank-1 -> original value, ascending
  u32 sigma_ = 0;
};

}  // namespace lzse
