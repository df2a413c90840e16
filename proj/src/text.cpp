#include "lzse/text.hpp"

#include <algorithm>

namespace lzse {

TextBuffer TextBuffer::from_values(std::span<const u32> values) {
  if (values.empty()) throw std::invalid_argument("TextBuffer: empty input");
  std::vector<u32> alphabet(values.begin(), values.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  TextBuffer t;
  t.alphabet_ = std::move(alphabet);
  t.sigma_ = u32(t.alphabet_.size() + 1);
  t.symbols_.reserve(values.size() + 1);
  for (u32 v : values) {
    const u64 rank =
        std::lower_bound(t.alphabet_.begin(), t.alphabet_.end(), v) - t.alphabet_.begin();
    t.symbols_.push_back(u32(rank + 1));
  }
  t.symbols_.push_back(0);  // sentinel, strictly smallest
  return t;
}

TextBuffer TextBuffer::from_bytes(std::span<const u8> bytes) {
  std::vector<u32> vals(bytes.begin(), bytes.end());
  return from_values(vals);
}

TextBuffer TextBuffer::from_string(const std::string& s) {
  return from_bytes(std::span<const u8>(reinterpret_cast<const u8*>(s.data()), s.size()));
}

}  // namespace lzse
