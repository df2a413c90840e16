#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lzse {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i32 = std::int32_t;
using i64 = std::int64_t;

// Wrong workspace phase or operation sequencing.
class StateError : public std::logic_error {
 public:
  explicit StateError(const std::string& what) : std::logic_error(what) {}
};

// A broken internal invariant; reaching one of these is a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Epsilon is kept as an exact rational so that cell counts, sampling gaps and
// chunk sizes are reproducible across platforms.
struct Rational {
  u32 num = 1;
  u32 den = 1;

  u64 floor_mul(u64 x) const { return x * num / den; }  // floor(x * num/den)
  u64 ceil_inverse() const { return (den + num - 1) / num; }  // ceil(den/num)
  bool is_one() const { return num == den; }
  double value() const { return double(num) / double(den); }
};

// ceil(lg(x+1)): the cell width of the workspace arrays for x = n.
inline u32 bits_for(u64 x) { return x == 0 ? 1 : u32(std::bit_width(x)); }

inline void check(bool cond, const char* msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace lzse
