#pragma once

#include "lzse/common.hpp"
#include "lzse/packed_array.hpp"

namespace lzse {

// What the two arenas currently hold. Every phase reinterprets the same
// allocation; nothing is ever reallocated after construction.
enum class Phase {
  Empty,      // freshly allocated
  SA,         // a1 = suffix array
  ISA,        // a1 = inverse suffix array
  SparseISA,  // a1 tail = right-aligned sparse ISA (survivor traversals)
  DList,      // a1 prefix = D (referred-node ranks / referred positions)
  Refs77,     // a1[1..z_r] = referred positions, compacted
  Witness,    // a1[1..z] = encoded witnesses, a1[z+1..] = R region
  Refs78,     // a1[1..z] = referred indices
};

const char* phase_name(Phase p);

// The two arenas of the factorization: A_1 with n cells and A_2 with
// max(1, floor(eps*n)) cells, both ceil(lg(n+1)) bits wide. All positions
// are 1-based, matching the factorization formulas.
class SuffixWorkspace {
 public:
  SuffixWorkspace(u64 n, Rational eps);

  u64 n() const { return n_; }
  Rational eps() const { return eps_; }
  u32 cell_width() const { return width_; }
  u64 a2_cells() const { return a2_.size(); }

  Phase phase() const { return phase_; }
  void set_phase(Phase p) { phase_ = p; }
  void require_phase(Phase p) const;

  u64 a1(u64 i) const { return a1_.get(i - 1); }
  void set_a1(u64 i, u64 v) { a1_.set(i - 1, v); }
  u64 a2(u64 i) const { return a2_.get(i - 1); }
  void set_a2(u64 i, u64 v) { a2_.set(i - 1, v); }
  void clear_a2();

  bool a2_occupied() const { return a2_occupied_; }
  void occupy_a2();   // state error if already occupied
  void release_a2();

  // Exact logical arena size: (n + a2_cells) * cell_width.
  u64 arena_bits() const { return (a1_.size() + a2_.size()) * width_; }

 private:
  u64 n_;
  Rational eps_;
  u32 width_;
  PackedArray a1_, a2_;
  Phase phase_ = Phase::Empty;
  bool a2_occupied_ = false;
};

}  // namespace lzse
