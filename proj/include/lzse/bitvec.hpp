#pragma once

#include <string>
#include <vector>

#include "lzse/common.hpp"

namespace lzse {

// Plain bit vector with 1-based positions, matching the index arithmetic of
// the factorization formulas. Mutable until a rank/select index is attached,
// immutable afterwards.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(u64 len, bool fill = false);

  u64 size() const { return len_; }
  bool get(u64 i) const;             // 1 <= i <= len
  void set(u64 i, bool bit = true);  // forbidden once sealed
  bool sealed() const { return sealed_; }

  u64 count_ones() const;
  void clear_all();  // zero every bit; forbidden once sealed
  u64 size_in_bits() const { return len_; }  // payload, for the space audit

  // "0"/"1" strings, leftmost character = position 1.
  static BitVector from_string(const std::string& bits);
  std::string to_string() const;

 private:
  friend class RankSelectIndex;
  std::vector<u64> words_;
  u64 len_ = 0;
  bool sealed_ = false;
};

// Two-level rank directory (4096-bit superblocks over 64-bit words) with
// in-word popcount; select searches the directory, then scans one superblock.
// Attaching the index seals the vector.
class RankSelectIndex {
 public:
  RankSelectIndex() = default;
  explicit RankSelectIndex(BitVector& bv);

  RankSelectIndex(const RankSelectIndex&) = delete;
  RankSelectIndex& operator=(const RankSelectIndex&) = delete;
  RankSelectIndex(RankSelectIndex&&) = default;
  RankSelectIndex& operator=(RankSelectIndex&&) = default;

  u64 rank1(u64 i) const;  // ones in B[1..i]; i = 0 gives 0
  u64 rank0(u64 i) const { return i - rank1(i); }
  u64 select1(u64 k) const;  // position of the k-th one, 1 <= k <= ones()
  u64 select0(u64 k) const;

  u64 ones() const { return ones_; }
  u64 zeros() const { return bv_->len_ - ones_; }
  u64 size() const { return bv_->len_; }
  u64 size_in_bits() const;  // directory overhead

 private:
  static constexpr u64 kWordsPerSuper = 64;  // 4096 bits
  u64 word_rank(u64 w) const;                // ones before word w

  const BitVector* bv_ = nullptr;
  std::vector<u64> super_;     // ones before each superblock
  std::vector<u16> word_rel_;  // ones before each word, within its superblock
  u64 ones_ = 0;
};

// Builds the directory; empty vectors are rejected.
RankSelectIndex build_index(BitVector& bv);

}  // namespace lzse
