#pragma once

#include "lzse/bitvec.hpp"
#include "lzse/packed_array.hpp"
#include "lzse/text.hpp"
#include "lzse/workspace.hpp"

namespace lzse {

// Induced-sorting suffix array construction into A_1 (phase -> SA).
// a1[i] = start of the lexicographically i-th suffix, 1-based.
void build_suffix_array(const TextBuffer& t, SuffixWorkspace& ws);

// Overwrites the suffix array with its inverse, cycle by cycle, using an
// n-bit visited vector (phase SA -> ISA).
void invert_in_place(SuffixWorkspace& ws);

// Cycle-sampled access to SA values while only ISA is resident. Samples
// every (2*ceil(1/eps))-th element along each permutation cycle into A_2
// (every element when eps = 1), so a query walks at most 2*ceil(1/eps)-1
// cycle steps: forward to the nearest sample, one jump back, forward again.
class SampledInverse {
 public:
  SampledInverse(SuffixWorkspace& ws);  // phase ISA; occupies A_2
  ~SampledInverse();

  SampledInverse(const SampledInverse&) = delete;
  SampledInverse& operator=(const SampledInverse&) = delete;

  u64 sa(u64 i) const;  // position j with ISA[j] = i
  u64 gap() const { return gap_; }
  u64 sample_count() const { return samples_; }
  u64 max_steps_seen() const { return max_steps_; }
  u64 aux_bits() const;

 private:
  SuffixWorkspace* ws_;
  BitVector sampled_;
  RankSelectIndex sampled_idx_;
  u64 gap_ = 1;
  u64 samples_ = 0;
  mutable u64 max_steps_ = 0;
};

// LCP over lexicographically adjacent suffixes; values[i] for i >= 2.
// Stored in plain packed cells outside the arenas; the auditor reports it
// as its own line.
class LcpArray {
 public:
  LcpArray() = default;
  LcpArray(u64 n, u32 width) : values_(n + 1, width), n_(n) {}

  u64 n() const { return n_; }
  u64 get(u64 i) const {  // i = 1 gives 0 by convention
    if (i < 1 || i > n_) throw std::out_of_range("LcpArray::get");
    return values_.get(i);
  }
  void set(u64 i, u64 v) { values_.set(i, v); }
  u64 size_in_bits() const { return values_.size_in_bits(); }

 private:
  PackedArray values_;
  u64 n_ = 0;
};

// Kasai-style construction over the phi array, entirely inside the LCP
// allocation plus an n-bit visited vector for the in-place rank reorder.
LcpArray build_lcp(const TextBuffer& t, const SuffixWorkspace& ws);  // phase SA

// Range minimum over the LCP array: 64-cell blocks with a sparse table over
// block minima; ties break to the leftmost index.
class RmqIndex {
 public:
  RmqIndex() = default;
  explicit RmqIndex(const LcpArray& lcp);

  u64 rmq(u64 i, u64 j) const;  // leftmost index of a minimum in values[i..j]
  u64 size_in_bits() const;

 private:
  u64 block_argmin(u64 b, u64 lo, u64 hi) const;  // scan within block b
  const LcpArray* lcp_ = nullptr;
  std::vector<u64> block_min_;
  std::vector<u64> block_arg_;
  std::vector<std::vector<u32>> table_;  // sparse table of block indices
};

// Uniform handle for SA value access: direct while SA is resident, through
// the sampled inverse once A_1 holds ISA. str_depth and leaf labels take
// this handle so the phase discipline stays explicit.
class SaAccessor {
 public:
  static SaAccessor direct(const SuffixWorkspace& ws);
  static SaAccessor sampled(const SampledInverse& si);
  u64 sa(u64 i) const;

 private:
  SaAccessor() = default;
  const SuffixWorkspace* ws_ = nullptr;
  const SampledInverse* si_ = nullptr;
};

}  // namespace lzse
