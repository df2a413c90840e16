#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lzse/bitvec.hpp"
#include "lzse/suffix.hpp"

namespace lzse {

// Succinct suffix-tree topology. Nodes are identified by pre-order number
// 1..|V|. The DFUDS sequence is the canonical 2|V|-bit encoding; navigation
// runs on a balanced-parentheses directory (block excess minima plus a
// sparse table), with leaf queries served by a node-indexed bit vector.
// Children are ordered by first edge character, sentinel smallest, which
// makes pre-order numbers deterministic.
class SuccinctSuffixTree {
 public:
  static SuccinctSuffixTree build(const TextBuffer& t, const SuffixWorkspace& ws,
                                  const LcpArray& lcp);  // phase SA

  u64 node_count() const { return node_count_; }
  u64 leaf_count() const { return leaf_count_; }

  u64 parent(u64 v) const;           // v != root
  u64 level_anc(u64 v, u64 i) const; // i <= depth(v); level_anc(v, 0) = v
  u64 depth(u64 v) const;            // edges from the root
  bool is_leaf(u64 v) const;
  u64 leaf_select(u64 i) const;      // i-th leaf in pre-order = lex order
  u64 leaf_rank(u64 v) const;        // leaves with pre-order <= v
  u64 leaf_label(u64 v, const SaAccessor& sa) const;

  u64 subtree_last(u64 v) const;     // largest pre-order in v's subtree
  u64 subtree_leaf_count(u64 v) const;
  std::pair<u64, u64> leaf_interval(u64 v) const;  // leaf ranks [lo, hi]

  u64 first_child(u64 v) const;      // 0 if none
  u64 next_sibling(u64 v) const;     // 0 if none

  u64 str_depth(u64 v, const RmqIndex& rmq, const LcpArray& lcp, const SaAccessor& sa) const;
  u64 edge_label_length(u64 v, const RmqIndex& rmq, const LcpArray& lcp,
                        const SaAccessor& sa) const;

  const BitVector& dfuds() const { return dfuds_; }
  std::vector<u64> dfuds_degrees() const;  // decoded pre-order degrees

  void dump_indented(std::ostream& os, const RmqIndex& rmq, const LcpArray& lcp,
                     const SaAccessor& sa) const;
  void dump_edges(std::ostream& os, const RmqIndex& rmq, const LcpArray& lcp,
                  const SaAccessor& sa) const;

  u64 topology_bits() const { return dfuds_.size_in_bits() + bp_.size_in_bits(); }
  u64 directory_bits() const;

 private:
  SuccinctSuffixTree() = default;
  void build_directories();

  u64 pos_of(u64 v) const { return bp_idx_.select1(v); }
  u64 node_at(u64 p) const { return bp_idx_.rank1(p); }
  i64 excess(u64 p) const { return p == 0 ? 0 : 2 * i64(bp_idx_.rank1(p)) - i64(p); }
  u64 close_of(u64 v) const;
  u64 bwd_excess(u64 from, i64 target) const;  // largest q <= from, excess(q) = target
  u64 fwd_excess(u64 from, i64 target) const;  // smallest q > from, excess(q) = target
  u64 rightmost_block_leq(u64 lo, u64 hi, i64 target) const;
  u64 leftmost_block_leq(u64 lo, u64 hi, i64 target) const;
  i64 range_min_blocks(u64 lo, u64 hi) const;

  u64 node_count_ = 0, leaf_count_ = 0, text_n_ = 0;
  BitVector dfuds_;
  BitVector bp_;
  RankSelectIndex bp_idx_;
  BitVector leaf_bv_;
  RankSelectIndex leaf_idx_;
  std::vector<i32> blk_min_;               // min excess inside each 64-bit block
  std::vector<std::vector<i32>> blk_table_;  // sparse table over block minima
};

// Bit vector over pre-order numbers with rank/select, mapping a marked node
// subset to dense indices.
class NodeMarkingVector {
 public:
  NodeMarkingVector() = default;
  explicit NodeMarkingVector(u64 node_count) : marks_(node_count) {}

  void mark(u64 v) { marks_.set(v); }
  bool marked(u64 v) const { return marks_.get(v); }
  void freeze() { idx_.emplace(marks_); }
  bool frozen() const { return idx_.has_value(); }

  u64 nrank(u64 v) const {
    if (!marks_.get(v)) throw std::out_of_range("nrank: node not marked");
    return idx_->rank1(v);
  }
  u64 select(u64 k) const { return idx_->select1(k); }
  u64 count() const { return idx_ ? idx_->ones() : marks_.count_ones(); }
  u64 size() const { return marks_.size(); }
  u64 size_in_bits() const {
    return marks_.size_in_bits() + (idx_ ? idx_->size_in_bits() : 0);
  }

 private:
  BitVector marks_;
  std::optional<RankSelectIndex> idx_;
};

}  // namespace lzse
