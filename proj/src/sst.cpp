#include "lzse/sst.hpp"

#include <algorithm>

namespace lzse {

namespace {
constexpr u64 kNone = ~u64(0);
}

SuccinctSuffixTree SuccinctSuffixTree::build(const TextBuffer& t, const SuffixWorkspace& ws,
                                             const LcpArray& lcp) {
  ws.require_phase(Phase::SA);
  const u64 n = t.n();
  SuccinctSuffixTree st;
  st.text_n_ = n;

  if (n == 1) {
    // single node that is root and leaf at once
    st.node_count_ = 1;
    st.leaf_count_ = 1;
    st.bp_ = BitVector::from_string("10");
    st.dfuds_ = BitVector::from_string("10");  // dummy open + root close
    st.leaf_bv_ = BitVector(1);
    st.leaf_bv_.set(1);
    st.bp_idx_ = RankSelectIndex(st.bp_);
    st.leaf_idx_ = RankSelectIndex(st.leaf_bv_);
    st.build_directories();
    return st;
  }

  // Stack construction over SA/LCP. Transient first-child/next-sibling
  // arrays; parent links are fixed when a node is popped.
  struct Raw {
    u64 depth;
    u32 first_child = 0, last_child = 0, next_sibling = 0;  // raw ids, 0 = none
    u64 leaf_label = 0;
  };
  std::vector<Raw> raw;
  raw.reserve(2 * n);
  raw.push_back({});  // id 0 unused
  auto make = [&](u64 depth, u64 label) {
    raw.push_back({depth, 0, 0, 0, label});
    return u32(raw.size() - 1);
  };
  auto attach = [&](u32 parent, u32 child) {
    if (raw[parent].first_child == 0)
      raw[parent].first_child = child;
    else
      raw[raw[parent].last_child].next_sibling = child;
    raw[parent].last_child = child;
  };
  const u32 root = make(0, 0);
  std::vector<u32> stack{root};
  auto pop_to = [&](u64 l) {
    while (raw[stack.back()].depth > l) {
      const u32 x = stack.back();
      stack.pop_back();
      const u32 top = stack.back();
      if (raw[top].depth >= l) {
        attach(top, x);
      } else {
        const u32 mid = make(l, 0);
        attach(mid, x);
        stack.push_back(mid);
      }
    }
  };
  for (u64 i = 1; i <= n; ++i) {
    pop_to(i == 1 ? 0 : lcp.get(i));
    stack.push_back(make(n - ws.a1(i) + 1, ws.a1(i)));
  }
  pop_to(0);
  check(stack.size() == 1 && stack[0] == root, "suffix tree build: unbalanced stack");

  const u64 nodes = raw.size() - 1;
  st.node_count_ = nodes;
  st.leaf_count_ = n;
  st.bp_ = BitVector(2 * nodes);
  st.dfuds_ = BitVector(2 * nodes);
  st.leaf_bv_ = BitVector(nodes);

  // pre-order DFS emitting BP, DFUDS and the leaf vector
  u64 bp_pos = 0, df_pos = 0, pre = 0;
  st.dfuds_.set(++df_pos);  // leading dummy open
  auto emit_node = [&](u32 id) {
    st.bp_.set(++bp_pos);
    ++pre;
    u64 deg = 0;
    for (u32 g = raw[id].first_child; g; g = raw[g].next_sibling) ++deg;
    for (u64 k = 0; k < deg; ++k) st.dfuds_.set(++df_pos);
    ++df_pos;  // closing ')' stays zero
    if (deg == 0) st.leaf_bv_.set(pre);
  };
  std::vector<std::pair<u32, u32>> dfs;  // (raw id, next unvisited child)
  emit_node(root);
  dfs.emplace_back(root, raw[root].first_child);
  while (!dfs.empty()) {
    auto& [v, child] = dfs.back();
    (void)v;
    if (child == 0) {
      ++bp_pos;  // ')' on exit
      dfs.pop_back();
      continue;
    }
    const u32 c = child;
    child = raw[c].next_sibling;
    emit_node(c);
    dfs.emplace_back(c, raw[c].first_child);
  }
  check(bp_pos == 2 * nodes && df_pos == 2 * nodes, "paren emission out of balance");

  st.bp_idx_ = RankSelectIndex(st.bp_);
  st.leaf_idx_ = RankSelectIndex(st.leaf_bv_);
  st.build_directories();
  return st;
}

void SuccinctSuffixTree::build_directories() {
  const u64 m = bp_.size();
  const u64 blocks = (m + 63) / 64;
  blk_min_.assign(blocks, 0);
  i64 e = 0;
  for (u64 b = 0; b < blocks; ++b) {
    i64 mn = i64(m) + 1;
    const u64 hi = std::min(m, (b + 1) * 64);
    for (u64 p = b * 64 + 1; p <= hi; ++p) {
      e += bp_.get(p) ? 1 : -1;
      mn = std::min(mn, e);
    }
    blk_min_[b] = i32(mn);
  }
  u32 levels = 1;
  while ((u64(1) << levels) <= blocks) ++levels;
  blk_table_.assign(levels, std::vector<i32>(blocks));
  for (u64 b = 0; b < blocks; ++b) blk_table_[0][b] = blk_min_[b];
  for (u32 k = 1; k < levels; ++k) {
    const u64 half = u64(1) << (k - 1);
    for (u64 b = 0; b + (u64(1) << k) <= blocks; ++b)
      blk_table_[k][b] = std::min(blk_table_[k - 1][b], blk_table_[k - 1][b + half]);
  }
}

i64 SuccinctSuffixTree::range_min_blocks(u64 lo, u64 hi) const {
  const u32 k = u32(std::bit_width(hi - lo + 1) - 1);
  return std::min(blk_table_[k][lo], blk_table_[k][hi - (u64(1) << k) + 1]);
}

u64 SuccinctSuffixTree::rightmost_block_leq(u64 lo, u64 hi, i64 target) const {
  if (range_min_blocks(lo, hi) > target) return kNone;
  while (lo < hi) {
    const u64 mid = lo + (hi - lo) / 2;
    if (range_min_blocks(mid + 1, hi) <= target)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

u64 SuccinctSuffixTree::leftmost_block_leq(u64 lo, u64 hi, i64 target) const {
  if (range_min_blocks(lo, hi) > target) return kNone;
  while (lo < hi) {
    const u64 mid = lo + (hi - lo) / 2;
    if (range_min_blocks(lo, mid) <= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

u64 SuccinctSuffixTree::bwd_excess(u64 from, i64 target) const {
  // largest q <= from with excess(q) = target; excess(0) = 0 counts
  if (from > 0) {
    const u64 b = (from - 1) / 64;
    i64 e = excess(from);
    for (u64 q = from;; --q) {
      if (e == target) return q;
      if (q == b * 64 + 1) break;
      e -= bp_.get(q) ? 1 : -1;
    }
    if (b > 0) {
      const u64 b2 = rightmost_block_leq(0, b - 1, target);
      if (b2 != kNone) {
        const u64 end = std::min(bp_.size(), (b2 + 1) * 64);
        i64 e2 = excess(end);
        for (u64 q = end;; --q) {
          if (e2 == target) return q;
          if (q == b2 * 64 + 1) break;
          e2 -= bp_.get(q) ? 1 : -1;
        }
      }
    }
  }
  if (target == 0) return 0;
  throw InternalError("bwd_excess: target not found");
}

u64 SuccinctSuffixTree::fwd_excess(u64 from, i64 target) const {
  const u64 m = bp_.size();
  const u64 b = from / 64;  // block containing position from+1
  i64 e = excess(from);
  const u64 hi = std::min(m, (b + 1) * 64);
  for (u64 q = from + 1; q <= hi; ++q) {
    e += bp_.get(q) ? 1 : -1;
    if (e == target) return q;
  }
  const u64 blocks = (m + 63) / 64;
  if (b + 1 < blocks) {
    const u64 b2 = leftmost_block_leq(b + 1, blocks - 1, target);
    if (b2 != kNone) {
      i64 e2 = excess(b2 * 64);
      const u64 hi2 = std::min(m, (b2 + 1) * 64);
      for (u64 q = b2 * 64 + 1; q <= hi2; ++q) {
        e2 += bp_.get(q) ? 1 : -1;
        if (e2 == target) return q;
      }
    }
  }
  throw InternalError("fwd_excess: target not found");
}

u64 SuccinctSuffixTree::close_of(u64 v) const {
  return fwd_excess(pos_of(v), excess(pos_of(v)) - 1);
}

u64 SuccinctSuffixTree::depth(u64 v) const {
  if (v < 1 || v > node_count_) throw std::out_of_range("depth: bad node");
  return u64(excess(pos_of(v)) - 1);
}

u64 SuccinctSuffixTree::parent(u64 v) const {
  if (v == 1) throw std::domain_error("parent: the root has no parent");
  return level_anc(v, 1);
}

u64 SuccinctSuffixTree::level_anc(u64 v, u64 i) const {
  if (v < 1 || v > node_count_) throw std::out_of_range("level_anc: bad node");
  if (i == 0) return v;
  const u64 p = pos_of(v);
  const i64 d = excess(p) - 1;  // depth(v)
  if (i64(i) > d) throw std::out_of_range("level_anc: above the root");
  const u64 q = bwd_excess(p - 1, d - i64(i));
  return node_at(q + 1);
}

bool SuccinctSuffixTree::is_leaf(u64 v) const { return leaf_bv_.get(v); }

u64 SuccinctSuffixTree::leaf_select(u64 i) const { return leaf_idx_.select1(i); }

u64 SuccinctSuffixTree::leaf_rank(u64 v) const { return leaf_idx_.rank1(v); }

u64 SuccinctSuffixTree::leaf_label(u64 v, const SaAccessor& sa) const {
  if (!is_leaf(v)) throw std::domain_error("leaf_label: not a leaf");
  return sa.sa(leaf_rank(v));
}

u64 SuccinctSuffixTree::subtree_last(u64 v) const {
  if (node_count_ == 1) return 1;
  return node_at(close_of(v));
}

u64 SuccinctSuffixTree::subtree_leaf_count(u64 v) const {
  const auto [lo, hi] = leaf_interval(v);
  return hi - lo + 1;
}

std::pair<u64, u64> SuccinctSuffixTree::leaf_interval(u64 v) const {
  const u64 last = subtree_last(v);
  const u64 hi = leaf_idx_.rank1(last);
  const u64 lo = leaf_idx_.rank1(v - 1) + 1;
  check(lo <= hi, "leaf_interval: subtree without leaves");
  return {lo, hi};
}

u64 SuccinctSuffixTree::first_child(u64 v) const {
  const u64 p = pos_of(v);
  if (p + 1 > bp_.size() || !bp_.get(p + 1)) return 0;
  return v + 1;
}

u64 SuccinctSuffixTree::next_sibling(u64 v) const {
  if (v == 1) return 0;
  const u64 c = close_of(v);
  if (c + 1 > bp_.size() || !bp_.get(c + 1)) return 0;
  return node_at(c + 1);
}

u64 SuccinctSuffixTree::str_depth(u64 v, const RmqIndex& rmq, const LcpArray& lcp,
                                  const SaAccessor& sa) const {
  if (is_leaf(v)) return text_n_ - sa.sa(leaf_rank(v)) + 1;
  if (v == 1) return 0;
  const auto [lo, hi] = leaf_interval(v);
  return lcp.get(rmq.rmq(lo + 1, hi));
}

u64 SuccinctSuffixTree::edge_label_length(u64 v, const RmqIndex& rmq, const LcpArray& lcp,
                                          const SaAccessor& sa) const {
  if (v == 1) throw std::domain_error("edge_label_length: the root has no edge");
  return str_depth(v, rmq, lcp, sa) - str_depth(parent(v), rmq, lcp, sa);
}

std::vector<u64> SuccinctSuffixTree::dfuds_degrees() const {
  std::vector<u64> degs;
  degs.reserve(node_count_);
  u64 run = 0;
  for (u64 p = 2; p <= dfuds_.size(); ++p) {  // skip the dummy open
    if (dfuds_.get(p)) {
      ++run;
    } else {
      degs.push_back(run);
      run = 0;
    }
  }
  check(degs.size() == node_count_, "dfuds_degrees: malformed sequence");
  return degs;
}

void SuccinctSuffixTree::dump_indented(std::ostream& os, const RmqIndex& rmq,
                                       const LcpArray& lcp, const SaAccessor& sa) const {
  for (u64 v = 1; v <= node_count_; ++v) {
    const u64 d = depth(v);
    for (u64 k = 0; k < d; ++k) os << "  ";
    os << v;
    if (is_leaf(v))
      os << " leaf:" << leaf_label(v, sa);
    else
      os << " depth:" << str_depth(v, rmq, lcp, sa);
    os << "\n";
  }
}

void SuccinctSuffixTree::dump_edges(std::ostream& os, const RmqIndex& rmq, const LcpArray& lcp,
                                    const SaAccessor& sa) const {
  for (u64 v = 2; v <= node_count_; ++v)
    os << parent(v) << " -> " << v << " len " << edge_label_length(v, rmq, lcp, sa) << "\n";
}

u64 SuccinctSuffixTree::directory_bits() const {
  u64 bits = bp_idx_.size_in_bits() + leaf_bv_.size_in_bits() + leaf_idx_.size_in_bits();
  bits += blk_min_.size() * 32;
  for (const auto& lvl : blk_table_) bits += lvl.size() * 32;
  return bits;
}

}  // namespace lzse
