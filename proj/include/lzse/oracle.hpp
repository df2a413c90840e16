#pragma once

#include <vector>

#include "lzse/text.hpp"

namespace lzse::oracle {

// Reference factor record shared by all oracles and by the comparison
// helpers in the tests. `ref` is a text position for LZ77 and a factor
// index for LZ78 (0 = the empty factor).
struct Factor {
  u64 start = 0;
  u64 len = 0;
  bool referencing = false;
  u64 ref = 0;
  u32 extra = 0;  // literal (LZ77 free letter), fresh char (classic), added char (LZ78)

  bool operator==(const Factor&) const = default;
};

// Greedy longest-previous-match factorization straight from the definition.
// At each position, every previous occurrence of the first symbol is tried
// and the earliest position achieving the maximum length wins. classic mode
// appends the fresh character (shortest prefix occurring exactly once).
std::vector<Factor> naive_lz77(const TextBuffer& t, bool classic);

// Pointer-trie construction, one node per factor.
std::vector<Factor> naive_lz78(const TextBuffer& t);

// Explicit pointer-based suffix tree with lexicographic child order and the
// same pre-order numbering the succinct tree uses. Node 1 is the root.
struct PointerTree {
  struct Node {
    u64 parent = 0;      // pre-order of parent, 0 for the root
    u64 str_depth = 0;   // string depth
    u64 node_depth = 0;  // edges from the root
    u64 leaf_label = 0;  // suffix position for leaves, 0 for internal nodes
    u64 leaf_lo = 0, leaf_hi = 0;  // leaf-rank interval of the subtree
    std::vector<u64> children;     // pre-orders, lexicographic order
  };
  std::vector<Node> nodes;       // 1-based by pre-order; nodes[0] unused
  std::vector<u64> leaf_of_rank; // leaf rank -> pre-order
  u64 size() const { return nodes.size() - 1; }
};

struct SuffixStructures {
  std::vector<u64> sa;   // 1-based positions, sa[0] unused
  std::vector<u64> isa;
  std::vector<u64> lcp;  // lcp[i] for i >= 2; lcp[0..1] = 0
  PointerTree tree;
};

SuffixStructures naive_suffix_structures(const TextBuffer& t);

// Single-round traversal variant with SA and ISA both fully resident and
// referred positions taken as the range-minimum of SA over the stop node's
// leaf interval. Sits between naive_lz77 and the arena pipeline.
std::vector<Factor> easy_lz77(const TextBuffer& t, bool classic);

}  // namespace lzse::oracle
