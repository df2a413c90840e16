#include "lzse/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lzse::oracle {

std::vector<Factor> naive_lz77(const TextBuffer& t, bool classic) {
  const u64 n = t.n();
  std::vector<std::vector<u64>> occ(t.sigma());  // positions of each symbol, ascending
  std::vector<Factor> factors;
  u64 j = 1;
  u64 filled = 0;  // occ covers positions [1..filled]
  while (j <= n) {
    while (filled < j - 1) {
      ++filled;
      occ[t.at(filled)].push_back(filled);
    }
    u64 best_len = 0, best_ref = 0;
    for (u64 k : occ[t.at(j)]) {
      u64 l = 1;
      while (j + l <= n && t.at(k + l) == t.at(j + l)) ++l;
      if (l > best_len) {
        best_len = l;
        best_ref = k;
      }
    }
    Factor f;
    f.start = j;
    if (best_len == 0) {
      f.len = 1;
      f.extra = t.at(j);
    } else if (classic) {
      f.len = best_len + 1;  // fresh character; never past n (sentinel is unique)
      f.referencing = true;
      f.ref = best_ref;
      f.extra = t.at(j + best_len);
    } else {
      f.len = best_len;
      f.referencing = true;
      f.ref = best_ref;
    }
    factors.push_back(f);
    j += f.len;
  }
  return factors;
}

std::vector<Factor> naive_lz78(const TextBuffer& t) {
  const u64 n = t.n();
  std::vector<std::map<u32, u64>> trie(1);  // node 0 = root = empty factor
  std::vector<Factor> factors;
  u64 j = 1;
  while (j <= n) {
    u64 cur = 0, len = 0;
    while (j + len <= n) {
      auto it = trie[cur].find(t.at(j + len));
      if (it == trie[cur].end()) break;
      cur = it->second;
      ++len;
    }
    check(j + len <= n, "naive_lz78: matched past the sentinel");
    trie.emplace_back();
    trie[cur][t.at(j + len)] = trie.size() - 1;
    Factor f;
    f.start = j;
    f.len = len + 1;
    f.referencing = cur != 0;
    f.ref = cur;
    f.extra = t.at(j + len);
    factors.push_back(f);
    j += f.len;
  }
  return factors;
}

namespace {

// Builds the pointer tree from SA/LCP with a stack of the rightmost path.
// Parent links are fixed when a node is popped.
struct BuildNode {
  u64 depth;
  u64 leaf_label;  // 0 = internal
  std::vector<u64> children;
};

PointerTree build_tree(const TextBuffer& t, const std::vector<u64>& sa,
                       const std::vector<u64>& lcp) {
  const u64 n = t.n();
  std::vector<BuildNode> raw;
  std::vector<u64> parent_raw;
  raw.reserve(2 * n);
  auto make = [&](u64 depth, u64 label) {
    raw.push_back({depth, label, {}});
    parent_raw.push_back(0);
    return raw.size() - 1;
  };
  const u64 root = make(0, 0);
  std::vector<u64> st{root};
  auto pop_to = [&](u64 l) {
    while (raw[st.back()].depth > l) {
      const u64 x = st.back();
      st.pop_back();
      u64 top = st.back();
      if (raw[top].depth >= l) {
        raw[top].children.push_back(x);
        parent_raw[x] = top;
      } else {
        const u64 mid = make(l, 0);
        raw[mid].children.push_back(x);
        parent_raw[x] = mid;
        st.push_back(mid);
      }
    }
  };
  for (u64 i = 1; i <= n; ++i) {
    pop_to(i == 1 ? 0 : lcp[i]);
    st.push_back(make(n - sa[i] + 1, sa[i]));
  }
  pop_to(0);
  check(st.size() == 1 && st[0] == root, "oracle tree: stack not reduced to root");

  // Pre-order numbering by iterative DFS, children already in lex order.
  PointerTree tree;
  tree.nodes.resize(raw.size() + 1);
  tree.leaf_of_rank.assign(n + 1, 0);
  std::vector<u64> pre_of(raw.size(), 0);
  std::vector<std::pair<u64, u64>> dfs{{root, 0}};  // (raw id, node depth)
  u64 next_pre = 0, leaf_rank = 0;
  std::vector<u64> order;  // raw ids in pre-order
  while (!dfs.empty()) {
    auto [v, d] = dfs.back();
    dfs.pop_back();
    pre_of[v] = ++next_pre;
    order.push_back(v);
    auto& node = tree.nodes[next_pre];
    node.str_depth = raw[v].depth;
    node.node_depth = d;
    node.leaf_label = raw[v].leaf_label;
    if (raw[v].leaf_label != 0) tree.leaf_of_rank[++leaf_rank] = next_pre;
    for (auto it = raw[v].children.rbegin(); it != raw[v].children.rend(); ++it)
      dfs.push_back({*it, d + 1});
  }
  // leaf labels appear in lexicographic order, so ranks match SA order
  for (u64 p = 1; p <= tree.size(); ++p) {
    const u64 v = order[p - 1];
    tree.nodes[p].parent = v == root ? 0 : pre_of[parent_raw[v]];
    for (u64 c : raw[v].children) tree.nodes[p].children.push_back(pre_of[c]);
  }
  // leaf ranks forward, then intervals bottom-up in reverse pre-order
  {
    u64 rank = 0;
    for (u64 p = 1; p <= tree.size(); ++p) {
      auto& node = tree.nodes[p];
      if (node.children.empty()) {
        node.leaf_lo = node.leaf_hi = ++rank;
      }
    }
    for (u64 p = tree.size(); p >= 1; --p) {
      auto& node = tree.nodes[p];
      if (!node.children.empty()) {
        node.leaf_lo = tree.nodes[node.children.front()].leaf_lo;
        node.leaf_hi = tree.nodes[node.children.back()].leaf_hi;
      }
      if (p == 1) break;
    }
  }
  return tree;
}

}  // namespace

SuffixStructures naive_suffix_structures(const TextBuffer& t) {
  const u64 n = t.n();
  SuffixStructures s;
  s.sa.assign(n + 1, 0);
  s.isa.assign(n + 1, 0);
  s.lcp.assign(n + 1, 0);
  std::vector<u64> idx(n);
  std::iota(idx.begin(), idx.end(), 1);
  std::sort(idx.begin(), idx.end(), [&](u64 a, u64 b) {
    while (a <= n && b <= n) {
      if (t.at(a) != t.at(b)) return t.at(a) < t.at(b);
      ++a, ++b;
    }
    return a > n;  // distinct suffixes; the sentinel makes ties impossible
  });
  for (u64 i = 1; i <= n; ++i) s.sa[i] = idx[i - 1];
  for (u64 i = 1; i <= n; ++i) s.isa[s.sa[i]] = i;
  for (u64 i = 2; i <= n; ++i) {
    u64 a = s.sa[i - 1], b = s.sa[i], l = 0;
    while (a + l <= n && b + l <= n && t.at(a + l) == t.at(b + l)) ++l;
    s.lcp[i] = l;
  }
  if (n == 1) {
    // single node that is root and leaf at once
    s.tree.nodes.resize(2);
    s.tree.nodes[1].leaf_label = 1;
    s.tree.nodes[1].str_depth = 0;
    s.tree.nodes[1].leaf_lo = s.tree.nodes[1].leaf_hi = 1;
    s.tree.leaf_of_rank = {0, 1};
    return s;
  }
  s.tree = build_tree(t, s.sa, s.lcp);
  return s;
}

std::vector<Factor> easy_lz77(const TextBuffer& t, bool classic) {
  const u64 n = t.n();
  SuffixStructures s = naive_suffix_structures(t);
  const auto& tree = s.tree;
  std::vector<bool> marked(tree.size() + 1, false);
  marked[1] = true;
  std::vector<Factor> factors;
  u64 next_fp = 1;
  for (u64 j = 1; j <= n; ++j) {
    u64 cur = tree.leaf_of_rank[s.isa[j]];
    while (!marked[cur]) {
      marked[cur] = true;
      cur = tree.nodes[cur].parent;
    }
    if (j != next_fp) continue;
    Factor f;
    f.start = j;
    if (cur == 1) {
      f.len = 1;
      f.extra = t.at(j);
    } else {
      const auto& v = tree.nodes[cur];
      f.len = classic ? v.str_depth + 1 : v.str_depth;
      f.referencing = true;
      u64 m = ~u64(0);  // range-minimum over SA on the stop node's leaf interval
      for (u64 r = v.leaf_lo; r <= v.leaf_hi; ++r) m = std::min(m, s.sa[r]);
      f.ref = m;
      if (classic) f.extra = t.at(j + v.str_depth);
    }
    factors.push_back(f);
    next_fp += f.len;
  }
  return factors;
}

}  // namespace lzse::oracle
