#include "lzse/suffix.hpp"

#include <algorithm>

namespace lzse {

namespace {

constexpr u32 kEmpty = ~u32(0);

// Nong/Zhang/Chan induced sorting. s holds values < sigma with a unique
// smallest sentinel at the end; sa receives 0-based suffix starts.
void sais(const std::vector<u32>& s, std::vector<u32>& sa, u32 sigma) {
  const u64 m = s.size();
  sa.assign(m, kEmpty);
  if (m == 1) {
    sa[0] = 0;
    return;
  }
  std::vector<bool> stype(m);
  stype[m - 1] = true;
  for (u64 i = m - 1; i-- > 0;)
    stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
  auto is_lms = [&](u64 i) { return i > 0 && stype[i] && !stype[i - 1]; };

  std::vector<u64> bkt(sigma, 0), cur(sigma, 0);
  for (u64 i = 0; i < m; ++i) ++bkt[s[i]];
  auto bucket_ends = [&] {
    u64 sum = 0;
    for (u32 c = 0; c < sigma; ++c) {
      sum += bkt[c];
      cur[c] = sum;
    }
  };
  auto induce = [&] {
    u64 sum = 0;
    for (u32 c = 0; c < sigma; ++c) {  // bucket heads
      cur[c] = sum;
      sum += bkt[c];
    }
    for (u64 i = 0; i < m; ++i) {
      const u32 v = sa[i];
      if (v == kEmpty || v == 0) continue;
      if (!stype[v - 1]) sa[cur[s[v - 1]]++] = v - 1;
    }
    bucket_ends();
    for (u64 i = m; i-- > 0;) {
      const u32 v = sa[i];
      if (v == kEmpty || v == 0) continue;
      if (stype[v - 1]) sa[--cur[s[v - 1]]] = v - 1;
    }
  };

  // first pass: seed LMS positions at bucket ends, induce, name LMS substrings
  bucket_ends();
  for (u64 i = 0; i < m; ++i)
    if (is_lms(i)) sa[--cur[s[i]]] = u32(i);
  induce();

  u64 nlms = 0;
  for (u64 i = 0; i < m; ++i) {
    const u32 v = sa[i];
    if (v != kEmpty && is_lms(v)) sa[nlms++] = v;
  }
  std::fill(sa.begin() + nlms, sa.end(), kEmpty);
  auto lms_equal = [&](u64 a, u64 b) {
    if (s[a] != s[b]) return false;
    ++a, ++b;
    while (true) {
      if (s[a] != s[b] || stype[a] != stype[b]) return false;
      const bool la = is_lms(a), lb = is_lms(b);
      if (la || lb) return la && lb;
      ++a, ++b;
    }
  };
  u32 names = 0;
  u64 prev = ~u64(0);
  for (u64 i = 0; i < nlms; ++i) {
    const u64 pos = sa[i];
    if (prev == ~u64(0) || !lms_equal(prev, pos)) ++names;
    sa[nlms + pos / 2] = names - 1;
    prev = pos;
  }

  std::vector<u32> lms_pos;  // LMS positions in text order
  lms_pos.reserve(nlms);
  for (u64 i = 0; i < m; ++i)
    if (is_lms(i)) lms_pos.push_back(u32(i));

  std::vector<u32> order(nlms);  // sorted LMS suffixes as indices into lms_pos
  {
    std::vector<u32> s1(nlms);
    u64 k = 0;
    for (u64 i = nlms; i < m; ++i)
      if (sa[i] != kEmpty) s1[k++] = sa[i];
    if (names < nlms) {
      sais(s1, order, names);
    } else {
      for (u64 i = 0; i < nlms; ++i) order[s1[i]] = u32(i);
    }
  }

  // final pass: seed sorted LMS suffixes at bucket ends in reverse order
  std::fill(sa.begin(), sa.end(), kEmpty);
  bucket_ends();
  for (u64 i = nlms; i-- > 0;) {
    const u32 pos = lms_pos[order[i]];
    sa[--cur[s[pos]]] = pos;
  }
  induce();
}

}  // namespace

void build_suffix_array(const TextBuffer& t, SuffixWorkspace& ws) {
  if (ws.n() != t.n()) throw std::invalid_argument("workspace not sized for this text");
  ws.require_phase(Phase::Empty);
  const u64 n = t.n();
  if (t.at(n) != 0) throw std::invalid_argument("text has no sentinel");
  for (u64 i = 1; i < n; ++i)
    if (t.at(i) == 0) throw std::invalid_argument("sentinel occurs before the end");
  std::vector<u32> sa;
  sais(t.symbols(), sa, t.sigma());
  for (u64 i = 1; i <= n; ++i) ws.set_a1(i, sa[i - 1] + 1);
  ws.set_phase(Phase::SA);
}

void invert_in_place(SuffixWorkspace& ws) {
  ws.require_phase(Phase::SA);
  const u64 n = ws.n();
  BitVector visited(n);
  for (u64 i = 1; i <= n; ++i) {
    if (visited.get(i)) continue;
    u64 k = i, j = ws.a1(i);
    while (j != i) {
      const u64 next = ws.a1(j);
      ws.set_a1(j, k);
      visited.set(j);
      k = j;
      j = next;
    }
    ws.set_a1(i, k);
    visited.set(i);
  }
  ws.set_phase(Phase::ISA);
}

SampledInverse::SampledInverse(SuffixWorkspace& ws) : ws_(&ws) {
  ws.require_phase(Phase::ISA);
  ws.occupy_a2();
  const u64 n = ws.n();
  const Rational eps = ws.eps();
  gap_ = eps.is_one() ? 1 : 2 * eps.ceil_inverse();
  sampled_ = BitVector(n);
  auto pi = [&](u64 j) { return ws.a1(j); };

  {  // pass 1: choose the sampled positions cycle by cycle
    BitVector seen(n);
    for (u64 i = 1; i <= n; ++i) {
      if (seen.get(i)) continue;
      u64 len = 0, j = i;
      do {
        seen.set(j);
        j = pi(j);
        ++len;
      } while (j != i);
      if (gap_ == 1 || len >= gap_) {
        j = i;
        for (u64 o = 0; o < len; ++o) {
          if (o % gap_ == 0) {
            sampled_.set(j);
            ++samples_;
          }
          j = pi(j);
        }
      }
    }
  }
  check(samples_ <= ws.a2_cells() || samples_ == 0,
        "SampledInverse: sample count exceeds the A_2 budget");
  if (samples_ == 0) return;  // every cycle shorter than the gap
  sampled_idx_ = RankSelectIndex(sampled_);

  // pass 2: store, for each sample, the element gap_ steps behind it on its
  // cycle; a ring buffer of the last gap_ elements supplies those values
  BitVector seen(n);
  std::vector<u64> ring(gap_, 0);
  for (u64 i = 1; i <= n; ++i) {
    if (seen.get(i)) continue;
    const bool cycle_sampled = sampled_.get(i);  // leaders are always sampled
    u64 j = i, o = 0;
    do {
      seen.set(j);
      if (cycle_sampled && o >= gap_ && o % gap_ == 0)
        ws_->set_a2(sampled_idx_.rank1(j), ring[o % gap_]);
      ring[o % gap_] = j;
      j = pi(j);
      ++o;
    } while (j != i);
    if (cycle_sampled) ws_->set_a2(sampled_idx_.rank1(i), ring[o % gap_]);
  }
}

SampledInverse::~SampledInverse() { ws_->release_a2(); }

u64 SampledInverse::sa(u64 i) const {
  ws_->require_phase(Phase::ISA);
  if (i < 1 || i > ws_->n()) throw std::out_of_range("SampledInverse::sa");
  auto pi = [&](u64 j) { return ws_->a1(j); };
  u64 steps = 0;
  const u64 guard = 2 * gap_ + ws_->n();  // diagnostic only
  u64 j = i;
  while (true) {
    if (samples_ > 0 && sampled_.get(j)) {
      u64 q = ws_->a2(sampled_idx_.rank1(j));
      while (pi(q) != i) {
        q = pi(q);
        check(++steps <= guard, "SampledInverse: walk exceeded its bound");
      }
      max_steps_ = std::max(max_steps_, steps);
      return q;
    }
    if (pi(j) == i) {
      max_steps_ = std::max(max_steps_, steps);
      return j;
    }
    j = pi(j);
    check(++steps <= guard, "SampledInverse: walk exceeded its bound");
  }
}

u64 SampledInverse::aux_bits() const {
  return sampled_.size_in_bits() + (samples_ ? sampled_idx_.size_in_bits() : 0);
}

LcpArray build_lcp(const TextBuffer& t, const SuffixWorkspace& ws) {
  ws.require_phase(Phase::SA);
  const u64 n = t.n();
  LcpArray lcp(n, ws.cell_width());
  auto sa = [&](u64 i) { return ws.a1(i); };

  // phi into the LCP cells, text-indexed; 0 marks the lexicographic minimum
  for (u64 i = 2; i <= n; ++i) lcp.set(sa(i), sa(i - 1));
  lcp.set(sa(1), 0);

  // phi -> PLCP in place
  u64 l = 0;
  for (u64 p = 1; p <= n; ++p) {
    const u64 q = lcp.get(p);
    if (q == 0) {
      lcp.set(p, 0);
      l = 0;
      continue;
    }
    while (p + l <= n && q + l <= n && t.at(p + l) == t.at(q + l)) ++l;
    lcp.set(p, l);
    if (l > 0) --l;
  }

  // PLCP -> LCP: gather along SA cycles with a visited vector
  BitVector visited(n);
  for (u64 i = 1; i <= n; ++i) {
    if (visited.get(i)) continue;
    const u64 tmp = lcp.get(i);
    u64 j = i;
    while (sa(j) != i) {
      lcp.set(j, lcp.get(sa(j)));
      visited.set(j);
      j = sa(j);
    }
    lcp.set(j, tmp);
    visited.set(j);
  }
  return lcp;
}

RmqIndex::RmqIndex(const LcpArray& lcp) : lcp_(&lcp) {
  const u64 n = lcp.n();
  const u64 blocks = (n + 63) / 64;
  block_min_.assign(blocks, ~u64(0));
  block_arg_.assign(blocks, 0);
  for (u64 i = 1; i <= n; ++i) {
    const u64 b = (i - 1) / 64;
    const u64 v = lcp.get(i);
    if (v < block_min_[b]) {
      block_min_[b] = v;
      block_arg_[b] = i;
    }
  }
  u32 levels = 1;
  while ((u64(1) << levels) <= blocks) ++levels;
  table_.assign(levels, std::vector<u32>(blocks));
  for (u64 b = 0; b < blocks; ++b) table_[0][b] = u32(b);
  for (u32 k = 1; k < levels; ++k) {
    const u64 half = u64(1) << (k - 1);
    for (u64 b = 0; b + (u64(1) << k) <= blocks; ++b) {
      const u32 a = table_[k - 1][b], c = table_[k - 1][b + half];
      table_[k][b] = block_min_[a] <= block_min_[c] ? a : c;
    }
  }
}

u64 RmqIndex::block_argmin(u64 b, u64 lo, u64 hi) const {
  (void)b;
  u64 best = lo, bestv = lcp_->get(lo);
  for (u64 i = lo + 1; i <= hi; ++i) {
    const u64 v = lcp_->get(i);
    if (v < bestv) {
      bestv = v;
      best = i;
    }
  }
  return best;
}

u64 RmqIndex::rmq(u64 i, u64 j) const {
  if (i < 1 || j > lcp_->n() || i > j) throw std::out_of_range("RmqIndex::rmq: bad range");
  const u64 bi = (i - 1) / 64, bj = (j - 1) / 64;
  if (bi == bj) return block_argmin(bi, i, j);
  u64 best = block_argmin(bi, i, (bi + 1) * 64);
  u64 bestv = lcp_->get(best);
  if (bi + 1 <= bj - 1) {
    const u64 lo = bi + 1, hi = bj - 1;
    const u32 k = u32(std::bit_width(hi - lo + 1) - 1);
    const u32 a = table_[k][lo], c = table_[k][hi - (u64(1) << k) + 1];
    const u32 blk = block_min_[a] <= block_min_[c] ? a : c;
    if (block_min_[blk] < bestv) {
      best = block_arg_[blk];
      bestv = block_min_[blk];
    }
  }
  const u64 tail = block_argmin(bj, bj * 64 + 1, j);
  if (lcp_->get(tail) < bestv) best = tail;
  return best;
}

u64 RmqIndex::size_in_bits() const {
  u64 bits = (block_min_.size() + block_arg_.size()) * 64;
  for (const auto& lvl : table_) bits += lvl.size() * 32;
  return bits;
}

SaAccessor SaAccessor::direct(const SuffixWorkspace& ws) {
  ws.require_phase(Phase::SA);
  SaAccessor a;
  a.ws_ = &ws;
  return a;
}

SaAccessor SaAccessor::sampled(const SampledInverse& si) {
  SaAccessor a;
  a.si_ = &si;
  return a;
}

u64 SaAccessor::sa(u64 i) const {
  if (ws_) {
    ws_->require_phase(Phase::SA);
    return ws_->a1(i);
  }
  if (si_) return si_->sa(i);
  throw StateError("SaAccessor: SA is not available in this phase");
}

}  // namespace lzse
