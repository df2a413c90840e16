#include "lzse/bitvec.hpp"

#include <algorithm>
#include <bit>

namespace lzse {

BitVector::BitVector(u64 len, bool fill)
    : words_((len + 63) / 64, fill ? ~u64(0) : 0), len_(len) {
  if (fill && len % 64 != 0) words_.back() &= (u64(1) << (len % 64)) - 1;
}

bool BitVector::get(u64 i) const {
  if (i < 1 || i > len_) throw std::out_of_range("BitVector::get: position out of range");
  const u64 p = i - 1;
  return (words_[p / 64] >> (p % 64)) & 1;
}

void BitVector::set(u64 i, bool bit) {
  if (i < 1 || i > len_) throw std::out_of_range("BitVector::set: position out of range");
  if (sealed_) throw StateError("BitVector::set: vector is sealed by an attached index");
  const u64 p = i - 1;
  const u64 mask = u64(1) << (p % 64);
  if (bit)
    words_[p / 64] |= mask;
  else
    words_[p / 64] &= ~mask;
}

void BitVector::clear_all() {
  if (sealed_) throw StateError("BitVector::clear_all: vector is sealed");
  std::fill(words_.begin(), words_.end(), 0);
}

u64 BitVector::count_ones() const {
  u64 c = 0;
  for (u64 w : words_) c += std::popcount(w);
  return c;
}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector bv(bits.size());
  for (u64 i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw std::invalid_argument("BitVector::from_string: expected 0/1");
    if (bits[i] == '1') bv.set(i + 1);
  }
  return bv;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (u64 i = 1; i <= len_; ++i)
    if (get(i)) s[i - 1] = '1';
  return s;
}

namespace {

// Position (1..64) of the k-th set bit of w, 1 <= k <= popcount(w).
u32 select_in_word(u64 w, u32 k) {
  u32 pos = 0;
  while (true) {
    const u32 c = std::popcount(w & 0xFF);
    if (k <= c) break;
    k -= c;
    w >>= 8;
    pos += 8;
  }
  u8 byte = u8(w & 0xFF);
  while (true) {
    if (byte & 1) {
      if (--k == 0) return pos + 1;
    }
    byte >>= 1;
    ++pos;
  }
}

}  // namespace

RankSelectIndex::RankSelectIndex(BitVector& bv) : bv_(&bv) {
  if (bv.size() == 0) throw std::invalid_argument("build_index: empty bit vector");
  bv.sealed_ = true;
  const u64 nwords = bv.words_.size();
  const u64 nsuper = (nwords + kWordsPerSuper - 1) / kWordsPerSuper;
  super_.resize(nsuper + 1, 0);
  word_rel_.resize(nwords, 0);
  u64 total = 0;
  for (u64 s = 0; s < nsuper; ++s) {
    super_[s] = total;
    u16 rel = 0;
    const u64 hi = std::min(nwords, (s + 1) * kWordsPerSuper);
    for (u64 w = s * kWordsPerSuper; w < hi; ++w) {
      word_rel_[w] = rel;
      const u32 pc = std::popcount(bv.words_[w]);
      rel = u16(rel + pc);
      total += pc;
    }
  }
  super_[nsuper] = total;
  ones_ = total;
}

u64 RankSelectIndex::word_rank(u64 w) const {
  return super_[w / kWordsPerSuper] + word_rel_[w];
}

u64 RankSelectIndex::rank1(u64 i) const {
  if (i > bv_->len_) throw std::out_of_range("rank1: position out of range");
  if (i == 0) return 0;
  const u64 w = (i - 1) / 64;
  const u64 off = (i - 1) % 64 + 1;  // count this many bits of word w
  const u64 mask = off == 64 ? ~u64(0) : (u64(1) << off) - 1;
  return word_rank(w) + std::popcount(bv_->words_[w] & mask);
}

u64 RankSelectIndex::select1(u64 k) const {
  if (k < 1 || k > ones_) throw std::out_of_range("select1: rank out of range");
  // superblock search, then word scan within it, then in-word select
  u64 lo = 0, hi = super_.size() - 1;  // super_[lo] < k <= super_[hi]
  while (hi - lo > 1) {
    const u64 mid = (lo + hi) / 2;
    if (super_[mid] < k)
      lo = mid;
    else
      hi = mid;
  }
  u64 w = lo * kWordsPerSuper;
  const u64 wend = std::min<u64>(bv_->words_.size(), (lo + 1) * kWordsPerSuper);
  u64 rest = k - super_[lo];
  while (w + 1 < wend && word_rel_[w + 1] < rest) ++w;
  rest -= word_rel_[w];
  return w * 64 + select_in_word(bv_->words_[w], u32(rest));
}

u64 RankSelectIndex::select0(u64 k) const {
  if (k < 1 || k > zeros()) throw std::out_of_range("select0: rank out of range");
  // same directory, complement counts
  const u64 bits_per_super = kWordsPerSuper * 64;
  u64 lo = 0, hi = super_.size() - 1;
  auto zeros_before_super = [&](u64 s) {
    const u64 bits = std::min(bv_->len_, s * bits_per_super);
    return bits - super_[s];
  };
  while (hi - lo > 1) {
    const u64 mid = (lo + hi) / 2;
    if (zeros_before_super(mid) < k)
      lo = mid;
    else
      hi = mid;
  }
  u64 w = lo * kWordsPerSuper;
  const u64 wend = std::min<u64>(bv_->words_.size(), (lo + 1) * kWordsPerSuper);
  u64 rest = k - zeros_before_super(lo);
  auto zeros_rel = [&](u64 word) {  // zeros before word, within superblock
    return (word - lo * kWordsPerSuper) * 64 - word_rel_[word];
  };
  while (w + 1 < wend && zeros_rel(w + 1) < rest) ++w;
  rest -= zeros_rel(w);
  return w * 64 + select_in_word(~bv_->words_[w], u32(rest));
}

u64 RankSelectIndex::size_in_bits() const {
  return super_.size() * 64 + word_rel_.size() * 16;
}

RankSelectIndex build_index(BitVector& bv) { return RankSelectIndex(bv); }

}  // namespace lzse
