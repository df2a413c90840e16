#include <random>

#include "doctest.h"
#include "lzse/bitvec.hpp"

using namespace lzse;

namespace {

// linear-scan oracle
u64 scan_rank1(const BitVector& b, u64 i) {
  u64 c = 0;
  for (u64 p = 1; p <= i; ++p) c += b.get(p);
  return c;
}

u64 scan_select(const BitVector& b, u64 k, bool bit) {
  u64 c = 0;
  for (u64 p = 1; p <= b.size(); ++p)
    if (b.get(p) == bit && ++c == k) return p;
  return 0;
}

}  // namespace

TEST_CASE("rank on the running-example partition vector") {
  auto b = BitVector::from_string("01001011011111011111");
  auto idx = build_index(b);
  CHECK(idx.rank1(20) == 14);  // one '1' per text position
  CHECK(idx.select1(2) == 5);
  CHECK(idx.rank0(5) == 3);
  // traversal j = 2: j_b = rank0(select1(j-1)) + 1, j_e = rank0(select1(j))
  CHECK(idx.rank0(idx.select1(1)) + 1 == 2);
  CHECK(idx.rank0(idx.select1(2)) == 3);
}

TEST_CASE("degenerate vectors") {
  BitVector zeros(8);
  auto zi = build_index(zeros);
  CHECK(zi.rank1(8) == 0);
  CHECK(zi.rank0(8) == 8);

  auto one = BitVector::from_string("1");
  auto oi = build_index(one);
  CHECK(oi.rank1(1) == 1);
  CHECK(oi.select1(1) == 1);

  BitVector empty;
  CHECK_THROWS_AS(build_index(empty), std::invalid_argument);
}

TEST_CASE("select scans match the brute force") {
  auto b = BitVector::from_string("10101");
  auto idx = build_index(b);
  CHECK(idx.select1(2) == 3);

  auto c = BitVector::from_string("0011");
  auto ci = build_index(c);
  CHECK(ci.select0(2) == 2);
  CHECK(ci.rank1(4) == 2);
}

TEST_CASE("sealed vectors reject mutation") {
  BitVector b(10);
  b.set(3);
  auto idx = build_index(b);
  CHECK_THROWS_AS(b.set(4), StateError);
  CHECK_THROWS_AS(idx.select1(2), std::out_of_range);
  CHECK_THROWS_AS(idx.rank1(11), std::out_of_range);
}

TEST_CASE("randomized equivalence with the linear scan") {
  std::mt19937_64 rng(0x5eed);
  for (int iter = 0; iter < 10000; ++iter) {
    const u64 len = 1 + rng() % 2048;
    BitVector b(len);
    const double density = (iter % 10 == 0) ? 0.02 : 0.5;
    std::bernoulli_distribution bit(density);
    for (u64 i = 1; i <= len; ++i)
      if (bit(rng)) b.set(i);
    auto idx = build_index(b);
    // a handful of randomly placed probes per vector
    for (int q = 0; q < 8; ++q) {
      const u64 i = 1 + rng() % len;
      const u64 r1 = scan_rank1(b, i);
      CHECK(idx.rank1(i) == r1);
      CHECK(idx.rank0(i) + idx.rank1(i) == i);
    }
    if (idx.ones() > 0) {
      const u64 k = 1 + rng() % idx.ones();
      const u64 pos = idx.select1(k);
      CHECK(pos == scan_select(b, k, true));
      CHECK(idx.rank1(pos) == k);
      CHECK(b.get(pos));
    }
    if (idx.zeros() > 0) {
      const u64 k = 1 + rng() % idx.zeros();
      CHECK(idx.select0(k) == scan_select(b, k, false));
    }
  }
}

TEST_CASE("rank/select at superblock boundaries") {
  BitVector b(5000);
  for (u64 i = 1; i <= 5000; i += 7) b.set(i);
  auto idx = build_index(b);
  for (u64 i : {u64(1), u64(4095), u64(4096), u64(4097), u64(5000)})
    CHECK(idx.rank1(i) == scan_rank1(b, i));
  CHECK(idx.select1(idx.ones()) == scan_select(b, idx.ones(), true));
}
