#include "lzse/workspace.hpp"

#include <string>

namespace lzse {

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Empty: return "Empty";
    case Phase::SA: return "SA";
    case Phase::ISA: return "ISA";
    case Phase::SparseISA: return "SparseISA";
    case Phase::DList: return "DList";
    case Phase::Refs77: return "Refs77";
    case Phase::Witness: return "Witness";
    case Phase::Refs78: return "Refs78";
  }
  return "?";
}

SuffixWorkspace::SuffixWorkspace(u64 n, Rational eps) : n_(n), eps_(eps) {
  if (n == 0) throw std::invalid_argument("SuffixWorkspace: n must be positive");
  if (eps.num == 0 || eps.den == 0 || eps.num > eps.den)
    throw std::invalid_argument("SuffixWorkspace: epsilon must be in (0, 1]");
  width_ = bits_for(n);
  a1_ = PackedArray(n, width_);
  const u64 a2n = std::max<u64>(1, eps.floor_mul(n));
  a2_ = PackedArray(a2n, width_);
}

void SuffixWorkspace::require_phase(Phase p) const {
  if (phase_ != p)
    throw StateError(std::string("workspace phase is ") + phase_name(phase_) + ", expected " +
                     phase_name(p));
}

void SuffixWorkspace::clear_a2() { a2_.fill(0); }

void SuffixWorkspace::occupy_a2() {
  if (a2_occupied_) throw StateError("A_2 is already occupied");
  a2_occupied_ = true;
}

void SuffixWorkspace::release_a2() { a2_occupied_ = false; }

}  // namespace lzse
