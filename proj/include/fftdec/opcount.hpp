// Field-operation tallies and a counting wrapper with the Field call surface.
#pragma once

#include <cstdint>

#include "fftdec/gf.hpp"

namespace fftdec {

struct OpCounts {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t inversions = 0;

  std::uint64_t total() const { return additions + multiplications + inversions; }

  OpCounts& operator+=(const OpCounts& o) {
    additions += o.additions;
    multiplications += o.multiplications;
    inversions += o.inversions;
    return *this;
  }
  friend OpCounts operator+(OpCounts a, const OpCounts& b) { return a += b; }
  bool operator==(const OpCounts&) const = default;
};

// Drop-in replacement for Field in templated algorithms; every arithmetic call
// increments the bound tally. A division is spelled inv-then-mul by callers and
// therefore costs one inversion plus one multiplication.
class CountingField {
 public:
  CountingField(const Field& f, OpCounts& counts) : f_(&f), c_(&counts) {}

  gfe add(gfe a, gfe b) const {
    ++c_->additions;
    return f_->add(a, b);
  }
  gfe mul(gfe a, gfe b) const {
    ++c_->multiplications;
    return f_->mul(a, b);
  }
  gfe inv(gfe a) const {
    ++c_->inversions;
    return f_->inv(a);
  }

  int m() const { return f_->m(); }
  std::uint32_t order() const { return f_->order(); }
  const Field& base() const { return *f_; }
  OpCounts& counts() const { return *c_; }

 private:
  const Field* f_;
  OpCounts* c_;
};

}  // namespace fftdec
