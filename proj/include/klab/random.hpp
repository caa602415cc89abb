#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "klab/rational.hpp"

namespace klab {

// Deterministic sampling helpers on top of mt19937_64. std::uniform_int_distribution
// and friends are implementation-defined, so seeds would not reproduce across
// standard libraries; these do.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(uint64_t seed) : eng(seed) {}

  uint64_t next() { return eng(); }

  // uniform in [0, n)
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = eng();
    } while (x >= limit);
    return x % n;
  }

  // uniform in [lo, hi] inclusive
  long int_in(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }

  // uniform in [0,1) with 53 random bits
  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

  // uniform dyadic rational in [0,1) with `bits` random bits
  Rat dyadic_unit(int bits) {
    uint64_t mask = (bits >= 64) ? UINT64_MAX : ((uint64_t{1} << bits) - 1);
    Int num(static_cast<unsigned long>(eng() & mask));
    Int den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }
};

}  // namespace klab
