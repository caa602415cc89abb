#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "klab/errors.hpp"

namespace klab {

using Rat = mpq_class;
using Int = mpz_class;

inline double to_double(const Rat& q) { return q.get_d(); }

// Exact: every finite double is a dyadic rational.
inline Rat rat_of_double(double x) {
  if (!std::isfinite(x)) throw Error("rat_of_double: non-finite input");
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

inline Rat rat_of_long(long n) { return Rat(n); }

// Accepts "p/q", plain integers, and decimal literals like "2.5".
inline Rat rat_of_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("rat_of_string: bad rational '" + s + "'");
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    Int num(digits, 10);
    Int den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  Rat q;
  if (q.set_str(s, 10) != 0) throw Error("rat_of_string: bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline long rat_floor_long(const Rat& q) { return rat_floor(q).get_si(); }
inline long rat_ceil_long(const Rat& q) { return rat_ceil(q).get_si(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Cost value that is either a finite rational or +infinity.
// Arithmetic: inf + x = inf, min(inf, x) = x.
struct ExtRat {
  bool inf = false;
  Rat v;

  ExtRat() : inf(false), v(0) {}
  explicit ExtRat(Rat r) : inf(false), v(std::move(r)) {}
  static ExtRat infinity() {
    ExtRat e;
    e.inf = true;
    return e;
  }

  bool is_inf() const { return inf; }

  ExtRat operator+(const ExtRat& o) const {
    if (inf || o.inf) return infinity();
    return ExtRat(v + o.v);
  }
  ExtRat operator+(const Rat& r) const {
    if (inf) return infinity();
    return ExtRat(v + r);
  }
  ExtRat operator-(const ExtRat& o) const {
    if (inf && o.inf) throw Error("ExtRat: inf - inf");
    if (o.inf) throw Error("ExtRat: x - inf");
    if (inf) return infinity();
    return ExtRat(v - o.v);
  }
  bool operator<(const ExtRat& o) const {
    if (inf) return false;
    if (o.inf) return true;
    return v < o.v;
  }
  bool operator==(const ExtRat& o) const {
    if (inf || o.inf) return inf == o.inf;
    return v == o.v;
  }
};

inline ExtRat ext_min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }

}  // namespace klab
