#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "plic/error.hpp"

namespace plic {

using Int = mpz_class;
using Rat = mpq_class;

// "n/d" with the sign on the numerator, or plain "n" when d = 1.
Rat parse_rational(const std::string& text);
std::string rational_str(const Rat& q);

namespace detail {

// Homogeneous triple in canonical form: coprime integer entries with the
// first nonzero entry positive. Projective equality is bit equality.
struct Canon3 {
  std::array<Int, 3> v;

  bool operator==(const Canon3& o) const { return v == o.v; }
  bool operator<(const Canon3& o) const;
  std::size_t hash() const;
  std::string str() const;
};

Canon3 canonicalize3(const std::array<Rat, 3>& raw, const char* what);

}  // namespace detail

class ProjPoint {
 public:
  ProjPoint(const Rat& x, const Rat& y, const Rat& z);
  // internal: the triple must already be canonical
  explicit ProjPoint(detail::Canon3 c) : c_(std::move(c)) {}
  static ProjPoint of(long x, long y, long z);
  static ProjPoint parse(const std::array<std::string, 3>& strs);

  const std::array<Int, 3>& coords() const { return c_.v; }
  bool at_infinity() const { return c_.v[2] == 0; }

  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjPoint& o) const { return !(c_ == o.c_); }
  bool operator<(const ProjPoint& o) const { return c_ < o.c_; }
  std::size_t hash() const { return c_.hash(); }
  std::string str() const { return c_.str(); }

 private:
  detail::Canon3 c_;
};

class ProjLine {
 public:
  ProjLine(const Rat& a, const Rat& b, const Rat& c);
  // internal: the triple must already be canonical
  explicit ProjLine(detail::Canon3 c) : c_(std::move(c)) {}
  static ProjLine of(long a, long b, long c);
  static ProjLine parse(const std::array<std::string, 3>& strs);

  const std::array<Int, 3>& coeffs() const { return c_.v; }

  bool operator==(const ProjLine& o) const { return c_ == o.c_; }
  bool operator!=(const ProjLine& o) const { return !(c_ == o.c_); }
  bool operator<(const ProjLine& o) const { return c_ < o.c_; }
  std::size_t hash() const { return c_.hash(); }
  std::string str() const { return c_.str(); }

 private:
  detail::Canon3 c_;
};

bool incident(const ProjPoint& p, const ProjLine& l);

// Unique line through two distinct points (cross product).
ProjLine join(const ProjPoint& p, const ProjPoint& q);
// Unique point on two distinct lines.
ProjPoint meet(const ProjLine& l, const ProjLine& m);

// Polarity: swaps the coordinate triple between point and line roles.
// An involution; incidence is symmetric under it.
ProjLine polar_dual(const ProjPoint& p);
ProjPoint polar_dual(const ProjLine& l);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// Invertible projective transformation, canonical 3x3 integer matrix.
// Acts on points by M*p and on lines by the cofactor matrix, so that
// incidence is preserved exactly.
class ProjMap {
 public:
  static ProjMap identity();
  static ProjMap from_rows(const std::array<std::array<Rat, 3>, 3>& rows);

  // Sends the standard frame e1,e2,e3,e4=(1,1,1) to a,b,c,d.
  static ProjMap from_frame(const ProjPoint& a, const ProjPoint& b,
                            const ProjPoint& c, const ProjPoint& d);

  // Sends src[i] to dst[i], in order. Both quadruples must be frames.
  static ProjMap four_to_four(const std::array<ProjPoint, 4>& src,
                              const std::array<ProjPoint, 4>& dst);

  ProjMap inverse() const;
  ProjMap operator*(const ProjMap& rhs) const;  // composition: this after rhs

  ProjPoint operator()(const ProjPoint& p) const;
  ProjLine operator()(const ProjLine& l) const;

  bool operator==(const ProjMap& o) const { return m_ == o.m_; }
  bool operator<(const ProjMap& o) const;
  const std::array<Int, 9>& entries() const { return m_; }
  std::string str() const;

 private:
  ProjMap() = default;
  static ProjMap from_ints(std::array<Int, 9> m, const char* what);
  std::array<Int, 9> m_;  // row-major, canonical
};

// Translation by (tx, ty) in the z=1 chart; fixes the line z=0 pointwise.
ProjMap translation(const Rat& tx, const Rat& ty);

}  // namespace plic

template <>
struct std::hash<plic::ProjPoint> {
  std::size_t operator()(const plic::ProjPoint& p) const { return p.hash(); }
};
template <>
struct std::hash<plic::ProjLine> {
  std::size_t operator()(const plic::ProjLine& l) const { return l.hash(); }
};
