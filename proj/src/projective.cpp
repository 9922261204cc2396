#include "plic/projective.hpp"

#include <sstream>

namespace plic {

Rat parse_rational(const std::string& text) {
  if (text.empty()) fail(Errc::ParseError, "empty rational literal");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
          ch == '+' || ch == '/'))
      fail(Errc::ParseError, "bad character in rational literal '" + text + "'");
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    fail(Errc::ParseError, "unparsable rational '" + text + "'");
  if (q.get_den() == 0) fail(Errc::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

namespace detail {

bool Canon3::operator<(const Canon3& o) const {
  for (int i = 0; i < 3; ++i) {
    int c = cmp(v[i], o.v[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

static std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = mpz_sgn(z.get_mpz_t()) < 0 ? 0x9e3779b97f4a7c15ull : 0x243f6a8885a308d3ull;
  std::size_t n = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t limb = static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
    h ^= limb + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t Canon3::hash() const {
  std::size_t h = 0x2545f4914f6cdd1dull;
  for (const auto& z : v) h ^= hash_mpz(z) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::string Canon3::str() const {
  return "(" + v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str() + ")";
}

Canon3 canonicalize3(const std::array<Rat, 3>& raw, const char* what) {
  // Clear denominators, divide by the gcd, make the first nonzero entry
  // positive. Exact at every step.
  Int den_lcm = 1;
  for (const auto& q : raw) {
    Int d = q.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  std::array<Int, 3> v;
  for (int i = 0; i < 3; ++i) {
    v[i] = raw[i].get_num() * (den_lcm / raw[i].get_den());
  }
  Int g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0) fail(Errc::ValidationError, std::string(what) + ": zero triple");
  for (auto& z : v) z /= g;
  for (const auto& z : v) {
    if (z != 0) {
      if (z < 0)
        for (auto& w : v) w = -w;
      break;
    }
  }
  return Canon3{v};
}

static Canon3 canonicalize3_int(std::array<Int, 3> v, const char* what) {
  Int g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0) fail(Errc::ValidationError, std::string(what) + ": zero triple");
  for (auto& z : v) z /= g;
  for (const auto& z : v) {
    if (z != 0) {
      if (z < 0)
        for (auto& w : v) w = -w;
      break;
    }
  }
  return Canon3{v};
}

}  // namespace detail

ProjPoint::ProjPoint(const Rat& x, const Rat& y, const Rat& z)
    : c_(detail::canonicalize3({x, y, z}, "ProjPoint")) {}

ProjPoint ProjPoint::of(long x, long y, long z) {
  return ProjPoint(Rat(x), Rat(y), Rat(z));
}

ProjPoint ProjPoint::parse(const std::array<std::string, 3>& strs) {
  return ProjPoint(parse_rational(strs[0]), parse_rational(strs[1]),
                   parse_rational(strs[2]));
}

ProjLine::ProjLine(const Rat& a, const Rat& b, const Rat& c)
    : c_(detail::canonicalize3({a, b, c}, "ProjLine")) {}

ProjLine ProjLine::of(long a, long b, long c) {
  return ProjLine(Rat(a), Rat(b), Rat(c));
}

ProjLine ProjLine::parse(const std::array<std::string, 3>& strs) {
  return ProjLine(parse_rational(strs[0]), parse_rational(strs[1]),
                  parse_rational(strs[2]));
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  const auto& a = p.coords();
  const auto& b = l.coeffs();
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] == 0;
}

static std::array<Int, 3> cross(const std::array<Int, 3>& a,
                                const std::array<Int, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) fail(Errc::IdenticalElements, "join of equal points " + p.str());
  return ProjLine(detail::canonicalize3_int(cross(p.coords(), q.coords()), "join"));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) fail(Errc::IdenticalElements, "meet of equal lines " + l.str());
  return ProjPoint(detail::canonicalize3_int(cross(l.coeffs(), m.coeffs()), "meet"));
}

ProjLine polar_dual(const ProjPoint& p) {
  return ProjLine(detail::Canon3{p.coords()});
}
ProjPoint polar_dual(const ProjLine& l) {
  return ProjPoint(detail::Canon3{l.coeffs()});
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  const auto& u = a.coords();
  const auto& v = b.coords();
  const auto& w = c.coords();
  Int det = u[0] * (v[1] * w[2] - v[2] * w[1]) -
            u[1] * (v[0] * w[2] - v[2] * w[0]) +
            u[2] * (v[0] * w[1] - v[1] * w[0]);
  return det == 0;
}

static Int det3(const std::array<Int, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) -
         m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

// Cofactor matrix C with C[i][j] = (-1)^{i+j} * minor(i,j).
// Projectively this is the inverse-transpose; it is the line action of the
// map with matrix m.
static std::array<Int, 9> cofactor3(const std::array<Int, 9>& m) {
  auto minor_det = [&](int r0, int r1, int c0, int c1) -> Int {
    return m[3 * r0 + c0] * m[3 * r1 + c1] - m[3 * r0 + c1] * m[3 * r1 + c0];
  };
  std::array<Int, 9> c;
  c[0] = minor_det(1, 2, 1, 2);
  c[1] = -minor_det(1, 2, 0, 2);
  c[2] = minor_det(1, 2, 0, 1);
  c[3] = -minor_det(0, 2, 1, 2);
  c[4] = minor_det(0, 2, 0, 2);
  c[5] = -minor_det(0, 2, 0, 1);
  c[6] = minor_det(0, 1, 1, 2);
  c[7] = -minor_det(0, 1, 0, 2);
  c[8] = minor_det(0, 1, 0, 1);
  return c;
}

ProjMap ProjMap::from_ints(std::array<Int, 9> m, const char* what) {
  Int g = 0;
  for (const auto& z : m) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0) fail(Errc::DegenerateFrame, std::string(what) + ": zero matrix");
  for (auto& z : m) z /= g;
  for (const auto& z : m) {
    if (z != 0) {
      if (z < 0)
        for (auto& w : m) w = -w;
      break;
    }
  }
  if (det3(m) == 0)
    fail(Errc::DegenerateFrame, std::string(what) + ": singular matrix");
  ProjMap r;
  r.m_ = std::move(m);
  return r;
}

ProjMap ProjMap::identity() {
  return from_ints({1, 0, 0, 0, 1, 0, 0, 0, 1}, "identity");
}

ProjMap ProjMap::from_rows(const std::array<std::array<Rat, 3>, 3>& rows) {
  Int den_lcm = 1;
  for (const auto& row : rows)
    for (const auto& q : row) {
      Int d = q.get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
      den_lcm = den_lcm / g * d;
    }
  std::array<Int, 9> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[3 * i + j] = rows[i][j].get_num() * (den_lcm / rows[i][j].get_den());
  return from_ints(std::move(m), "from_rows");
}

ProjMap ProjMap::from_frame(const ProjPoint& a, const ProjPoint& b,
                            const ProjPoint& c, const ProjPoint& d) {
  auto det_of = [](const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    const auto& u = p.coords();
    const auto& v = q.coords();
    const auto& w = r.coords();
    return u[0] * (v[1] * w[2] - v[2] * w[1]) -
           u[1] * (v[0] * w[2] - v[2] * w[0]) +
           u[2] * (v[0] * w[1] - v[1] * w[0]);
  };
  Int dabc = det_of(a, b, c);
  Int ddbc = det_of(d, b, c);
  Int dadc = det_of(a, d, c);
  Int dabd = det_of(a, b, d);
  if (dabc == 0 || ddbc == 0 || dadc == 0 || dabd == 0)
    fail(Errc::DegenerateFrame, "three of the four frame points are collinear");
  // Columns lambda_i * (a|b|c) with lambda via Cramer, scaled integral.
  std::array<Int, 9> m;
  for (int i = 0; i < 3; ++i) {
    m[3 * i + 0] = ddbc * a.coords()[i];
    m[3 * i + 1] = dadc * b.coords()[i];
    m[3 * i + 2] = dabd * c.coords()[i];
  }
  return from_ints(std::move(m), "from_frame");
}

ProjMap ProjMap::four_to_four(const std::array<ProjPoint, 4>& src,
                              const std::array<ProjPoint, 4>& dst) {
  ProjMap s = from_frame(src[0], src[1], src[2], src[3]);
  ProjMap d = from_frame(dst[0], dst[1], dst[2], dst[3]);
  ProjMap m = d * s.inverse();
  for (int i = 0; i < 4; ++i) {
    if (m(src[i]) != dst[i])
      fail(Errc::DegenerateFrame, "four_to_four verification failed");
  }
  return m;
}

ProjMap ProjMap::inverse() const {
  // Adjugate = transpose of the cofactor matrix; exact projective inverse.
  auto c = cofactor3(m_);
  std::array<Int, 9> adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) adj[3 * i + j] = c[3 * j + i];
  return from_ints(std::move(adj), "inverse");
}

ProjMap ProjMap::operator*(const ProjMap& rhs) const {
  std::array<Int, 9> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s += m_[3 * i + k] * rhs.m_[3 * k + j];
      m[3 * i + j] = s;
    }
  return from_ints(std::move(m), "compose");
}

ProjPoint ProjMap::operator()(const ProjPoint& p) const {
  const auto& v = p.coords();
  std::array<Int, 3> r;
  for (int i = 0; i < 3; ++i)
    r[i] = m_[3 * i] * v[0] + m_[3 * i + 1] * v[1] + m_[3 * i + 2] * v[2];
  return ProjPoint(detail::canonicalize3_int(std::move(r), "apply_map"));
}

ProjLine ProjMap::operator()(const ProjLine& l) const {
  auto c = cofactor3(m_);
  const auto& v = l.coeffs();
  std::array<Int, 3> r;
  for (int i = 0; i < 3; ++i)
    r[i] = c[3 * i] * v[0] + c[3 * i + 1] * v[1] + c[3 * i + 2] * v[2];
  return ProjLine(detail::canonicalize3_int(std::move(r), "apply_map_line"));
}

bool ProjMap::operator<(const ProjMap& o) const {
  for (int i = 0; i < 9; ++i) {
    int c = cmp(m_[i], o.m_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string ProjMap::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < 3; ++j) os << (j ? " " : "") << m_[3 * i + j].get_str();
  }
  os << "]";
  return os.str();
}

ProjMap translation(const Rat& tx, const Rat& ty) {
  return ProjMap::from_rows({{{Rat(1), Rat(0), tx},
                              {Rat(0), Rat(1), ty},
                              {Rat(0), Rat(0), Rat(1)}}});
}

}  // namespace plic
