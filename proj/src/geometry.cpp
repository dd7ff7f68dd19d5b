#include "ppt/geometry.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace ppt {

RPoint operator-(const RPoint& a, const RPoint& b) { return {a.x - b.x, a.y - b.y}; }
RPoint operator+(const RPoint& a, const RPoint& b) { return {a.x + b.x, a.y + b.y}; }

Rat cross3(const RPoint& a, const RPoint& b, const RPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orientation(const RPoint& a, const RPoint& b, const RPoint& c) {
  Rat v = cross3(a, b, c);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

Rat dot(const RPoint& a, const RPoint& b) { return a.x * b.x + a.y * b.y; }
Rat cross(const RPoint& a, const RPoint& b) { return a.x * b.y - a.y * b.x; }

bool on_segment(const RPoint& a, const RPoint& b, const RPoint& q) {
  if (orientation(a, b, q) != 0) return false;
  Rat lo_x = a.x < b.x ? a.x : b.x, hi_x = a.x < b.x ? b.x : a.x;
  Rat lo_y = a.y < b.y ? a.y : b.y, hi_y = a.y < b.y ? b.y : a.y;
  return lo_x <= q.x && q.x <= hi_x && lo_y <= q.y && q.y <= hi_y;
}

bool segments_intersect(const RPoint& a, const RPoint& b,
                        const RPoint& c, const RPoint& d) {
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

namespace {
bool interior_point_of(const RPoint& a, const RPoint& b, const RPoint& q) {
  return on_segment(a, b, q) && q != a && q != b;
}
}  // namespace

bool segments_cross_improperly(const RPoint& a, const RPoint& b,
                               const RPoint& c, const RPoint& d) {
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
    return true;  // proper crossing
  if (interior_point_of(a, b, c) || interior_point_of(a, b, d)) return true;
  if (interior_point_of(c, d, a) || interior_point_of(c, d, b)) return true;
  // Remaining bad case: collinear segments sharing more than a point.
  if (o1 == 0 && o2 == 0) {
    // all four collinear; overlap of positive length?
    // Project on the dominant axis.
    auto key = [&](const RPoint& p) -> Rat {
      if (a.x != b.x || c.x != d.x) return p.x;
      return p.y;
    };
    Rat a1 = key(a), b1 = key(b);
    if (a1 > b1) std::swap(a1, b1);
    Rat c1 = key(c), d1 = key(d);
    if (c1 > d1) std::swap(c1, d1);
    Rat lo = a1 > c1 ? a1 : c1;
    Rat hi = b1 < d1 ? b1 : d1;
    if (lo < hi) return true;
  }
  return false;
}

Rat polygon_double_area(const std::vector<RPoint>& poly) {
  Rat s = 0;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const RPoint& p = poly[i];
    const RPoint& q = poly[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

bool point_in_convex_ccw(const std::vector<RPoint>& poly, const RPoint& q) {
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    if (orientation(poly[i], poly[(i + 1) % n], q) < 0) return false;
  }
  return true;
}

bool point_on_polygon_boundary(const std::vector<RPoint>& poly, const RPoint& q) {
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    if (on_segment(poly[i], poly[(i + 1) % n], q)) return true;
  }
  return false;
}

bool point_strictly_inside_simple(const std::vector<RPoint>& poly, const RPoint& q) {
  if (point_on_polygon_boundary(poly, q)) return false;
  // Ray cast toward +x; handle vertices on the ray by the half-open rule.
  size_t n = poly.size();
  bool in = false;
  for (size_t i = 0; i < n; ++i) {
    const RPoint& p1 = poly[i];
    const RPoint& p2 = poly[(i + 1) % n];
    bool above1 = p1.y > q.y, above2 = p2.y > q.y;
    if (above1 == above2) continue;
    // Edge straddles the horizontal line through q; side of crossing:
    int o = orientation(p1, p2, q);
    if (above1) o = -o;   // normalize to upward edge
    if (o > 0) in = !in;  // q strictly left of upward edge => crossing at x > q.x
  }
  return in;
}

int compare_angles_ccw(const RPoint& u, const RPoint& v) {
  auto is_zero = [](const RPoint& p) { return p.x == 0 && p.y == 0; };
  if (is_zero(u) || is_zero(v))
    throw Error(ErrorCode::BadSize, "zero vector in angle comparison");
  auto half = [](const RPoint& p) {
    // 0: angle in (0, pi], i.e. y>0, or y==0 && x<0 (pi); 1: angle in (pi, 2pi] incl. 0 at 2pi?
    // Sweep starts just above positive x-axis: order: (0,pi) up, pi, (pi,2pi), then 0.
    if (p.y > 0) return 0;
    if (p.y == 0 && p.x < 0) return 1;
    if (p.y < 0) return 2;
    return 3;  // positive x-axis comes last
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv ? -1 : 1;
  Rat c = cross(u, v);
  if (c > 0) return -1;
  if (c < 0) return 1;
  return 0;
}

Rat rat_from_double(double d) {
  if (!std::isfinite(d)) throw Error(ErrorCode::ParseError, "non-finite double");
  if (d == 0.0) return Rat(0);
  int exp = 0;
  double m = std::frexp(d, &exp);  // d = m * 2^exp, |m| in [0.5, 1)
  // m * 2^53 is integral
  long long mi = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rat r(mi);
  if (exp >= 0) {
    r *= Rat(BigInt(1) << exp);
  } else {
    r /= Rat(BigInt(1) << (-exp));
  }
  return r;
}

double rat_to_double(const Rat& r) { return static_cast<double>(r); }

Rat snap_dyadic(const Rat& r, unsigned k) {
  BigInt scale = BigInt(1) << k;
  Rat scaled = r * scale;
  BigInt num = numerator(scaled), den = denominator(scaled);
  // round to nearest integer (ties toward +inf)
  BigInt q = (2 * num + den) / (2 * den);
  // cpp_int division truncates toward zero; fix for negatives
  if (num < 0 && (2 * num + den) % (2 * den) != 0) {
    // recompute with floor semantics
    BigInt a = 2 * num + den, b = 2 * den;
    q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  }
  return Rat(q) / Rat(scale);
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
      return Rat(num) / Rat(den);
    }
    auto dotp = s.find('.');
    if (dotp != std::string::npos) {
      std::string head = s.substr(0, dotp), tail = s.substr(dotp + 1);
      if (tail.empty()) tail = "0";
      bool neg = !head.empty() && head[0] == '-';
      if (head == "-" || head.empty()) head = neg ? "-0" : "0";
      BigInt ip(head);
      BigInt frac(tail);
      BigInt den = 1;
      for (size_t i = 0; i < tail.size(); ++i) den *= 10;
      Rat r = Rat(ip < 0 ? -ip : ip) + Rat(frac) / Rat(den);
      if (neg) r = -r;
      return r;
    }
    return Rat(BigInt(s));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad number: " + s);
  }
}

std::string rat_to_string(const Rat& r) {
  BigInt num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ppt
