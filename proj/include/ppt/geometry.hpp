#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "ppt/error.hpp"

namespace ppt {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct RPoint {
  Rat x;
  Rat y;
  bool operator==(const RPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const RPoint& o) const { return !(*this == o); }
};

RPoint operator-(const RPoint& a, const RPoint& b);
RPoint operator+(const RPoint& a, const RPoint& b);

// cross(b-a, c-a): >0 left turn, <0 right turn, 0 collinear.
Rat cross3(const RPoint& a, const RPoint& b, const RPoint& c);
int orientation(const RPoint& a, const RPoint& b, const RPoint& c);  // sign of cross3

Rat dot(const RPoint& a, const RPoint& b);
Rat cross(const RPoint& a, const RPoint& b);

// True if q lies on the closed segment [a,b].
bool on_segment(const RPoint& a, const RPoint& b, const RPoint& q);

// Closed-segment intersection test (shares any point, including endpoints
// and collinear overlap).
bool segments_intersect(const RPoint& a, const RPoint& b,
                        const RPoint& c, const RPoint& d);

// Interiors intersect, or an endpoint of one lies in the interior of the
// other, or collinear overlap of positive length.  Sharing only endpoints
// does not count.
bool segments_cross_improperly(const RPoint& a, const RPoint& b,
                               const RPoint& c, const RPoint& d);

// Signed doubled area of a polygon given by its vertices in order.
Rat polygon_double_area(const std::vector<RPoint>& poly);

// Point-in-convex-polygon (vertices in ccw order), closed test.
bool point_in_convex_ccw(const std::vector<RPoint>& poly, const RPoint& q);

// Point strictly inside a simple polygon (ccw or cw), by crossing parity.
// Boundary points return false.
bool point_strictly_inside_simple(const std::vector<RPoint>& poly, const RPoint& q);
bool point_on_polygon_boundary(const std::vector<RPoint>& poly, const RPoint& q);

// Compare directions of vectors u and v around the origin, sweeping ccw
// starting just above the positive x-axis.  Returns -1/0/+1.  Zero vectors
// are rejected.
int compare_angles_ccw(const RPoint& u, const RPoint& v);

// Exact conversion double -> rational (the double's dyadic value).
Rat rat_from_double(double d);
double rat_to_double(const Rat& r);

// Nearest rational with denominator 2^k.
Rat snap_dyadic(const Rat& r, unsigned k);

// "p/q" or "p"; also accepts decimal literals like "-1.25".
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& r);

}  // namespace ppt
