#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace plh {

// Default fuzz for collinearity / coincidence, in domain length units.
inline constexpr double kTauGeom = 1e-12;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 lerp(Point2 a, Point2 b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }
inline Point2 perp_left(Point2 a) { return {-a.y, a.x}; }
inline bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Twice the signed area of (a, b, c); positive when counterclockwise.
inline double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

double point_segment_distance(Point2 p, Point2 a, Point2 b);
double point_segment_distance_sq(Point2 p, Point2 a, Point2 b);

struct Segment {
  Point2 a;
  Point2 b;
  bool oriented = true;  // [a,b] with a before b; false means the unordered segment
};

struct Triangle {
  Point2 p1, p2, p3;
  double signed_area() const { return 0.5 * orient(p1, p2, p3); }
  double area() const { return std::abs(signed_area()); }
};

// Smallest altitude; zero for a degenerate triangle.
double min_altitude(Point2 a, Point2 b, Point2 c);

struct TriangleMetrics {
  double min_side = 0;
  double max_side = 0;
  double min_angle_sine = 0;
  Point2 incenter;
  double inradius = 0;
};

TriangleMetrics triangle_metrics(const Triangle& t, double tol = kTauGeom);

enum class IntersectionKind { Empty, Point, Overlap };

struct IntersectionResult {
  IntersectionKind kind = IntersectionKind::Empty;
  Point2 p, q;      // the point, or the overlap endpoints (p first along s1)
  double t0 = 0, t1 = 0;  // parameters along s1 of p and q
  double u0 = 0, u1 = 0;  // parameters along s2 of p and q
};

IntersectionResult segment_intersection(const Segment& s1, const Segment& s2, double tol = kTauGeom);

using Edge = std::array<int32_t, 2>;
using Tri = std::array<int32_t, 3>;

struct Complex1D {
  std::vector<Point2> vertices;
  std::vector<Edge> edges;
};

struct Complex2D {
  std::vector<Point2> vertices;
  std::vector<Edge> edges;
  std::vector<Tri> triangles;
};

// Sorted unique edge list of a triangle set, each edge stored (min, max).
std::vector<Edge> edges_from_triangles(const std::vector<Tri>& tris);
Complex2D make_complex(std::vector<Point2> vertices, std::vector<Tri> triangles);

struct Violation {
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& kind) const;
};

ValidationReport validate_complex(const Complex1D& c, double tol = kTauGeom);
ValidationReport validate_complex(const Complex2D& c, double tol = kTauGeom);

// Polygons are closed vertex cycles without the repeated first vertex.
using Polygon = std::vector<Point2>;

double polygon_signed_area(const Polygon& p);
double polygon_perimeter(const Polygon& p);
bool polygon_is_convex(const Polygon& p, double tol = kTauGeom);
// True iff nonadjacent sides are disjoint and adjacent sides meet only at their vertex.
bool polygon_is_simple(const Polygon& p, double tol = kTauGeom);
// Winding-number test; points within tol of the boundary count as inside.
bool point_in_polygon(const Polygon& p, Point2 q, double tol = kTauGeom);
// Distance to the boundary curve.
double polygon_boundary_distance(const Polygon& p, Point2 q);

// Boundary cycle of a triangulated disk, counterclockwise, as vertex indices.
std::vector<int32_t> boundary_cycle(const Complex2D& c);

}  // namespace plh
