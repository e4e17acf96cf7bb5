#pragma once

#include <string>
#include <vector>

#include "plh/constants.hpp"
#include "plh/geom.hpp"
#include "plh/plmap.hpp"

namespace plh {

struct ExtensionOptions {
  double tol = kTauGeom;
  // When the boundary map is affine (to affine_tol) place x_k = A(b_k).
  bool affine_shortcut = true;
  double affine_tol = 1e-12;
  // Full pairwise validation of K and of the image; the orientation, area and
  // estimate checks always run.
  bool verify_pairs = true;
  int max_halvings = 60;
};

// Realized quantities and the bounds they are checked against.
struct ExtensionReport {
  double l1 = 0, l2 = 0, m1 = 0, m2 = 0, sin_theta = 0;
  double circle_radius = 0;
  double angle_bound = 0;       // C0 l1^2 m1^2 m2^-4 sin^4
  double edge_lower_bound = 0;  // C1 l1 m1 m2^-1 sin^2
  double min_angle_sine = 0;
  double min_edge = 0, max_edge = 0;
  double offset_r = 0;
  int halvings = 0;
  int nudged = 0;
  bool affine = false;
};

struct ExtensionResult {
  PLMap f;  // f.mesh is the triangulation K of the triangle
  int w = 0;
  ExtensionReport report;
  const Complex2D& K() const { return f.mesh; }
};

// Points b_k of segment [a_k, o] at distance m1 sin(theta)/6 from the incenter o.
std::vector<Point2> inner_polygon(const Triangle& delta, const std::vector<Point2>& boundary_vertices,
                                  double tol = kTauGeom);

struct OffsetResult {
  std::vector<Point2> x;
  double r = 0;
  int halvings = 0;
  int nudged = 0;
};

// Inner offset polygon x_k = q_k + t_k (inward bisector), distance r to both
// adjacent sides, r shrunk until the tiling conditions hold.
OffsetResult offset_polygon_ex(const std::vector<Point2>& q, const ExtensionOptions& opt = {});
std::vector<Point2> offset_polygon(const std::vector<Point2>& q);

// Empty when the quadrilaterals q_k q_k+1 x_k+1 x_k and the polygon x tile q;
// otherwise the name of the failed condition.
std::string offset_condition_failure(const std::vector<Point2>& q, const std::vector<Point2>& x,
                                     double tol = kTauGeom);

// Ear clipping without Steiner points; the ear with the largest minimum angle goes first.
Complex2D triangulate_no_steiner(const Polygon& poly, double tol = kTauGeom);

// Boundary given as the cycle a_0..a_{w-1} traversed in the orientation of
// delta (p1 -> p2 -> p3), containing the three corners, with images ha.
ExtensionResult extend_boundary_homeo(const Triangle& delta, const std::vector<Point2>& a,
                                      const std::vector<Point2>& ha, const ExtensionOptions& opt = {});
// Same with the boundary as a 1-complex and per-vertex images.
ExtensionResult extend_boundary_homeo(const Triangle& delta, const Complex1D& boundary,
                                      const std::vector<Point2>& h_boundary, const ExtensionOptions& opt = {});

}  // namespace plh
