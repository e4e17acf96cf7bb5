#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "plh/geom.hpp"
#include "plh/plmap.hpp"

namespace plh {

struct HolderData {
  double alpha = 1;
  double alpha_tilde = 1;
  double H = 1;        // bound on |h|_alpha
  double H_tilde = 1;  // bound on |h^{-1}|_alpha_tilde
};

// Throws InvalidExponents on out-of-range exponents or constants, including
// H * H_tilde < 1 in the Lipschitz case.
void validate(const HolderData& hd);

using PointPair = std::pair<Point2, Point2>;

struct SeminormEstimate {
  double value = 0;
  PointPair witness;
  int64_t sample_count = 0;
};

// Max of |u(x)-u(y)| / |x-y|^alpha over the pairs; pairs where u is undefined
// (NaN) are skipped and not counted.
SeminormEstimate holder_seminorm_lower_bound(const MapFn& u, double alpha, const std::vector<PointPair>& pairs);
SeminormEstimate holder_seminorm_lower_bound_serial(const MapFn& u, double alpha,
                                                    const std::vector<PointPair>& pairs);

struct PairSamplingPolicy {
  int64_t all_vertex_pairs_below = 1500;  // use every vertex pair when the mesh is this small
  int64_t vertex_pairs = 60000;           // otherwise draw this many random vertex pairs
  int64_t interior_pairs = 60000;         // two random points in one random triangle
  int64_t multiscale_pairs = 120000;      // x random, |y-x| log-uniform in [short_scale, diam]
  double short_scale = 0;                 // 0: a quarter of the min edge
};

// Stratified pair set over `mesh` (pairs stay inside omega).
std::vector<PointPair> stratified_pairs(const Complex2D& mesh, const Polygon& omega,
                                        const PairSamplingPolicy& policy, uint64_t seed);

// 2^{1-b/a} sup^{1-b/a} semi^{b/a}.
double interpolation_bound(double sup_norm, double seminorm_alpha, double alpha, double beta);

// chord_arc times the largest gradient operator norm over the triangles of f.
double pl_lipschitz_constant(const PLMap& f, double chord_arc);
// Largest singular value of [[a, b], [c, d]].
double spectral_norm_2x2(double a, double b, double c, double d);

// Max over vertex pairs of (shortest path inside omega) / (straight distance).
double chord_arc_constant(const Polygon& omega);
// Whether the closed segment [p, q] lies in the closed polygon.
bool segment_inside_polygon(const Polygon& omega, Point2 p, Point2 q, double tol = kTauGeom);

}  // namespace plh
