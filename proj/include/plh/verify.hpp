#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plh/geom.hpp"
#include "plh/holder.hpp"
#include "plh/plmap.hpp"

namespace plh {

struct Witness {
  enum class Kind { None, Triangle, TrianglePair, Points };
  Kind kind = Kind::None;
  int64_t i = -1, j = -1;
  Point2 p, q;
};

struct OracleVerdict {
  bool passed = true;
  Witness witness;
  double measured = 0;
  std::string detail;
};

// Uniform nondegenerate orientation of the image triangles, then no image
// pair meeting outside a shared face. measured: smallest image altitude.
OracleVerdict check_injectivity(const PLMap& f, double tol = kTauGeom);

struct SupDistance {
  double value = 0;
  Point2 at;
};

// Max |f - h| over the barycentric lattice of the given level in every
// triangle plus the edge midpoints. Level m nests in level 2m.
SupDistance sup_distance_ex(const PLMap& f, const MapFn& h, int level);
SupDistance sup_distance_serial(const PLMap& f, const MapFn& h, int level);
double sup_distance(const PLMap& f, const MapFn& h, int level);
// Generic evaluatable f over a sampling mesh (points where f is NaN are skipped).
double sup_distance(const MapFn& f, const MapFn& h, const Complex2D& mesh, int level);

struct ContainmentOptions {
  int image_level = 16;  // lattice level of the sampled h(sigma)
  double tol = kTauGeom;
};

// For every triangle sigma of `mesh`, each vertex and triangle centroid of f
// lying in sigma must map within boundary_error[sigma] + (image lattice edge)/2
// of the PL interpolant of h on sigma's lattice. measured: largest distance
// beyond boundary_error over all sigma.
OracleVerdict check_containment(const PLMap& f, const MapFn& h, const Complex2D& mesh,
                                const std::vector<double>& boundary_error, const ContainmentOptions& opt = {});

// f(domain) must equal image within tol at each point pair.
OracleVerdict check_agreement(const PLMap& f, const std::vector<Point2>& domain, const std::vector<Point2>& image,
                              double tol);

// Sampled |f - h|_beta on the pairs (f is evaluated by point location).
SeminormEstimate difference_seminorm(const PLMap& f, const MapFn& h, double beta, const std::vector<PointPair>& pairs);

// Per-triangle |f - h|_beta. On each triangle g = f - h is replaced by the
// interpolant of its vertex values, whose quotient peaks at a vertex paired
// with a point of the opposite edge; that point is found by a 1D search and
// the pair is then evaluated with the true h. Catches slivers that random
// pairs miss.
SeminormEstimate local_difference_seminorm(const PLMap& f, const MapFn& h, double beta);

}  // namespace plh
