#pragma once

#include <string>
#include <vector>

#include "plh/constants.hpp"
#include "plh/geom.hpp"
#include "plh/holder.hpp"
#include "plh/plmap.hpp"

namespace plh {

// Target homeomorphism with its declared Holder data.
struct SampledHomeo {
  std::string name;
  MapFn forward;
  MapFn inverse;
  HolderData hd;
};

struct PLPath {
  std::vector<Point2> nodes;
  std::vector<Point2> images;
};

struct SkeletonOptions {
  double tol = kTauGeom;
  bool merge_collinear = true;      // drop nodes whose image lies on the chord of its neighbours
  double max_vertices = 6e7;        // resource guard on the refined complex
};

// Quantities of one skeleton run.
struct SkeletonParameters {
  double T = 0;        // (eps/3H)^{1/alpha}, max subdivided edge length
  double beta = 0;     // radius of the vertex balls
  double delta_s = 0;  // bound on image steps between consecutive nodes
  double node_ratio = 0;
  int node_count = 0;  // N: pieces between exit and entry points
  double gamma1 = 0;   // Holder case only
  double tau = 0;      // lower bound on image separation used by the trim check
  double min_n_e = 0, max_n_e = 0;
  double lower_edge_bound = 0;  // B1 eps^b1
  double upper_edge_bound = 0;  // B2 eps^b2
};

struct SkeletonApproxResult {
  Complex1D refined;
  std::vector<Point2> images;  // f at the refined vertices
  // For each input edge (u, v): refined vertex indices from u to v.
  std::vector<std::vector<int32_t>> edge_chains;
  double sup_error_bound = 0;
  double realized_min_edge = 0, realized_max_edge = 0;
  SkeletonConstants constants;
  SkeletonParameters params;
};

// Splits every edge into n_e = ceil(|e| (eps/3H)^{-1/alpha}) equal parts.
Complex1D uniform_subdivide(const Complex1D& M, double eps, const HolderData& hd);

// Injective replacement of a PL path with the same endpoint images, image
// contained in the input image, nodes equispaced between the first and last node.
PLPath remove_loops(const PLPath& p, double tol = kTauGeom, bool merge_collinear = true);

// Feasibility checks and derived quantities, without touching h.
SkeletonParameters skeleton_parameters(const Complex1D& M, const HolderData& hd, double eps, double theta);

SkeletonApproxResult approximate_skeleton(const Complex1D& M, const SampledHomeo& h, double eps, double theta,
                                          const SkeletonOptions& opt = {});

}  // namespace plh
