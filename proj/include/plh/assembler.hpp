#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plh/constants.hpp"
#include "plh/extension.hpp"
#include "plh/skeleton.hpp"
#include "plh/verify.hpp"

namespace plh {

struct QuasiuniformMesh {
  Complex2D mesh;
  double theta = 0;  // min angle of the coarse mesh
  double d = 0;      // min edge / max edge of the coarse mesh
  int levels = 0;    // midpoint subdivisions applied
};

// Midpoint (4-way) subdivision repeated the fewest times that brings the max edge to target_max_edge.
QuasiuniformMesh quasiuniform_mesh(const Polygon& omega, const Complex2D& coarse, double target_max_edge);
Complex2D midpoint_refine(const Complex2D& c);

// Built-in coarse meshes and their boundary polygons (counterclockwise).
struct Domain {
  std::string name;
  Polygon omega;
  Complex2D coarse;
};
Domain builtin_domain(const std::string& name);  // square, triangle, hexagon
// {"vertices": [[x, y], ...], "triangles": [[i, j, k], ...]}; omega is the boundary cycle.
Domain domain_from_file(const std::string& path);

struct AssemblyOptions {
  double tol = kTauGeom;
  double max_vertices = 6e7;
  int sup_level = 4;              // lattice level of sup_distance
  ContainmentOptions containment;
  bool validate_domain = true;    // pairwise check of K itself
};

struct BoundFlags {
  double angle_lower = 0;   // A0 eps^a0
  double edge_lower = 0;    // A1 eps^a1
  double edge_upper = 0;    // A2 eps^a2
  bool angle_ok = false, edge_lower_ok = false, edge_upper_ok = false;
  bool all() const { return angle_ok && edge_lower_ok && edge_upper_ok; }
};

struct RunReport {
  double eps = 0;
  double sup_error = 0;
  double min_angle_sine = 0, min_edge = 0, max_edge = 0;
  int64_t vertex_count = 0, triangle_count = 0;
  double delta = 0;   // skeleton tolerance
  double theta = 0, d = 0, d_eff = 0;
  int levels = 0;
  int base_triangles = 0;
  int affine_extensions = 0;
  BoundFlags bounds;
  OracleVerdict injective, containment, boundary_agreement;
  bool complex_valid = false;
  ConstantsLedger constants;
};

struct PLHomeoResult {
  PLMap f;  // over K = f.mesh
  AssembledConstants constants;
  double measured_sup_error = 0;
  RunReport report;
  Complex2D base;  // the quasiuniform mesh L
  const Complex2D& K() const { return f.mesh; }
};

PLHomeoResult build_pl_homeomorphism(const Polygon& omega, const Complex2D& coarse, const SampledHomeo& h, double eps,
                                     const AssemblyOptions& opt = {});

}  // namespace plh
