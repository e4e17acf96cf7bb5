#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "plh/geom.hpp"

namespace plh {

struct BBox {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool overlaps(const BBox& o, double tol) const {
    return x0 <= o.x1 + tol && o.x0 <= x1 + tol && y0 <= o.y1 + tol && o.y0 <= y1 + tol;
  }
};

BBox bbox_of(const Point2* pts, int n);

// Uniform bucket grid over a set of boxes, stored CSR style.
class BoxGrid {
 public:
  BoxGrid() = default;
  BoxGrid(const std::vector<BBox>& boxes, double tol, double cells_per_item = 1.0);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int64_t cell_count() const { return int64_t(nx_) * ny_; }
  int cell_x(double x) const;
  int cell_y(double y) const;
  // Items registered in cell c.
  const int32_t* begin(int64_t c) const { return items_.data() + offsets_[c]; }
  const int32_t* end(int64_t c) const { return items_.data() + offsets_[c + 1]; }
  template <class F>
  void visit_point(Point2 p, F&& f) const {
    if (nx_ == 0) return;
    int64_t c = int64_t(cell_y(p.y)) * nx_ + cell_x(p.x);
    for (const int32_t* it = begin(c); it != end(c); ++it) f(*it);
  }

 private:
  double ox_ = 0, oy_ = 0, cs_ = 1;
  int nx_ = 0, ny_ = 0;
  std::vector<int64_t> offsets_;
  std::vector<int32_t> items_;
};

// Pairs of triangles whose closed images meet in something other than a shared
// face. Grid accelerated, parallel over grid cells; output sorted.
std::vector<std::pair<int32_t, int32_t>> improper_triangle_pairs(const std::vector<Point2>& pts,
                                                                 const std::vector<Tri>& tris,
                                                                 double tol, size_t max_pairs = 64);
// Brute force all-pairs reference for the kernel above.
std::vector<std::pair<int32_t, int32_t>> improper_triangle_pairs_serial(const std::vector<Point2>& pts,
                                                                        const std::vector<Tri>& tris,
                                                                        double tol, size_t max_pairs = 64);
bool triangle_pair_improper(const std::vector<Point2>& pts, const Tri& a, const Tri& b, double tol);

// Same idea for segments: pairs meeting anywhere except one shared endpoint.
std::vector<std::pair<int32_t, int32_t>> improper_segment_pairs(const std::vector<Point2>& pts,
                                                                const std::vector<Edge>& segs,
                                                                double tol, size_t max_pairs = 64);
bool segment_pair_improper(const std::vector<Point2>& pts, const Edge& a, const Edge& b, double tol);

// Point location in a triangle mesh.
class PointLocator {
 public:
  PointLocator() = default;
  PointLocator(const std::vector<Point2>& pts, const std::vector<Tri>& tris);
  // Index of a triangle containing p (within tol), or -1.
  int32_t locate(Point2 p, double tol = 1e-12) const;

 private:
  const std::vector<Point2>* pts_ = nullptr;
  const std::vector<Tri>* tris_ = nullptr;
  BoxGrid grid_;
};

}  // namespace plh
