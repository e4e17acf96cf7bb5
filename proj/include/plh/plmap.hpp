#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "plh/geom.hpp"
#include "plh/spatial.hpp"

namespace plh {

using MapFn = std::function<Point2(Point2)>;

// A triangulation together with the images of its vertices.
struct PLMap {
  Complex2D mesh;
  std::vector<Point2> images;

  // Affine interpolation inside triangle t.
  Point2 eval_in(int32_t t, Point2 p) const;
  Point2 gradient_row(int32_t t, int comp) const;  // d(image comp)/d(x,y)
};

// PLMap with point location; evaluating outside the mesh returns NaN.
class PLEvaluator {
 public:
  explicit PLEvaluator(const PLMap& f);
  Point2 operator()(Point2 p) const;
  int32_t locate(Point2 p) const { return loc_.locate(p); }
  const PLMap& map() const { return *f_; }

 private:
  const PLMap* f_;
  PointLocator loc_;
};

// Barycentric coordinates of p in (a, b, c).
std::array<double, 3> barycentric(Point2 a, Point2 b, Point2 c, Point2 p);

}  // namespace plh
