#include "plh/plmap.hpp"

#include <limits>

namespace plh {

std::array<double, 3> barycentric(Point2 a, Point2 b, Point2 c, Point2 p) {
  double d = orient(a, b, c);
  double l1 = orient(p, b, c) / d;
  double l2 = orient(a, p, c) / d;
  return {l1, l2, 1.0 - l1 - l2};
}

Point2 PLMap::eval_in(int32_t t, Point2 p) const {
  const Tri& tr = mesh.triangles[t];
  auto l = barycentric(mesh.vertices[tr[0]], mesh.vertices[tr[1]], mesh.vertices[tr[2]], p);
  return l[0] * images[tr[0]] + l[1] * images[tr[1]] + l[2] * images[tr[2]];
}

Point2 PLMap::gradient_row(int32_t t, int comp) const {
  const Tri& tr = mesh.triangles[t];
  Point2 p1 = mesh.vertices[tr[0]], p2 = mesh.vertices[tr[1]], p3 = mesh.vertices[tr[2]];
  auto val = [&](int i) { return comp == 0 ? images[tr[i]].x : images[tr[i]].y; };
  // grad solves [p1-p3; p2-p3] g = [u1-u3; u2-u3]
  Point2 e1 = p1 - p3, e2 = p2 - p3;
  double du1 = val(0) - val(2), du2 = val(1) - val(2);
  double det = cross(e1, e2);
  return {(du1 * e2.y - du2 * e1.y) / det, (e1.x * du2 - e2.x * du1) / det};
}

PLEvaluator::PLEvaluator(const PLMap& f) : f_(&f), loc_(f.mesh.vertices, f.mesh.triangles) {}

Point2 PLEvaluator::operator()(Point2 p) const {
  int32_t t = loc_.locate(p);
  if (t < 0) {
    double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
  }
  return f_->eval_in(t, p);
}

}  // namespace plh
