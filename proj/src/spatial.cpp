#include "plh/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

namespace plh {

BBox bbox_of(const Point2* pts, int n) {
  BBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (int i = 1; i < n; ++i) {
    b.x0 = std::min(b.x0, pts[i].x);
    b.y0 = std::min(b.y0, pts[i].y);
    b.x1 = std::max(b.x1, pts[i].x);
    b.y1 = std::max(b.y1, pts[i].y);
  }
  return b;
}

BoxGrid::BoxGrid(const std::vector<BBox>& boxes, double tol, double cells_per_item) {
  const size_t n = boxes.size();
  if (n == 0) return;
  BBox all = boxes[0];
  double ext = 0;
  for (const BBox& b : boxes) {
    all.x0 = std::min(all.x0, b.x0);
    all.y0 = std::min(all.y0, b.y0);
    all.x1 = std::max(all.x1, b.x1);
    all.y1 = std::max(all.y1, b.y1);
    ext += std::max(b.x1 - b.x0, b.y1 - b.y0);
  }
  ext /= double(n);
  double W = all.x1 - all.x0 + 2 * tol, Hh = all.y1 - all.y0 + 2 * tol;
  double span = std::max({W, Hh, 1e-300});
  cs_ = std::max(ext, std::sqrt(W * Hh / (double(n) * cells_per_item)));
  if (!(cs_ > 0)) cs_ = span;
  const double max_cells = 4.0 * double(n) + 16.0;
  while ((W / cs_ + 1) * (Hh / cs_ + 1) > max_cells) cs_ *= 1.5;
  ox_ = all.x0 - tol;
  oy_ = all.y0 - tol;
  nx_ = std::max(1, int(std::ceil(W / cs_)));
  ny_ = std::max(1, int(std::ceil(Hh / cs_)));

  offsets_.assign(size_t(nx_) * ny_ + 1, 0);
  for (const BBox& b : boxes) {
    int cx0 = cell_x(b.x0 - tol), cx1 = cell_x(b.x1 + tol);
    int cy0 = cell_y(b.y0 - tol), cy1 = cell_y(b.y1 + tol);
    for (int cy = cy0; cy <= cy1; ++cy)
      for (int cx = cx0; cx <= cx1; ++cx) ++offsets_[int64_t(cy) * nx_ + cx + 1];
  }
  for (size_t c = 1; c < offsets_.size(); ++c) offsets_[c] += offsets_[c - 1];
  items_.resize(offsets_.back());
  std::vector<int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (size_t i = 0; i < n; ++i) {
    const BBox& b = boxes[i];
    int cx0 = cell_x(b.x0 - tol), cx1 = cell_x(b.x1 + tol);
    int cy0 = cell_y(b.y0 - tol), cy1 = cell_y(b.y1 + tol);
    for (int cy = cy0; cy <= cy1; ++cy)
      for (int cx = cx0; cx <= cx1; ++cx) items_[fill[int64_t(cy) * nx_ + cx]++] = int32_t(i);
  }
}

int BoxGrid::cell_x(double x) const {
  double c = std::floor((x - ox_) / cs_);
  return int(std::clamp(c, 0.0, double(nx_ - 1)));
}

int BoxGrid::cell_y(double y) const {
  double c = std::floor((y - oy_) / cs_);
  return int(std::clamp(c, 0.0, double(ny_ - 1)));
}

bool triangle_pair_improper(const std::vector<Point2>& pts, const Tri& a, const Tri& b, double tol) {
  int shared = 0;
  bool a_in_b[3] = {false, false, false}, b_in_a[3] = {false, false, false};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a[i] == b[j]) {
        a_in_b[i] = b_in_a[j] = true;
        ++shared;
      }
  if (shared >= 3) return true;
  const Point2 P[3] = {pts[a[0]], pts[a[1]], pts[a[2]]};
  const Point2 Q[3] = {pts[b[0]], pts[b[1]], pts[b[2]]};
  if (shared == 2) {
    // proper iff the two free vertices lie strictly on opposite sides of the common side
    int i = 0, j = 0;
    while (a_in_b[i]) ++i;
    while (b_in_a[j]) ++j;
    Point2 u = P[(i + 1) % 3], v = P[(i + 2) % 3];
    double L = dist(u, v);
    return !(orient(u, v, P[i]) * orient(u, v, Q[j]) < 0 && std::abs(orient(u, v, P[i])) > tol * L &&
             std::abs(orient(u, v, Q[j])) > tol * L);
  }

  // largest normalized gap over the six edge normals; positive means apart
  double gap = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < 2; ++t) {
    const Point2* X = t == 0 ? P : Q;
    for (int k = 0; k < 3; ++k) {
      Point2 d = X[(k + 1) % 3] - X[k];
      double L = norm(d);
      if (L == 0) return true;
      Point2 nrm = perp_left(d);
      double p0 = std::numeric_limits<double>::infinity(), p1 = -p0, q0 = p0, q1 = -p0;
      for (int i = 0; i < 3; ++i) {
        double s = dot(P[i], nrm), u = dot(Q[i], nrm);
        p0 = std::min(p0, s);
        p1 = std::max(p1, s);
        q0 = std::min(q0, u);
        q1 = std::max(q1, u);
      }
      gap = std::max(gap, (std::max(p0, q0) - std::min(p1, q1)) / L);
      if (gap > tol) return false;
    }
  }
  if (gap < -tol) return true;

  // touching without sharing the touching entity
  const double tol2 = tol * tol;
  for (int j = 0; j < 3; ++j) {
    if (b_in_a[j]) continue;
    for (int k = 0; k < 3; ++k)
      if (point_segment_distance_sq(Q[j], P[k], P[(k + 1) % 3]) <= tol2) return true;
  }
  for (int i = 0; i < 3; ++i) {
    if (a_in_b[i]) continue;
    for (int k = 0; k < 3; ++k)
      if (point_segment_distance_sq(P[i], Q[k], Q[(k + 1) % 3]) <= tol2) return true;
  }
  return false;
}

bool segment_pair_improper(const std::vector<Point2>& pts, const Edge& a, const Edge& b, double tol) {
  int shared = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a[i] == b[j]) ++shared;
  if (shared == 2) return true;
  if (shared == 1) {
    int32_t pa = (a[0] == b[0] || a[0] == b[1]) ? a[1] : a[0];
    int32_t pb = (b[0] == a[0] || b[0] == a[1]) ? b[1] : b[0];
    return point_segment_distance(pts[pb], pts[a[0]], pts[a[1]]) <= tol ||
           point_segment_distance(pts[pa], pts[b[0]], pts[b[1]]) <= tol;
  }
  Segment s1{pts[a[0]], pts[a[1]]}, s2{pts[b[0]], pts[b[1]]};
  return segment_intersection(s1, s2, tol).kind != IntersectionKind::Empty;
}

namespace {

constexpr size_t kPairStoreLimit = 1u << 20;

template <class Item, class Test>
std::vector<std::pair<int32_t, int32_t>> grid_pairs(const std::vector<BBox>& boxes, const std::vector<Item>& items,
                                                    double tol, size_t max_pairs, Test&& test) {
  std::vector<std::pair<int32_t, int32_t>> out;
  if (items.size() < 2) return out;
  BoxGrid grid(boxes, tol);
  const int64_t ncell = grid.cell_count();
#pragma omp parallel
  {
    std::vector<std::pair<int32_t, int32_t>> local;
#pragma omp for schedule(dynamic, 256)
    for (int64_t c = 0; c < ncell; ++c) {
      const int32_t* b = grid.begin(c);
      const int32_t* e = grid.end(c);
      for (const int32_t* i = b; i != e; ++i) {
        const BBox& bi = boxes[*i];
        for (const int32_t* j = i + 1; j != e; ++j) {
          const BBox& bj = boxes[*j];
          if (!bi.overlaps(bj, tol)) continue;
          // count each pair once: in the cell holding the low corner of the box overlap
          double ox = std::max(bi.x0, bj.x0) - tol, oy = std::max(bi.y0, bj.y0) - tol;
          if (int64_t(grid.cell_y(oy)) * grid.nx() + grid.cell_x(ox) != c) continue;
          if (local.size() < kPairStoreLimit && test(items[*i], items[*j]))
            local.emplace_back(std::min(*i, *j), std::max(*i, *j));
        }
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > max_pairs) out.resize(max_pairs);
  return out;
}

}  // namespace

std::vector<std::pair<int32_t, int32_t>> improper_triangle_pairs(const std::vector<Point2>& pts,
                                                                 const std::vector<Tri>& tris, double tol,
                                                                 size_t max_pairs) {
  std::vector<BBox> boxes(tris.size());
  for (size_t i = 0; i < tris.size(); ++i) {
    Point2 p[3] = {pts[tris[i][0]], pts[tris[i][1]], pts[tris[i][2]]};
    boxes[i] = bbox_of(p, 3);
  }
  return grid_pairs(boxes, tris, tol, max_pairs,
                    [&](const Tri& a, const Tri& b) { return triangle_pair_improper(pts, a, b, tol); });
}

std::vector<std::pair<int32_t, int32_t>> improper_triangle_pairs_serial(const std::vector<Point2>& pts,
                                                                        const std::vector<Tri>& tris, double tol,
                                                                        size_t max_pairs) {
  std::vector<std::pair<int32_t, int32_t>> out;
  for (size_t i = 0; i < tris.size(); ++i)
    for (size_t j = i + 1; j < tris.size(); ++j)
      if (triangle_pair_improper(pts, tris[i], tris[j], tol)) {
        out.emplace_back(int32_t(i), int32_t(j));
        if (out.size() >= max_pairs) return out;
      }
  return out;
}

std::vector<std::pair<int32_t, int32_t>> improper_segment_pairs(const std::vector<Point2>& pts,
                                                                const std::vector<Edge>& segs, double tol,
                                                                size_t max_pairs) {
  std::vector<BBox> boxes(segs.size());
  for (size_t i = 0; i < segs.size(); ++i) {
    Point2 p[2] = {pts[segs[i][0]], pts[segs[i][1]]};
    boxes[i] = bbox_of(p, 2);
  }
  return grid_pairs(boxes, segs, tol, max_pairs,
                    [&](const Edge& a, const Edge& b) { return segment_pair_improper(pts, a, b, tol); });
}

PointLocator::PointLocator(const std::vector<Point2>& pts, const std::vector<Tri>& tris)
    : pts_(&pts), tris_(&tris) {
  std::vector<BBox> boxes(tris.size());
  for (size_t i = 0; i < tris.size(); ++i) {
    Point2 p[3] = {pts[tris[i][0]], pts[tris[i][1]], pts[tris[i][2]]};
    boxes[i] = bbox_of(p, 3);
  }
  grid_ = BoxGrid(boxes, 1e-12);
}

int32_t PointLocator::locate(Point2 p, double tol) const {
  int32_t found = -1;
  grid_.visit_point(p, [&](int32_t t) {
    if (found >= 0) return;
    const Tri& tr = (*tris_)[t];
    Point2 a = (*pts_)[tr[0]], b = (*pts_)[tr[1]], c = (*pts_)[tr[2]];
    double s = orient(a, b, c) > 0 ? 1.0 : -1.0;
    if (s * orient(a, b, p) >= -tol * dist(a, b) && s * orient(b, c, p) >= -tol * dist(b, c) &&
        s * orient(c, a, p) >= -tol * dist(c, a))
      found = t;
  });
  return found;
}

}  // namespace plh
