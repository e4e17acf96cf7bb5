#include "plh/extension.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "plh/errors.hpp"
#include "plh/spatial.hpp"

namespace plh {

namespace {

double sin_at(Point2 a, Point2 b, Point2 c) {
  Point2 u = a - b, v = c - b;
  return std::abs(cross(u, v)) / (norm(u) * norm(v));
}

Point2 rotate(Point2 v, double ang) {
  double c = std::cos(ang), s = std::sin(ang);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Point2 unit(Point2 v) { return (1.0 / norm(v)) * v; }

// Perimeter coordinate of p on the closed path p1 -> p2 -> p3 -> p1, or -1.
double perimeter_param(const Triangle& t, Point2 p, double tol) {
  const Point2 P[3] = {t.p1, t.p2, t.p3};
  double acc = 0;
  for (int k = 0; k < 3; ++k) {
    Point2 a = P[k], b = P[(k + 1) % 3];
    double L = dist(a, b);
    if (dist(p, a) <= tol) return acc;
    if (point_segment_distance(p, a, b) <= tol && dist(p, b) > tol) return acc + dist(p, a);
    acc += L;
  }
  return -1;
}

}  // namespace

std::vector<Point2> inner_polygon(const Triangle& delta, const std::vector<Point2>& a, double tol) {
  const size_t w = a.size();
  if (w < 3) throw InvalidBoundaryData("inner_polygon: need at least three boundary vertices");
  TriangleMetrics m = triangle_metrics(delta);
  const double per = dist(delta.p1, delta.p2) + dist(delta.p2, delta.p3) + dist(delta.p3, delta.p1);
  std::vector<double> s(w);
  for (size_t k = 0; k < w; ++k) {
    s[k] = perimeter_param(delta, a[k], tol);
    if (s[k] < 0) throw InvalidBoundaryData("inner_polygon: vertex not on the triangle boundary");
  }
  int corners = 0;
  for (Point2 c : {delta.p1, delta.p2, delta.p3})
    for (Point2 p : a)
      if (dist(p, c) <= tol) {
        ++corners;
        break;
      }
  if (corners != 3) throw InvalidBoundaryData("inner_polygon: boundary must contain the three corners");
  double prev = 0;
  for (size_t k = 1; k < w; ++k) {
    double d = s[k] - s[0];
    if (d < 0) d += per;
    if (!(d > prev)) throw InvalidBoundaryData("inner_polygon: boundary vertices out of cyclic order");
    prev = d;
  }
  const double hc = m.min_side * m.min_angle_sine / 6;
  std::vector<Point2> b(w);
  for (size_t k = 0; k < w; ++k) b[k] = m.incenter + hc * unit(a[k] - m.incenter);
  return b;
}

std::string offset_condition_failure(const std::vector<Point2>& q_in, const std::vector<Point2>& x_in, double tol) {
  const int w = int(q_in.size());
  if (int(x_in.size()) != w || w < 3) return "size";
  std::vector<Point2> q = q_in, x = x_in;
  if (polygon_signed_area(q) < 0) {
    std::reverse(q.begin(), q.end());
    std::reverse(x.begin(), x.end());
  }
  auto left = [&](Point2 a, Point2 b, Point2 c) {
    double l = dist(a, c);
    return l > 0 && orient(a, b, c) / l > tol;
  };
  double quad_area = 0;
  for (int k = 0; k < w; ++k) {
    int k1 = (k + 1) % w;
    Point2 A = q[k], B = q[k1], C = x[k1], D = x[k];
    if (!(left(A, B, C) && left(B, C, D) && left(C, D, A) && left(D, A, B))) return "quad-not-convex";
    quad_area += 0.5 * (orient(A, B, C) + orient(A, C, D));
  }
  for (int k = 0; k < w; ++k) {
    Point2 a = x[(k + w - 1) % w], b = x[k], c = x[(k + 1) % w];
    double l = dist(a, c);
    if (l == 0 || std::abs(orient(a, b, c)) / l <= tol) return "inner-collinear";
  }
  double inner = polygon_signed_area(x);
  if (!(inner > 0)) return "inner-orientation";
  std::vector<Point2> pts(q);
  pts.insert(pts.end(), x.begin(), x.end());
  std::vector<Edge> segs;
  segs.reserve(3 * w);
  for (int k = 0; k < w; ++k) {
    int k1 = (k + 1) % w;
    segs.push_back({k, k1});
    segs.push_back({k, w + k});
    segs.push_back({w + k, w + k1});
  }
  if (!improper_segment_pairs(pts, segs, tol, 1).empty()) return "segments-cross";
  double total = polygon_signed_area(q);
  if (std::abs(inner + quad_area - total) > 1e-9 * std::abs(total)) return "area-mismatch";
  return "";
}

OffsetResult offset_polygon_ex(const std::vector<Point2>& q_in, const ExtensionOptions& opt) {
  const int w = int(q_in.size());
  if (w < 3 || !polygon_is_simple(q_in, opt.tol)) throw InvalidPolygon("offset_polygon: polygon is not simple");
  const bool flipped = polygon_signed_area(q_in) < 0;
  std::vector<Point2> q = q_in;
  if (flipped) std::reverse(q.begin(), q.end());

  std::vector<Point2> dir(w);
  std::vector<double> half_sin(w);
  double min_edge = 1e300, min_half_sin = 1;
  for (int k = 0; k < w; ++k) {
    Point2 prev = q[(k + w - 1) % w], cur = q[k], next = q[(k + 1) % w];
    Point2 un = unit(next - cur), up = unit(prev - cur);
    double phi = std::atan2(cross(un, up), dot(un, up));
    if (phi <= 0) phi += 2 * M_PI;
    dir[k] = rotate(un, 0.5 * phi);
    half_sin[k] = std::sin(0.5 * phi);
    min_edge = std::min(min_edge, dist(cur, next));
    min_half_sin = std::min(min_half_sin, half_sin[k]);
  }
  const double area = polygon_signed_area(q);
  double r = 0.25 * std::min(2 * area / polygon_perimeter(q), min_edge * min_half_sin);

  OffsetResult res;
  for (int it = 0; it <= opt.max_halvings; ++it, r *= 0.5) {
    std::vector<Point2> x(w);
    for (int k = 0; k < w; ++k) x[k] = q[k] + (r / half_sin[k]) * dir[k];
    int nudged = 0;
    for (int k = 0; k < w; ++k) {
      Point2 a = x[(k + w - 1) % w], c = x[(k + 1) % w];
      double l = dist(a, c);
      if (l > 0 && std::abs(orient(a, x[k], c)) / l <= opt.tol) {
        x[k] = x[k] + (0.25 * r) * dir[k];
        ++nudged;
        ++k;  // alternate so the neighbour keeps its place
      }
    }
    if (offset_condition_failure(q, x, opt.tol).empty()) {
      if (flipped) std::reverse(x.begin(), x.end());
      res.x = std::move(x);
      res.r = r;
      res.halvings = it;
      res.nudged = nudged;
      return res;
    }
  }
  throw OffsetInfeasible("offset_polygon: no admissible offset after " + std::to_string(opt.max_halvings) +
                         " halvings");
}

std::vector<Point2> offset_polygon(const std::vector<Point2>& q) { return offset_polygon_ex(q).x; }

Complex2D triangulate_no_steiner(const Polygon& P, double tol) {
  const int n = int(P.size());
  if (n < 3 || !polygon_is_simple(P, tol)) throw InvalidPolygon("triangulate_no_steiner: polygon is not simple");
  const double sgn = polygon_signed_area(P) > 0 ? 1.0 : -1.0;
  std::vector<int> prv(n), nxt(n), version(n, 0);
  std::vector<char> alive(n, 1);
  for (int i = 0; i < n; ++i) {
    prv[i] = (i + n - 1) % n;
    nxt[i] = (i + 1) % n;
  }
  auto convex = [&](int i) {
    Point2 a = P[prv[i]], b = P[i], c = P[nxt[i]];
    double l = dist(a, c);
    return l > 0 && sgn * orient(a, b, c) / l > tol;
  };
  // Only initially non-convex vertices can block an ear; clipping never makes a vertex reflex.
  std::vector<int> blockers;
  for (int i = 0; i < n; ++i)
    if (!convex(i)) blockers.push_back(i);
  std::sort(blockers.begin(), blockers.end(), [&](int u, int v) { return P[u].x < P[v].x; });
  std::vector<double> bx(blockers.size());
  for (size_t k = 0; k < blockers.size(); ++k) bx[k] = P[blockers[k]].x;

  auto is_ear = [&](int i) {
    if (!convex(i)) return false;
    int a = prv[i], c = nxt[i];
    Point2 A = P[a], B = P[i], C = P[c];
    double x0 = std::min({A.x, B.x, C.x}) - tol, x1 = std::max({A.x, B.x, C.x}) + tol;
    double y0 = std::min({A.y, B.y, C.y}) - tol, y1 = std::max({A.y, B.y, C.y}) + tol;
    for (size_t k = std::lower_bound(bx.begin(), bx.end(), x0) - bx.begin(); k < bx.size() && bx[k] <= x1; ++k) {
      int r = blockers[k];
      if (!alive[r] || r == a || r == i || r == c) continue;
      Point2 p = P[r];
      if (p.y < y0 || p.y > y1) continue;
      if (sgn * orient(A, B, p) >= -tol * dist(A, B) && sgn * orient(B, C, p) >= -tol * dist(B, C) &&
          sgn * orient(C, A, p) >= -tol * dist(C, A))
        return false;
    }
    return true;
  };
  auto score = [&](int i) {
    Point2 A = P[prv[i]], B = P[i], C = P[nxt[i]];
    double s[3] = {dist(A, B), dist(B, C), dist(C, A)};
    std::sort(s, s + 3);
    return std::abs(orient(A, B, C)) / (s[1] * s[2]);  // sine of the smallest angle
  };

  struct Cand {
    double score;
    int v, ver;
    bool operator<(const Cand& o) const { return score < o.score || (score == o.score && v > o.v); }
  };
  std::priority_queue<Cand> heap;
  for (int i = 0; i < n; ++i)
    if (convex(i)) heap.push({score(i), i, 0});

  Complex2D out;
  out.vertices = P;
  std::vector<Cand> deferred;
  int remaining = n;
  while (remaining > 3) {
    if (heap.empty()) throw InvalidPolygon("triangulate_no_steiner: no ear found (polygon not simple within tolerance)");
    Cand c = heap.top();
    heap.pop();
    if (!alive[c.v] || c.ver != version[c.v]) continue;
    if (!is_ear(c.v)) {
      deferred.push_back(c);
      continue;
    }
    int i = c.v, a = prv[i], b = nxt[i];
    out.triangles.push_back({a, i, b});
    alive[i] = 0;
    nxt[a] = b;
    prv[b] = a;
    --remaining;
    for (int u : {a, b}) {
      ++version[u];
      if (convex(u)) heap.push({score(u), u, version[u]});
    }
    for (const Cand& d : deferred)
      if (alive[d.v] && d.ver == version[d.v]) heap.push(d);
    deferred.clear();
  }
  int i = 0;
  while (!alive[i]) ++i;
  out.triangles.push_back({prv[i], i, nxt[i]});
  out.edges = edges_from_triangles(out.triangles);
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ExtensionInvariantViolated("extension check failed: " + what);
}

constexpr double kSlack = 1e-9;

}  // namespace

ExtensionResult extend_boundary_homeo(const Triangle& delta, const std::vector<Point2>& a,
                                      const std::vector<Point2>& ha, const ExtensionOptions& opt) {
  const int w = int(a.size());
  if (w < 3 || int(ha.size()) != w) throw InvalidBoundaryData("extend_boundary_homeo: bad boundary data");
  const TriangleMetrics tm = triangle_metrics(delta);
  const std::vector<Point2> b = inner_polygon(delta, a, opt.tol);
  if (!polygon_is_simple(ha, opt.tol)) throw InvalidBoundaryData("extend_boundary_homeo: boundary map is not injective");

  ExtensionResult res;
  res.w = w;
  ExtensionReport& rep = res.report;
  rep.m1 = tm.min_side;
  rep.m2 = tm.max_side;
  rep.sin_theta = tm.min_angle_sine;
  rep.circle_radius = tm.min_side * tm.min_angle_sine / 6;
  rep.l1 = 1e300;
  rep.l2 = 0;
  for (int k = 0; k < w; ++k) {
    double l = dist(a[k], a[(k + 1) % w]);
    rep.l1 = std::min(rep.l1, l);
    rep.l2 = std::max(rep.l2, l);
  }
  const ExtensionConstants ec;
  rep.angle_bound = extension_angle_bound(ec, rep.l1, rep.m1, rep.m2, rep.sin_theta);
  rep.edge_lower_bound = extension_edge_bound(ec, rep.l1, rep.m1, rep.m2, rep.sin_theta);

  std::vector<Point2> x;
  if (opt.affine_shortcut) {
    int c[3] = {-1, -1, -1};
    const Point2 corner[3] = {delta.p1, delta.p2, delta.p3};
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < w && c[j] < 0; ++k)
        if (dist(a[k], corner[j]) <= opt.tol) c[j] = k;
    Point2 e1 = a[c[1]] - a[c[0]], e2 = a[c[2]] - a[c[0]];
    Point2 f1 = ha[c[1]] - ha[c[0]], f2 = ha[c[2]] - ha[c[0]];
    double det = cross(e1, e2);
    auto A = [&](Point2 p) {
      Point2 d = p - a[c[0]];
      double s = cross(d, e2) / det, t = cross(e1, d) / det;
      return ha[c[0]] + s * f1 + t * f2;
    };
    double resid = 0;
    for (int k = 0; k < w; ++k) resid = std::max(resid, dist(A(a[k]), ha[k]));
    if (resid <= opt.affine_tol) {
      std::vector<Point2> xa(w);
      for (int k = 0; k < w; ++k) xa[k] = A(b[k]);
      if (offset_condition_failure(ha, xa, opt.tol).empty()) {
        x = std::move(xa);
        rep.affine = true;
      }
    }
  }
  if (x.empty()) {
    OffsetResult off = offset_polygon_ex(ha, opt);
    x = std::move(off.x);
    rep.offset_r = off.r;
    rep.halvings = off.halvings;
    rep.nudged = off.nudged;
  }

  Complex2D inner = triangulate_no_steiner(x, opt.tol);
  Complex2D& K = res.f.mesh;
  K.vertices = a;
  K.vertices.insert(K.vertices.end(), b.begin(), b.end());
  res.f.images = ha;
  res.f.images.insert(res.f.images.end(), x.begin(), x.end());
  K.triangles.reserve(3 * w - 2);
  for (int k = 0; k < w; ++k) {
    int k1 = (k + 1) % w;
    K.triangles.push_back({k, k1, w + k1});
    K.triangles.push_back({k, w + k1, w + k});
  }
  for (const Tri& t : inner.triangles) K.triangles.push_back({w + t[0], w + t[1], w + t[2]});
  K.edges = edges_from_triangles(K.triangles);

  // image orientation and area
  const auto& F = res.f.images;
  const double qa = polygon_signed_area(ha);
  const double sq = qa > 0 ? 1 : -1;
  double img_area = 0;
  for (const Tri& t : K.triangles) {
    double o = orient(F[t[0]], F[t[1]], F[t[2]]);
    require(sq * o > 0 && min_altitude(F[t[0]], F[t[1]], F[t[2]]) > opt.tol, "image triangle orientation");
    img_area += 0.5 * std::abs(o);
  }
  require(std::abs(img_area - std::abs(qa)) <= 1e-9 * std::abs(qa), "image area equals enclosed area");

  // edge and angle estimates on the domain triangulation
  const double l1 = rep.l1, l2 = rep.l2, m1 = rep.m1, m2 = rep.m2, s = rep.sin_theta;
  const double lo = 1 - kSlack, hi = 1 + kSlack;
  const Point2* A = a.data();
  const Point2* B = b.data();
  for (int k = 0; k < w; ++k) {
    int k1 = (k + 1) % w;
    require(dist(A[k], B[k]) >= lo * m1 * s / 6, "spoke length lower bound");
    require(dist(A[k], B[k1]) >= lo * m1 * s / 6, "diagonal length lower bound");
    require(dist(B[k], B[k1]) >= lo * l1 * m1 * s * s / (12 * m2), "inner chord lower bound");
    require(sin_at(A[k], A[k1], B[k1]) >= lo * l1 * m1 * s * s / (6 * l2 * m2), "ring angle at a_k+1");
    require(sin_at(A[k1], B[k1], A[k]) >= lo * l1 * l1 * m1 * s * s / (6 * l2 * m2 * m2), "ring angle at b_k+1");
    require(sin_at(B[k1], A[k], A[k1]) >= lo * l1 * m1 * m1 * s * s * s / (36 * l2 * m2 * m2), "ring angle at a_k");
    require(sin_at(A[k], B[k1], B[k]) >= lo * l1 * m1 * s * s / (12 * m2 * m2), "second ring angle at b_k+1");
    require(sin_at(B[k1], B[k], A[k]) >= lo * l1 * m1 * m1 * s * s * s / (72 * m2 * m2 * m2),
            "second ring angle at b_k");
    require(sin_at(B[k], A[k], B[k1]) >= lo * l1 * l1 * m1 * m1 * std::pow(s, 4) / (144 * std::pow(m2, 4)),
            "second ring angle at a_k");
  }
  for (const Tri& t : inner.triangles) {
    for (int j = 0; j < 3; ++j) {
      Point2 p = B[t[j]], q = B[t[(j + 1) % 3]], r = B[t[(j + 2) % 3]];
      require(dist(p, q) <= hi * m1 * s / 3, "inner chord upper bound");
      require(sin_at(p, q, r) >= lo * l1 * s / (4 * m2), "inscribed angle bound");
    }
  }
  rep.min_angle_sine = 1;
  rep.min_edge = 1e300;
  rep.max_edge = 0;
  for (const Tri& t : K.triangles) {
    Point2 p[3] = {K.vertices[t[0]], K.vertices[t[1]], K.vertices[t[2]]};
    for (int j = 0; j < 3; ++j) rep.min_angle_sine = std::min(rep.min_angle_sine, sin_at(p[j], p[(j + 1) % 3], p[(j + 2) % 3]));
  }
  for (const Edge& e : K.edges) {
    double l = dist(K.vertices[e[0]], K.vertices[e[1]]);
    rep.min_edge = std::min(rep.min_edge, l);
    rep.max_edge = std::max(rep.max_edge, l);
  }
  require(rep.min_angle_sine >= lo * rep.angle_bound, "angle sine bound");
  require(rep.min_edge >= lo * rep.edge_lower_bound && rep.max_edge <= hi * m2, "edge length bounds");

  if (opt.verify_pairs) {
    ValidationReport vr = validate_complex(K, opt.tol);
    require(vr.ok(), "K is a complex" + (vr.ok() ? std::string() : ": " + vr.violations[0].kind));
    require(improper_triangle_pairs(F, K.triangles, opt.tol, 1).empty(), "image triangles overlap");
  }
  return res;
}

ExtensionResult extend_boundary_homeo(const Triangle& delta, const Complex1D& boundary,
                                      const std::vector<Point2>& h_boundary, const ExtensionOptions& opt) {
  if (h_boundary.size() != boundary.vertices.size())
    throw InvalidBoundaryData("extend_boundary_homeo: one image per boundary vertex expected");
  ValidationReport vr = validate_complex(boundary, opt.tol);
  if (!vr.ok()) throw InvalidBoundaryData("extend_boundary_homeo: boundary is not a 1-complex");
  const int n = int(boundary.vertices.size());
  std::vector<std::vector<int32_t>> adj(n);
  for (const Edge& e : boundary.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (const auto& l : adj)
    if (l.size() != 2) throw InvalidBoundaryData("extend_boundary_homeo: boundary is not a cycle");
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (dist(boundary.vertices[v], delta.p1) <= opt.tol) start = v;
  if (start < 0) throw InvalidBoundaryData("extend_boundary_homeo: boundary misses a corner");
  // walk the cycle in the direction that leaves p1 towards p2
  std::vector<int32_t> order{start};
  int32_t prev = start, cur = -1;
  for (int32_t c : adj[start]) {
    Point2 d = boundary.vertices[c] - delta.p1;
    if (point_segment_distance(boundary.vertices[c], delta.p1, delta.p2) <= opt.tol && dot(d, delta.p2 - delta.p1) > 0)
      cur = c;
  }
  if (cur < 0) throw InvalidBoundaryData("extend_boundary_homeo: no boundary edge along p1 -> p2");
  while (cur != start) {
    order.push_back(cur);
    int32_t nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nx;
    if (int(order.size()) > n) throw InvalidBoundaryData("extend_boundary_homeo: boundary is not one cycle");
  }
  if (int(order.size()) != n) throw InvalidBoundaryData("extend_boundary_homeo: boundary is not one cycle");
  std::vector<Point2> a(n), ha(n);
  for (int k = 0; k < n; ++k) {
    a[k] = boundary.vertices[order[k]];
    ha[k] = h_boundary[order[k]];
  }
  return extend_boundary_homeo(delta, a, ha, opt);
}

}  // namespace plh
