#include "plh/geom.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "plh/errors.hpp"
#include "plh/spatial.hpp"

namespace plh {

double point_segment_distance_sq(Point2 p, Point2 a, Point2 b) {
  Point2 d = b - a;
  double l2 = dot(d, d);
  Point2 r = p - a;
  if (l2 == 0) return dot(r, r);
  double t = std::clamp(dot(r, d) / l2, 0.0, 1.0);
  r = p - (a + t * d);
  return dot(r, r);
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) { return std::sqrt(point_segment_distance_sq(p, a, b)); }

double min_altitude(Point2 a, Point2 b, Point2 c) {
  double m = std::max({dist(a, b), dist(b, c), dist(c, a)});
  if (m == 0) return 0;
  return std::abs(orient(a, b, c)) / m;
}

TriangleMetrics triangle_metrics(const Triangle& t, double tol) {
  if (min_altitude(t.p1, t.p2, t.p3) <= tol) throw DegenerateGeometry("triangle_metrics: degenerate triangle");
  // side opposite each vertex
  double a = dist(t.p2, t.p3), b = dist(t.p3, t.p1), c = dist(t.p1, t.p2);
  double twice_area = std::abs(orient(t.p1, t.p2, t.p3));
  TriangleMetrics m;
  m.min_side = std::min({a, b, c});
  m.max_side = std::max({a, b, c});
  // sin at p1 = 2A/(b c), etc.
  double s1 = twice_area / (b * c), s2 = twice_area / (c * a), s3 = twice_area / (a * b);
  m.min_angle_sine = std::min({s1, s2, s3, 1.0});
  double per = a + b + c;
  m.incenter = (1.0 / per) * (a * t.p1 + b * t.p2 + c * t.p3);
  m.inradius = twice_area / per;
  return m;
}

namespace {

double param_on(Point2 p, Point2 a, Point2 b) {
  Point2 d = b - a;
  double l2 = dot(d, d);
  return l2 == 0 ? 0.0 : std::clamp(dot(p - a, d) / l2, 0.0, 1.0);
}

}  // namespace

IntersectionResult segment_intersection(const Segment& s1, const Segment& s2, double tol) {
  const Point2 a = s1.a, b = s1.b, c = s2.a, d = s2.b;
  IntersectionResult r;

  // Endpoints lying on the other segment decide touching and overlap cases.
  Point2 touch[4];
  int nt = 0;
  if (point_segment_distance(a, c, d) <= tol) touch[nt++] = a;
  if (point_segment_distance(b, c, d) <= tol) touch[nt++] = b;
  if (point_segment_distance(c, a, b) <= tol) touch[nt++] = c;
  if (point_segment_distance(d, a, b) <= tol) touch[nt++] = d;

  auto finish = [&](Point2 p, Point2 q, IntersectionKind kind) {
    double tp = param_on(p, a, b), tq = param_on(q, a, b);
    if (tq < tp) {
      std::swap(p, q);
      std::swap(tp, tq);
    }
    r.kind = kind;
    r.p = p;
    r.q = q;
    r.t0 = tp;
    r.t1 = tq;
    r.u0 = param_on(p, c, d);
    r.u1 = param_on(q, c, d);
    return r;
  };

  if (nt > 0) {
    // extreme touch points along s1
    int lo = 0, hi = 0;
    for (int i = 1; i < nt; ++i) {
      if (param_on(touch[i], a, b) < param_on(touch[lo], a, b)) lo = i;
      if (param_on(touch[i], a, b) > param_on(touch[hi], a, b)) hi = i;
    }
    if (dist(touch[lo], touch[hi]) > tol) return finish(touch[lo], touch[hi], IntersectionKind::Overlap);
    return finish(touch[lo], touch[lo], IntersectionKind::Point);
  }

  double o1 = orient(a, b, c), o2 = orient(a, b, d);
  double o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    double t = o3 / (o3 - o4);
    Point2 p = lerp(a, b, t);
    return finish(p, p, IntersectionKind::Point);
  }
  return r;
}

std::vector<Edge> edges_from_triangles(const std::vector<Tri>& tris) {
  std::vector<Edge> e;
  e.reserve(tris.size() * 3);
  for (const Tri& t : tris) {
    for (int k = 0; k < 3; ++k) {
      int32_t u = t[k], v = t[(k + 1) % 3];
      e.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

Complex2D make_complex(std::vector<Point2> vertices, std::vector<Tri> triangles) {
  Complex2D c;
  c.vertices = std::move(vertices);
  c.edges = edges_from_triangles(triangles);
  c.triangles = std::move(triangles);
  return c;
}

bool ValidationReport::has(const std::string& kind) const {
  for (const auto& v : violations)
    if (v.kind == kind) return true;
  return false;
}

namespace {

struct Reporter {
  ValidationReport rep;
  std::map<std::string, int> counts;
  void add(const std::string& kind, const std::string& detail) {
    if (counts[kind]++ < 20) rep.violations.push_back({kind, detail});
  }
};

std::string pair_str(int a, int b) {
  std::ostringstream os;
  os << a << "," << b;
  return os.str();
}

}  // namespace

ValidationReport validate_complex(const Complex1D& c, double tol) {
  Reporter r;
  const int nv = int(c.vertices.size());
  std::vector<char> used(nv, 0);
  std::vector<Edge> sorted;
  bool indices_ok = true;
  for (size_t i = 0; i < c.edges.size(); ++i) {
    Edge e = c.edges[i];
    if (e[0] < 0 || e[1] < 0 || e[0] >= nv || e[1] >= nv) {
      r.add("invalid index", "edge " + std::to_string(i));
      indices_ok = false;
      continue;
    }
    if (e[0] == e[1] || dist(c.vertices[e[0]], c.vertices[e[1]]) <= tol)
      r.add("degenerate edge", "edge " + std::to_string(i));
    used[e[0]] = used[e[1]] = 1;
    sorted.push_back({std::min(e[0], e[1]), std::max(e[0], e[1])});
  }
  for (int v = 0; v < nv; ++v)
    if (!used[v]) r.add("isolated vertex", "vertex " + std::to_string(v));
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) r.add("duplicate edge", pair_str(sorted[i][0], sorted[i][1]));
  if (indices_ok) {
    for (auto [i, j] : improper_segment_pairs(c.vertices, c.edges, tol))
      r.add("edge-pair intersection not a shared endpoint", pair_str(i, j));
  }
  return r.rep;
}

ValidationReport validate_complex(const Complex2D& c, double tol) {
  Reporter r;
  const int nv = int(c.vertices.size());
  std::vector<char> used(nv, 0);
  bool indices_ok = true;
  for (size_t i = 0; i < c.triangles.size(); ++i) {
    const Tri& t = c.triangles[i];
    bool ok = true;
    for (int k = 0; k < 3; ++k)
      if (t[k] < 0 || t[k] >= nv) ok = false;
    if (!ok) {
      r.add("invalid index", "triangle " + std::to_string(i));
      indices_ok = false;
      continue;
    }
    for (int k = 0; k < 3; ++k) used[t[k]] = 1;
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2] ||
        min_altitude(c.vertices[t[0]], c.vertices[t[1]], c.vertices[t[2]]) <= tol)
      r.add("degenerate triangle", "triangle " + std::to_string(i));
  }
  for (int v = 0; v < nv; ++v)
    if (!used[v]) r.add("isolated vertex", "vertex " + std::to_string(v));
  if (!indices_ok) return r.rep;

  std::vector<Edge> sides = edges_from_triangles(c.triangles);
  std::vector<Edge> listed;
  listed.reserve(c.edges.size());
  for (const Edge& e : c.edges) {
    if (e[0] < 0 || e[1] < 0 || e[0] >= nv || e[1] >= nv || e[0] == e[1]) {
      r.add("invalid edge", pair_str(e[0], e[1]));
      continue;
    }
    listed.push_back({std::min(e[0], e[1]), std::max(e[0], e[1])});
  }
  std::sort(listed.begin(), listed.end());
  for (size_t i = 1; i < listed.size(); ++i)
    if (listed[i] == listed[i - 1]) r.add("duplicate edge", pair_str(listed[i][0], listed[i][1]));
  listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
  std::vector<Edge> diff;
  std::set_difference(listed.begin(), listed.end(), sides.begin(), sides.end(), std::back_inserter(diff));
  for (const Edge& e : diff) r.add("orphan edge", pair_str(e[0], e[1]));
  diff.clear();
  std::set_difference(sides.begin(), sides.end(), listed.begin(), listed.end(), std::back_inserter(diff));
  for (const Edge& e : diff) r.add("missing edge", pair_str(e[0], e[1]));

  for (auto [i, j] : improper_triangle_pairs(c.vertices, c.triangles, tol))
    r.add("triangle-pair intersection not a face", pair_str(i, j));
  return r.rep;
}

double polygon_signed_area(const Polygon& p) {
  double s = 0;
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) s += cross(p[i], p[(i + 1) % n]);
  return 0.5 * s;
}

double polygon_perimeter(const Polygon& p) {
  double s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += dist(p[i], p[(i + 1) % p.size()]);
  return s;
}

bool polygon_is_convex(const Polygon& p, double tol) {
  const size_t n = p.size();
  if (n < 3) return false;
  double sgn = polygon_signed_area(p) > 0 ? 1 : -1;
  for (size_t i = 0; i < n; ++i) {
    Point2 a = p[(i + n - 1) % n], b = p[i], c = p[(i + 1) % n];
    // distance of b to the left of line a->c must be nonnegative up to tol
    double ac = dist(a, c);
    if (ac == 0) return false;
    if (sgn * orient(a, b, c) / ac < -tol) return false;
  }
  return polygon_is_simple(p, tol);
}

bool polygon_is_simple(const Polygon& p, double tol) {
  const int n = int(p.size());
  if (n < 3) return false;
  std::vector<Edge> segs(n);
  for (int i = 0; i < n; ++i) segs[i] = {i, (i + 1) % n};
  for (int i = 0; i < n; ++i)
    if (dist(p[i], p[(i + 1) % n]) <= tol) return false;
  return improper_segment_pairs(p, segs, tol, 1).empty();
}

bool point_in_polygon(const Polygon& p, Point2 q, double tol) {
  const size_t n = p.size();
  int wn = 0;
  for (size_t i = 0; i < n; ++i) {
    Point2 a = p[i], b = p[(i + 1) % n];
    if (point_segment_distance(q, a, b) <= tol) return true;
    if (a.y <= q.y) {
      if (b.y > q.y && orient(a, b, q) > 0) ++wn;
    } else if (b.y <= q.y && orient(a, b, q) < 0) {
      --wn;
    }
  }
  return wn != 0;
}

double polygon_boundary_distance(const Polygon& p, Point2 q) {
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < p.size(); ++i) d = std::min(d, point_segment_distance(q, p[i], p[(i + 1) % p.size()]));
  return d;
}

std::vector<int32_t> boundary_cycle(const Complex2D& c) {
  // directed boundary edges, each taken from a counterclockwise triangle
  std::map<Edge, int> count;
  std::map<Edge, Edge> directed;
  for (const Tri& t : c.triangles) {
    bool ccw = orient(c.vertices[t[0]], c.vertices[t[1]], c.vertices[t[2]]) > 0;
    for (int k = 0; k < 3; ++k) {
      int32_t u = t[k], v = t[(k + 1) % 3];
      if (!ccw) std::swap(u, v);
      Edge key{std::min(u, v), std::max(u, v)};
      ++count[key];
      directed[key] = {u, v};
    }
  }
  std::unordered_map<int32_t, int32_t> next;
  size_t nb = 0;
  for (auto& [key, cnt] : count) {
    if (cnt > 2) throw InvalidMesh("edge shared by more than two triangles");
    if (cnt == 1) {
      Edge d = directed[key];
      if (next.count(d[0])) throw InvalidMesh("boundary is not a single simple cycle");
      next[d[0]] = d[1];
      ++nb;
    }
  }
  if (nb < 3) throw InvalidMesh("mesh has no boundary cycle");
  int32_t start = next.begin()->first;
  for (auto& [u, v] : next)
    if (lex_less(c.vertices[u], c.vertices[start]) || (c.vertices[u] == c.vertices[start] && u < start)) start = u;
  std::vector<int32_t> cyc;
  int32_t v = start;
  do {
    cyc.push_back(v);
    auto it = next.find(v);
    if (it == next.end()) throw InvalidMesh("open boundary chain");
    v = it->second;
    if (cyc.size() > nb) throw InvalidMesh("boundary is not a single simple cycle");
  } while (v != start);
  if (cyc.size() != nb) throw InvalidMesh("boundary has more than one component (holes are unsupported)");
  return cyc;
}

}  // namespace plh
