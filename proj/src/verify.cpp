#include "plh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plh/spatial.hpp"

namespace plh {

OracleVerdict check_injectivity(const PLMap& f, double tol) {
  OracleVerdict v;
  const auto& T = f.mesh.triangles;
  const auto& F = f.images;
  const int64_t nt = int64_t(T.size());
  int64_t pos = 0, neg = 0;
  double min_alt = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(+ : pos, neg) reduction(min : min_alt)
  for (int64_t t = 0; t < nt; ++t) {
    double o = orient(F[T[t][0]], F[T[t][1]], F[T[t][2]]);
    if (o > 0) ++pos;
    if (o < 0) ++neg;
    min_alt = std::min(min_alt, min_altitude(F[T[t][0]], F[T[t][1]], F[T[t][2]]));
  }
  v.measured = nt ? min_alt : 0;
  const double ref = pos >= neg ? 1 : -1;
  for (int64_t t = 0; t < nt; ++t) {
    double o = orient(F[T[t][0]], F[T[t][1]], F[T[t][2]]);
    if (ref * o <= 0 || min_altitude(F[T[t][0]], F[T[t][1]], F[T[t][2]]) <= tol) {
      v.passed = false;
      v.witness.kind = Witness::Kind::Triangle;
      v.witness.i = t;
      v.detail = "image triangle degenerate or reversed";
      return v;
    }
  }
  auto bad = improper_triangle_pairs(F, T, tol, 1);
  if (!bad.empty()) {
    v.passed = false;
    v.witness.kind = Witness::Kind::TrianglePair;
    v.witness.i = bad[0].first;
    v.witness.j = bad[0].second;
    v.detail = "image triangles overlap";
  }
  return v;
}

namespace {

struct Best {
  double value = -1;
  int64_t tri = -1;
  Point2 at;
  void offer(double d, int64_t t, Point2 p) {
    if (d > value || (d == value && t < tri)) {
      value = d;
      tri = t;
      at = p;
    }
  }
};

void scan_triangle(const PLMap& f, const MapFn& h, int64_t t, int m, Best& best) {
  const Tri& tr = f.mesh.triangles[t];
  const Point2 A = f.mesh.vertices[tr[0]], B = f.mesh.vertices[tr[1]], C = f.mesh.vertices[tr[2]];
  const Point2 FA = f.images[tr[0]], FB = f.images[tr[1]], FC = f.images[tr[2]];
  auto at = [&](double l1, double l2) {
    double l3 = 1 - l1 - l2;
    Point2 p = l1 * A + l2 * B + l3 * C;
    Point2 fp = l1 * FA + l2 * FB + l3 * FC;
    best.offer(dist(fp, h(p)), t, p);
  };
  for (int i = 0; i <= m; ++i)
    for (int j = 0; i + j <= m; ++j) at(double(i) / m, double(j) / m);
  at(0.5, 0.5);
  at(0.5, 0);
  at(0, 0.5);
}

}  // namespace

SupDistance sup_distance_ex(const PLMap& f, const MapFn& h, int level) {
  const int64_t nt = int64_t(f.mesh.triangles.size());
  const int m = std::max(level, 1);
  Best best;
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(static)
    for (int64_t t = 0; t < nt; ++t) scan_triangle(f, h, t, m, local);
#pragma omp critical
    best.offer(local.value, local.tri, local.at);
  }
  return {std::max(best.value, 0.0), best.at};
}

SupDistance sup_distance_serial(const PLMap& f, const MapFn& h, int level) {
  Best best;
  for (int64_t t = 0; t < int64_t(f.mesh.triangles.size()); ++t) scan_triangle(f, h, t, std::max(level, 1), best);
  return {std::max(best.value, 0.0), best.at};
}

double sup_distance(const PLMap& f, const MapFn& h, int level) { return sup_distance_ex(f, h, level).value; }

double sup_distance(const MapFn& f, const MapFn& h, const Complex2D& mesh, int level) {
  const int64_t nt = int64_t(mesh.triangles.size());
  const int m = std::max(level, 1);
  double best = 0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (int64_t t = 0; t < nt; ++t) {
    const Tri& tr = mesh.triangles[t];
    const Point2 A = mesh.vertices[tr[0]], B = mesh.vertices[tr[1]], C = mesh.vertices[tr[2]];
    auto at = [&](double l1, double l2) {
      Point2 p = l1 * A + l2 * B + (1 - l1 - l2) * C;
      Point2 fp = f(p);
      if (std::isnan(fp.x) || std::isnan(fp.y)) return;
      best = std::max(best, dist(fp, h(p)));
    };
    for (int i = 0; i <= m; ++i)
      for (int j = 0; i + j <= m; ++j) at(double(i) / m, double(j) / m);
    at(0.5, 0.5);
    at(0.5, 0);
    at(0, 0.5);
  }
  return best;
}

OracleVerdict check_containment(const PLMap& f, const MapFn& h, const Complex2D& mesh,
                                const std::vector<double>& boundary_error, const ContainmentOptions& opt) {
  OracleVerdict v;
  const auto& KT = f.mesh.triangles;
  const auto& KV = f.mesh.vertices;
  const int64_t nk = int64_t(KT.size()), ns = int64_t(mesh.triangles.size());

  // group the triangles of f by the mesh triangle holding their centroid
  PointLocator loc(mesh.vertices, mesh.triangles);
  std::vector<int32_t> owner(nk);
#pragma omp parallel for schedule(static)
  for (int64_t t = 0; t < nk; ++t) {
    Point2 c = (1.0 / 3) * (KV[KT[t][0]] + KV[KT[t][1]] + KV[KT[t][2]]);
    owner[t] = loc.locate(c, opt.tol);
  }
  for (int64_t t = 0; t < nk; ++t)
    if (owner[t] < 0) {
      v.passed = false;
      v.witness.kind = Witness::Kind::Triangle;
      v.witness.i = t;
      v.detail = "triangle of f outside the domain mesh";
      return v;
    }
  std::vector<int64_t> start(ns + 1, 0);
  for (int64_t t = 0; t < nk; ++t) ++start[owner[t] + 1];
  for (int64_t s = 0; s < ns; ++s) start[s + 1] += start[s];
  std::vector<int64_t> members(nk), fill(start.begin(), start.end() - 1);
  for (int64_t t = 0; t < nk; ++t) members[fill[owner[t]]++] = t;

  const int m = std::max(opt.image_level, 1);
  double worst = 0;
  int64_t worst_sigma = -1;
  Point2 worst_p;
  bool ok = true;
#pragma omp parallel
  {
    double lw = 0;
    int64_t ls = -1;
    Point2 lp;
    bool lok = true;
#pragma omp for schedule(dynamic, 4)
    for (int64_t s = 0; s < ns; ++s) {
      const Tri& st = mesh.triangles[s];
      const Point2 A = mesh.vertices[st[0]], B = mesh.vertices[st[1]], C = mesh.vertices[st[2]];
      auto id = [m](int i, int j) { return int32_t(i * (m + 1) - i * (i - 1) / 2 + j); };
      std::vector<Point2> img;
      img.reserve((m + 1) * (m + 2) / 2);
      for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) {
          double l1 = double(i) / m, l2 = double(j) / m;
          img.push_back(h(l1 * A + l2 * B + (1 - l1 - l2) * C));
        }
      std::vector<Tri> tris;
      for (int i = 0; i < m; ++i)
        for (int j = 0; i + j < m; ++j) {
          tris.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
          if (i + j + 1 < m) tris.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
        }
      double infl = 0;
      for (const Tri& t : tris)
        for (int k = 0; k < 3; ++k) infl = std::max(infl, dist(img[t[k]], img[t[(k + 1) % 3]]));
      infl *= 0.5;
      // lattice boundary in cyclic order: j = 0 edge, i + j = m edge, i = 0 edge
      Polygon ring;
      for (int i = 0; i < m; ++i) ring.push_back(img[id(i, 0)]);
      for (int i = m; i > 0; --i) ring.push_back(img[id(i, m - i)]);
      for (int j = m; j > 0; --j) ring.push_back(img[id(0, j)]);
      PointLocator region(img, tris);
      const double e = boundary_error[s];
      auto probe = [&](Point2 p) {
        double d = region.locate(p, opt.tol) >= 0 ? 0.0 : polygon_boundary_distance(ring, p);
        double excess = d - e;
        if (excess > lw) {
          lw = excess;
          ls = s;
          lp = p;
        }
        if (excess > infl + opt.tol) lok = false;
      };
      for (int64_t k = start[s]; k < start[s + 1]; ++k) {
        const Tri& t = KT[members[k]];
        Point2 a = f.images[t[0]], b = f.images[t[1]], c = f.images[t[2]];
        probe(a);
        probe(b);
        probe(c);
        probe((1.0 / 3) * (a + b + c));
      }
    }
#pragma omp critical
    {
      if (lw > worst || (lw == worst && ls >= 0 && (worst_sigma < 0 || ls < worst_sigma))) {
        worst = lw;
        worst_sigma = ls;
        worst_p = lp;
      }
      ok = ok && lok;
    }
  }
  v.measured = worst;
  if (!ok) {
    v.passed = false;
    v.witness.kind = Witness::Kind::Points;
    v.witness.i = worst_sigma;
    v.witness.p = worst_p;
    v.detail = "image point outside the neighbourhood of h(sigma)";
  }
  return v;
}

OracleVerdict check_agreement(const PLMap& f, const std::vector<Point2>& domain, const std::vector<Point2>& image,
                              double tol) {
  OracleVerdict v;
  PLEvaluator ev(f);
  const int64_t n = int64_t(domain.size());
  double worst = 0;
  int64_t at = -1;
  for (int64_t k = 0; k < n; ++k) {
    Point2 p = ev(domain[k]);
    double d = std::isnan(p.x) ? std::numeric_limits<double>::infinity() : dist(p, image[k]);
    if (d > worst) {
      worst = d;
      at = k;
    }
  }
  v.measured = worst;
  if (worst > tol) {
    v.passed = false;
    v.witness.kind = Witness::Kind::Points;
    v.witness.i = at;
    v.witness.p = domain[at];
    v.witness.q = image[at];
    v.detail = "f differs from the prescribed value";
  }
  return v;
}

SeminormEstimate difference_seminorm(const PLMap& f, const MapFn& h, double beta, const std::vector<PointPair>& pairs) {
  PLEvaluator ev(f);
  MapFn u = [&](Point2 p) {
    Point2 a = ev(p);
    if (std::isnan(a.x)) return a;
    return a - h(p);
  };
  return holder_seminorm_lower_bound(u, beta, pairs);
}

namespace {

// argmax over t in [0, 1] of |du + t dw| / |dp + t dq|^beta
double edge_search(Point2 du, Point2 dw, Point2 dp, Point2 dq, double beta) {
  // squared quotient, which has the same maximiser
  auto q = [&](double t) {
    Point2 n = du + t * dw, d = dp + t * dq;
    double d2 = dot(d, d);
    return d2 > 0 ? dot(n, n) / std::pow(d2, beta) : 0.0;
  };
  constexpr int kGrid = 8;
  double best = -1;
  int k_best = 0;
  for (int k = 0; k <= kGrid; ++k) {
    double v = q(double(k) / kGrid);
    if (v > best) best = v, k_best = k;
  }
  double lo = std::max(0, k_best - 1) / double(kGrid), hi = std::min(kGrid, k_best + 1) / double(kGrid);
  const double phi = 0.5 * (std::sqrt(5.0) - 1);
  double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo), qa = q(a), qb = q(b);
  for (int it = 0; it < 20; ++it) {
    if (qa < qb) {
      lo = a, a = b, qa = qb, b = lo + phi * (hi - lo), qb = q(b);
    } else {
      hi = b, b = a, qb = qa, a = hi - phi * (hi - lo), qa = q(a);
    }
  }
  double tm = 0.5 * (lo + hi);
  return q(tm) > best ? tm : double(k_best) / kGrid;
}

}  // namespace

SeminormEstimate local_difference_seminorm(const PLMap& f, const MapFn& h, double beta) {
  const auto& V = f.mesh.vertices;
  const auto& T = f.mesh.triangles;
  const auto& F = f.images;
  const int64_t nv = int64_t(V.size()), nt = int64_t(T.size());
  std::vector<Point2> g(nv);
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < nv; ++i) g[i] = F[i] - h(V[i]);

  SeminormEstimate out;
#pragma omp parallel
  {
    SeminormEstimate loc;
#pragma omp for schedule(static)
    for (int64_t t = 0; t < nt; ++t)
      for (int k = 0; k < 3; ++k) {
        const int32_t a = T[t][k], b = T[t][(k + 1) % 3], c = T[t][(k + 2) % 3];
        double s = edge_search(g[b] - g[a], g[c] - g[b], V[b] - V[a], V[c] - V[b], beta);
        Point2 y = lerp(V[b], V[c], s);
        double d = dist(V[a], y);
        if (!(d > 0)) continue;
        Point2 gy = lerp(F[b], F[c], s) - h(y);
        double v = norm(g[a] - gy) / std::pow(d, beta);
        ++loc.sample_count;
        if (v > loc.value) loc.value = v, loc.witness = {V[a], y};
      }
#pragma omp critical
    {
      out.sample_count += loc.sample_count;
      if (loc.value > out.value) out.value = loc.value, out.witness = loc.witness;
    }
  }
  return out;
}

}  // namespace plh
