#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "plh/geom.hpp"

namespace plh_test {

using plh::Point2;

struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  double uniform(double a = 0, double b = 1) { return std::uniform_real_distribution<double>(a, b)(g); }
  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(g); }
  Point2 point(double lo = 0, double hi = 1) { return {uniform(lo, hi), uniform(lo, hi)}; }
};

inline plh::Triangle random_triangle(Rng& r, double min_alt = 1e-3) {
  for (;;) {
    plh::Triangle t{r.point(), r.point(), r.point()};
    if (plh::min_altitude(t.p1, t.p2, t.p3) > min_alt) {
      if (t.signed_area() < 0) std::swap(t.p2, t.p3);
      return t;
    }
  }
}

// Star-shaped random simple polygon around the origin.
inline plh::Polygon random_star_polygon(Rng& r, int n, double rmin = 0.3, double rmax = 1.0) {
  std::vector<double> ang(n);
  for (int i = 0; i < n; ++i) ang[i] = 2 * M_PI * (i + r.uniform(0.1, 0.9)) / n;
  plh::Polygon p;
  for (double a : ang) {
    double rad = r.uniform(rmin, rmax);
    p.push_back({rad * std::cos(a), rad * std::sin(a)});
  }
  return p;
}

// Structured jittered grid triangulation of [0,1]^2 with n x n cells.
inline plh::Complex2D grid_mesh(int n, Rng* jitter = nullptr, double amount = 0.0) {
  plh::Complex2D c;
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      Point2 p{double(i) / n, double(j) / n};
      if (jitter && i > 0 && j > 0 && i < n && j < n)
        p = p + Point2{jitter->uniform(-amount, amount) / n, jitter->uniform(-amount, amount) / n};
      c.vertices.push_back(p);
    }
  auto id = [n](int i, int j) { return int32_t(j * (n + 1) + i); };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      c.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      c.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  c.edges = plh::edges_from_triangles(c.triangles);
  return c;
}

// Boundary cycle of t (counterclockwise, from p1): the corners plus random
// side points, w vertices in total.
inline std::vector<Point2> random_boundary(Rng& r, const plh::Triangle& t, int w) {
  const Point2 c[3] = {t.p1, t.p2, t.p3};
  std::vector<int> extra(3, 0);
  for (int k = 3; k < w; ++k) ++extra[r.index(3)];
  std::vector<Point2> a;
  for (int j = 0; j < 3; ++j) {
    a.push_back(c[j]);
    std::vector<double> ts;
    for (int k = 0; k < extra[j]; ++k) ts.push_back(r.uniform(0.02, 0.98));
    std::sort(ts.begin(), ts.end());
    double prev = 0;
    for (double u : ts) {
      if (u - prev < 1e-3) continue;  // keep side points apart
      a.push_back(plh::lerp(c[j], c[(j + 1) % 3], u));
      prev = u;
    }
  }
  return a;
}

// Random orientation-preserving injective image of the boundary cycle a:
// a star polygon with the same number of vertices, or a jittered copy of a.
inline std::vector<Point2> random_boundary_image(Rng& r, const std::vector<Point2>& a) {
  const int w = int(a.size());
  for (;;) {
    std::vector<Point2> ha;
    if (r.index(2) == 0) {
      Point2 o = r.point(-2, 2);
      double th0 = r.uniform(0, 2 * M_PI), scale = r.uniform(0.3, 3);
      std::vector<double> ang(w);
      for (int k = 0; k < w; ++k) ang[k] = th0 + 2 * M_PI * (k + r.uniform(0.05, 0.95)) / w;
      for (int k = 0; k < w; ++k) {
        double rad = scale * r.uniform(0.2, 1.0);
        ha.push_back(o + Point2{rad * std::cos(ang[k]), rad * std::sin(ang[k])});
      }
    } else {
      double l1 = 1e300;
      for (int k = 0; k < w; ++k) l1 = std::min(l1, plh::dist(a[k], a[(k + 1) % w]));
      for (Point2 p : a) ha.push_back(p + Point2{r.uniform(-0.3, 0.3) * l1, r.uniform(-0.3, 0.3) * l1});
    }
    if (plh::polygon_is_simple(ha) && plh::polygon_signed_area(ha) > 0) return ha;
  }
}

}  // namespace plh_test
