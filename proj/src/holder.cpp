#include "plh/holder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>

#include "plh/errors.hpp"

namespace plh {

void validate(const HolderData& hd) {
  if (!(hd.alpha > 0 && hd.alpha <= 1) || !(hd.alpha_tilde > 0 && hd.alpha_tilde <= 1))
    throw InvalidExponents("Holder exponents must lie in (0,1]");
  if (!(hd.H > 0) || !(hd.H_tilde > 0) || !std::isfinite(hd.H) || !std::isfinite(hd.H_tilde))
    throw InvalidExponents("Holder constants must be positive and finite");
  if (hd.alpha == 1 && hd.alpha_tilde == 1 && hd.H * hd.H_tilde < 1)
    throw InvalidExponents("bi-Lipschitz constants must satisfy H*H_tilde >= 1");
}

namespace {

double quotient(const MapFn& u, double alpha, const PointPair& pr) {
  double d = dist(pr.first, pr.second);
  if (d == 0) return std::numeric_limits<double>::quiet_NaN();
  Point2 a = u(pr.first), b = u(pr.second);
  double num = dist(a, b);
  if (!std::isfinite(num)) return std::numeric_limits<double>::quiet_NaN();
  return alpha == 1 ? num / d : num / std::pow(d, alpha);
}

SeminormEstimate reduce(const std::vector<double>& q, const std::vector<PointPair>& pairs) {
  SeminormEstimate est;
  int64_t best = -1;
  for (size_t i = 0; i < q.size(); ++i) {
    if (std::isnan(q[i])) continue;
    ++est.sample_count;
    if (best < 0 || q[i] > q[best]) best = int64_t(i);
  }
  if (best < 0) throw InvalidSampling("no usable sample pairs");
  est.value = q[best];
  est.witness = pairs[best];
  return est;
}

}  // namespace

SeminormEstimate holder_seminorm_lower_bound(const MapFn& u, double alpha, const std::vector<PointPair>& pairs) {
  if (!(alpha > 0 && alpha <= 1)) throw InvalidExponents("alpha must lie in (0,1]");
  if (pairs.empty()) throw InvalidSampling("empty sample set");
  std::vector<double> q(pairs.size());
  const int64_t n = int64_t(pairs.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) q[i] = quotient(u, alpha, pairs[i]);
  return reduce(q, pairs);
}

SeminormEstimate holder_seminorm_lower_bound_serial(const MapFn& u, double alpha,
                                                    const std::vector<PointPair>& pairs) {
  if (!(alpha > 0 && alpha <= 1)) throw InvalidExponents("alpha must lie in (0,1]");
  if (pairs.empty()) throw InvalidSampling("empty sample set");
  std::vector<double> q(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) q[i] = quotient(u, alpha, pairs[i]);
  return reduce(q, pairs);
}

namespace {

// Platform independent uniform [0,1).
struct Uniform {
  std::mt19937_64 rng;
  explicit Uniform(uint64_t seed) : rng(seed) {}
  double operator()() { return double(rng() >> 11) * 0x1.0p-53; }
  int64_t index(int64_t n) { return std::min<int64_t>(n - 1, int64_t((*this)() * double(n))); }
};

Point2 random_in_triangle(Uniform& U, Point2 a, Point2 b, Point2 c) {
  double r1 = U(), r2 = U();
  if (r1 + r2 > 1) {
    r1 = 1 - r1;
    r2 = 1 - r2;
  }
  return a + r1 * (b - a) + r2 * (c - a);
}

}  // namespace

std::vector<PointPair> stratified_pairs(const Complex2D& mesh, const Polygon& omega,
                                        const PairSamplingPolicy& policy, uint64_t seed) {
  Uniform U(seed);
  std::vector<PointPair> out;
  const auto& V = mesh.vertices;
  const int64_t nv = int64_t(V.size());
  if (nv <= policy.all_vertex_pairs_below) {
    for (int64_t i = 0; i < nv; ++i)
      for (int64_t j = i + 1; j < nv; ++j) out.emplace_back(V[i], V[j]);
  } else {
    for (int64_t k = 0; k < policy.vertex_pairs; ++k) {
      int64_t i = U.index(nv), j = U.index(nv);
      if (i != j) out.emplace_back(V[i], V[j]);
    }
  }
  const int64_t nt = int64_t(mesh.triangles.size());
  if (nt == 0) return out;
  std::vector<double> cum(nt);
  double acc = 0, min_edge = std::numeric_limits<double>::infinity();
  for (int64_t t = 0; t < nt; ++t) {
    const Tri& tr = mesh.triangles[t];
    acc += std::abs(orient(V[tr[0]], V[tr[1]], V[tr[2]]));
    cum[t] = acc;
    for (int k = 0; k < 3; ++k) min_edge = std::min(min_edge, dist(V[tr[k]], V[tr[(k + 1) % 3]]));
  }
  auto pick = [&]() {
    double r = U() * acc;
    int64_t t = std::lower_bound(cum.begin(), cum.end(), r) - cum.begin();
    return std::min(t, nt - 1);
  };
  auto tri_pts = [&](int64_t t) {
    const Tri& tr = mesh.triangles[t];
    return std::array<Point2, 3>{V[tr[0]], V[tr[1]], V[tr[2]]};
  };
  for (int64_t k = 0; k < policy.interior_pairs; ++k) {
    auto p = tri_pts(U.index(nt));
    out.emplace_back(random_in_triangle(U, p[0], p[1], p[2]), random_in_triangle(U, p[0], p[1], p[2]));
  }
  double diam = 0;
  for (auto a : omega)
    for (auto b : omega) diam = std::max(diam, dist(a, b));
  double r0 = policy.short_scale > 0 ? policy.short_scale : 0.25 * min_edge;
  double lr0 = std::log(r0), lr1 = std::log(std::max(diam, r0 * 2));
  for (int64_t k = 0; k < policy.multiscale_pairs; ++k) {
    auto p = tri_pts(pick());
    Point2 x = random_in_triangle(U, p[0], p[1], p[2]);
    double r = std::exp(lr0 + (lr1 - lr0) * U());
    double phi = 2 * M_PI * U();
    Point2 y = x + r * Point2{std::cos(phi), std::sin(phi)};
    if (point_in_polygon(omega, y, 0.0)) out.emplace_back(x, y);
  }
  return out;
}

double interpolation_bound(double sup_norm, double seminorm_alpha, double alpha, double beta) {
  if (!(beta > 0 && beta <= alpha && alpha <= 1)) throw InvalidExponents("need 0 < beta <= alpha <= 1");
  if (sup_norm < 0 || seminorm_alpha < 0) throw InvalidExponents("norms must be nonnegative");
  if (beta == alpha) return seminorm_alpha;
  double r = beta / alpha;
  return std::pow(2.0, 1 - r) * std::pow(sup_norm, 1 - r) * std::pow(seminorm_alpha, r);
}

double spectral_norm_2x2(double a, double b, double c, double d) {
  double T = a * a + b * b + c * c + d * d;
  double D = a * d - b * c;
  double disc = std::max(0.0, T * T - 4 * D * D);
  return std::sqrt(0.5 * (T + std::sqrt(disc)));
}

double pl_lipschitz_constant(const PLMap& f, double chord_arc) {
  double best = 0;
  const auto& V = f.mesh.vertices;
  for (size_t t = 0; t < f.mesh.triangles.size(); ++t) {
    const Tri& tr = f.mesh.triangles[t];
    if (min_altitude(V[tr[0]], V[tr[1]], V[tr[2]]) <= kTauGeom)
      throw DegenerateGeometry("pl_lipschitz_constant: degenerate triangle");
    Point2 gx = f.gradient_row(int32_t(t), 0), gy = f.gradient_row(int32_t(t), 1);
    best = std::max(best, spectral_norm_2x2(gx.x, gx.y, gy.x, gy.y));
  }
  return chord_arc * best;
}

bool segment_inside_polygon(const Polygon& omega, Point2 p, Point2 q, double tol) {
  std::vector<double> ts{0.0, 1.0};
  const size_t n = omega.size();
  Segment s{p, q};
  for (size_t i = 0; i < n; ++i) {
    auto r = segment_intersection(s, Segment{omega[i], omega[(i + 1) % n]}, tol);
    if (r.kind == IntersectionKind::Empty) continue;
    ts.push_back(r.t0);
    ts.push_back(r.t1);
  }
  std::sort(ts.begin(), ts.end());
  for (size_t k = 0; k + 1 < ts.size(); ++k) {
    if (ts[k + 1] - ts[k] <= 0) continue;
    // off-boundary probe strictly between consecutive boundary hits
    if (!point_in_polygon(omega, lerp(p, q, 0.5 * (ts[k] + ts[k + 1])), tol)) return false;
  }
  return point_in_polygon(omega, p, tol) && point_in_polygon(omega, q, tol);
}

double chord_arc_constant(const Polygon& omega) {
  if (!polygon_is_simple(omega)) throw InvalidPolygon("chord_arc_constant: polygon is not simple");
  if (polygon_is_convex(omega)) return 1.0;
  const size_t n = omega.size();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (j == i + 1 || (i == 0 && j == n - 1) || segment_inside_polygon(omega, omega[i], omega[j]))
        w[i][j] = w[j][i] = dist(omega[i], omega[j]);
  double best = 1.0;
  for (size_t s = 0; s < n; ++s) {
    std::vector<double> d(n, std::numeric_limits<double>::infinity());
    std::vector<char> done(n, 0);
    using QE = std::pair<double, size_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    d[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [dv, v] = pq.top();
      pq.pop();
      if (done[v]) continue;
      done[v] = 1;
      for (size_t u = 0; u < n; ++u)
        if (std::isfinite(w[v][u]) && dv + w[v][u] < d[u]) {
          d[u] = dv + w[v][u];
          pq.push({d[u], u});
        }
    }
    for (size_t t = 0; t < n; ++t)
      if (t != s) best = std::max(best, d[t] / dist(omega[s], omega[t]));
  }
  return best;
}

}  // namespace plh
