#include "plh/skeleton.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>

#include "plh/errors.hpp"
#include "plh/spatial.hpp"

namespace plh {

namespace {

std::string fmt(double a, const char* op, double b) {
  std::ostringstream os;
  os.precision(6);
  os << a << " " << op << " " << b;
  return os.str();
}

double subdivision_count(double len, double T) { return std::ceil(len / T); }

}  // namespace

Complex1D uniform_subdivide(const Complex1D& M, double eps, const HolderData& hd) {
  validate(hd);
  if (!(eps > 0)) throw EpsilonTooLarge("eps-positive", "eps must be positive");
  const double T = std::pow(eps / (3 * hd.H), 1 / hd.alpha);
  Complex1D out;
  out.vertices = M.vertices;
  for (const Edge& e : M.edges) {
    Point2 a = M.vertices[e[0]], b = M.vertices[e[1]];
    double len = dist(a, b);
    if (len == 0) throw PreconditionViolated("uniform_subdivide: zero-length edge");
    double n = subdivision_count(len, T);
    if (n < 2) throw EpsilonTooLarge("edge-subdivision-count", "n_e = " + std::to_string(int64_t(n)) + " < 2");
    if (n > 1e8) throw ResourceLimitExceeded("uniform_subdivide: pieces per edge", n, 1e8);
    int ni = int(n);
    int32_t prev = e[0];
    for (int k = 1; k < ni; ++k) {
      int32_t id = int32_t(out.vertices.size());
      out.vertices.push_back(lerp(a, b, double(k) / ni));
      out.edges.push_back({prev, id});
      prev = id;
    }
    out.edges.push_back({prev, e[1]});
  }
  return out;
}

PLPath remove_loops(const PLPath& p, double tol, bool merge_collinear) {
  const size_t np = p.nodes.size();
  if (np < 2 || p.images.size() != np) throw PreconditionViolated("remove_loops: need at least two nodes");
  {
    // sweep in x: only images within tol in x can coincide
    std::vector<size_t> ord(np);
    std::iota(ord.begin(), ord.end(), size_t(0));
    std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) { return p.images[a].x < p.images[b].x; });
    for (size_t a = 0; a < np; ++a)
      for (size_t b = a + 1; b < np && p.images[ord[b]].x - p.images[ord[a]].x <= tol; ++b)
        if (dist(p.images[ord[a]], p.images[ord[b]]) <= tol)
          throw PreconditionViolated("remove_loops: duplicate node images");
  }

  std::vector<Edge> segs(np - 1);
  for (size_t i = 0; i + 1 < np; ++i) segs[i] = {int32_t(i), int32_t(i + 1)};
  const bool injective = improper_segment_pairs(p.images, segs, tol, 1).empty();

  // Injective polyline built from the end: C runs from the current node to the last image.
  std::vector<Point2> C{p.images[np - 2], p.images[np - 1]};
  if (injective) C = p.images;
  for (size_t ii = injective ? 0 : np - 2; ii-- > 0;) {
    const Point2 Pi = p.images[ii];
    const Segment S{Pi, C[0]};
    double best_s = 2;
    size_t best_j = 0;
    Point2 best_pt;
    for (size_t j = 0; j + 1 < C.size(); ++j) {
      auto r = segment_intersection(S, Segment{C[j], C[j + 1]}, tol);
      if (r.kind == IntersectionKind::Empty) continue;
      // the prepended segment always touches C at C[0]
      if (dist(r.p, C[0]) <= tol) continue;
      if (r.t0 < best_s) {
        best_s = r.t0;
        best_j = j;
        best_pt = r.p;
      }
    }
    std::vector<Point2> next{Pi};
    if (best_s <= 1) {
      if (dist(best_pt, Pi) > tol) next.push_back(best_pt);
      size_t from = best_j + 1;
      if (dist(next.back(), C[from]) <= tol) ++from;
      next.insert(next.end(), C.begin() + std::ptrdiff_t(from), C.end());
      if (next.size() < 2) next.push_back(C.back());
    } else {
      next.insert(next.end(), C.begin(), C.end());
    }
    C.swap(next);
  }
  if (merge_collinear) {
    std::vector<Point2> kept{C.front()};
    for (size_t j = 1; j + 1 < C.size(); ++j)
      if (point_segment_distance(C[j], kept.back(), C[j + 1]) > tol) kept.push_back(C[j]);
    kept.push_back(C.back());
    C.swap(kept);
  }
  PLPath out;
  const size_t m = C.size() - 1;
  const Point2 a0 = p.nodes.front(), an = p.nodes.back();
  out.images = std::move(C);
  out.nodes.resize(m + 1);
  for (size_t k = 0; k <= m; ++k) out.nodes[k] = lerp(a0, an, double(k) / double(m));
  out.nodes.back() = an;
  return out;
}

SkeletonParameters skeleton_parameters(const Complex1D& M, const HolderData& hd, double eps, double theta) {
  validate(hd);
  if (!(eps > 0)) throw EpsilonTooLarge("eps-positive", "eps must be positive");
  const double a = hd.alpha, at = hd.alpha_tilde, H = hd.H, Ht = hd.H_tilde;
  const double s = std::sin(theta);
  const double E = eps / (3 * H);
  SkeletonParameters P;
  P.T = std::pow(E, 1 / a);
  P.min_n_e = 1e300;
  P.max_n_e = 0;
  for (const Edge& e : M.edges) {
    double n = subdivision_count(dist(M.vertices[e[0]], M.vertices[e[1]]), P.T);
    P.min_n_e = std::min(P.min_n_e, n);
    P.max_n_e = std::max(P.max_n_e, n);
  }
  if (P.min_n_e < 2)
    throw EpsilonTooLarge("edge-subdivision-count", "min n_e = " + std::to_string(int64_t(P.min_n_e)) + " < 2");

  P.beta = 0.5 * std::pow(s / (2 * Ht), 1 / at) * std::pow(E, 1 / (a * at));
  if (!(P.beta <= eps / 3)) throw EpsilonTooLarge("ball-radius", fmt(P.beta, ">", eps / 3));

  P.delta_s = 0.5 * std::pow(s / Ht, 1 / at) * std::pow(P.beta / H, 1 / (a * at));
  if (!(P.delta_s <= P.beta)) throw EpsilonTooLarge("node-spacing", fmt(P.delta_s, ">", P.beta));

  P.node_ratio = P.T * std::pow(2 * P.delta_s / H, -1 / a);
  if (!(P.node_ratio > 1)) throw EpsilonTooLarge("node-count", fmt(P.node_ratio, "<=", 1));
  if (!(P.node_ratio < 1e8)) throw ResourceLimitExceeded("skeleton: nodes per edge", P.node_ratio, 1e8);
  P.node_count = int(std::ceil(P.node_ratio));

  if (a * at < 1) {
    P.tau = 0.5 * std::pow(std::pow(1 - std::pow(s, 1 / at), 2) / (3 * H * H), 1 / a) *
            std::pow(1 / (2 * Ht), 2 / (a * at)) * std::pow(E, -1 / a + 2 / (a * a * at));
    P.gamma1 = std::pow(1 / (2 * Ht), 1 / at) * std::pow(E, 1 / (a * at)) * (1 - std::pow(s, 1 / at)) /
               (2 * P.delta_s);
    double need = std::max(4.0, std::pow(std::pow(2.0, -1 / a) + std::pow(3.0, -1 / a), -a));
    if (!(P.gamma1 >= need)) throw EpsilonTooLarge("loop-gap-ratio", fmt(P.gamma1, "<", need));
  } else {
    P.tau = std::min(std::pow(1 - s, 2) / (24 * std::pow(H, 3) * Ht * Ht),
                     s * s * (1 - s) / (48 * std::pow(H, 4) * std::pow(Ht, 3))) *
            eps;
  }
  double trim = 0.5 * P.tau / P.T * std::pow(2 * P.delta_s / H, 1 / a);
  double reach = std::pow(P.beta / H, 1 / a);
  if (!(trim < reach)) throw EpsilonTooLarge("trim-length", fmt(trim, ">=", reach));

  SkeletonConstants sc = skeleton_constants(hd, theta);
  P.lower_edge_bound = sc.B1 * std::pow(eps, sc.b1);
  P.upper_edge_bound = sc.B2 * std::pow(eps, sc.b2);
  return P;
}

namespace {

// Largest / smallest root in [lo, 1] of |g0 + s (g1 - g0) - c| = r.
bool circle_root(Point2 g0, Point2 g1, Point2 c, double r, double lo, bool largest, double& out) {
  Point2 d = g1 - g0, f = g0 - c;
  double A = dot(d, d), B = 2 * dot(f, d), Cc = dot(f, f) - r * r;
  if (A == 0) return false;
  double disc = B * B - 4 * A * Cc;
  if (disc < 0) return false;
  double sq = std::sqrt(disc);
  double q = -0.5 * (B + (B >= 0 ? sq : -sq));
  double r1 = q / A, r2 = q != 0 ? Cc / q : r1;
  if (r1 > r2) std::swap(r1, r2);
  const double slack = 1e-12;
  double cand[2] = {r1, r2};
  bool found = false;
  for (int k = 0; k < 2; ++k) {
    double x = largest ? cand[1 - k] : cand[k];
    if (x >= lo - slack && x <= 1 + slack) {
      out = std::clamp(x, std::max(lo, 0.0), 1.0);
      found = true;
      break;
    }
  }
  return found;
}

struct EdgeNodes {
  std::vector<Point2> nodes, images;  // interior K vertices from inf to sup
};

EdgeNodes process_edge(Point2 A, Point2 B, Point2 hA, Point2 hB, const MapFn& h, const HolderData& hd,
                       const SkeletonParameters& P, const SkeletonOptions& opt) {
  const double L = dist(A, B);
  const double beta = P.beta;
  auto arc = [&](double t) { return h(lerp(A, B, t)); };
  auto in_inf = [&](double t) { return dist(arc(t), hA) <= beta; };
  auto in_sup = [&](double t) { return dist(arc(t), hB) <= beta; };
  const double res = std::min(L / 1024, std::pow(beta / hd.H, 1 / hd.alpha) / 8);
  const double dt = res / L;
  // beyond this parameter distance the declared inverse modulus keeps the arc out of the ball
  const double reach = hd.H_tilde * std::pow(beta, hd.alpha_tilde) / L * (1 + 1e-9) + dt;
  const double ptol = opt.tol / L;

  // exit point of the ball around h(inf): last sample inside, then bisection
  double tmax = std::min(1.0, reach);
  double lo = 0, hi = 0;
  for (int pass = 0; pass < 2; ++pass) {
    int K = std::max(1, int(std::ceil(tmax / dt)));
    int i = K;
    while (i > 0 && !in_inf(tmax * i / K)) --i;
    if (i == K) {
      if (tmax < 1) {
        tmax = 1;
        continue;
      }
      throw EpsilonTooLarge("vertex-balls-disjoint", "edge endpoint inside the opposite ball");
    }
    lo = tmax * i / K;
    hi = tmax * (i + 1) / K;
    break;
  }
  while (hi - lo > ptol) {
    double mid = 0.5 * (lo + hi);
    (in_inf(mid) ? lo : hi) = mid;
  }
  const double tx = lo;
  if (in_sup(tx)) throw EpsilonTooLarge("vertex-balls-disjoint", "vertex balls overlap along an edge");

  // entry point of the ball around h(sup): first sample after tx inside
  double tmin = std::max(tx, 1 - reach);
  for (int pass = 0; pass < 2; ++pass) {
    int K = std::max(1, int(std::ceil((1 - tmin) / dt)));
    auto tj = [&](int j) { return j == K ? 1.0 : tmin + (1 - tmin) * j / K; };
    if (tmin > tx && in_sup(tmin)) {
      tmin = tx;
      continue;
    }
    int j = 1;
    while (j < K && !in_sup(tj(j))) ++j;
    lo = tj(j - 1);
    hi = tj(j);
    break;
  }
  while (hi - lo > ptol) {
    double mid = 0.5 * (lo + hi);
    (in_sup(mid) ? hi : lo) = mid;
  }
  const double ty = hi;

  const int N = P.node_count;
  std::vector<double> tk(N + 1);
  std::vector<Point2> g(N + 1);
  for (int k = 0; k <= N; ++k) {
    tk[k] = k == N ? ty : tx + (ty - tx) * k / N;
    g[k] = arc(tk[k]);
  }

  int kp = -1;
  double sp = 0;
  for (int k = N - 1; k >= 0 && kp < 0; --k)
    if (circle_root(g[k], g[k + 1], hA, beta, 0, true, sp)) kp = k;
  if (kp < 0) throw EpsilonTooLarge("trim-points", "nodal path never leaves the first ball");
  int kq = -1;
  double sq = 0;
  for (int k = kp; k < N && kq < 0; ++k)
    if (circle_root(g[k], g[k + 1], hB, beta, k == kp ? sp : 0, false, sq)) kq = k;
  if (kq < 0) throw EpsilonTooLarge("trim-points", "nodal path never reaches the second ball");

  const double tp = tk[kp] + sp * (tk[kp + 1] - tk[kp]);
  const double tq = tk[kq] + sq * (tk[kq + 1] - tk[kq]);
  PLPath path;
  path.nodes.push_back(lerp(A, B, tp));
  path.images.push_back(lerp(g[kp], g[kp + 1], sp));
  for (int k = 1; k < N; ++k) {
    if (tk[k] > tp + ptol && tk[k] < tq - ptol) {
      path.nodes.push_back(lerp(A, B, tk[k]));
      path.images.push_back(g[k]);
    }
  }
  path.nodes.push_back(lerp(A, B, tq));
  path.images.push_back(lerp(g[kq], g[kq + 1], sq));
  PLPath clean = remove_loops(path, opt.tol, opt.merge_collinear);
  return {std::move(clean.nodes), std::move(clean.images)};
}

}  // namespace

SkeletonApproxResult approximate_skeleton(const Complex1D& M, const SampledHomeo& h, double eps, double theta,
                                          const SkeletonOptions& opt) {
  const HolderData& hd = h.hd;
  SkeletonApproxResult res;
  res.params = skeleton_parameters(M, hd, eps, theta);
  res.constants = skeleton_constants(hd, theta);
  const SkeletonParameters& P = res.params;

  double predicted = double(M.vertices.size());
  for (const Edge& e : M.edges)
    predicted += subdivision_count(dist(M.vertices[e[0]], M.vertices[e[1]]), P.T) * (P.node_count + 2);
  if (predicted > opt.max_vertices) throw ResourceLimitExceeded("skeleton vertex count", predicted, opt.max_vertices);

  // subdivided complex: original vertices first, then subdivision points edge by edge
  std::vector<Point2> V = M.vertices;
  std::vector<std::vector<int32_t>> sub_chains(M.edges.size());
  for (size_t i = 0; i < M.edges.size(); ++i) {
    const Edge& e = M.edges[i];
    Point2 a = M.vertices[e[0]], b = M.vertices[e[1]];
    int n = int(subdivision_count(dist(a, b), P.T));
    auto& ch = sub_chains[i];
    ch.push_back(e[0]);
    for (int k = 1; k < n; ++k) {
      ch.push_back(int32_t(V.size()));
      V.push_back(lerp(a, b, double(k) / n));
    }
    ch.push_back(e[1]);
  }
  const int64_t nsub = int64_t(V.size());
  std::vector<Point2> HV(nsub);
#pragma omp parallel for schedule(static)
  for (int64_t v = 0; v < nsub; ++v) HV[v] = h.forward(V[v]);

  struct SubEdge {
    int32_t u, v;  // chain order
  };
  std::vector<SubEdge> sub;
  for (auto& ch : sub_chains)
    for (size_t k = 0; k + 1 < ch.size(); ++k) sub.push_back({ch[k], ch[k + 1]});

  const int64_t ns = int64_t(sub.size());
  std::vector<EdgeNodes> nodes(ns);
  std::vector<std::string> errors(ns);
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t i = 0; i < ns; ++i) {
    if (failed) continue;
    int32_t u = sub[i].u, v = sub[i].v;
    bool forward = !lex_less(V[v], V[u]);  // inf is the lexicographically smaller end
    int32_t lo = forward ? u : v, hi = forward ? v : u;
    try {
      nodes[i] = process_edge(V[lo], V[hi], HV[lo], HV[hi], h.forward, hd, P, opt);
    } catch (const Error& e) {
#pragma omp critical
      {
        errors[i] = e.what();
        failed = true;
      }
    }
  }
  if (failed) {
    // rerun the first failing edge serially so the thrown error is deterministic
    for (int64_t i = 0; i < ns; ++i) {
      if (errors[i].empty() && !nodes[i].nodes.empty()) continue;
      int32_t u = sub[i].u, v = sub[i].v;
      bool forward = !lex_less(V[v], V[u]);
      int32_t lo = forward ? u : v, hi = forward ? v : u;
      process_edge(V[lo], V[hi], HV[lo], HV[hi], h.forward, hd, P, opt);
    }
    throw PreconditionViolated("skeleton edge failed nondeterministically");
  }

  res.refined.vertices = std::move(V);
  res.images = std::move(HV);
  res.edge_chains.resize(M.edges.size());
  size_t si = 0;
  for (size_t i = 0; i < M.edges.size(); ++i) {
    auto& out = res.edge_chains[i];
    const auto& ch = sub_chains[i];
    out.push_back(ch[0]);
    for (size_t k = 0; k + 1 < ch.size(); ++k, ++si) {
      const EdgeNodes& en = nodes[si];
      int32_t u = ch[k], v = ch[k + 1];
      bool forward = !lex_less(res.refined.vertices[v], res.refined.vertices[u]);
      const size_t m = en.nodes.size();
      for (size_t j = 0; j < m; ++j) {
        size_t jj = forward ? j : m - 1 - j;
        out.push_back(int32_t(res.refined.vertices.size()));
        res.refined.vertices.push_back(en.nodes[jj]);
        res.images.push_back(en.images[jj]);
      }
      out.push_back(v);
    }
  }
  double mn = 1e300, mx = 0;
  for (const auto& ch : res.edge_chains)
    for (size_t k = 0; k + 1 < ch.size(); ++k) {
      res.refined.edges.push_back({ch[k], ch[k + 1]});
      double l = dist(res.refined.vertices[ch[k]], res.refined.vertices[ch[k + 1]]);
      mn = std::min(mn, l);
      mx = std::max(mx, l);
    }
  res.realized_min_edge = mn;
  res.realized_max_edge = mx;
  res.sup_error_bound = eps;
  if (!(mn > P.lower_edge_bound && mx < P.upper_edge_bound))
    throw EpsilonTooLarge("realized-edge-length", fmt(mn, "vs lower", P.lower_edge_bound) + ", " +
                                                      fmt(mx, "vs upper", P.upper_edge_bound));
  return res;
}

}  // namespace plh
