#include "plh/assembler.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>

#include "json.hpp"
#include "plh/errors.hpp"

namespace plh {

namespace {

int64_t edge_index(const std::vector<Edge>& sorted, int32_t u, int32_t v) {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(sorted.begin(), sorted.end(), key);
  if (it == sorted.end() || *it != key) throw InvalidMesh("edge missing from the edge list");
  return it - sorted.begin();
}

struct MeshStats {
  double min_sine = 1, min_edge = std::numeric_limits<double>::infinity(), max_edge = 0;
};

MeshStats mesh_stats(const Complex2D& c) {
  MeshStats s;
  const int64_t nt = int64_t(c.triangles.size()), ne = int64_t(c.edges.size());
  double ms = 1, mn = s.min_edge, mx = 0;
#pragma omp parallel for reduction(min : ms) schedule(static)
  for (int64_t t = 0; t < nt; ++t) {
    const Tri& tr = c.triangles[t];
    Point2 p[3] = {c.vertices[tr[0]], c.vertices[tr[1]], c.vertices[tr[2]]};
    double l[3] = {dist(p[1], p[2]), dist(p[2], p[0]), dist(p[0], p[1])};
    double twice = std::abs(orient(p[0], p[1], p[2]));
    // sine of the angle opposite side k is twice the area over the product of the other two sides
    for (int k = 0; k < 3; ++k) ms = std::min(ms, twice / (l[(k + 1) % 3] * l[(k + 2) % 3]));
  }
#pragma omp parallel for reduction(min : mn) reduction(max : mx) schedule(static)
  for (int64_t e = 0; e < ne; ++e) {
    double l = dist(c.vertices[c.edges[e][0]], c.vertices[c.edges[e][1]]);
    mn = std::min(mn, l);
    mx = std::max(mx, l);
  }
  s.min_sine = ms;
  s.min_edge = mn;
  s.max_edge = mx;
  return s;
}

}  // namespace

Complex2D midpoint_refine(const Complex2D& c) {
  Complex2D out;
  const int32_t nv = int32_t(c.vertices.size());
  const std::vector<Edge> edges = edges_from_triangles(c.triangles);
  out.vertices = c.vertices;
  out.vertices.reserve(nv + edges.size());
  for (const Edge& e : edges) out.vertices.push_back(lerp(c.vertices[e[0]], c.vertices[e[1]], 0.5));
  out.triangles.reserve(4 * c.triangles.size());
  for (const Tri& t : c.triangles) {
    int32_t a = t[0], b = t[1], d = t[2];
    int32_t ab = nv + int32_t(edge_index(edges, a, b));
    int32_t bd = nv + int32_t(edge_index(edges, b, d));
    int32_t da = nv + int32_t(edge_index(edges, d, a));
    out.triangles.push_back({a, ab, da});
    out.triangles.push_back({ab, b, bd});
    out.triangles.push_back({da, bd, d});
    out.triangles.push_back({ab, bd, da});
  }
  out.edges = edges_from_triangles(out.triangles);
  return out;
}

QuasiuniformMesh quasiuniform_mesh(const Polygon& omega, const Complex2D& coarse_in, double target_max_edge) {
  if (!(target_max_edge > 0)) throw PreconditionViolated("quasiuniform_mesh: target edge must be positive");
  Complex2D coarse = coarse_in;
  if (coarse.edges.empty()) coarse.edges = edges_from_triangles(coarse.triangles);
  ValidationReport vr = validate_complex(coarse);
  if (!vr.ok()) throw InvalidMesh("coarse mesh is not a complex: " + vr.violations[0].kind);
  double area = 0;
  for (Tri& t : coarse.triangles) {
    double o = orient(coarse.vertices[t[0]], coarse.vertices[t[1]], coarse.vertices[t[2]]);
    if (o < 0) std::swap(t[1], t[2]);
    area += 0.5 * std::abs(o);
  }
  const double oa = std::abs(polygon_signed_area(omega));
  if (std::abs(area - oa) > 1e-9 * oa) throw InvalidMesh("coarse mesh does not cover the domain");
  double scale = std::sqrt(oa);
  for (int32_t v : boundary_cycle(coarse))
    if (polygon_boundary_distance(omega, coarse.vertices[v]) > 1e-9 * scale)
      throw InvalidMesh("coarse boundary vertex off the domain boundary");

  coarse.edges = edges_from_triangles(coarse.triangles);
  QuasiuniformMesh q;
  MeshStats st = mesh_stats(coarse);
  q.theta = std::asin(std::min(1.0, st.min_sine));
  q.d = st.min_edge / st.max_edge;
  int k = 0;
  while (st.max_edge / std::ldexp(1.0, k) > target_max_edge) ++k;
  double predicted = double(coarse.triangles.size()) * std::pow(4.0, k);
  if (predicted > 1e8) throw ResourceLimitExceeded("quasiuniform_mesh: triangles", predicted, 1e8);
  for (int i = 0; i < k; ++i) coarse = midpoint_refine(coarse);
  q.levels = k;
  q.mesh = std::move(coarse);
  return q;
}

Domain builtin_domain(const std::string& name) {
  Domain d;
  d.name = name;
  auto& V = d.coarse.vertices;
  auto& T = d.coarse.triangles;
  if (name == "square") {
    V = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
    T = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
    d.omega = {V[0], V[1], V[2], V[3]};
  } else if (name == "triangle") {
    V = {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
    T = {{0, 1, 2}};
    d.omega = V;
  } else if (name == "hexagon") {
    for (int k = 0; k < 6; ++k) V.push_back({0.5 + 0.5 * std::cos(k * M_PI / 3), 0.5 + 0.5 * std::sin(k * M_PI / 3)});
    d.omega = V;
    V.push_back({0.5, 0.5});
    for (int k = 0; k < 6; ++k) T.push_back({k, (k + 1) % 6, 6});
  } else {
    throw ConfigError("unknown built-in domain: " + name);
  }
  d.coarse.edges = edges_from_triangles(T);
  return d;
}

Domain domain_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open mesh file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("mesh file is not JSON: ") + e.what());
  }
  Domain d;
  d.name = path;
  try {
    for (const auto& p : j.at("vertices")) d.coarse.vertices.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    for (const auto& t : j.at("triangles"))
      d.coarse.triangles.push_back({t.at(0).get<int32_t>(), t.at(1).get<int32_t>(), t.at(2).get<int32_t>()});
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("mesh file layout: ") + e.what());
  }
  d.coarse.edges = edges_from_triangles(d.coarse.triangles);
  ValidationReport vr = validate_complex(d.coarse);
  if (!vr.ok()) throw InvalidMesh("mesh file is not a complex: " + vr.violations[0].kind);
  for (int32_t v : boundary_cycle(d.coarse)) d.omega.push_back(d.coarse.vertices[v]);
  return d;
}

PLHomeoResult build_pl_homeomorphism(const Polygon& omega, const Complex2D& coarse, const SampledHomeo& h, double eps,
                                     const AssemblyOptions& opt) {
  const HolderData& hd = h.hd;
  validate(hd);
  if (!(eps > 0)) throw EpsilonTooLarge("eps-positive", "eps must be positive");
  const double a = hd.alpha, at = hd.alpha_tilde;
  const double E = eps / (3 * hd.H);
  const double T = std::pow(E, 1 / a);

  PLHomeoResult res;
  RunReport& rep = res.report;
  rep.eps = eps;
  QuasiuniformMesh Q = quasiuniform_mesh(omega, coarse, T);
  const Complex2D& L = Q.mesh;
  MeshStats ls = mesh_stats(L);
  const double s = std::sin(Q.theta);
  const double d_eff = ls.min_edge / T;
  const double delta = std::pow(d_eff * s / hd.H_tilde, 1 / at) * std::pow(E, 1 / (a * at));
  rep.theta = Q.theta;
  rep.d = Q.d;
  rep.d_eff = d_eff;
  rep.levels = Q.levels;
  rep.delta = delta;
  rep.base_triangles = int(L.triangles.size());
  if (!(delta <= eps / 3)) throw EpsilonTooLarge("skeleton-tolerance", "delta > eps/3");

  SkeletonOptions so;
  so.tol = opt.tol;
  so.max_vertices = opt.max_vertices;
  const Complex1D M{L.vertices, L.edges};
  SkeletonApproxResult sk = approximate_skeleton(M, h, delta, Q.theta, so);

  // boundary cycles of the base triangles, counterclockwise from p1
  const int64_t nt = int64_t(L.triangles.size());
  std::vector<std::vector<int32_t>> bids(nt);
  for (int64_t t = 0; t < nt; ++t) {
    const Tri& tr = L.triangles[t];
    for (int k = 0; k < 3; ++k) {
      int32_t u = tr[k], v = tr[(k + 1) % 3];
      const auto& ch = sk.edge_chains[edge_index(L.edges, u, v)];
      if (ch.front() == u)
        bids[t].insert(bids[t].end(), ch.begin(), ch.end() - 1);
      else
        bids[t].insert(bids[t].end(), ch.rbegin(), ch.rend() - 1);
    }
  }

  ExtensionOptions eo;
  eo.tol = opt.tol;
  eo.verify_pairs = false;
  std::vector<ExtensionResult> ext(nt);
  std::vector<std::exception_ptr> errs(nt);
#pragma omp parallel for schedule(dynamic, 4)
  for (int64_t t = 0; t < nt; ++t) {
    try {
      const Tri& tr = L.triangles[t];
      Triangle delta_t{L.vertices[tr[0]], L.vertices[tr[1]], L.vertices[tr[2]]};
      std::vector<Point2> av(bids[t].size()), hv(bids[t].size());
      for (size_t k = 0; k < bids[t].size(); ++k) {
        av[k] = sk.refined.vertices[bids[t][k]];
        hv[k] = sk.images[bids[t][k]];
      }
      ext[t] = extend_boundary_homeo(delta_t, av, hv, eo);
    } catch (...) {
      errs[t] = std::current_exception();
    }
  }
  for (const auto& e : errs)
    if (e) std::rethrow_exception(e);

  // glue: skeleton vertices first, then the inner vertices triangle by triangle
  std::vector<int64_t> voff(nt + 1), toff(nt + 1);
  voff[0] = int64_t(sk.refined.vertices.size());
  toff[0] = 0;
  for (int64_t t = 0; t < nt; ++t) {
    voff[t + 1] = voff[t] + ext[t].w;
    toff[t + 1] = toff[t] + int64_t(ext[t].K().triangles.size());
    rep.affine_extensions += ext[t].report.affine ? 1 : 0;
  }
  if (voff[nt] > std::numeric_limits<int32_t>::max()) throw ResourceLimitExceeded("vertex index range", double(voff[nt]), 2147483647.0);
  PLMap& f = res.f;
  f.mesh.vertices = std::move(sk.refined.vertices);
  f.images = sk.images;
  f.mesh.vertices.resize(voff[nt]);
  f.images.resize(voff[nt]);
  f.mesh.triangles.resize(toff[nt]);
#pragma omp parallel for schedule(static)
  for (int64_t t = 0; t < nt; ++t) {
    const ExtensionResult& x = ext[t];
    const int w = x.w;
    for (int k = 0; k < w; ++k) {
      f.mesh.vertices[voff[t] + k] = x.K().vertices[w + k];
      f.images[voff[t] + k] = x.f.images[w + k];
    }
    int64_t o = toff[t];
    for (const Tri& lt : x.K().triangles) {
      Tri g;
      for (int k = 0; k < 3; ++k) g[k] = lt[k] < w ? bids[t][lt[k]] : int32_t(voff[t] + lt[k] - w);
      f.mesh.triangles[o++] = g;
    }
  }
  ext.clear();
  ext.shrink_to_fit();
  f.mesh.edges = edges_from_triangles(f.mesh.triangles);
  const Complex2D& K = f.mesh;

  MeshStats ks = mesh_stats(K);
  rep.min_angle_sine = ks.min_sine;
  rep.min_edge = ks.min_edge;
  rep.max_edge = ks.max_edge;
  rep.vertex_count = int64_t(K.vertices.size());
  rep.triangle_count = int64_t(K.triangles.size());

  const SkeletonConstants sc = skeleton_constants(hd, Q.theta);
  const ExtensionConstants ec;
  const AssembledConstants ac = assembled_constants(hd, sc, ec, Q.theta, d_eff);
  res.constants = ac;
  BoundFlags& bf = rep.bounds;
  bf.angle_lower = ac.A0 * std::pow(eps, ac.a0);
  bf.edge_lower = ac.A1 * std::pow(eps, ac.a1);
  bf.edge_upper = ac.A2 * std::pow(eps, ac.a2);
  bf.angle_ok = ks.min_sine >= bf.angle_lower;
  bf.edge_lower_ok = ks.min_edge >= bf.edge_lower;
  bf.edge_upper_ok = ks.max_edge <= bf.edge_upper;

  // oracles
  rep.injective = check_injectivity(f, opt.tol);
  if (opt.validate_domain) {
    rep.complex_valid = validate_complex(K, opt.tol).ok();
    if (rep.complex_valid) {
      const double scale = std::sqrt(std::abs(polygon_signed_area(omega)));
      for (int32_t v : boundary_cycle(K))
        if (polygon_boundary_distance(omega, K.vertices[v]) > 1e-9 * scale) rep.complex_valid = false;
    }
  }
  {
    std::vector<Point2> dom, img;
    const auto& R = sk.refined;
    dom.reserve(R.vertices.size() + R.edges.size());
    img.reserve(dom.capacity());
    for (size_t v = 0; v < sk.images.size(); ++v) {
      dom.push_back(K.vertices[v]);
      img.push_back(sk.images[v]);
    }
    for (const Edge& e : R.edges) {
      dom.push_back(lerp(K.vertices[e[0]], K.vertices[e[1]], 0.5));
      img.push_back(lerp(sk.images[e[0]], sk.images[e[1]], 0.5));
    }
    rep.boundary_agreement = check_agreement(f, dom, img, 1e-9);
  }
  SupDistance sd = sup_distance_ex(f, h.forward, opt.sup_level);
  rep.sup_error = res.measured_sup_error = sd.value;

  // sup of |f - h| on each base triangle boundary, sampled at skeleton nodes and edge midpoints
  std::vector<double> edge_err(L.edges.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t e = 0; e < int64_t(L.edges.size()); ++e) {
    const auto& ch = sk.edge_chains[e];
    double m = 0;
    for (size_t k = 0; k < ch.size(); ++k) {
      m = std::max(m, dist(f.images[ch[k]], h.forward(K.vertices[ch[k]])));
      if (k + 1 < ch.size()) {
        Point2 p = lerp(K.vertices[ch[k]], K.vertices[ch[k + 1]], 0.5);
        m = std::max(m, dist(lerp(f.images[ch[k]], f.images[ch[k + 1]], 0.5), h.forward(p)));
      }
    }
    edge_err[e] = m;
  }
  std::vector<double> tri_err(nt, 0);
  for (int64_t t = 0; t < nt; ++t)
    for (int k = 0; k < 3; ++k)
      tri_err[t] = std::max(tri_err[t], edge_err[edge_index(L.edges, L.triangles[t][k], L.triangles[t][(k + 1) % 3])]);
  rep.containment = check_containment(f, h.forward, L, tri_err, opt.containment);

  // ledger
  ConstantsLedger& lg = rep.constants;
  const SkeletonParameters& P = sk.params;
  lg.add("eps", eps, "input");
  lg.add("alpha", a, "input");
  lg.add("alpha_tilde", at, "input");
  lg.add("H", hd.H, "family");
  lg.add("H_tilde", hd.H_tilde, "family");
  lg.add("theta", Q.theta, "base mesh min angle");
  lg.add("d", Q.d, "base mesh edge ratio");
  lg.add("d_eff", d_eff, "realized min edge over (eps/3H)^{1/alpha}");
  lg.add("delta", delta, "skeleton tolerance");
  lg.add("b1", sc.b1, "skeleton");
  lg.add("b2", sc.b2, "skeleton");
  lg.add("B1", sc.B1, "skeleton");
  lg.add("B2", sc.B2, "skeleton");
  lg.add("skeleton.T", P.T, "skeleton");
  lg.add("skeleton.beta", P.beta, "skeleton");
  lg.add("skeleton.delta_s", P.delta_s, "skeleton");
  lg.add("skeleton.N", P.node_count, "skeleton");
  lg.add("skeleton.tau", P.tau, "skeleton");
  lg.add("skeleton.gamma1", P.gamma1, "skeleton");
  lg.add("C0", ec.C0, "extension");
  lg.add("C1", ec.C1, "extension");
  lg.add("c01", ec.c01, "extension");
  lg.add("c02", ec.c02, "extension");
  lg.add("c03", ec.c03, "extension");
  lg.add("c04", ec.c04, "extension");
  lg.add("c11", ec.c11, "extension");
  lg.add("c12", ec.c12, "extension");
  lg.add("c13", ec.c13, "extension");
  lg.add("c14", ec.c14, "extension");
  lg.add("A0", ac.A0, "assembled");
  lg.add("A1", ac.A1, "assembled");
  lg.add("A2", ac.A2, "assembled");
  lg.add("a0", ac.a0, "assembled");
  lg.add("a1", ac.a1, "assembled");
  lg.add("a2", ac.a2, "assembled");
  lg.add("a3", exponent_a3(a, ac.a0, ac.a1), "final exponents");
  lg.add("a4", exponent_a4(a, ac.a0, ac.a1, ac.a2), "final exponents");
  lg.add("feasible.skeleton-tolerance", 1, "runtime check");
  lg.add("feasible.skeleton-parameters", 1, "runtime check");
  lg.add("feasible.realized-edge-length", 1, "runtime check");
  res.base = std::move(Q.mesh);
  return res;
}

}  // namespace plh
