#include "plh/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "plh/errors.hpp"

namespace plh {

namespace {

using ojson = nlohmann::ordered_json;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double diameter(const Polygon& p) {
  double d = 0;
  for (Point2 a : p)
    for (Point2 b : p) d = std::max(d, dist(a, b));
  return d;
}

ojson verdict_json(const OracleVerdict& v) {
  ojson j;
  j["passed"] = v.passed;
  j["measured"] = v.measured;
  if (!v.passed) {
    j["detail"] = v.detail;
    j["witness"] = {v.witness.i, v.witness.j};
  }
  return j;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.eps_list.empty()) throw ConfigError("eps list is empty");
  for (size_t i = 0; i < cfg.eps_list.size(); ++i) {
    if (!(cfg.eps_list[i] > 0)) throw ConfigError("eps values must be positive");
    if (i > 0 && !(cfg.eps_list[i] < cfg.eps_list[i - 1])) throw ConfigError("eps list must be strictly decreasing");
  }
  for (double b : cfg.beta_list)
    if (!(b > 0 && b <= 1)) throw ConfigError("beta values must lie in (0, 1]");
  if (cfg.retries < 0) throw ConfigError("retries must be nonnegative");
}

Domain domain_for(const RunConfig& cfg) {
  if (cfg.domain == "square" || cfg.domain == "triangle" || cfg.domain == "hexagon") return builtin_domain(cfg.domain);
  return domain_from_file(cfg.domain);
}

SampledHomeo family_for(const RunConfig& cfg, const Domain& dom) {
  FamilyRequest rq{cfg.map, cfg.alpha, cfg.alpha_tilde, diameter(dom.omega)};
  SampledHomeo h = make_family(rq);
  if (cfg.H) h.hd.H = *cfg.H;
  if (cfg.H_tilde) h.hd.H_tilde = *cfg.H_tilde;
  validate(h.hd);
  return h;
}

BuildOutcome build_with_retries(const Domain& dom, const SampledHomeo& h, double eps, int retries,
                                const AssemblyOptions& opt) {
  BuildOutcome out;
  for (int attempt = 0;; ++attempt) {
    try {
      out.result = build_pl_homeomorphism(dom.omega, dom.coarse, h, eps, opt);
      out.eps = eps;
      return out;
    } catch (const EpsilonTooLarge& e) {
      if (attempt >= retries) throw;
      out.substitutions.push_back({eps, eps / 2, e.inequality});
      eps /= 2;
    }
  }
}

SweepRow measure_run(const Domain& dom, const SampledHomeo& h, const BuildOutcome& b, const RunConfig& cfg,
                     double eps_requested) {
  SweepRow row;
  row.eps_requested = eps_requested;
  row.report = b.result.report;
  row.substitutions = b.substitutions;
  const PLHomeoResult& r = b.result;
  double sup_h = 0;
  for (Point2 v : r.base.vertices) sup_h = std::max(sup_h, norm(h.forward(v)));
  // |h|_alpha is bounded by the declared H
  row.holder_norm_h = sup_h + h.hd.H;
  const double chord = chord_arc_constant(dom.omega);
  row.apriori = apriori_bounds(r.constants, h.hd, chord, b.eps, r.measured_sup_error, row.holder_norm_h);
  std::vector<PointPair> pairs = stratified_pairs(r.K(), dom.omega, cfg.sampling, cfg.seed);
  for (double beta : cfg.beta_list) {
    HolderColumn c;
    c.beta = beta;
    c.measured = std::max(difference_seminorm(r.f, h.forward, beta, pairs).value,
                          local_difference_seminorm(r.f, h.forward, beta).value);
    try {
      c.theory = final_error_bound(row.apriori.exps, beta, b.eps);
    } catch (const BetaOutOfRange&) {
      c.theory = std::numeric_limits<double>::quiet_NaN();
    }
    row.holder.push_back(c);
  }
  return row;
}

void write_mesh_json(const std::string& path, const PLMap& f) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw ConfigError("cannot write " + path);
  std::string buf;
  buf.reserve(1 << 20);
  auto flush = [&](bool force) {
    if (force || buf.size() > (1u << 20) - 256) {
      std::fwrite(buf.data(), 1, buf.size(), fp);
      buf.clear();
    }
  };
  char tmp[64];
  auto put = [&](double v) {
    auto r = std::to_chars(tmp, tmp + sizeof tmp, v);
    buf.append(tmp, r.ptr);
  };
  auto put_i = [&](int64_t v) {
    auto r = std::to_chars(tmp, tmp + sizeof tmp, v);
    buf.append(tmp, r.ptr);
  };
  auto points = [&](const char* key, const std::vector<Point2>& P) {
    buf += "\"";
    buf += key;
    buf += "\":[";
    for (size_t i = 0; i < P.size(); ++i) {
      if (i) buf += ',';
      buf += '[';
      put(P[i].x);
      buf += ',';
      put(P[i].y);
      buf += ']';
      flush(false);
    }
    buf += ']';
  };
  buf += '{';
  points("vertices", f.mesh.vertices);
  buf += ",\"triangles\":[";
  for (size_t i = 0; i < f.mesh.triangles.size(); ++i) {
    const Tri& t = f.mesh.triangles[i];
    if (i) buf += ',';
    buf += '[';
    put_i(t[0]);
    buf += ',';
    put_i(t[1]);
    buf += ',';
    put_i(t[2]);
    buf += ']';
    flush(false);
  }
  buf += "],";
  points("images", f.images);
  buf += "}\n";
  flush(true);
  std::fclose(fp);
}

void write_overlay_svg(const std::string& path, const PLHomeoResult& r, size_t max_triangles) {
  const PLMap& f = r.f;
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  for (const auto* P : {&f.mesh.vertices, &f.images})
    for (Point2 p : *P) {
      x0 = std::min(x0, p.x);
      y0 = std::min(y0, p.y);
      x1 = std::max(x1, p.x);
      y1 = std::max(y1, p.y);
    }
  const double W = 800, pad = 10;
  const double s = (W - 2 * pad) / std::max(x1 - x0, y1 - y0);
  auto X = [&](Point2 p) { return num(std::round((pad + (p.x - x0) * s) * 100) / 100); };
  auto Y = [&](Point2 p) { return num(std::round((W - pad - (p.y - y0) * s) * 100) / 100); };
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  const bool full = f.mesh.triangles.size() <= max_triangles;
  auto tri_path = [&](const std::vector<Point2>& P, const std::vector<Tri>& T) {
    for (const Tri& t : T)
      out << "<path d=\"M" << X(P[t[0]]) << ' ' << Y(P[t[0]]) << 'L' << X(P[t[1]]) << ' ' << Y(P[t[1]]) << 'L'
          << X(P[t[2]]) << ' ' << Y(P[t[2]]) << "Z\"/>\n";
  };
  if (full) {
    out << "<g id=\"domain\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"0.3\">\n";
    tri_path(f.mesh.vertices, f.mesh.triangles);
    out << "</g>\n<g id=\"image\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"0.3\">\n";
    tri_path(f.images, f.mesh.triangles);
    out << "</g>\n";
  } else {
    // large meshes: the base mesh and the image of its edges sampled along each edge
    const Complex2D& L = r.base;
    out << "<g id=\"domain\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"0.3\">\n";
    tri_path(L.vertices, L.triangles);
    out << "</g>\n<g id=\"image\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"0.3\">\n";
    PLEvaluator ev(f);
    for (const Edge& e : L.edges) {
      out << "<path d=\"";
      for (int k = 0; k <= 16; ++k) {
        Point2 q = ev(lerp(L.vertices[e[0]], L.vertices[e[1]], k / 16.0));
        out << (k ? 'L' : 'M') << X(q) << ' ' << Y(q);
      }
      out << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::vector<double>& betas) {
  std::ostringstream os;
  os << "eps,sup_error,min_angle_sine,min_edge,max_edge";
  for (double b : betas) os << ",holder_beta_" << num(b);
  for (double b : betas) os << ",bound_beta_" << num(b);
  os << ",eps_requested,triangles,injective,containment\n";
  for (const SweepRow& r : rows) {
    const RunReport& R = r.report;
    os << num(R.eps) << ',' << num(R.sup_error) << ',' << num(R.min_angle_sine) << ',' << num(R.min_edge) << ','
       << num(R.max_edge);
    for (const HolderColumn& c : r.holder) os << ',' << num(c.measured);
    for (const HolderColumn& c : r.holder) os << ',' << num(c.theory);
    os << ',' << num(r.eps_requested) << ',' << R.triangle_count << ',' << (R.injective.passed ? 1 : 0) << ','
       << (R.containment.passed ? 1 : 0) << '\n';
  }
  return os.str();
}

std::vector<SweepRow> run_pipeline(const RunConfig& cfg) {
  validate(cfg);
  const Domain dom = domain_for(cfg);
  const SampledHomeo h = family_for(cfg, dom);
  AssemblyOptions opt;
  opt.max_vertices = cfg.max_vertices;
  opt.sup_level = cfg.sup_level;
  namespace fs = std::filesystem;
  if (cfg.write_files) fs::create_directories(cfg.output_dir);

  std::vector<SweepRow> rows;
  ojson all_constants = ojson::array();
  auto write_summary = [&]() {
    if (!cfg.write_files) return;
    std::ofstream(fs::path(cfg.output_dir) / "sweep.csv") << sweep_csv(rows, cfg.beta_list);
    std::ofstream(fs::path(cfg.output_dir) / "constants.json") << all_constants.dump(2) << '\n';
  };
  for (size_t k = 0; k < cfg.eps_list.size(); ++k) {
    const double eps = cfg.eps_list[k];
    BuildOutcome b;
    try {
      b = build_with_retries(dom, h, eps, cfg.retries, opt);
    } catch (...) {
      write_summary();
      throw;
    }
    SweepRow row = measure_run(dom, h, b, cfg, eps);
    const RunReport& R = row.report;

    ojson consts = ojson::object();
    for (const LedgerEntry& e : R.constants.entries) consts[e.name] = {{"value", e.value}, {"source", e.source}};
    const FinalExponents& X = row.apriori.exps;
    consts["a3"] = {{"value", X.a3}, {"source", "final exponents"}};
    consts["a4"] = {{"value", X.a4}, {"source", "final exponents"}};
    consts["beta_sup"] = {{"value", X.beta_sup}, {"source", "final exponents"}};
    consts["c3"] = {{"value", X.c3}, {"source", "a priori bound"}};
    consts["c4"] = {{"value", X.c4}, {"source", "a priori bound"}};
    for (const HolderColumn& c : row.holder)
      consts["D(beta=" + num(c.beta) + ")"] = {{"value", X.D_at(c.beta)}, {"source", "final estimate"}};
    all_constants.push_back({{"eps", b.eps}, {"constants", consts}});

    if (cfg.write_files) {
      fs::path dir = fs::path(cfg.output_dir) / ("eps_" + std::to_string(k));
      fs::create_directories(dir);
      ojson j;
      j["eps"] = R.eps;
      j["eps_requested"] = eps;
      j["sup_error"] = R.sup_error;
      j["min_angle_sine"] = R.min_angle_sine;
      j["min_edge"] = R.min_edge;
      j["max_edge"] = R.max_edge;
      ojson flat = ojson::object();
      for (auto& [name, v] : consts.items()) flat[name] = v["value"];
      j["constants"] = flat;
      j["oracles"] = {{"injective", R.injective.passed},
                      {"containment", R.containment.passed},
                      {"boundary_agreement", R.boundary_agreement.passed},
                      {"complex_valid", R.complex_valid}};
      j["oracle_details"] = {{"injective", verdict_json(R.injective)},
                             {"containment", verdict_json(R.containment)},
                             {"boundary_agreement", verdict_json(R.boundary_agreement)}};
      j["bounds"] = {{"angle_lower", R.bounds.angle_lower}, {"angle_ok", R.bounds.angle_ok},
                     {"edge_lower", R.bounds.edge_lower},   {"edge_lower_ok", R.bounds.edge_lower_ok},
                     {"edge_upper", R.bounds.edge_upper},   {"edge_upper_ok", R.bounds.edge_upper_ok}};
      ojson hol = ojson::array();
      for (const HolderColumn& c : row.holder)
        hol.push_back({{"beta", c.beta}, {"measured", c.measured}, {"theory", c.theory}});
      j["holder"] = hol;
      j["mesh"] = {{"vertices", R.vertex_count}, {"triangles", R.triangle_count}, {"base_triangles", R.base_triangles},
                   {"levels", R.levels}, {"delta", R.delta}, {"affine_extensions", R.affine_extensions}};
      ojson subs = ojson::array();
      for (const EpsSubstitution& s : row.substitutions)
        subs.push_back({{"from", s.from}, {"to", s.to}, {"inequality", s.inequality}});
      j["eps_substitutions"] = subs;
      j["map"] = cfg.map;
      j["domain"] = cfg.domain;
      j["seed"] = cfg.seed;
      std::ofstream(dir / "run.json") << j.dump(2) << '\n';
      write_mesh_json((dir / "mesh.json").string(), b.result.f);
      write_overlay_svg((dir / "overlay.svg").string(), b.result);
    }
    rows.push_back(std::move(row));
  }
  write_summary();
  return rows;
}

}  // namespace plh
