#include <cstdio>
#include <exception>

#include "CLI11.hpp"
#include "plh/errors.hpp"
#include "plh/pipeline.hpp"

int main(int argc, char** argv) {
  plh::RunConfig cfg;
  CLI::App app{"Piecewise affine approximation of planar bi-Holder homeomorphisms"};
  app.add_option("--domain", cfg.domain, "square, triangle, hexagon or a mesh JSON file")->capture_default_str();
  app.add_option("--map", cfg.map, "identity, rotation, shear, squeeze, vortex, negative")->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "Holder exponent of h (also the exponent of the negative family)")
      ->capture_default_str();
  app.add_option("--alpha-tilde", cfg.alpha_tilde, "Holder exponent of the inverse")->capture_default_str();
  double H = 0, Ht = 0;
  auto* oH = app.add_option("--H", H, "override the declared Holder constant of h");
  auto* oHt = app.add_option("--H-tilde", Ht, "override the declared Holder constant of the inverse");
  app.add_option("--eps", cfg.eps_list, "strictly decreasing eps values")->delimiter(',')->capture_default_str();
  app.add_option("--beta", cfg.beta_list, "Holder exponents for the error seminorm")->delimiter(',')->capture_default_str();
  app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  app.add_option("--out", cfg.output_dir, "output directory")->capture_default_str();
  app.add_option("--retries", cfg.retries, "eps halvings allowed after an infeasible eps")->capture_default_str();
  app.add_option("--max-elements", cfg.max_vertices, "vertex budget of the skeleton stage")->capture_default_str();
  app.add_option("--sup-level", cfg.sup_level, "barycentric lattice level of the sup-norm sampling")->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  if (*oH) cfg.H = H;
  if (*oHt) cfg.H_tilde = Ht;

  try {
    auto rows = plh::run_pipeline(cfg);
    for (const auto& r : rows) {
      const auto& R = r.report;
      std::printf("eps=%g sup_error=%.3e min_angle_sine=%.3e edges=[%.3e, %.3e] triangles=%lld injective=%d "
                  "containment=%d",
                  R.eps, R.sup_error, R.min_angle_sine, R.min_edge, R.max_edge, (long long)R.triangle_count,
                  int(R.injective.passed), int(R.containment.passed));
      for (const auto& c : r.holder) std::printf(" |f-h|_%g=%.3e (bound %.3e)", c.beta, c.measured, c.theory);
      std::printf("\n");
      for (const auto& s : r.substitutions)
        std::printf("  eps %g infeasible (%s), retried with %g\n", s.from, s.inequality.c_str(), s.to);
    }
  } catch (const plh::EpsilonTooLarge& e) {
    std::fprintf(stderr, "plh: feasibility: %s\n", e.what());
    return 2;
  } catch (const plh::ResourceLimitExceeded& e) {
    std::fprintf(stderr, "plh: resource limit: %s\n", e.what());
    return 3;
  } catch (const plh::ConfigError& e) {
    std::fprintf(stderr, "plh: configuration: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "plh: %s\n", e.what());
    return 1;
  }
  return 0;
}
