#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plh/assembler.hpp"
#include "plh/bounds.hpp"
#include "plh/families.hpp"

namespace plh {

struct RunConfig {
  std::string domain = "square";  // built-in name or mesh file path
  std::string map = "identity";
  double alpha = 1, alpha_tilde = 1;
  std::optional<double> H, H_tilde;  // override the family's declared constants
  std::vector<double> eps_list{0.2, 0.1};
  std::vector<double> beta_list{0.5};
  uint64_t seed = 1;
  std::string output_dir = "out";
  int retries = 3;
  double max_vertices = 6e7;
  int sup_level = 4;
  bool write_files = true;
  PairSamplingPolicy sampling;
};

// Throws ConfigError on an empty or non-decreasing eps list or nonpositive betas.
void validate(const RunConfig& cfg);

struct EpsSubstitution {
  double from = 0, to = 0;
  std::string inequality;
};

struct HolderColumn {
  double beta = 0;
  double measured = 0;  // sampled |f - h|_beta
  double theory = 0;    // D eps^{1-(beta/alpha)(1-a4)}; NaN when beta >= beta_sup
};

struct SweepRow {
  double eps_requested = 0;
  RunReport report;
  std::vector<HolderColumn> holder;
  std::vector<EpsSubstitution> substitutions;
  AprioriBounds apriori;
  double holder_norm_h = 0;
};

struct BuildOutcome {
  PLHomeoResult result;
  double eps = 0;
  std::vector<EpsSubstitution> substitutions;
};

// build_pl_homeomorphism, halving eps after each EpsilonTooLarge up to `retries` times.
BuildOutcome build_with_retries(const Domain& dom, const SampledHomeo& h, double eps, int retries,
                                const AssemblyOptions& opt = {});

SampledHomeo family_for(const RunConfig& cfg, const Domain& dom);
Domain domain_for(const RunConfig& cfg);

// Measures one built map: |f - h|_beta for each beta plus the a priori bounds.
SweepRow measure_run(const Domain& dom, const SampledHomeo& h, const BuildOutcome& b, const RunConfig& cfg,
                     double eps_requested);

// Writes <out>/eps_<k>/{run.json,mesh.json,overlay.svg}, <out>/sweep.csv and <out>/constants.json.
std::vector<SweepRow> run_pipeline(const RunConfig& cfg);

void write_mesh_json(const std::string& path, const PLMap& f);
void write_overlay_svg(const std::string& path, const PLHomeoResult& r, size_t max_triangles = 20000);
std::string sweep_csv(const std::vector<SweepRow>& rows, const std::vector<double>& betas);

}  // namespace plh
