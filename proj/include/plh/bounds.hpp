#pragma once

#include "plh/constants.hpp"
#include "plh/geom.hpp"

namespace plh {

// (1/sin(angle at p3)) (1/|p1-p3| + 1/|p2-p3|), an upper bound for the
// operator norm of (p1-p3, p2-p3)^{-1}.
double matrix_inverse_norm_bound(const Triangle& t);
// The exact operator norm it bounds.
double inverse_edge_matrix_norm(const Triangle& t);

struct AprioriBounds {
  double pl_bound = 0;      // c3 |u|_inf eps^a3
  double interp_bound = 0;  // c4 |h|_alpha eps^a4
  FinalExponents exps;
};

AprioriBounds apriori_bounds(const AssembledConstants& constants, const HolderData& hd, double chord_arc,
                             double eps, double sup_norm_u, double holder_norm_h);

// D eps^{1 - (beta/alpha)(1 - a4)}; throws BetaOutOfRange unless 0 < beta < beta_sup.
double final_error_bound(const FinalExponents& exps, double beta, double eps);

}  // namespace plh
