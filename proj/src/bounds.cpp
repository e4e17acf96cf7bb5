#include "plh/bounds.hpp"

#include <cmath>
#include <limits>

#include "plh/errors.hpp"
#include "plh/holder.hpp"

namespace plh {

double matrix_inverse_norm_bound(const Triangle& t) {
  if (min_altitude(t.p1, t.p2, t.p3) <= kTauGeom) throw DegenerateGeometry("matrix_inverse_norm_bound: degenerate");
  Point2 e1 = t.p1 - t.p3, e2 = t.p2 - t.p3;
  double l1 = norm(e1), l2 = norm(e2);
  double sin_at_p3 = std::abs(cross(e1, e2)) / (l1 * l2);
  return (1 / sin_at_p3) * (1 / l1 + 1 / l2);
}

double inverse_edge_matrix_norm(const Triangle& t) {
  Point2 e1 = t.p1 - t.p3, e2 = t.p2 - t.p3;
  // columns e1, e2; inverse = adj / det
  double det = cross(e1, e2);
  if (det == 0) throw DegenerateGeometry("inverse_edge_matrix_norm: singular");
  return spectral_norm_2x2(e2.y / det, -e2.x / det, -e1.y / det, e1.x / det);
}

AprioriBounds apriori_bounds(const AssembledConstants& c, const HolderData& hd, double chord_arc, double eps,
                             double sup_norm_u, double holder_norm_h) {
  const double a = hd.alpha;
  AprioriBounds out;
  FinalExponents& e = out.exps;
  e.alpha = a;
  e.holder_norm_h = holder_norm_h;
  e.a3 = exponent_a3(a, c.a0, c.a1);
  e.a4 = exponent_a4(a, c.a0, c.a1, c.a2);
  e.beta_sup = a / (1 - e.a4);
  double common = std::pow(c.A0, -a) * std::pow(c.A1, -a) * std::pow(chord_arc, a);
  e.c3 = std::pow(2.0, 1 + 1.5 * a) * common;
  e.c4 = std::pow(2.0, 1 + a) * common * std::pow(c.A2, a * a);
  e.D = std::numeric_limits<double>::quiet_NaN();
  out.pl_bound = e.c3 * sup_norm_u * std::pow(eps, e.a3);
  out.interp_bound = e.c4 * holder_norm_h * std::pow(eps, e.a4);
  return out;
}

double final_error_bound(const FinalExponents& exps, double beta, double eps) {
  if (!(beta > 0 && beta < exps.beta_sup)) throw BetaOutOfRange("beta must lie in (0, beta_sup)");
  double expo = 1 - (beta / exps.alpha) * (1 - exps.a4);
  return exps.D_at(beta) * std::pow(eps, expo);
}

}  // namespace plh
