#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plh/holder.hpp"

namespace plh {

// Edge-length bounds of the refined skeleton: B1 eps^b1 < |e| < B2 eps^b2.
struct SkeletonConstants {
  double b1 = 1, b2 = 1;
  double B1 = 0, B2 = 0;
};

SkeletonConstants skeleton_constants(const HolderData& hd, double theta);

// Quality bounds of the triangle extension:
//   sin(angle) >= C0 l1^c01 m1^c02 m2^-c04 sin^c03,
//   |edge| >= C1 l1^c11 m1^c12 m2^-c14 sin^c13.
struct ExtensionConstants {
  double C0 = 1.0 / 144, C1 = 1.0 / 12;
  double c01 = 2, c02 = 2, c03 = 4, c04 = 4;
  double c11 = 1, c12 = 1, c13 = 2, c14 = 1;
};

inline ExtensionConstants extension_constants() { return {}; }

double extension_angle_bound(const ExtensionConstants& ec, double l1, double m1, double m2, double sin_theta);
double extension_edge_bound(const ExtensionConstants& ec, double l1, double m1, double m2, double sin_theta);

// Global mesh bounds: sin >= A0 eps^a0, A1 eps^a1 <= |e| <= A2 eps^a2.
struct AssembledConstants {
  double A0 = 0, A1 = 0, A2 = 0;
  double a0 = 0, a1 = 1, a2 = 1;
  double theta = 0;
  double d = 0;
};

AssembledConstants assembled_constants(const HolderData& hd, const SkeletonConstants& sc,
                                       const ExtensionConstants& ec, double theta, double d);

struct FinalExponents {
  double a3 = -1, a4 = 0;
  double beta_sup = 1;
  double c3 = 0, c4 = 0;
  double D = 0;           // D at the beta given to apriori_bounds (NaN when none)
  double alpha = 1;
  double holder_norm_h = 0;
  double D_at(double beta) const;
};

double exponent_a3(double alpha, double a0, double a1);
double exponent_a4(double alpha, double a0, double a1, double a2);
double beta_sup_closed_form(double alpha, double alpha_tilde);

// Exact rational exponent algebra for rational (alpha, alpha_tilde).
struct Rational {
  int64_t p = 0, q = 1;
  Rational() = default;
  Rational(int64_t p_, int64_t q_ = 1);
  double value() const { return double(p) / double(q); }
  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) { return a.p == b.p && a.q == b.q; }
};

struct ExactExponents {
  Rational b1, b2, a0, a1, a2, a3, a4, beta_sup, beta_sup_closed;
};

ExactExponents exact_exponents(Rational alpha, Rational alpha_tilde);

// Named constants of one run with a short tag naming the formula family.
struct LedgerEntry {
  std::string name;
  double value = 0;
  std::string source;
};

struct ConstantsLedger {
  std::vector<LedgerEntry> entries;
  void add(const std::string& name, double v, const std::string& source) { entries.push_back({name, v, source}); }
  double get(const std::string& name) const;
  bool contains(const std::string& name) const;
};

}  // namespace plh
