#include "plh/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "plh/errors.hpp"

namespace plh {

SkeletonConstants skeleton_constants(const HolderData& hd, double theta) {
  validate(hd);
  const double a = hd.alpha, at = hd.alpha_tilde, H = hd.H, Ht = hd.H_tilde;
  const double s = std::sin(theta);
  SkeletonConstants c;
  c.b1 = -2 / a + 2 / (a * a * at) + 1 / (a * a * a * at * at);
  c.b2 = 1 / a;
  c.B2 = std::pow(3.0, -1 / a) * std::pow(H, -1 / a);
  if (a * at < 1) {
    const double e2 = -2 - 2 / (a * at) - 1 / (a * a * at) - 1 / (a * a * at * at);
    const double e3 = 1 / a - 2 / (a * a * at) - 1 / (a * a * a * at * at);
    const double eH = -1 / a - 3 / (a * a * at) - 1 / (a * a * a * at * at);
    const double eHt = -3 / (a * at) - 1 / (a * a * at * at);
    // logs keep the tiny product representable for longer
    double lg = e2 * std::log(2.0) + e3 * std::log(3.0) + (2 / a) * std::log1p(-std::pow(s, 1 / at)) +
                (1 / (a * at) + 1 / (a * a * at * at)) * std::log(s) + eH * std::log(H) + eHt * std::log(Ht);
    c.B1 = std::exp(lg);
  } else {
    c.B1 = s * s * (1 - s) / (192 * std::pow(H, 5) * std::pow(Ht, 4)) * std::min(1 - s, s * s / (2 * H * Ht));
  }
  return c;
}

double extension_angle_bound(const ExtensionConstants& ec, double l1, double m1, double m2, double sin_theta) {
  return ec.C0 * std::pow(l1, ec.c01) * std::pow(m1, ec.c02) * std::pow(m2, -ec.c04) * std::pow(sin_theta, ec.c03);
}

double extension_edge_bound(const ExtensionConstants& ec, double l1, double m1, double m2, double sin_theta) {
  return ec.C1 * std::pow(l1, ec.c11) * std::pow(m1, ec.c12) * std::pow(m2, -ec.c14) * std::pow(sin_theta, ec.c13);
}

AssembledConstants assembled_constants(const HolderData& hd, const SkeletonConstants& sc,
                                       const ExtensionConstants& ec, double theta, double d) {
  const double a = hd.alpha, at = hd.alpha_tilde;
  const double s = std::sin(theta), H3 = 3 * hd.H, Ht = hd.H_tilde, b1 = sc.b1;
  AssembledConstants c;
  c.theta = theta;
  c.d = d;
  c.a0 = b1 * ec.c01 / (a * at) + ec.c02 / a - ec.c04 / a;
  c.a1 = b1 * ec.c11 / (a * at) + ec.c12 / a - ec.c14 / a;
  c.a2 = 1 / a;
  auto coef = [&](double C, double e1, double e2, double e3, double e4) {
    double lg = std::log(C) + e1 * std::log(sc.B1) + (b1 * e1 / at + e2) * std::log(d) +
                (b1 * e1 / at + e3) * std::log(s) - (b1 * e1 / at) * std::log(Ht) +
                (-b1 * e1 / (a * at) - e2 / a + e4 / a) * std::log(H3);
    return std::exp(lg);
  };
  c.A0 = coef(ec.C0, ec.c01, ec.c02, ec.c03, ec.c04);
  c.A1 = coef(ec.C1, ec.c11, ec.c12, ec.c13, ec.c14);
  c.A2 = std::pow(H3, -1 / a);
  return c;
}

double exponent_a3(double alpha, double a0, double a1) { return -alpha * (a0 + a1); }

double exponent_a4(double alpha, double a0, double a1, double a2) { return -alpha * (a0 + a1 - alpha * a2); }

double beta_sup_closed_form(double a, double at) {
  double x = a * at;
  return std::pow(a, 4) * std::pow(at, 3) / (3 + 6 * x - 6 * x * x - x * x * x - std::pow(a, 4) * std::pow(at, 3));
}

double FinalExponents::D_at(double beta) const {
  double r = beta / alpha;
  return std::pow(2.0, 1 - r) * std::pow(c3 + 2 * c4 * holder_norm_h, r);
}

namespace {

Rational normalized(__int128 p, __int128 q) {
  if (q == 0) throw InvalidExponents("rational with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  __int128 a = p < 0 ? -p : p, b = q;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  p /= a;
  q /= a;
  if (p > std::numeric_limits<int64_t>::max() || p < std::numeric_limits<int64_t>::min() ||
      q > std::numeric_limits<int64_t>::max())
    throw InvalidExponents("rational overflow");
  Rational r;
  r.p = int64_t(p);
  r.q = int64_t(q);
  return r;
}

}  // namespace

Rational::Rational(int64_t p_, int64_t q_) { *this = normalized(p_, q_); }
Rational operator+(Rational a, Rational b) {
  return normalized(__int128(a.p) * b.q + __int128(b.p) * a.q, __int128(a.q) * b.q);
}
Rational operator-(Rational a, Rational b) {
  return normalized(__int128(a.p) * b.q - __int128(b.p) * a.q, __int128(a.q) * b.q);
}
Rational operator*(Rational a, Rational b) { return normalized(__int128(a.p) * b.p, __int128(a.q) * b.q); }
Rational operator/(Rational a, Rational b) { return normalized(__int128(a.p) * b.q, __int128(a.q) * b.p); }

ExactExponents exact_exponents(Rational a, Rational at) {
  const ExtensionConstants ec;
  const Rational one(1), two(2);
  const Rational c01(int64_t(ec.c01)), c02(int64_t(ec.c02)), c04(int64_t(ec.c04));
  const Rational c11(int64_t(ec.c11)), c12(int64_t(ec.c12)), c14(int64_t(ec.c14));
  ExactExponents e;
  e.b1 = Rational(-2) / a + two / (a * a * at) + one / (a * a * a * at * at);
  e.b2 = one / a;
  e.a0 = e.b1 * c01 / (a * at) + c02 / a - c04 / a;
  e.a1 = e.b1 * c11 / (a * at) + c12 / a - c14 / a;
  e.a2 = one / a;
  e.a3 = Rational(-1) * a * (e.a0 + e.a1);
  e.a4 = Rational(-1) * a * (e.a0 + e.a1 - a * e.a2);
  e.beta_sup = a / (one - e.a4);
  Rational x = a * at;
  Rational a4at3 = a * a * a * a * at * at * at;
  e.beta_sup_closed = a4at3 / (Rational(3) + Rational(6) * x - Rational(6) * x * x - x * x * x - a4at3);
  return e;
}

double ConstantsLedger::get(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.value;
  throw ConfigError("ledger has no constant named " + name);
}

bool ConstantsLedger::contains(const std::string& name) const {
  return std::any_of(entries.begin(), entries.end(), [&](const LedgerEntry& e) { return e.name == name; });
}

}  // namespace plh
