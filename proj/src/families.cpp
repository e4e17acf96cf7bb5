#include "plh/families.hpp"

#include <cmath>

#include "plh/errors.hpp"

namespace plh {

namespace {

const Point2 kCenter{0.5, 0.5};

Point2 rotate_about(Point2 p, Point2 c, double ang) {
  double cs = std::cos(ang), sn = std::sin(ang);
  Point2 v = p - c;
  return c + Point2{cs * v.x - sn * v.y, sn * v.x + cs * v.y};
}

double sgn_pow(double u, double e) { return u == 0 ? 0.0 : std::copysign(std::pow(std::abs(u), e), u); }

}  // namespace

std::vector<std::string> family_names() { return {"identity", "rotation", "shear", "squeeze", "vortex", "negative"}; }

bool family_is_affine(const std::string& name) { return name == "identity" || name == "rotation" || name == "shear"; }

SampledHomeo make_family(const FamilyRequest& req) {
  SampledHomeo h;
  h.name = req.name;
  double native_a = 1, native_at = 1, H = 1, Ht = 1;
  if (req.name == "identity") {
    h.forward = [](Point2 p) { return p; };
    h.inverse = h.forward;
  } else if (req.name == "rotation") {
    const double ang = M_PI / 6;
    h.forward = [ang](Point2 p) { return rotate_about(p, kCenter, ang); };
    h.inverse = [ang](Point2 p) { return rotate_about(p, kCenter, -ang); };
  } else if (req.name == "shear") {
    const double k = 0.3;
    h.forward = [k](Point2 p) { return Point2{p.x + k * p.y, p.y}; };
    h.inverse = [k](Point2 p) { return Point2{p.x - k * p.y, p.y}; };
    H = Ht = spectral_norm_2x2(1, k, 0, 1);
  } else if (req.name == "squeeze") {
    // radial profile phi(rho) = rho (1 - kappa exp(-rho^2 / R^2))
    const double kappa = 0.12, R = 0.35;
    auto phi = [=](double r) { return r * (1 - kappa * std::exp(-r * r / (R * R))); };
    auto dphi = [=](double r) {
      double u = r * r / (R * R);
      return 1 - kappa * std::exp(-u) * (1 - 2 * u);
    };
    h.forward = [=](Point2 p) {
      Point2 v = p - kCenter;
      return kCenter + (1 - kappa * std::exp(-dot(v, v) / (R * R))) * v;
    };
    h.inverse = [=](Point2 q) {
      Point2 v = q - kCenter;
      double r = norm(v);
      if (r == 0) return q;
      double lo = r, hi = r / (1 - kappa), x = r;
      for (int it = 0; it < 100; ++it) {
        double g = phi(x) - r;
        if (std::abs(g) <= 1e-16 * r) break;
        if (g > 0) hi = x; else lo = x;
        double nx = x - g / dphi(x);
        x = (nx > lo && nx < hi) ? nx : 0.5 * (lo + hi);
      }
      return kCenter + (x / r) * v;
    };
    H = 1 + 2 * std::exp(-1.5) * kappa;
    Ht = 1 / (1 - kappa);
  } else if (req.name == "vortex") {
    // rotation by psi(rho) = omega exp(-rho^2 / R^2) about the centre
    const double omega = 0.15, R = 0.35;
    auto psi = [=](Point2 v) { return omega * std::exp(-dot(v, v) / (R * R)); };
    h.forward = [=](Point2 p) { return rotate_about(p, kCenter, psi(p - kCenter)); };
    h.inverse = [=](Point2 q) { return rotate_about(q, kCenter, -psi(q - kCenter)); };
    const double sm = 2 * std::abs(omega) / std::exp(1.0);
    H = Ht = 0.5 * (sm + std::sqrt(sm * sm + 4));
  } else if (req.name == "negative") {
    const double a = req.alpha;
    if (!(a > 0 && a <= 1)) throw InvalidExponents("negative family needs alpha in (0, 1]");
    h.forward = [a](Point2 p) { return Point2{kCenter.x + sgn_pow(p.x - kCenter.x, a), p.y}; };
    h.inverse = [a](Point2 p) { return Point2{kCenter.x + sgn_pow(p.x - kCenter.x, 1 / a), p.y}; };
    native_a = a;
    H = std::sqrt(std::pow(2.0, 2 - 2 * a) + std::pow(req.diam, 2 - 2 * a));
    Ht = std::max(1.0, (1 / a) * std::pow(0.5, 1 - a));
  } else {
    throw ConfigError("unknown map family: " + req.name);
  }
  if (req.alpha > native_a + 1e-15 || req.alpha_tilde > native_at + 1e-15)
    throw InvalidExponents("family " + req.name + " is not Holder with the requested exponents");
  h.hd.alpha = req.alpha;
  h.hd.alpha_tilde = req.alpha_tilde;
  h.hd.H = H * std::pow(req.diam, native_a - req.alpha);
  // h^{-1} lives on h(domain), whose diameter is at most H diam^alpha
  h.hd.H_tilde = Ht * std::pow(H * std::pow(req.diam, native_a), native_at - req.alpha_tilde);
  validate(h.hd);
  return h;
}

}  // namespace plh
