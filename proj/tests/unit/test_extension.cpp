#include "doctest.h"
#include "plh/errors.hpp"
#include "plh/extension.hpp"
#include "plh/spatial.hpp"
#include "plh/verify.hpp"
#include "support.hpp"

using namespace plh;
using plh_test::Rng;

namespace {

const Triangle kEquilateral{{0, 0}, {1, 0}, {0.5, 0.8660254037844386}};

double triangulation_area(const Complex2D& c) {
  double s = 0;
  for (const Tri& t : c.triangles) s += 0.5 * orient(c.vertices[t[0]], c.vertices[t[1]], c.vertices[t[2]]);
  return s;
}

void check_extension(const Triangle& delta, const std::vector<Point2>& a, const std::vector<Point2>& ha,
                     const ExtensionResult& r) {
  const PLMap& f = r.f;
  CHECK(validate_complex(f.mesh).ok());
  CHECK(check_injectivity(f).passed);
  CHECK(triangulation_area(f.mesh) == doctest::Approx(delta.area()).epsilon(1e-12));
  CHECK(check_agreement(f, a, ha, 1e-12).passed);
  CHECK(r.report.min_angle_sine >= r.report.angle_bound);
  CHECK(r.report.min_edge >= r.report.edge_lower_bound);
  CHECK(r.report.max_edge <= r.report.m2 * (1 + 1e-12));
}

}  // namespace

TEST_SUITE("extension") {
  TEST_CASE("inner polygon of the equilateral triangle") {
    std::vector<Point2> a{kEquilateral.p1, kEquilateral.p2, kEquilateral.p3};
    auto b = inner_polygon(kEquilateral, a);
    REQUIRE(b.size() == 3);
    Point2 o{0.5, std::sqrt(3.0) / 6};
    for (int k = 0; k < 3; ++k) {
      CHECK(dist(b[k], o) == doctest::Approx(std::sqrt(3.0) / 12).epsilon(1e-14));
      CHECK(std::abs(cross(b[k] - o, a[k] - o)) < 1e-14);
      CHECK(dot(b[k] - o, a[k] - o) > 0);
    }
    CHECK(polygon_is_convex(b));
  }

  TEST_CASE("inner polygon rejects bad boundary data") {
    CHECK_THROWS_AS(inner_polygon(kEquilateral, {{0, 0}, {1, 0}, {0.5, 0.5}}), InvalidBoundaryData);
    CHECK_THROWS_AS(inner_polygon(kEquilateral, {{0, 0}, {0.5, 0.8660254037844386}, {1, 0}}), InvalidBoundaryData);
    CHECK_THROWS_AS(inner_polygon(kEquilateral, {{0, 0}, {0.5, 0}, {1, 0}}), InvalidBoundaryData);
  }

  TEST_CASE("offset of the unit square is a concentric square on the diagonals") {
    std::vector<Point2> q{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto x = offset_polygon(q);
    REQUIRE(x.size() == 4);
    double r = x[0].x;
    CHECK(r > 0);
    CHECK(r < 0.5);
    for (int k = 0; k < 4; ++k) {
      Point2 c = q[k] - Point2{0.5, 0.5}, d = x[k] - Point2{0.5, 0.5};
      CHECK(std::abs(cross(c, d)) < 1e-14);
      CHECK(norm(d) == doctest::Approx(norm(c) * (1 - 2 * r)).epsilon(1e-12));
    }
    CHECK(offset_condition_failure(q, x).empty());
  }

  TEST_CASE("offsets of convex polygons give trapezoids") {
    Rng r(41);
    for (int trial = 0; trial < 200; ++trial) {
      int n = 3 + r.index(12);
      Polygon q;
      for (int k = 0; k < n; ++k) {
        double ang = 2 * M_PI * (k + r.uniform(0.1, 0.9)) / n;
        q.push_back({std::cos(ang), std::sin(ang)});
      }
      auto x = offset_polygon(q);
      REQUIRE(offset_condition_failure(q, x).empty());
      for (int k = 0; k < n; ++k) {
        Point2 s = q[(k + 1) % n] - q[k], t = x[(k + 1) % n] - x[k];
        CHECK(std::abs(cross(s, t)) <= 1e-9 * norm(s) * norm(t));
        CHECK(dot(s, t) > 0);
      }
    }
  }

  TEST_CASE("offset of an L-shaped polygon satisfies all conditions") {
    std::vector<Point2> q{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
    auto res = offset_polygon_ex(q);
    CHECK(offset_condition_failure(q, res.x).empty());
    CHECK(res.r > 0);
    std::vector<Point2> bow{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(offset_polygon(bow), InvalidPolygon);
  }

  TEST_CASE("offset condition checker catches a bad offset") {
    std::vector<Point2> q{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    std::vector<Point2> x{{0.1, 0.1}, {0.9, 0.1}, {0.9, 0.9}, {1.5, 0.5}};
    CHECK_FALSE(offset_condition_failure(q, x).empty());
  }

  TEST_CASE("ear clipping") {
    auto t = triangulate_no_steiner({{0, 0}, {1, 0}, {0, 1}});
    CHECK(t.triangles.size() == 1);
    Polygon pent;
    for (int k = 0; k < 5; ++k) pent.push_back({std::cos(2 * M_PI * k / 5), std::sin(2 * M_PI * k / 5)});
    auto p = triangulate_no_steiner(pent);
    CHECK(p.triangles.size() == 3);
    CHECK(p.vertices.size() == 5);
    CHECK(triangulation_area(p) == doctest::Approx(polygon_signed_area(pent)).epsilon(1e-14));
    CHECK_THROWS_AS(triangulate_no_steiner({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), InvalidPolygon);
  }

  TEST_CASE("ear clipping random 12-gons") {
    Rng r(43);
    for (int trial = 0; trial < 300; ++trial) {
      Polygon poly = plh_test::random_star_polygon(r, 12, 0.1, 1.0);
      auto c = triangulate_no_steiner(poly);
      REQUIRE(c.triangles.size() == 10);
      CHECK(c.vertices.size() == 12);
      CHECK(triangulation_area(c) == doctest::Approx(polygon_signed_area(poly)).epsilon(1e-12));
      for (const Tri& tr : c.triangles) CHECK(orient(c.vertices[tr[0]], c.vertices[tr[1]], c.vertices[tr[2]]) > 0);
      CHECK(improper_triangle_pairs(c.vertices, c.triangles, 1e-12).empty());
    }
  }

  TEST_CASE("identity boundary with w = 6 extends to a homeomorphism fixing the boundary") {
    const Triangle& d = kEquilateral;
    std::vector<Point2> a{d.p1, lerp(d.p1, d.p2, 0.5), d.p2, lerp(d.p2, d.p3, 0.5), d.p3, lerp(d.p3, d.p1, 0.5)};
    ExtensionOptions opt;
    opt.affine_shortcut = false;
    auto r = extend_boundary_homeo(d, a, a, opt);
    CHECK(r.w == 6);
    CHECK_FALSE(r.report.affine);
    check_extension(d, a, a, r);
    CHECK(sup_distance(r.f, [](Point2 p) { return p; }, 4) < 0.5);
    // the shortcut reproduces the identity exactly
    auto s = extend_boundary_homeo(d, a, a);
    CHECK(s.report.affine);
    CHECK(sup_distance(s.f, [](Point2 p) { return p; }, 4) < 1e-14);
  }

  TEST_CASE("complex boundary overload matches the cycle form") {
    const Triangle& d = kEquilateral;
    Complex1D bd{{d.p3, d.p1, lerp(d.p1, d.p2, 0.5), d.p2}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    std::vector<Point2> hb;
    for (Point2 p : bd.vertices) hb.push_back(2 * p + Point2{1, 0});
    auto r = extend_boundary_homeo(d, bd, hb);
    check_extension(d, bd.vertices, hb, r);
  }

  TEST_CASE("random boundary maps") {
    Rng r(47);
    for (int trial = 0; trial < 60; ++trial) {
      Triangle d = plh_test::random_triangle(r, 0.05);
      auto a = plh_test::random_boundary(r, d, 3 + r.index(20));
      auto ha = plh_test::random_boundary_image(r, a);
      auto res = extend_boundary_homeo(d, a, ha);
      check_extension(d, a, ha, res);
    }
  }

  TEST_CASE("non-injective boundary map is rejected") {
    const Triangle& d = kEquilateral;
    std::vector<Point2> a{d.p1, d.p2, lerp(d.p2, d.p3, 0.5), d.p3};
    std::vector<Point2> ha{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(extend_boundary_homeo(d, a, ha), InvalidBoundaryData);
  }
}
