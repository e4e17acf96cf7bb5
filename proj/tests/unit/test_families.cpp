#include "doctest.h"
#include "plh/errors.hpp"
#include "plh/families.hpp"
#include "support.hpp"

using namespace plh;
using plh_test::Rng;

TEST_SUITE("families") {
  TEST_CASE("forward and inverse compose to the identity") {
    Rng r(61);
    std::vector<FamilyRequest> reqs;
    for (const auto& n : family_names())
      if (n != "negative") reqs.push_back({n, 1, 1});
    reqs.push_back({"negative", 0.5, 1});
    reqs.push_back({"negative", 0.75, 1});
    for (const auto& q : reqs) {
      CAPTURE(q.name);
      CAPTURE(q.alpha);
      SampledHomeo h = make_family(q);
      for (int k = 0; k < 2000; ++k) {
        Point2 p = r.point();
        REQUIRE(dist(h.inverse(h.forward(p)), p) < 1e-12);
      }
    }
  }

  TEST_CASE("declared constants dominate sampled difference quotients") {
    Rng r(62);
    std::vector<FamilyRequest> reqs;
    for (const auto& n : family_names())
      if (n != "negative") reqs.push_back({n, 1, 1});
    reqs.push_back({"negative", 0.5, 1});
    reqs.push_back({"vortex", 0.5, 0.5});
    for (const auto& q : reqs) {
      CAPTURE(q.name);
      SampledHomeo h = make_family(q);
      std::vector<PointPair> pairs, image_pairs;
      for (int k = 0; k < 20000; ++k) {
        Point2 a = r.point(), b = k % 2 ? r.point() : a + 1e-3 * Point2{r.uniform(-1, 1), r.uniform(-1, 1)};
        pairs.push_back({a, b});
        image_pairs.push_back({h.forward(a), h.forward(b)});
      }
      double fw = holder_seminorm_lower_bound(h.forward, h.hd.alpha, pairs).value;
      double bw = holder_seminorm_lower_bound(h.inverse, h.hd.alpha_tilde, image_pairs).value;
      CHECK(fw <= h.hd.H * (1 + 1e-9));
      CHECK(bw <= h.hd.H_tilde * (1 + 1e-9));
      // gentle families: the declared constants are not wildly loose
      if (q.alpha == 1 && q.name != "identity") CHECK(fw >= 0.9 * h.hd.H);
    }
  }

  TEST_CASE("requests above the native exponent are rejected") {
    CHECK_THROWS_AS(make_family({"shear", 1.2, 1}), InvalidExponents);
    CHECK_THROWS_AS(make_family({"negative", 1.5, 1}), InvalidExponents);
    CHECK_THROWS_AS(make_family({"nope", 1, 1}), ConfigError);
    CHECK(family_is_affine("shear"));
    CHECK_FALSE(family_is_affine("vortex"));
  }

  TEST_CASE("lowered exponents scale the constant by a diameter power") {
    auto h1 = make_family({"shear", 1, 1});
    auto h2 = make_family({"shear", 0.5, 1});
    CHECK(h2.hd.H == doctest::Approx(h1.hd.H * std::pow(2.0, 0.25)));
    CHECK(h1.hd.H == doctest::Approx(1.161187420807834).epsilon(1e-14));
  }
}
