#include <doctest.h>

#include "condexp/gallery.hpp"
#include "condexp/mass_bound.hpp"

#include <stdexcept>
#include <vector>

using namespace condexp;

// Frozen output of an independent dense-LP evaluation of the same program
// (dual of the fiber-mass relaxation on the depth-d binary-string instance,
// Lipschitz constant 1, target 1/2). Any drift here means the flow model,
// the tent rows or the simplex core changed behaviour.
TEST_CASE("mass_bound: binary-string decay values match the frozen oracle") {
  CHECK(cantor_mass_bound(4, 1.0, 0.5) ==
        doctest::Approx(0.25429864253393664).epsilon(1e-9));
  CHECK(cantor_mass_bound(5, 1.0, 0.5) ==
        doctest::Approx(0.10931337850136508).epsilon(1e-9));
  CHECK(cantor_mass_bound(6, 1.0, 0.5) ==
        doctest::Approx(0.05064552933405393).epsilon(1e-9));
}

TEST_CASE("mass_bound: a field with no continuity budget carries no mass") {
  CHECK(cantor_mass_bound(4, 0.0, 0.5) == doctest::Approx(0.0).scale(1.0));
  CHECK(cantor_mass_bound(6, 0.0, 0.25) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("mass_bound: decay is monotone in depth and scales with L") {
  const double b4 = cantor_mass_bound(4, 1.0, 0.5);
  const double b5 = cantor_mass_bound(5, 1.0, 0.5);
  const double b6 = cantor_mass_bound(6, 1.0, 0.5);
  CHECK(b5 < b4);
  CHECK(b6 < b5);
  // The program's constraints are all proportional to L, so the optimum is
  // 1-homogeneous in L.
  CHECK(cantor_mass_bound(4, 2.0, 0.5) == doctest::Approx(2.0 * b4));
  CHECK(cantor_mass_bound(4, 0.5, 0.5) == doctest::Approx(0.5 * b4));
}

TEST_CASE("mass_bound: the identity inclusion keeps mass L at unit scale") {
  // Singleton fibers chained along [0,1]: the only escape route is the
  // radius-1 tent row, which caps each mass variable at L directly, and the
  // bound is attained.
  NetMap id = identity_map(0.0, 1.0, 0.25);
  std::vector<double> radii = {1.0, 0.5};
  CHECK(fiber_mass_bound(id, 1.0, 2, 0.0, radii) == doctest::Approx(1.0));
  CHECK(fiber_mass_bound(id, 0.25, 2, 0.0, radii) == doctest::Approx(0.25));
  CHECK(fiber_mass_bound(id, 0.0, 2, 0.0, radii) ==
        doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("mass_bound: input validation") {
  CHECK_THROWS_AS(cantor_mass_bound(1, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(cantor_mass_bound(17, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(cantor_mass_bound(4, -1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(cantor_mass_bound(4, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cantor_mass_bound(4, 1.0, 1.0), std::invalid_argument);

  NetMap id = identity_map(0.0, 1.0, 0.25);
  CHECK_THROWS_AS(fiber_mass_bound(id, 1.0, 99, 0.0, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fiber_mass_bound(id, 1.0, 2, 0.0, {}),
                  std::invalid_argument);
}
