#include <doctest.h>

#include <utility>

#include "clifun/functions.hpp"

using namespace clifun;

TEST_CASE("Bessel J0 on the real axis") {
  const std::pair<double, double> ref[] = {
      {0.5, 0.93846980724081290423},   {1, 0.76519768655796655145},
      {5, -0.17759677131433830435},    {8, 0.17165080713755390609},
      {11.9, 0.02504944169958964508},  {12.1, 0.069666773606807311849},
      {15, -0.014224472826780773234},  {20, 0.16702466434058315473},
      {25, 0.096266783275958116174},   {30, -0.086367983581040211336},
      {37.5, 0.071722705110602229323}, {44, 0.086306699332286579115},
      {50, 0.055812327669251815005}};
  for (const auto& [x, v] : ref) {
    CHECK(std::abs(bessel_j0(cplx(x)) - v) < 1e-10);
    CHECK(std::abs(bessel_j0(cplx(-x)) - v) < 1e-10);
  }
  CHECK(bessel_j0(cplx(0)) == cplx(1));
}

TEST_CASE("Bessel J0 off the axis") {
  CHECK(std::abs(bessel_j0(cplx(3, 2)) -
                 cplx(-1.2492348796074221964, -0.94798379205773477611)) < 1e-12);
  CHECK(std::abs(bessel_j0(cplx(14, 3)) -
                 cplx(1.5633737478591134053, -1.4354667670899900127)) < 1e-9);
}

TEST_CASE("conjugate symmetry of the built-ins") {
  const cplx samples[] = {cplx(0.3, 0.7), cplx(-2.1, 0.4), cplx(1.5, -3.2), cplx(4, 0.01)};
  for (const char* name : {"exp", "log", "sinh", "cosh", "sin", "cos", "asinh", "sqrt",
                           "besselj0", "pow:0.5", "pow:-1.5"}) {
    const auto f = functions::by_name(name);
    REQUIRE(f.has_value());
    for (cplx z : samples) {
      const cplx a = f->evaluate(std::conj(z)), b = std::conj(f->evaluate(z));
      CHECK(std::abs(a - b) <= 1e-13 * (1 + std::abs(b)));
    }
  }
}

TEST_CASE("domain guards") {
  const auto log = functions::log();
  CHECK(log.guard(cplx(0), 1e-6).has_value());
  CHECK(log.guard(cplx(1e-9), 1e-6)->find("eigenvalue 0") != std::string::npos);
  CHECK_FALSE(log.guard(cplx(-1), 1e-6).has_value());

  const auto as = functions::asinh();
  CHECK(as.guard(cplx(0, 2), 1e-8).has_value());
  CHECK(as.guard(cplx(0, -1), 1e-8).has_value());
  CHECK_FALSE(as.guard(cplx(0, 0.5), 1e-8).has_value());
  CHECK_FALSE(as.guard(cplx(-8), 1e-8).has_value());

  CHECK(functions::pow(-1).guard(cplx(0), 1e-8).has_value());
  CHECK_FALSE(functions::pow(2).guard(cplx(0), 1e-8).has_value());
  CHECK(functions::pow(2).evaluate(cplx(0)) == cplx(0));
}

TEST_CASE("lookup by name") {
  CHECK(functions::by_name("pow:2.5")->evaluate(cplx(4)) == cplx(32));
  CHECK(functions::by_name("pow:2.5")->name == "pow:2.5");
  CHECK_FALSE(functions::by_name("pow:").has_value());
  CHECK_FALSE(functions::by_name("pow:x").has_value());
  CHECK_FALSE(functions::by_name("tan").has_value());
  CHECK(functions::identity().evaluate(cplx(2, 3)) == cplx(2, 3));
  CHECK(functions::constant(1.0).evaluate(cplx(2, 3)) == cplx(1));
}
