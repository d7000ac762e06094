#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "levymix/talbot.hpp"

using namespace levymix;
using cplx = std::complex<double>;

TEST_CASE("invert_laplace on elementary transforms") {
  for (double t : {0.3, 1.0, 7.0}) {
    double one = invert_laplace([](cplx s) { return 1.0 / s; }, t);
    CHECK(std::fabs(one - 1.0) < 1e-8);
  }
  double ramp = invert_laplace([](cplx s) { return 1.0 / (s * s); }, 2.0);
  CHECK(std::fabs(ramp - 2.0) < 1e-8);

  double decay = invert_laplace([](cplx s) { return 1.0 / (s + 1.0); }, 1.0);
  CHECK(std::fabs(decay - std::exp(-1.0)) < 1e-8);
}

TEST_CASE("invert_laplace handles power transforms and extreme times") {
  // L^{-1}[s^{-3/2}](t) = 2 sqrt(t/pi)
  for (double t : {1.0, 1e4, 1e6}) {
    double got = invert_laplace([](cplx s) { return std::exp(-1.5 * std::log(s)); }, t);
    double want = 2.0 * std::sqrt(t / 3.14159265358979323846);
    CHECK(std::fabs(got - want) < 1e-8 * want);
  }
  // L^{-1}[e^{-sqrt(s)}](1) = e^{-1/4}/(2 sqrt(pi))
  double mu = invert_laplace([](cplx s) { return std::exp(-std::sqrt(s)); }, 1.0);
  CHECK(std::fabs(mu - 0.2196956447338612) < 1e-9);
}

TEST_CASE("invert_laplace configuration and error paths") {
  CHECK_THROWS_AS(invert_laplace([](cplx s) { return 1.0 / s; }, -1.0), ParameterError);
  CHECK_THROWS_AS(invert_laplace([](cplx s) { return 1.0 / s; }, 1.0, {4, 0.4}),
                  ConfigError);
  CHECK_THROWS_AS(invert_laplace(
                      [](cplx) { return cplx(std::nan(""), 0.0); }, 1.0),
                  NumericError);

  // node_count trades accuracy for work; 8 nodes should still do ~1e-3
  double rough = invert_laplace([](cplx s) { return 1.0 / (s + 1.0); }, 1.0, {8, 0.4});
  CHECK(std::fabs(rough - std::exp(-1.0)) < 1e-3);
}
