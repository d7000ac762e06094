#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "levymix/classcheck.hpp"
#include "levymix/families.hpp"

using namespace levymix;

TEST_CASE("CBF: power-law and exponential Levy densities pass") {
  auto st = families::stable();
  auto rep = class_check(make_cbf_certificate(st, 0.5));
  CHECK(rep.pass());
  CHECK(rep.order_checked == 4);

  auto gm = families::gamma();
  CHECK(class_check(make_cbf_certificate(gm, 1.0)).pass());

  MixedExponent mix(st, measures::atoms({{0.3, 0.5}, {0.7, 0.5}}));
  CHECK(class_check(make_cbf_certificate(mix)).pass());
  MixedExponent uni(st, measures::uniform(0.0, 1.0, 48));
  CHECK(class_check(make_cbf_certificate(uni)).pass());
}

TEST_CASE("CBF: oscillating witness fails at low order") {
  ClassCertificate cert{FunctionClass::CBF, [](double s) { return std::sin(s) + 2.0; },
                        4, {}, "sin+2"};
  auto rep = class_check(cert);
  CHECK(rep.verdict == Verdict::Fail);
  CHECK(rep.first_violation_order >= 1);
  CHECK(rep.first_violation_order <= 2);

  // Oracle: direct finite differences on the default grid show the
  // monotonicity break at order 1 already (sin increases somewhere).
  auto grid = log_grid(1e-2, 1e2, 64);
  bool increases = false;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (std::sin(grid[i + 1]) > std::sin(grid[i])) increases = true;
  CHECK(increases);
}

TEST_CASE("TBF: t*tau(t) completely monotone for built-ins and mixtures") {
  auto st = families::stable();
  CHECK(class_check(make_tbf_certificate(st, 0.5)).pass());
  auto gm = families::gamma();
  CHECK(class_check(make_tbf_certificate(gm, 1.0)).pass());

  MixedExponent mix(gm, measures::atoms({{0.5, 0.5}, {2.0, 0.5}}));
  CHECK(class_check(make_tbf_certificate(mix)).pass());
  MixedExponent uni(gm, measures::uniform(0.5, 1.5, 48));
  CHECK(class_check(make_tbf_certificate(uni)).pass());
}

TEST_CASE("ME: range-bounded witnesses pass, range violations fail") {
  // Spec-style eta witness e^{-y s}, bounded by 1.
  ClassCertificate spec_style{FunctionClass::ME,
                              [](double t) { return std::exp(-t); }, 0, {}, "e^{-t}"};
  auto rep = class_check(spec_style);
  CHECK(rep.pass());
  CHECK(rep.me_integral < 1e12);

  auto gm = families::gamma();
  CHECK(class_check(make_me_certificate(gm, 1.0)).pass());
  auto st = families::stable();
  CHECK(class_check(make_me_certificate(st, 0.5)).pass());

  MixedExponent mix(gm, measures::atoms({{0.5, 0.5}, {2.0, 0.5}}));
  CHECK(class_check(make_me_certificate(mix)).pass());

  ClassCertificate bad{FunctionClass::ME, [](double) { return 1.5; }, 0, {}, "1.5"};
  CHECK(class_check(bad).verdict == Verdict::Fail);
}

TEST_CASE("SBF: built-in exponents and mixtures") {
  auto st = families::stable();
  CHECK(class_check(make_sbf_certificate(st, 0.5)).pass());
  auto gm = families::gamma();
  CHECK(class_check(make_sbf_certificate(gm, 1.0)).pass());

  MixedExponent mix(st, measures::atoms({{0.3, 0.5}, {0.7, 0.5}}));
  CHECK(class_check(make_sbf_certificate(mix)).pass());
}

TEST_CASE("Bernstein property: E f alternates through order 4 on a log grid") {
  MixedExponent uni(families::stable(), measures::uniform(0.0, 1.0, 64));
  CHECK(bernstein_spot_check([&](double lam) { return uni.f(lam); }).pass());

  MixedExponent gm(families::gamma(), measures::dirac(1.0));
  CHECK(bernstein_spot_check([&](double lam) { return gm.f(lam); }).pass());

  MixedExponent two(families::stable(), measures::atoms({{0.3, 0.5}, {0.7, 0.5}}));
  CHECK(bernstein_spot_check([&](double lam) { return two.f(lam); }).pass());

  // and a clearly non-Bernstein function fails
  auto rep = bernstein_spot_check([](double lam) { return lam * lam; });
  CHECK(rep.verdict == Verdict::Fail);
}

TEST_CASE("coarse grids give inconclusive, not pass") {
  ClassCertificate cert{FunctionClass::CBF, [](double s) { return std::exp(-s); },
                        4, {1.0, 2.0, 3.0}, "coarse"};
  auto rep = class_check(cert);
  CHECK(rep.verdict == Verdict::Inconclusive);
}
