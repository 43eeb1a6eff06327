#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "bv.hpp"
#include "doctest.h"
#include "experiments.hpp"
#include "json_io.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ortholab;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

double quadrature_coefficient(const BVFunction& f, SystemKind s, long k) {
  std::vector<double> pts = f.breakpoints();
  if (is_step_system(s))
    for (double p : basis_breakpoints(s, k))
      pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto fn = [&](double x) { return f(x) * basis_eval(s, k, x); };
  return oracle::gl_piecewise(fn, pts, 10000);
}

}  // namespace

TEST_CASE("validation rejects malformed segment lists") {
  CHECK(testutil::thrown_code([] { BVFunction({}, 0.0); }) == errc::invalid_argument);
  CHECK(testutil::thrown_code([] { BVFunction({{0.1, 1.0, 0.0, 0.0}}, 0.0); }) ==
        errc::invalid_argument);
  CHECK(testutil::thrown_code([] { BVFunction({{0.0, 0.5, 0.0, 0.0}}, 0.0); }) ==
        errc::invalid_argument);
  CHECK(testutil::thrown_code([] {
          BVFunction({{0.0, 0.5, 0.0, 0.0}, {0.6, 1.0, 0.0, 0.0}}, 0.0);
        }) == errc::invalid_argument);
  CHECK(testutil::thrown_code([] { BVFunction({{0.5, 0.5, 0.0, 0.0}}, 0.0); }) ==
        errc::invalid_argument);
}

TEST_CASE("evaluation and right-continuity") {
  BVFunction ramp = BVFunction::identity();
  CHECK(ramp(0.5) == 0.5);
  BVFunction step = BVFunction::builtin("step2");
  CHECK(step(0.5) == 1.0);  // right-continuous at the jump
  CHECK(step(0.4999) == 0.0);
  CHECK(step(1.0) == 1.0);
  CHECK(testutil::thrown_code([&] { ramp(1.0001); }) == errc::domain);
}

TEST_CASE("total variation") {
  CHECK(BVFunction::identity().total_variation() == 1.0);
  CHECK(BVFunction::constant(3.5).total_variation() == 0.0);
  CHECK(BVFunction::builtin("step2").total_variation() == 1.0);
  CHECK(BVFunction::builtin("ramp").total_variation() == 1.0);
  // slope mass and jumps both count
  BVFunction f({{0.0, 0.5, 2.0, 0.0}, {0.5, 1.0, 0.0, 0.0}}, 1.0);
  CHECK(f.total_variation() == Approx(1.0 + 1.0 + 1.0));  // up 1, jump -1, jump +1 at x=1
}

TEST_CASE("a-norm") {
  NormReport r = BVFunction::identity().norm_a();
  CHECK(r.a_norm == 2.0);
  CHECK(r.variation == 1.0);
  CHECK(r.sup_norm == 1.0);
  CHECK(BVFunction::constant(0.0).norm_a().a_norm == 0.0);
  CHECK(testutil::thrown_code([] { BVFunction::builtin("step2").norm_a(); }) ==
        errc::not_absolutely_continuous);
}

TEST_CASE("exact coefficients match the enumeration examples") {
  BVFunction one = BVFunction::constant(1.0);
  BVFunction x = BVFunction::identity();
  CHECK(integrate_against(one, SystemKind::Trigonometric, 1) == Approx(1.0).epsilon(1e-15));
  CHECK(integrate_against(x, SystemKind::Haar, 2) == Approx(-0.25).epsilon(1e-15));
  CHECK(integrate_against(x, SystemKind::Trigonometric, 3) ==
        Approx(-kSqrt2 / (2.0 * kPi)).epsilon(1e-14));
  CHECK(integrate_against(x, SystemKind::WalshPaley, 2) == Approx(-0.25).epsilon(1e-15));
  for (long k = 2; k <= 8; ++k)
    CHECK(integrate_against(one, SystemKind::Trigonometric, k) ==
          Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("exact integration matches the quadrature oracle") {
  std::mt19937_64 rng(11);
  for (int c = 0; c < 200; ++c) {
    BVFunction f = random_bv(rng);
    SystemKind s = static_cast<SystemKind>(rng() % 3);
    long k = 1 + static_cast<long>(rng() % 256);
    double exact = integrate_against(f, s, k);
    double quad = quadrature_coefficient(f, s, k);
    CHECK(exact == Approx(quad).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("triangle inequality for the total variation") {
  std::mt19937_64 rng(12);
  for (int c = 0; c < 100; ++c) {
    BVFunction f = random_bv(rng);
    BVFunction g = random_bv(rng);
    BVFunction sum = f + g;
    CHECK(sum.total_variation() <=
          f.total_variation() + g.total_variation() + 1e-12);
  }
}

TEST_CASE("parseval lower bound at N = 256") {
  std::mt19937_64 rng(13);
  for (SystemKind s : {SystemKind::Trigonometric, SystemKind::WalshPaley, SystemKind::Haar}) {
    BVFunction f = random_bv(rng);
    double sum_sq = 0.0;
    for (long k = 1; k <= 256; ++k) {
      double c = integrate_against(f, s, k);
      sum_sq += c * c;
    }
    CHECK(sum_sq <= f.integral_sq() + 1e-10);
  }
}

TEST_CASE("json round trip and errors") {
  std::string text =
      R"({"segments": [[0.0, 0.5, 1.0, 0.0], [0.5, 1.0, 0.0, 2.0]], "value_at_1": 2.0})";
  BVFunction f = bv_from_json(text);
  CHECK(f(0.25) == 0.25);
  CHECK(f(0.75) == 2.0);
  BVFunction g = bv_from_json(bv_to_json(f));
  std::mt19937_64 rng(14);
  for (int c = 0; c < 50; ++c) {
    double x = uniform01(rng);
    CHECK(f(x) == g(x));
  }
  CHECK(testutil::thrown_code([] { bv_from_json("{"); }) == errc::parse);
  CHECK(testutil::thrown_code([] { bv_from_json(R"({"segments": 3, "value_at_1": 0})"); }) ==
        errc::parse);
  CHECK(testutil::thrown_code([] {
          bv_from_json(R"({"segments": [[0, 1, 0, 0]]})");
        }) == errc::parse);
  // structurally valid JSON, invalid function
  CHECK(testutil::thrown_code([] {
          bv_from_json(R"({"segments": [[0.2, 1, 0, 0]], "value_at_1": 0})");
        }) == errc::invalid_argument);
}

TEST_CASE("random functions round trip through json") {
  std::mt19937_64 rng(15);
  for (int c = 0; c < 40; ++c) {
    BVFunction f = random_bv(rng);
    BVFunction g = bv_from_json(bv_to_json(f));
    for (int t = 0; t <= 64; ++t) {
      double x = t / 64.0;
      CHECK(f(x) == g(x));
    }
  }
}
