#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "experiments.hpp"
#include "ons.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ortholab;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

const SystemKind kSystems[3] = {SystemKind::Trigonometric, SystemKind::WalshPaley,
                                SystemKind::Haar};

// breakpoint-aware quadrature of phi_k from 0 to x
double primitive_by_quadrature(SystemKind s, long k, double x) {
  auto f = [&](double t) { return basis_eval(s, k, t); };
  if (!is_step_system(s)) return oracle::gl_composite(f, 0.0, x, std::max<long>(64, k));
  std::vector<double> pts;
  pts.push_back(0.0);
  for (double p : basis_breakpoints(s, k))
    if (p > 0.0 && p < x) pts.push_back(p);
  pts.push_back(x);
  return oracle::gl_piecewise(f, pts, 4096);
}

}  // namespace

TEST_CASE("point evaluation matches the enumeration") {
  CHECK(basis_eval(SystemKind::Trigonometric, 1, 0.37) == 1.0);
  CHECK(basis_eval(SystemKind::Trigonometric, 2, 0.0) == Approx(kSqrt2).epsilon(1e-15));
  CHECK(basis_eval(SystemKind::WalshPaley, 2, 0.25) == 1.0);
  CHECK(basis_eval(SystemKind::WalshPaley, 2, 0.75) == -1.0);
  CHECK(basis_eval(SystemKind::Haar, 2, 0.25) == 1.0);
  CHECK(basis_eval(SystemKind::Haar, 2, 0.75) == -1.0);
  // left limits at 1
  CHECK(basis_eval(SystemKind::WalshPaley, 2, 1.0) == -1.0);
  CHECK(basis_eval(SystemKind::Haar, 2, 1.0) == -1.0);
  CHECK(basis_eval(SystemKind::Haar, 3, 1.0) == 0.0);
}

TEST_CASE("walsh evaluation equals the digit-product definition") {
  std::mt19937_64 rng(2024);
  for (int c = 0; c < 400; ++c) {
    std::uint64_t m = rng() % 1024;
    double x = uniform01(rng);
    CHECK(basis_eval(SystemKind::WalshPaley, static_cast<long>(m) + 1, x) ==
          oracle::walsh_digit_product(m, x));
  }
  // dyadic points, where the right-continuity convention matters
  for (long m = 0; m < 64; ++m)
    for (long t = 0; t <= 16; ++t)
      CHECK(basis_eval(SystemKind::WalshPaley, m + 1, t / 16.0) ==
            oracle::walsh_digit_product(m, t / 16.0));
}

TEST_CASE("haar elements are L2-normalized steps") {
  // k = 5 = 2^2 + 1: support [0, 1/4), height 2
  CHECK(basis_eval(SystemKind::Haar, 5, 0.0) == 2.0);
  CHECK(basis_eval(SystemKind::Haar, 5, 0.125) == -2.0);
  CHECK(basis_eval(SystemKind::Haar, 5, 0.5) == 0.0);
  for (long k : {2L, 3L, 5L, 9L, 17L, 40L})
    CHECK(basis_inner_product(SystemKind::Haar, k, k) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("primitive closed forms") {
  CHECK(basis_primitive(SystemKind::Trigonometric, 2, 0.25) ==
        Approx(kSqrt2 / (2.0 * kPi)).epsilon(1e-14));
  for (SystemKind s : kSystems)
    for (long k : {1L, 2L, 7L, 19L}) CHECK(basis_primitive(s, k, 0.0) == 0.0);
  CHECK(basis_primitive(SystemKind::WalshPaley, 2, 1.0) == 0.0);
  CHECK(basis_primitive(SystemKind::WalshPaley, 2, 0.5) == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("primitive agrees with quadrature of the evaluation") {
  std::mt19937_64 rng(7);
  for (SystemKind s : kSystems) {
    for (int c = 0; c < 100; ++c) {
      long k = 1 + static_cast<long>(rng() % 256);
      double x = uniform01(rng);
      double exact = basis_primitive(s, k, x);
      double quad = primitive_by_quadrature(s, k, x);
      CHECK(exact == Approx(quad).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("second primitive agrees with quadrature of the primitive") {
  std::mt19937_64 rng(8);
  for (SystemKind s : kSystems) {
    for (int c = 0; c < 25; ++c) {
      long k = 1 + static_cast<long>(rng() % 64);
      double x = uniform01(rng);
      auto phi1 = [&](double t) { return basis_primitive(s, k, t); };
      double quad;
      if (is_step_system(s)) {
        // integrate the piecewise-linear primitive piece by piece so that no
        // narrow dyadic bump is missed
        std::vector<double> pts{0.0};
        for (double p : basis_breakpoints(s, k))
          if (p > 0.0 && p < x) pts.push_back(p);
        pts.push_back(x);
        quad = oracle::gl_piecewise(phi1, pts, 2048);
      } else {
        quad = oracle::gl_composite(phi1, 0.0, x, std::max<long>(64, k));
      }
      CHECK(basis_primitive2(s, k, x) == Approx(quad).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("primitive sup values") {
  CHECK(basis_primitive_sup(SystemKind::Trigonometric, 1) == 1.0);
  CHECK(basis_primitive_sup(SystemKind::Trigonometric, 2) ==
        Approx(kSqrt2 / (2.0 * kPi)).epsilon(1e-15));
  CHECK(basis_primitive_sup(SystemKind::WalshPaley, 2) == 0.5);
  CHECK(basis_primitive_sup(SystemKind::Haar, 2) == 0.5);
  // the odd trig primitive rides on a hump; primitive_max carries the true sup
  CHECK(basis_primitive_max(SystemKind::Trigonometric, 3) ==
        Approx(2.0 * kSqrt2 / (2.0 * kPi)).epsilon(1e-15));
}

TEST_CASE("primitive_max bounds the sampled primitive") {
  std::mt19937_64 rng(9);
  for (SystemKind s : kSystems) {
    for (long k : {1L, 2L, 3L, 4L, 9L, 33L, 100L}) {
      double sup = basis_primitive_max(s, k);
      double sampled = 0.0;
      for (int t = 0; t <= 2048; ++t)
        sampled = std::max(sampled, std::abs(basis_primitive(s, k, t / 2048.0)));
      for (int c = 0; c < 200; ++c)
        sampled = std::max(sampled, std::abs(basis_primitive(s, k, uniform01(rng))));
      CHECK(sampled <= sup + 1e-12);
      CHECK(sampled == Approx(sup).epsilon(0.02));  // the grid nearly attains it
    }
  }
}

TEST_CASE("step breakpoints") {
  CHECK(basis_breakpoints(SystemKind::WalshPaley, 2) == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(basis_breakpoints(SystemKind::Haar, 3) == std::vector<double>{0.0, 0.25, 0.5, 1.0});
  CHECK(basis_breakpoints(SystemKind::WalshPaley, 1) == std::vector<double>{0.0, 1.0});
  CHECK(testutil::thrown_code([] { basis_breakpoints(SystemKind::Trigonometric, 2); }) ==
        errc::unsupported);
  // constancy: the element never changes value inside a breakpoint cell
  std::mt19937_64 rng(10);
  for (SystemKind s : {SystemKind::WalshPaley, SystemKind::Haar}) {
    for (long k : {2L, 3L, 6L, 11L, 29L}) {
      std::vector<double> pts = basis_breakpoints(s, k);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double ref = basis_eval(s, k, pts[i]);
        for (int c = 0; c < 8; ++c) {
          double x = pts[i] + (pts[i + 1] - pts[i]) * uniform01(rng) * 0.999;
          CHECK(basis_eval(s, k, x) == ref);
        }
      }
    }
  }
}

TEST_CASE("gram matrix is the identity") {
  for (SystemKind s : kSystems) {
    for (long k = 1; k <= 24; ++k) {
      for (long l = 1; l <= 24; ++l) {
        double expected = (k == l) ? 1.0 : 0.0;
        CHECK(basis_inner_product(s, k, l) == Approx(expected).epsilon(1e-12).scale(1.0));
      }
    }
  }
  // quadrature spot checks of the closed-form inner products
  auto prod = [](SystemKind s, long k, long l) {
    return [=](double x) { return basis_eval(s, k, x) * basis_eval(s, l, x); };
  };
  CHECK(oracle::gl_composite(prod(SystemKind::Trigonometric, 3, 3), 0, 1, 64) ==
        Approx(1.0).epsilon(1e-12));
  CHECK(oracle::gl_composite(prod(SystemKind::Trigonometric, 4, 6), 0, 1, 64) ==
        Approx(0.0).epsilon(1e-12).scale(1.0));
}

TEST_CASE("decay envelope of the scaled primitive sup") {
  double trig_max = 0.0, walsh_max = 0.0;
  for (long k = 2; k <= 1024; ++k) {
    trig_max = std::max(trig_max, k * basis_primitive_sup(SystemKind::Trigonometric, k));
    walsh_max = std::max(walsh_max, k * basis_primitive_sup(SystemKind::WalshPaley, k));
  }
  CHECK(trig_max <= 2.0);
  CHECK(walsh_max <= 2.0);
  CHECK(trig_max < 0.68);                                // attained at k = 3
  CHECK(trig_max == Approx(3.0 * kSqrt2 / (2.0 * kPi)));
  CHECK(walsh_max == Approx(1.0));
}

TEST_CASE("haar contrast: sqrt(k)-scaled sup bounded, k-scaled sup growing") {
  double sqrt_scaled_max = 0.0;
  for (long k = 2; k <= 1024; ++k)
    sqrt_scaled_max = std::max(
        sqrt_scaled_max, std::sqrt(static_cast<double>(k)) * basis_primitive_sup(SystemKind::Haar, k));
  CHECK(sqrt_scaled_max <= 1.0);
  double prev = 0.0;
  for (int j = 0; (1L << j) + 1 <= 1024; ++j) {
    long k = (1L << j) + 1;
    double scaled = k * basis_primitive_sup(SystemKind::Haar, k);
    CHECK(scaled > prev);  // monotone growth along k = 2^j + 1
    prev = scaled;
  }
  CHECK(prev > 10.0);  // ~ sqrt(k)/2 at k = 1025
}

TEST_CASE("index and domain errors") {
  CHECK(testutil::thrown_code([] { basis_eval(SystemKind::Haar, 0, 0.5); }) == errc::bad_index);
  CHECK(testutil::thrown_code([] { basis_eval(SystemKind::Haar, -3, 0.5); }) == errc::bad_index);
  CHECK(testutil::thrown_code([] { basis_eval(SystemKind::Trigonometric, 1, 1.5); }) ==
        errc::domain);
  CHECK(testutil::thrown_code([] { basis_primitive(SystemKind::WalshPaley, 2, -0.1); }) ==
        errc::domain);
  CHECK(testutil::thrown_code([] { basis_primitive_sup(SystemKind::WalshPaley, 0); }) ==
        errc::bad_index);
}
