#include "functionals.hpp"

#include <cmath>

namespace ortholab {

double fourier_coefficient(const BVFunction& f, SystemKind s, long k) {
  return integrate_against(f, s, k);
}

std::vector<double> fourier_coefficients(const BVFunction& f, SystemKind s, long N) {
  require(N >= 1, errc::invalid_argument, "N must be positive");
  std::vector<double> out(N);
  for (long k = 1; k <= N; ++k) out[k - 1] = integrate_against(f, s, k);
  return out;
}

std::vector<double> kernel_coefficients(const WeightPlan& plan, long n) {
  plan.require_covers(n);
  std::vector<double> c(n);
  c[0] = 0.0;  // log 1 = 0 annihilates the first term
  for (long k = 2; k <= n; ++k)
    c[k - 1] = plan.d(k) * plan.a(k) * std::log(static_cast<double>(k));
  return c;
}

Kernel weighted_kernel(const WeightPlan& plan, SystemKind s, long n) {
  return Kernel::weighted_sum(s, kernel_coefficients(plan, n));
}

double kernel_value(const WeightPlan& plan, SystemKind s, long n, double x) {
  require(x >= 0.0 && x <= 1.0, errc::domain, "x outside [0,1]");
  std::vector<double> c = kernel_coefficients(plan, n);
  double acc = 0.0;
  for (long k = 1; k <= n; ++k)
    if (c[k - 1] != 0.0) acc += c[k - 1] * basis_eval(s, k, x);
  return acc;
}

double kernel_prefix(const WeightPlan& plan, SystemKind s, long n, double x) {
  require(x >= 0.0 && x <= 1.0, errc::domain, "x outside [0,1]");
  std::vector<double> c = kernel_coefficients(plan, n);
  double acc = 0.0;
  for (long k = 1; k <= n; ++k)
    if (c[k - 1] != 0.0) acc += c[k - 1] * basis_primitive(s, k, x);
  return acc;
}

PrefixMax boundedness_statistic(const WeightPlan& plan, SystemKind s, long n) {
  require(n >= 2, errc::degenerate, "the prefix maximum needs n >= 2");
  Kernel q = weighted_kernel(plan, s, n);
  std::vector<double> pf = q.prefix_on_grid(n);
  PrefixMax out;
  out.value = std::abs(pf[1]);
  out.argmax = 1;
  for (long i = 2; i < n; ++i) {
    double v = std::abs(pf[i]);
    if (v > out.value) {
      out.value = v;
      out.argmax = i;
    }
  }
  return out;
}

double functional_value(std::span<const double> kernel_coeffs,
                        std::span<const double> fourier_coeffs, long n) {
  require(n >= 1 && n <= static_cast<long>(kernel_coeffs.size()) &&
              n <= static_cast<long>(fourier_coeffs.size()),
          errc::invalid_argument, "coefficient spans shorter than n");
  double acc = 0.0;
  for (long k = 1; k <= n; ++k) acc += kernel_coeffs[k - 1] * fourier_coeffs[k - 1];
  return acc;
}

double functional_value(const BVFunction& f, const WeightPlan& plan, SystemKind s, long n) {
  std::vector<double> c = kernel_coefficients(plan, n);
  double acc = 0.0;
  for (long k = 1; k <= n; ++k)
    if (c[k - 1] != 0.0) acc += c[k - 1] * fourier_coefficient(f, s, k);
  return acc;
}

double functional_value_direct(const BVFunction& f, const WeightPlan& plan, SystemKind s,
                               long n) {
  return integrate_bv(f, weighted_kernel(plan, s, n));
}

double weighted_coeff_sum(const WeightPlan& plan, std::span<const double> fourier_coeffs,
                          long N) {
  plan.require_covers(N);
  require(N <= static_cast<long>(fourier_coeffs.size()), errc::invalid_argument,
          "coefficient span shorter than N");
  double acc = 0.0;
  for (long k = 2; k <= N; ++k) {
    double t = plan.d(k) * fourier_coeffs[k - 1] * std::log(static_cast<double>(k));
    acc += t * t;
  }
  return acc;
}

double weighted_coeff_sum(const BVFunction& f, const WeightPlan& plan, SystemKind s, long N) {
  plan.require_covers(N);
  double acc = 0.0;
  for (long k = 2; k <= N; ++k) {
    double t = plan.d(k) * fourier_coefficient(f, s, k) * std::log(static_cast<double>(k));
    acc += t * t;
  }
  return acc;
}

double mr_sum(std::span<const double> c) {
  double acc = 0.0;
  for (std::size_t i = 2; i <= c.size(); ++i) {
    double lg = std::log2(static_cast<double>(i));
    acc += c[i - 1] * c[i - 1] * lg * lg;
  }
  return acc;
}

}  // namespace ortholab
