#pragma once

#include <span>
#include <vector>

#include "bv.hpp"
#include "kernel.hpp"
#include "weights.hpp"

namespace ortholab {

/// Fourier coefficient C_k(f) = integral of f * phi_k, exact.
double fourier_coefficient(const BVFunction& f, SystemKind s, long k);

/// C_1(f) .. C_N(f) in one pass; this is what scans cache per function.
std::vector<double> fourier_coefficients(const BVFunction& f, SystemKind s, long N);

/// Kernel weights c_k = d_k a_k log k for k <= n. Natural logarithm; the k=1
/// term is identically zero.
std::vector<double> kernel_coefficients(const WeightPlan& plan, long n);

/// The weighted partial-sum kernel Q_n = sum_{k<=n} d_k a_k log k phi_k.
Kernel weighted_kernel(const WeightPlan& plan, SystemKind s, long n);

/// Q_n(x).
double kernel_value(const WeightPlan& plan, SystemKind s, long n, double x);

/// Prefix integral of Q_n over [0,x].
double kernel_prefix(const WeightPlan& plan, SystemKind s, long n, double x);

struct PrefixMax {
  double value = 0.0;
  long argmax = 1;  // smallest attaining index on ties
};

/// B_n: max over interior grid points i/n (1 <= i < n) of the magnitude of the
/// prefix integral of Q_n. Requires n >= 2.
PrefixMax boundedness_statistic(const WeightPlan& plan, SystemKind s, long n);

/// U_n(f) = integral of f * Q_n, evaluated through coefficient linearity
/// sum c_k C_k(f). This is the primary route.
double functional_value(const BVFunction& f, const WeightPlan& plan, SystemKind s, long n);
double functional_value(std::span<const double> kernel_coeffs,
                        std::span<const double> fourier_coeffs, long n);

/// U_n(f) by direct integration of f against the assembled kernel; the
/// independent algebraic route used for cross-checks.
double functional_value_direct(const BVFunction& f, const WeightPlan& plan, SystemKind s, long n);

/// Partial sum over k <= N of d_k^2 C_k(f)^2 log^2 k.
double weighted_coeff_sum(const BVFunction& f, const WeightPlan& plan, SystemKind s, long N);
double weighted_coeff_sum(const WeightPlan& plan, std::span<const double> fourier_coeffs, long N);

/// Sum over the list of c_i^2 (log2 i)^2, 1-based; base-2 logarithm here.
double mr_sum(std::span<const double> c);

/// One row of a functional scan.
struct FunctionalReport {
  long n = 0;
  double u_n = 0.0;
  double b_n = 0.0;
  long argmax_i = 1;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double residual = 0.0;  // |u_n - (a1+a2+a3)|
  double slack = 0.0;     // b_n - |u_n|
};

}  // namespace ortholab
