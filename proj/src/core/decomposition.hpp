#pragma once

#include <span>

#include "functionals.hpp"

namespace ortholab {

/// Three-term split of integral(f * h) over the grid {i/n}:
///   a1 = sum_{i=1}^{n-1} (f(i/n) - f((i+1)/n)) * prefix(i/n)
///   a2 = sum_{i=1}^{n}   integral over [(i-1)/n, i/n] of (f - f(i/n)) * h
///   a3 = f(1) * prefix(1)
/// lhs carries the directly integrated value; a1 + a2 + a3 reproduces it up to
/// rounding for any pointwise-finite piecewise-affine f.
struct Decomposition {
  long n = 0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double lhs = 0.0;

  double sum() const { return a1 + a2 + a3; }
  double residual() const;  // |lhs - sum()|
};

Decomposition decompose(const BVFunction& f, const Kernel& h, long n);

/// Same, with the kernel's prefix grids at i/n supplied by the caller (scans
/// compute them once per n and share them across functions).
Decomposition decompose(const BVFunction& f, const Kernel& h, long n,
                        std::span<const double> p1, std::span<const double> p2);

/// The continuous ramp witness: 0 on [0, i_n/n], 1 on [(i_n+1)/n, 1], linear
/// in between. Total variation 1 and A-norm 2 (exact for dyadic n, to a few
/// ulps otherwise); f(i/n) is exactly 0 for i <= i_n at every n.
BVFunction sharpness_ramp(long n, long i_n);

struct SharpnessProbe {
  FunctionalReport report;   // u_n, b_n, argmax and the decomposition of f_n
  Decomposition parts;
};

/// Builds f_n at the prefix-max index of Q_n and evaluates the functional on
/// it. slack = b_n - |u_n(f_n)| quantifies the untracked remainder terms.
SharpnessProbe sharpness_probe(const WeightPlan& plan, SystemKind s, long n);

}  // namespace ortholab
