#pragma once

#include <vector>

#include "bv.hpp"
#include "common.hpp"
#include "ons.hpp"

namespace ortholab {

/// A finite weighted sum sum_k c_k phi_k over one system, with exact pointwise
/// evaluation, exact first and second primitives, and exact integration of
/// affine pieces against it. For the step systems the sum is materialized on
/// its common dyadic grid (piecewise constant, primitives piecewise
/// linear/quadratic); for the trigonometric system everything is closed form
/// per frequency.
class Kernel {
 public:
  static Kernel single_basis(SystemKind s, long k);
  static Kernel weighted_sum(SystemKind s, std::vector<double> coeffs);

  SystemKind system() const { return system_; }
  long size() const { return static_cast<long>(coeffs_.size()); }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double value(double x) const;    // right-continuous; left limit at x=1
  double prefix(double x) const;   // integral over [0,x]
  double prefix2(double x) const;  // integral of the prefix over [0,x]
  double integral() const { return prefix(1.0); }

  /// Exact squared L2 norm, sum of c_k^2 by orthonormality.
  double l2_norm_sq() const;

  /// Exact integral of (slope*x + intercept) * kernel over [lo, hi].
  double integrate_affine(double lo, double hi, double slope, double intercept) const;

  /// Integral of |kernel| over [lo, hi]: exact for step systems, composite
  /// Simpson (64 panels, recurrence-evaluated) for trig.
  double abs_integral(double lo, double hi) const;

  /// sup over x of |prefix(x)|: exact at breakpoints for step systems; for
  /// trig, the maximum over the uniform grid with 8*size() panels (which
  /// contains every i/size() point).
  double max_abs_prefix() const;

  /// prefix at i/n for i = 0..n.
  std::vector<double> prefix_on_grid(long n) const;
  /// prefix and second prefix at i/n for i = 0..n.
  void grids_on(long n, std::vector<double>& p1, std::vector<double>& p2) const;

 private:
  Kernel(SystemKind s, std::vector<double> coeffs);
  void build_step_grid();
  void build_trig_tables();
  void trig_batch(double lo, double hi, long panels, std::vector<double>* val,
                  std::vector<double>* pf, std::vector<double>* pf2) const;

  SystemKind system_;
  std::vector<double> coeffs_;

  // step representation
  int level_ = 0;
  long ncells_ = 1;
  double width_ = 1.0;
  std::vector<double> qcell_;  // kernel value per cell
  std::vector<double> p1_;     // prefix at cell boundaries
  std::vector<double> p2_;     // second prefix at cell boundaries

  // trig representation: value = c1 + sqrt2 sum_m (u_m cos + v_m sin)(2 pi m x)
  double c1_ = 0.0;
  std::vector<double> u_, v_;  // indexed by frequency m, entry 0 unused
  double s1_ = 0.0;            // sqrt2 sum v_m / w_m
  double s2_ = 0.0;            // sqrt2 sum u_m / w_m^2
};

/// Exact integral of f * kernel: integration by parts per affine segment.
/// This is the kernel-aggregate evaluation route, organized opposite to the
/// per-coefficient route of integrate_against.
double integrate_bv(const BVFunction& f, const Kernel& h);

}  // namespace ortholab
