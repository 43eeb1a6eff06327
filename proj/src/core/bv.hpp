#pragma once

#include <string>
#include <vector>

#include "common.hpp"
#include "ons.hpp"

namespace ortholab {

/// One affine piece f(x) = slope*x + intercept on [left, right).
struct Segment {
  double left = 0.0;
  double right = 0.0;
  double slope = 0.0;
  double intercept = 0.0;

  double at(double x) const { return slope * x + intercept; }
};

struct NormReport {
  double variation = 0.0;
  double sup_norm = 0.0;
  double a_norm = 0.0;
};

/// Piecewise-affine function on [0,1] with finitely many jumps. Segments tile
/// [0,1) half-open; the value at 1 is stored separately. Values at interior
/// breakpoints follow the right-continuity convention. Immutable after
/// construction.
class BVFunction {
 public:
  BVFunction(std::vector<Segment> segments, double value_at_1);

  static BVFunction constant(double c);
  static BVFunction identity();  // f(x) = x
  /// Built-in test functions: "x", "ramp" (mid ramp 0->1 over [1/4,3/4]),
  /// "step2" (jump 0->1 at 1/2).
  static BVFunction builtin(const std::string& name);

  double operator()(double x) const;  // domain error outside [0,1]
  const std::vector<Segment>& segments() const { return segments_; }
  double value_at_1() const { return value_at_1_; }

  /// Exact total variation on [0,1]: slope mass plus jump magnitudes,
  /// including the jump against value_at_1.
  double total_variation() const;

  /// sup-norm + total variation; requires a continuous function (no jumps),
  /// otherwise a not_absolutely_continuous error is raised.
  NormReport norm_a() const;

  double sup_norm() const;
  bool has_jump() const;

  double integral() const;     // exact integral of f
  double integral_sq() const;  // exact integral of f^2

  /// Interior breakpoints plus 0 and 1, ascending.
  std::vector<double> breakpoints() const;

  /// Pointwise sum; breakpoints are merged, jumps add.
  BVFunction operator+(const BVFunction& other) const;

 private:
  std::vector<Segment> segments_;
  double value_at_1_;
};

inline double total_variation(const BVFunction& f) { return f.total_variation(); }
inline NormReport norm_a(const BVFunction& f) { return f.norm_a(); }

/// Exact integral of f * phi_k: integration by parts against the closed-form
/// primitives, segment by segment.
double integrate_against(const BVFunction& f, SystemKind s, long k);

}  // namespace ortholab
