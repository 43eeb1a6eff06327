#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace ortholab {

enum class DKind { Unit, Maximal, Custom };
enum class AKind { InverseK, InverseSqrtKLog, Custom };

/// The pair of weight sequences d = {d_k} and a = {a_k}. Preset generators
/// cover any index; custom lists cover exactly their length and raise an
/// insufficient_weights error beyond it.
///
///   d: Unit     d_k = 1
///      Maximal  d_k = sqrt(k) / log^2(k+1)   (admissibility ratio exactly 1)
///   a: InverseK         a_k = 1/k
///      InverseSqrtKLog  a_k = 1/(sqrt(k) log(k+1))
///
/// Logarithms are natural throughout.
class WeightPlan {
 public:
  WeightPlan(DKind dkind, AKind akind, std::vector<double> d_custom = {},
             std::vector<double> a_custom = {}, long length_hint = 4096);

  static WeightPlan preset(const std::string& d_name, const std::string& a_name,
                           long length_hint = 4096);

  double d(long k) const;
  double a(long k) const;
  bool covers(long n) const;
  void require_covers(long n) const;

  DKind d_kind() const { return dkind_; }
  AKind a_kind() const { return akind_; }
  const std::vector<double>& d_custom() const { return d_custom_; }
  const std::vector<double>& a_custom() const { return a_custom_; }
  long length_hint() const { return length_hint_; }

  /// Invariant metadata recorded at construction, both up to length_hint.
  double a_sq_prefix_bound() const { return a_sq_prefix_bound_; }
  double admissibility_bound() const { return admissibility_bound_; }

  /// Partial sum of a_k^2 for k <= N.
  double a_sq_prefix(long N) const;

 private:
  DKind dkind_;
  AKind akind_;
  std::vector<double> d_custom_;
  std::vector<double> a_custom_;
  long length_hint_;
  double a_sq_prefix_bound_ = 0.0;
  double admissibility_bound_ = 0.0;
};

/// max over 1 <= k <= N of |d_k| log^2(k+1) / sqrt(k). Exactly 1 for the
/// Maximal preset.
double admissibility_statistic(const WeightPlan& plan, long N);

}  // namespace ortholab
