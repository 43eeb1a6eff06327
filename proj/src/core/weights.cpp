#include "weights.hpp"

#include <algorithm>
#include <cmath>

namespace ortholab {

WeightPlan::WeightPlan(DKind dkind, AKind akind, std::vector<double> d_custom,
                       std::vector<double> a_custom, long length_hint)
    : dkind_(dkind),
      akind_(akind),
      d_custom_(std::move(d_custom)),
      a_custom_(std::move(a_custom)),
      length_hint_(length_hint) {
  require(length_hint_ >= 1, errc::invalid_argument, "length hint must be positive");
  if (dkind_ == DKind::Custom)
    require(!d_custom_.empty(), errc::invalid_argument, "custom d sequence must be nonempty");
  if (akind_ == AKind::Custom)
    require(!a_custom_.empty(), errc::invalid_argument, "custom a sequence must be nonempty");
  for (double v : d_custom_)
    require(std::isfinite(v), errc::invalid_argument, "d values must be finite");
  for (double v : a_custom_)
    require(std::isfinite(v), errc::invalid_argument, "a values must be finite");

  long n = length_hint_;
  if (dkind_ == DKind::Custom) n = std::min<long>(n, d_custom_.size());
  if (akind_ == AKind::Custom) n = std::min<long>(n, a_custom_.size());
  a_sq_prefix_bound_ = a_sq_prefix(n);
  admissibility_bound_ = 0.0;
  for (long k = 1; k <= n; ++k) {
    double lg = std::log(static_cast<double>(k + 1));
    admissibility_bound_ =
        std::max(admissibility_bound_, std::abs(d(k)) * lg * lg / std::sqrt(static_cast<double>(k)));
  }
}

WeightPlan WeightPlan::preset(const std::string& d_name, const std::string& a_name,
                              long length_hint) {
  DKind dk;
  if (d_name == "unit") dk = DKind::Unit;
  else if (d_name == "maximal") dk = DKind::Maximal;
  else fail(errc::invalid_argument, "unknown d preset: " + d_name);
  AKind ak;
  if (a_name == "inverse_k") ak = AKind::InverseK;
  else if (a_name == "inverse_sqrtk_log") ak = AKind::InverseSqrtKLog;
  else fail(errc::invalid_argument, "unknown a preset: " + a_name);
  return WeightPlan(dk, ak, {}, {}, length_hint);
}

double WeightPlan::d(long k) const {
  require(k >= 1, errc::bad_index, "weight index must be >= 1");
  switch (dkind_) {
    case DKind::Unit: return 1.0;
    case DKind::Maximal: {
      double lg = std::log(static_cast<double>(k + 1));
      return std::sqrt(static_cast<double>(k)) / (lg * lg);
    }
    case DKind::Custom:
      require(k <= static_cast<long>(d_custom_.size()), errc::insufficient_weights,
              "custom d sequence has " + std::to_string(d_custom_.size()) +
                  " entries, index " + std::to_string(k) + " requested");
      return d_custom_[k - 1];
  }
  fail(errc::internal, "unreachable");
}

double WeightPlan::a(long k) const {
  require(k >= 1, errc::bad_index, "weight index must be >= 1");
  switch (akind_) {
    case AKind::InverseK: return 1.0 / static_cast<double>(k);
    case AKind::InverseSqrtKLog:
      return 1.0 / (std::sqrt(static_cast<double>(k)) * std::log(static_cast<double>(k + 1)));
    case AKind::Custom:
      require(k <= static_cast<long>(a_custom_.size()), errc::insufficient_weights,
              "custom a sequence has " + std::to_string(a_custom_.size()) +
                  " entries, index " + std::to_string(k) + " requested");
      return a_custom_[k - 1];
  }
  fail(errc::internal, "unreachable");
}

bool WeightPlan::covers(long n) const {
  if (n < 1) return false;
  if (dkind_ == DKind::Custom && n > static_cast<long>(d_custom_.size())) return false;
  if (akind_ == AKind::Custom && n > static_cast<long>(a_custom_.size())) return false;
  return true;
}

void WeightPlan::require_covers(long n) const {
  require(n >= 1, errc::invalid_argument, "n must be positive");
  require(covers(n), errc::insufficient_weights,
          "weight plan does not cover indices up to " + std::to_string(n));
}

double WeightPlan::a_sq_prefix(long N) const {
  require_covers(N);
  double acc = 0.0;
  for (long k = 1; k <= N; ++k) {
    double v = a(k);
    acc += v * v;
  }
  return acc;
}

double admissibility_statistic(const WeightPlan& plan, long N) {
  plan.require_covers(N);
  if (plan.d_kind() == DKind::Maximal) return 1.0;  // definitional ratio
  double m = 0.0;
  for (long k = 1; k <= N; ++k) {
    double lg = std::log(static_cast<double>(k + 1));
    m = std::max(m, std::abs(plan.d(k)) * lg * lg / std::sqrt(static_cast<double>(k)));
  }
  return m;
}

}  // namespace ortholab
