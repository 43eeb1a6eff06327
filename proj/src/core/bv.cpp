#include "bv.hpp"

#include <algorithm>
#include <cmath>

namespace ortholab {

namespace {

void validate(const std::vector<Segment>& segs) {
  require(!segs.empty(), errc::invalid_argument, "segment list must be nonempty");
  require(segs.front().left == 0.0, errc::invalid_argument, "first segment must start at 0");
  require(segs.back().right == 1.0, errc::invalid_argument, "last segment must end at 1");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    require(s.left < s.right, errc::invalid_argument, "segments must have positive length");
    require(std::isfinite(s.slope) && std::isfinite(s.intercept), errc::invalid_argument,
            "segment coefficients must be finite");
    if (i + 1 < segs.size())
      require(s.right == segs[i + 1].left, errc::invalid_argument,
              "segments must tile [0,1) without gaps or overlaps");
  }
}

}  // namespace

BVFunction::BVFunction(std::vector<Segment> segments, double value_at_1)
    : segments_(std::move(segments)), value_at_1_(value_at_1) {
  validate(segments_);
  require(std::isfinite(value_at_1_), errc::invalid_argument, "value at 1 must be finite");
}

BVFunction BVFunction::constant(double c) { return BVFunction({{0.0, 1.0, 0.0, c}}, c); }

BVFunction BVFunction::identity() { return BVFunction({{0.0, 1.0, 1.0, 0.0}}, 1.0); }

BVFunction BVFunction::builtin(const std::string& name) {
  if (name == "x") return identity();
  if (name == "ramp")
    return BVFunction({{0.0, 0.25, 0.0, 0.0}, {0.25, 0.75, 2.0, -0.5}, {0.75, 1.0, 0.0, 1.0}},
                      1.0);
  if (name == "step2") return BVFunction({{0.0, 0.5, 0.0, 0.0}, {0.5, 1.0, 0.0, 1.0}}, 1.0);
  fail(errc::invalid_argument, "unknown builtin function: " + name);
}

double BVFunction::operator()(double x) const {
  require(x >= 0.0 && x <= 1.0, errc::domain,
          "evaluation point must lie in [0,1], got " + std::to_string(x));
  if (x >= 1.0) return value_at_1_;
  auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                             [](double v, const Segment& s) { return v < s.right; });
  return it->at(x);
}

double BVFunction::total_variation() const {
  double tv = 0.0;
  for (const Segment& s : segments_) tv += std::abs(s.slope) * (s.right - s.left);
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    double left_limit = segments_[i].at(segments_[i].right);
    tv += std::abs(segments_[i + 1].at(segments_[i + 1].left) - left_limit);
  }
  tv += std::abs(value_at_1_ - segments_.back().at(1.0));
  return tv;
}

bool BVFunction::has_jump() const {
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    if (segments_[i].at(segments_[i].right) != segments_[i + 1].at(segments_[i + 1].left))
      return true;
  }
  return value_at_1_ != segments_.back().at(1.0);
}

double BVFunction::sup_norm() const {
  double m = std::abs(value_at_1_);
  for (const Segment& s : segments_) {
    m = std::max(m, std::abs(s.at(s.left)));
    m = std::max(m, std::abs(s.at(s.right)));
  }
  return m;
}

NormReport BVFunction::norm_a() const {
  require(!has_jump(), errc::not_absolutely_continuous,
          "the A-norm is defined for continuous piecewise-affine functions only");
  NormReport r;
  r.variation = total_variation();
  r.sup_norm = sup_norm();
  r.a_norm = r.sup_norm + r.variation;
  return r;
}

double BVFunction::integral() const {
  double acc = 0.0;
  for (const Segment& s : segments_)
    acc += 0.5 * s.slope * (s.right * s.right - s.left * s.left) + s.intercept * (s.right - s.left);
  return acc;
}

double BVFunction::integral_sq() const {
  double acc = 0.0;
  for (const Segment& s : segments_) {
    // integral of (a x + b)^2 = a^2 x^3/3 + a b x^2 + b^2 x
    auto F = [&](double x) {
      return s.slope * s.slope * x * x * x / 3.0 + s.slope * s.intercept * x * x +
             s.intercept * s.intercept * x;
    };
    acc += F(s.right) - F(s.left);
  }
  return acc;
}

std::vector<double> BVFunction::breakpoints() const {
  std::vector<double> pts;
  pts.reserve(segments_.size() + 1);
  for (const Segment& s : segments_) pts.push_back(s.left);
  pts.push_back(1.0);
  return pts;
}

BVFunction BVFunction::operator+(const BVFunction& other) const {
  std::vector<double> pts;
  for (const Segment& s : segments_) pts.push_back(s.left);
  for (const Segment& s : other.segments_) pts.push_back(s.left);
  pts.push_back(1.0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto piece_at = [](const std::vector<Segment>& segs, double x) {
    auto it = std::upper_bound(segs.begin(), segs.end(), x,
                               [](double v, const Segment& s) { return v < s.right; });
    return *it;
  };
  std::vector<Segment> merged;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Segment a = piece_at(segments_, pts[i]);
    Segment b = piece_at(other.segments_, pts[i]);
    merged.push_back({pts[i], pts[i + 1], a.slope + b.slope, a.intercept + b.intercept});
  }
  return BVFunction(std::move(merged), value_at_1_ + other.value_at_1_);
}

double integrate_against(const BVFunction& f, SystemKind s, long k) {
  double acc = 0.0;
  for (const Segment& seg : f.segments()) {
    double pl = basis_primitive(s, k, seg.left);
    double pr = basis_primitive(s, k, seg.right);
    double ql = basis_primitive2(s, k, seg.left);
    double qr = basis_primitive2(s, k, seg.right);
    acc += seg.at(seg.right) * pr - seg.at(seg.left) * pl - seg.slope * (qr - ql);
  }
  return acc;
}

}  // namespace ortholab
