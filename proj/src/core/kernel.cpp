#include "kernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace ortholab {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Rotation recurrences are reseeded from libm this often to keep drift at the
// last-few-ulps level over long batches.
constexpr long kReseedStride = 256;

}  // namespace

Kernel::Kernel(SystemKind s, std::vector<double> coeffs)
    : system_(s), coeffs_(std::move(coeffs)) {
  require(!coeffs_.empty(), errc::invalid_argument, "kernel needs at least one coefficient");
  for (double c : coeffs_)
    require(std::isfinite(c), errc::invalid_argument, "kernel coefficients must be finite");
  if (is_step_system(system_))
    build_step_grid();
  else
    build_trig_tables();
}

Kernel Kernel::single_basis(SystemKind s, long k) {
  require(k >= 1, errc::bad_index, "basis index must be >= 1");
  std::vector<double> c(static_cast<std::size_t>(k), 0.0);
  c[k - 1] = 1.0;
  return Kernel(s, std::move(c));
}

Kernel Kernel::weighted_sum(SystemKind s, std::vector<double> coeffs) {
  return Kernel(s, std::move(coeffs));
}

void Kernel::build_step_grid() {
  level_ = 0;
  for (long k = 1; k <= size(); ++k)
    if (coeffs_[k - 1] != 0.0) level_ = std::max(level_, detail::basis_level(system_, k));
  ncells_ = 1L << level_;
  width_ = std::ldexp(1.0, -level_);
  qcell_.assign(ncells_, 0.0);

  if (system_ == SystemKind::WalshPaley) {
    for (long idx = 0; idx < ncells_; ++idx) {
      // Digit mask of the cell start: bit t-1 of the mask is digit x_t, which
      // is bit level-t of idx.
      unsigned long long mask = 0;
      for (int t = 0; t < level_; ++t)
        if (idx & (1L << (level_ - 1 - t))) mask |= 1ULL << t;
      double acc = 0.0;
      for (long k = 1; k <= size(); ++k) {
        double c = coeffs_[k - 1];
        if (c == 0.0) continue;
        unsigned long long m = static_cast<unsigned long long>(k - 1);
        acc += (std::popcount(m & mask) & 1) ? -c : c;
      }
      qcell_[idx] = acc;
    }
  } else {  // Haar
    for (long k = 1; k <= size(); ++k) {
      double c = coeffs_[k - 1];
      if (c == 0.0) continue;
      if (k == 1) {
        for (long idx = 0; idx < ncells_; ++idx) qcell_[idx] += c;
        continue;
      }
      int j = std::bit_width(static_cast<unsigned long long>(k - 1)) - 1;
      long i = k - (1L << j);
      double height = std::sqrt(std::ldexp(1.0, j));
      // The support [(i-1)/2^j, i/2^j) spans cells at level j+1, positive on
      // the first half, negative on the second.
      long cells_per_half = 1L << (level_ - j - 1);
      long first = (2 * (i - 1)) * cells_per_half;
      for (long idx = first; idx < first + cells_per_half; ++idx) qcell_[idx] += c * height;
      for (long idx = first + cells_per_half; idx < first + 2 * cells_per_half; ++idx)
        qcell_[idx] -= c * height;
    }
  }

  p1_.assign(ncells_ + 1, 0.0);
  p2_.assign(ncells_ + 1, 0.0);
  for (long idx = 0; idx < ncells_; ++idx) {
    p1_[idx + 1] = p1_[idx] + qcell_[idx] * width_;
    p2_[idx + 1] = p2_[idx] + p1_[idx] * width_ + 0.5 * qcell_[idx] * width_ * width_;
  }
}

void Kernel::build_trig_tables() {
  long mmax = size() / 2;
  u_.assign(mmax + 1, 0.0);
  v_.assign(mmax + 1, 0.0);
  c1_ = coeffs_[0];
  for (long k = 2; k <= size(); ++k) {
    long m = k / 2;
    if (k % 2 == 0)
      u_[m] = coeffs_[k - 1];
    else
      v_[m] = coeffs_[k - 1];
  }
  s1_ = s2_ = 0.0;
  for (long m = 1; m <= mmax; ++m) {
    double w = kTwoPi * m;
    s1_ += kSqrt2 * v_[m] / w;
    s2_ += kSqrt2 * u_[m] / (w * w);
  }
}

double Kernel::value(double x) const {
  require(x >= 0.0 && x <= 1.0, errc::domain, "kernel argument outside [0,1]");
  if (is_step_system(system_)) {
    long idx = (x >= 1.0) ? ncells_ - 1 : static_cast<long>(std::floor(x * ncells_));
    return qcell_[idx];
  }
  double acc = c1_;
  for (long m = 1; m < static_cast<long>(u_.size()); ++m) {
    if (u_[m] == 0.0 && v_[m] == 0.0) continue;
    double w = kTwoPi * m;
    acc += kSqrt2 * (u_[m] * std::cos(w * x) + v_[m] * std::sin(w * x));
  }
  return acc;
}

double Kernel::prefix(double x) const {
  require(x >= 0.0 && x <= 1.0, errc::domain, "kernel argument outside [0,1]");
  if (is_step_system(system_)) {
    if (x >= 1.0) return p1_[ncells_];
    long idx = static_cast<long>(std::floor(x * ncells_));
    return p1_[idx] + qcell_[idx] * (x - idx * width_);
  }
  double acc = c1_ * x + s1_;
  for (long m = 1; m < static_cast<long>(u_.size()); ++m) {
    if (u_[m] == 0.0 && v_[m] == 0.0) continue;
    double w = kTwoPi * m;
    acc += kSqrt2 * (u_[m] * std::sin(w * x) - v_[m] * std::cos(w * x)) / w;
  }
  return acc;
}

double Kernel::prefix2(double x) const {
  require(x >= 0.0 && x <= 1.0, errc::domain, "kernel argument outside [0,1]");
  if (is_step_system(system_)) {
    if (x >= 1.0) return p2_[ncells_];
    long idx = static_cast<long>(std::floor(x * ncells_));
    double u = x - idx * width_;
    return p2_[idx] + p1_[idx] * u + 0.5 * qcell_[idx] * u * u;
  }
  double acc = 0.5 * c1_ * x * x + s1_ * x + s2_;
  for (long m = 1; m < static_cast<long>(u_.size()); ++m) {
    if (u_[m] == 0.0 && v_[m] == 0.0) continue;
    double w = kTwoPi * m;
    acc -= kSqrt2 * (u_[m] * std::cos(w * x) + v_[m] * std::sin(w * x)) / (w * w);
  }
  return acc;
}

double Kernel::l2_norm_sq() const {
  double acc = 0.0;
  for (double c : coeffs_) acc += c * c;
  return acc;
}

double Kernel::integrate_affine(double lo, double hi, double slope, double intercept) const {
  if (hi <= lo) return 0.0;
  double pl = prefix(lo), ph = prefix(hi);
  double ql = prefix2(lo), qh = prefix2(hi);
  return (slope * hi + intercept) * ph - (slope * lo + intercept) * pl - slope * (qh - ql);
}

void Kernel::trig_batch(double lo, double hi, long panels, std::vector<double>* val,
                        std::vector<double>* pf, std::vector<double>* pf2) const {
  long npts = panels + 1;
  double h = (hi - lo) / panels;
  auto x_at = [&](long t) { return (lo == 0.0 && hi == 1.0) ? static_cast<double>(t) / panels
                                                            : lo + t * h; };
  if (val) val->assign(npts, 0.0);
  if (pf) pf->assign(npts, 0.0);
  if (pf2) pf2->assign(npts, 0.0);
  for (long m = 1; m < static_cast<long>(u_.size()); ++m) {
    double um = u_[m], vm = v_[m];
    if (um == 0.0 && vm == 0.0) continue;
    double w = kTwoPi * m;
    double cd = std::cos(w * h), sd = std::sin(w * h);
    double c = 0.0, s = 0.0;
    for (long t = 0; t < npts; ++t) {
      if (t % kReseedStride == 0) {
        double ang = w * x_at(t);
        c = std::cos(ang);
        s = std::sin(ang);
      }
      double osc = um * c + vm * s;
      if (val) (*val)[t] += kSqrt2 * osc;
      if (pf) (*pf)[t] += kSqrt2 * (um * s - vm * c) / w;
      if (pf2) (*pf2)[t] -= kSqrt2 * osc / (w * w);
      double cn = c * cd - s * sd;
      s = s * cd + c * sd;
      c = cn;
    }
  }
  for (long t = 0; t < npts; ++t) {
    double x = x_at(t);
    if (val) (*val)[t] += c1_;
    if (pf) (*pf)[t] += c1_ * x + s1_;
    if (pf2) (*pf2)[t] += 0.5 * c1_ * x * x + s1_ * x + s2_;
  }
}

double Kernel::abs_integral(double lo, double hi) const {
  require(lo >= 0.0 && hi <= 1.0 && lo <= hi, errc::domain, "bad integration range");
  if (hi <= lo) return 0.0;
  if (is_step_system(system_)) {
    long i0 = static_cast<long>(std::floor(lo * ncells_));
    long i1 = std::min<long>(ncells_ - 1, static_cast<long>(std::floor(hi * ncells_)));
    double acc = 0.0;
    for (long idx = i0; idx <= i1; ++idx) {
      double a = std::max(lo, idx * width_);
      double b = std::min(hi, (idx + 1) * width_);
      if (b > a) acc += std::abs(qcell_[idx]) * (b - a);
    }
    return acc;
  }
  constexpr long panels = 64;
  std::vector<double> vals;
  trig_batch(lo, hi, panels, &vals, nullptr, nullptr);
  double h = (hi - lo) / panels;
  double acc = std::abs(vals[0]) + std::abs(vals[panels]);
  for (long t = 1; t < panels; t += 2) acc += 4.0 * std::abs(vals[t]);
  for (long t = 2; t < panels; t += 2) acc += 2.0 * std::abs(vals[t]);
  return acc * h / 3.0;
}

double Kernel::max_abs_prefix() const {
  if (is_step_system(system_)) {
    double m = 0.0;
    for (double p : p1_) m = std::max(m, std::abs(p));
    return m;
  }
  long panels = 8 * std::max<long>(1, size());
  std::vector<double> pf;
  trig_batch(0.0, 1.0, panels, nullptr, &pf, nullptr);
  double m = 0.0;
  for (double p : pf) m = std::max(m, std::abs(p));
  return m;
}

std::vector<double> Kernel::prefix_on_grid(long n) const {
  require(n >= 1, errc::invalid_argument, "grid size must be positive");
  std::vector<double> out;
  if (is_step_system(system_)) {
    out.resize(n + 1);
    for (long i = 0; i <= n; ++i) out[i] = prefix(static_cast<double>(i) / n);
  } else {
    trig_batch(0.0, 1.0, n, nullptr, &out, nullptr);
  }
  return out;
}

void Kernel::grids_on(long n, std::vector<double>& p1, std::vector<double>& p2) const {
  require(n >= 1, errc::invalid_argument, "grid size must be positive");
  if (is_step_system(system_)) {
    p1.resize(n + 1);
    p2.resize(n + 1);
    for (long i = 0; i <= n; ++i) {
      double x = static_cast<double>(i) / n;
      p1[i] = prefix(x);
      p2[i] = prefix2(x);
    }
  } else {
    trig_batch(0.0, 1.0, n, nullptr, &p1, &p2);
  }
}

double integrate_bv(const BVFunction& f, const Kernel& h) {
  double acc = 0.0;
  for (const Segment& seg : f.segments())
    acc += h.integrate_affine(seg.left, seg.right, seg.slope, seg.intercept);
  return acc;
}

}  // namespace ortholab
