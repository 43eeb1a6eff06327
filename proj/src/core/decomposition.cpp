#include "decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace ortholab {

double Decomposition::residual() const { return std::abs(lhs - sum()); }

Decomposition decompose(const BVFunction& f, const Kernel& h, long n) {
  std::vector<double> p1, p2;
  h.grids_on(n, p1, p2);
  return decompose(f, h, n, p1, p2);
}

Decomposition decompose(const BVFunction& f, const Kernel& h, long n,
                        std::span<const double> p1, std::span<const double> p2) {
  require(n >= 1, errc::invalid_argument, "grid count must be positive");
  require(static_cast<long>(p1.size()) == n + 1 && static_cast<long>(p2.size()) == n + 1,
          errc::invalid_argument, "prefix grids must have n+1 entries");

  std::vector<double> fv(n + 1);  // f(i/n), i = 1..n
  for (long i = 1; i <= n; ++i) fv[i] = f(static_cast<double>(i) / n);

  Decomposition out;
  out.n = n;
  for (long i = 1; i <= n - 1; ++i) out.a1 += (fv[i] - fv[i + 1]) * p1[i];
  out.a3 = fv[n] * p1[n];

  const auto& segs = f.segments();
  std::size_t si = 0;
  for (long i = 1; i <= n; ++i) {
    double lo = static_cast<double>(i - 1) / n;
    double hi = static_cast<double>(i) / n;
    while (si + 1 < segs.size() && segs[si].right <= lo) ++si;

    // integral of f*h over the cell, exact via parts on each affine piece
    double cell = 0.0;
    double cur = lo, cur_p1 = p1[i - 1], cur_p2 = p2[i - 1];
    while (si + 1 < segs.size() && segs[si].right < hi) {
      double b = segs[si].right;
      double b_p1 = h.prefix(b), b_p2 = h.prefix2(b);
      cell += segs[si].at(b) * b_p1 - segs[si].at(cur) * cur_p1 - segs[si].slope * (b_p2 - cur_p2);
      cur = b;
      cur_p1 = b_p1;
      cur_p2 = b_p2;
      ++si;
    }
    cell += segs[si].at(hi) * p1[i] - segs[si].at(cur) * cur_p1 - segs[si].slope * (p2[i] - cur_p2);

    out.a2 += cell - fv[i] * (p1[i] - p1[i - 1]);
  }

  out.lhs = integrate_bv(f, h);
  return out;
}

BVFunction sharpness_ramp(long n, long i_n) {
  require(n >= 2, errc::invalid_argument, "ramp needs n >= 2");
  require(i_n >= 1 && i_n <= n - 1, errc::invalid_argument,
          "ramp index must satisfy 1 <= i_n <= n-1");
  double x0 = static_cast<double>(i_n) / n;
  double x1 = static_cast<double>(i_n + 1) / n;

  double slope, intercept;
  if (std::has_single_bit(static_cast<unsigned long>(n))) {
    // dyadic n: n*x - i_n is exact at every grid point
    slope = static_cast<double>(n);
    intercept = static_cast<double>(-i_n);
  } else {
    // x1 - x0 is exact (Sterbenz); anchor the intercept so the ramp value at
    // x0 cancels to exactly zero under the slope*x + intercept evaluation
    slope = 1.0 / (x1 - x0);
    intercept = -(slope * x0);
  }

  std::vector<Segment> segs;
  if (i_n >= 1) segs.push_back({0.0, x0, 0.0, 0.0});
  Segment ramp{x0, x1, slope, intercept};
  double top = ramp.at(x1);  // exactly 1 for dyadic n, 1 +- a few ulps otherwise
  segs.push_back(ramp);
  if (x1 < 1.0) segs.push_back({x1, 1.0, 0.0, top});
  return BVFunction(std::move(segs), top);
}

SharpnessProbe sharpness_probe(const WeightPlan& plan, SystemKind s, long n) {
  require(n >= 2, errc::degenerate, "sharpness probe needs n >= 2");
  Kernel q = weighted_kernel(plan, s, n);
  std::vector<double> p1, p2;
  q.grids_on(n, p1, p2);

  PrefixMax bm;
  bm.value = std::abs(p1[1]);
  bm.argmax = 1;
  for (long i = 2; i < n; ++i) {
    double v = std::abs(p1[i]);
    if (v > bm.value) {
      bm.value = v;
      bm.argmax = i;
    }
  }

  BVFunction fn = sharpness_ramp(n, bm.argmax);
  double u = functional_value(fn, plan, s, n);
  Decomposition dec = decompose(fn, q, n, p1, p2);

  SharpnessProbe probe;
  probe.parts = dec;
  probe.report.n = n;
  probe.report.u_n = u;
  probe.report.b_n = bm.value;
  probe.report.argmax_i = bm.argmax;
  probe.report.a1 = dec.a1;
  probe.report.a2 = dec.a2;
  probe.report.a3 = dec.a3;
  probe.report.residual = std::abs(u - dec.sum());
  probe.report.slack = bm.value - std::abs(u);
  return probe;
}

}  // namespace ortholab
