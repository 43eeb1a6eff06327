#include "ons.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace ortholab {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_index(long k) {
  require(k >= 1, errc::bad_index, "basis index must be >= 1, got " + std::to_string(k));
}

void check_domain(double x) {
  require(x >= 0.0 && x <= 1.0, errc::domain,
          "evaluation point must lie in [0,1], got " + std::to_string(x));
}

// Binary digits x_1..x_J of x packed as bit t-1 <- x_t. At x=1 every digit is
// taken as 1 (left limit).
unsigned long long dyadic_digits(double x, int levels) {
  if (levels <= 0) return 0;
  if (x >= 1.0) return (levels >= 64) ? ~0ULL : ((1ULL << levels) - 1);
  unsigned long long mask = 0;
  double v = x;
  for (int t = 0; t < levels; ++t) {
    v *= 2.0;
    if (v >= 1.0) {
      mask |= 1ULL << t;
      v -= 1.0;
    }
  }
  return mask;
}

struct HaarShape {
  int j;        // dyadic level
  long i;       // position within level, 1-based
  double a, c, b;  // support [a,b), midpoint c
  double height;   // 2^{j/2}
};

HaarShape haar_shape(long k) {
  // k = 2^j + i with 1 <= i <= 2^j
  unsigned long long m = static_cast<unsigned long long>(k - 1);
  int j = std::bit_width(m) - 1;
  long i = k - (1L << j);
  HaarShape h;
  h.j = j;
  h.i = i;
  double w = std::ldexp(1.0, -j);
  h.a = (i - 1) * w;
  h.b = i * w;
  h.c = h.a + 0.5 * w;
  h.height = std::sqrt(std::ldexp(1.0, j));
  return h;
}

int trig_frequency(long k) { return static_cast<int>(k / 2); }

}  // namespace

const char* system_name(SystemKind s) {
  switch (s) {
    case SystemKind::Trigonometric: return "trig";
    case SystemKind::WalshPaley: return "walsh";
    case SystemKind::Haar: return "haar";
  }
  return "?";
}

SystemKind system_from_name(const std::string& name) {
  if (name == "trig" || name == "trigonometric") return SystemKind::Trigonometric;
  if (name == "walsh" || name == "walsh-paley") return SystemKind::WalshPaley;
  if (name == "haar") return SystemKind::Haar;
  fail(errc::invalid_argument, "unknown system name: " + name);
}

bool is_step_system(SystemKind s) { return s != SystemKind::Trigonometric; }

namespace detail {

double walsh_eval(unsigned long long m, double x) {
  if (m == 0) return 1.0;
  int levels = std::bit_width(m);
  unsigned long long digits = dyadic_digits(x, levels);
  return (std::popcount(m & digits) & 1) ? -1.0 : 1.0;
}

int basis_level(SystemKind s, long k) {
  switch (s) {
    case SystemKind::Trigonometric:
      fail(errc::unsupported, "trigonometric elements are not step functions");
    case SystemKind::WalshPaley:
      return std::bit_width(static_cast<unsigned long long>(k - 1));
    case SystemKind::Haar:
      if (k == 1) return 0;
      return std::bit_width(static_cast<unsigned long long>(k - 1));  // j + 1
  }
  return 0;
}

}  // namespace detail

double basis_eval(SystemKind s, long k, double x) {
  check_index(k);
  check_domain(x);
  switch (s) {
    case SystemKind::Trigonometric: {
      if (k == 1) return 1.0;
      double w = kTwoPi * trig_frequency(k);
      return (k % 2 == 0) ? kSqrt2 * std::cos(w * x) : kSqrt2 * std::sin(w * x);
    }
    case SystemKind::WalshPaley:
      return detail::walsh_eval(static_cast<unsigned long long>(k - 1), x);
    case SystemKind::Haar: {
      if (k == 1) return 1.0;
      HaarShape h = haar_shape(k);
      if (x >= 1.0) return (h.b >= 1.0) ? -h.height : 0.0;
      if (x < h.a || x >= h.b) return 0.0;
      return (x < h.c) ? h.height : -h.height;
    }
  }
  fail(errc::internal, "unreachable");
}

double basis_primitive(SystemKind s, long k, double x) {
  check_index(k);
  check_domain(x);
  switch (s) {
    case SystemKind::Trigonometric: {
      if (k == 1) return x;
      double w = kTwoPi * trig_frequency(k);
      return (k % 2 == 0) ? kSqrt2 * std::sin(w * x) / w
                          : kSqrt2 * (1.0 - std::cos(w * x)) / w;
    }
    case SystemKind::WalshPaley: {
      unsigned long long m = static_cast<unsigned long long>(k - 1);
      if (m == 0) return x;
      if (x >= 1.0) return 0.0;  // every nonconstant Walsh function has mean zero
      // w_m = r_j * w_rest with w_rest constant on cells of width 2^-j; the
      // integral of r_j over any complete cell vanishes, so only the current
      // cell contributes a triangular bump.
      int j = std::bit_width(m) - 1;
      unsigned long long rest = m ^ (1ULL << j);
      double w = std::ldexp(1.0, -j);
      double p = std::floor(x / w) * w;
      double sign = detail::walsh_eval(rest, p);
      double u = x - p;
      double tri = (u <= 0.5 * w) ? u : (w - u);
      return sign * tri;
    }
    case SystemKind::Haar: {
      if (k == 1) return x;
      HaarShape h = haar_shape(k);
      if (x <= h.a) return 0.0;
      if (x >= h.b) return 0.0;
      return (x <= h.c) ? h.height * (x - h.a) : h.height * (h.b - x);
    }
  }
  fail(errc::internal, "unreachable");
}

double basis_primitive2(SystemKind s, long k, double x) {
  check_index(k);
  check_domain(x);
  switch (s) {
    case SystemKind::Trigonometric: {
      if (k == 1) return 0.5 * x * x;
      double w = kTwoPi * trig_frequency(k);
      if (k % 2 == 0) return kSqrt2 * (1.0 - std::cos(w * x)) / (w * w);
      return kSqrt2 * (x - std::sin(w * x) / w) / w;
    }
    case SystemKind::WalshPaley: {
      unsigned long long m = static_cast<unsigned long long>(k - 1);
      if (m == 0) return 0.5 * x * x;
      int j = std::bit_width(m) - 1;
      unsigned long long rest = m ^ (1ULL << j);
      double w = std::ldexp(1.0, -j);
      double p = std::floor(std::min(x, 1.0 - 0.5 * w) / w) * w;
      if (x >= 1.0) p = 1.0 - w;
      // Completed bumps contribute area w^2/4 each, signed by w_rest on their
      // cell; their signed count is Phi_rest(p) / w.
      double completed = 0.25 * w * basis_primitive(s, static_cast<long>(rest) + 1, p);
      double sign = detail::walsh_eval(rest, p);
      double u = x - p;
      double h = 0.5 * w;
      double tri2 = (u <= h) ? 0.5 * u * u : 0.5 * h * h + w * (u - h) - 0.5 * (u * u - h * h);
      return completed + sign * tri2;
    }
    case SystemKind::Haar: {
      if (k == 1) return 0.5 * x * x;
      HaarShape h = haar_shape(k);
      double half = 0.5 * (h.b - h.a);
      double full_area = h.height * half * half;  // integral of the bump
      if (x <= h.a) return 0.0;
      if (x >= h.b) return full_area;
      if (x <= h.c) {
        double u = x - h.a;
        return 0.5 * h.height * u * u;
      }
      double u = x - h.c;
      return 0.5 * h.height * half * half + h.height * (half * u - 0.5 * u * u);
    }
  }
  fail(errc::internal, "unreachable");
}

double basis_primitive_sup(SystemKind s, long k) {
  check_index(k);
  switch (s) {
    case SystemKind::Trigonometric: {
      if (k == 1) return 1.0;
      return kSqrt2 / (kTwoPi * trig_frequency(k));
    }
    case SystemKind::WalshPaley: {
      if (k == 1) return 1.0;
      int j = std::bit_width(static_cast<unsigned long long>(k - 1)) - 1;
      return std::ldexp(1.0, -j - 1);
    }
    case SystemKind::Haar: {
      if (k == 1) return 1.0;
      HaarShape h = haar_shape(k);
      return h.height * 0.5 * (h.b - h.a);  // 2^{-j/2-1}
    }
  }
  fail(errc::internal, "unreachable");
}

double basis_primitive_max(SystemKind s, long k) {
  check_index(k);
  if (s == SystemKind::Trigonometric && k >= 3 && k % 2 == 1) {
    // Phi = sqrt(2)(1-cos)/w is nonnegative with peak twice the amplitude.
    return 2.0 * kSqrt2 / (kTwoPi * trig_frequency(k));
  }
  return basis_primitive_sup(s, k);
}

std::vector<double> basis_breakpoints(SystemKind s, long k) {
  check_index(k);
  switch (s) {
    case SystemKind::Trigonometric:
      fail(errc::unsupported, "trigonometric elements are not step functions");
    case SystemKind::WalshPaley: {
      int levels = detail::basis_level(s, k);
      long cells = 1L << levels;
      std::vector<double> pts(cells + 1);
      for (long i = 0; i <= cells; ++i) pts[i] = static_cast<double>(i) / cells;
      return pts;
    }
    case SystemKind::Haar: {
      if (k == 1) return {0.0, 1.0};
      HaarShape h = haar_shape(k);
      std::vector<double> pts;
      pts.push_back(0.0);
      for (double p : {h.a, h.c, h.b})
        if (p > pts.back()) pts.push_back(p);
      if (pts.back() < 1.0) pts.push_back(1.0);
      return pts;
    }
  }
  fail(errc::internal, "unreachable");
}

namespace {

// integral over [0,1] of cos(2 pi j x) and sin(2 pi j x) for integer j
double mean_cos(long j) { return j == 0 ? 1.0 : 0.0; }

double trig_inner(long k, long l) {
  // type 0 = constant, 1 = cosine, 2 = sine
  auto classify = [](long k) {
    if (k == 1) return std::pair<int, long>{0, 0};
    return (k % 2 == 0) ? std::pair<int, long>{1, k / 2} : std::pair<int, long>{2, k / 2};
  };
  auto [ta, ma] = classify(k);
  auto [tb, mb] = classify(l);
  if (ta > tb) {
    std::swap(ta, tb);
    std::swap(ma, mb);
  }
  if (ta == 0 && tb == 0) return 1.0;
  if (ta == 0) return 0.0;  // cosine and sine elements have mean zero
  if (ta == 1 && tb == 1) return mean_cos(ma - mb) + mean_cos(ma + mb);
  if (ta == 2 && tb == 2) return mean_cos(ma - mb) - mean_cos(ma + mb);
  return 0.0;  // cos x sin: both product frequencies integrate to zero
}

double step_inner(SystemKind s, long k, long l) {
  std::vector<double> pa = basis_breakpoints(s, k);
  std::vector<double> pb = basis_breakpoints(s, l);
  std::vector<double> pts;
  pts.reserve(pa.size() + pb.size());
  std::merge(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(pts));
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double mid = 0.5 * (pts[i] + pts[i + 1]);
    acc += basis_eval(s, k, mid) * basis_eval(s, l, mid) * (pts[i + 1] - pts[i]);
  }
  return acc;
}

}  // namespace

double basis_inner_product(SystemKind s, long k, long l) {
  check_index(k);
  check_index(l);
  if (s == SystemKind::Trigonometric) return trig_inner(k, l);
  return step_inner(s, k, l);
}

}  // namespace ortholab
