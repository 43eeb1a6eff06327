// Test-only oracles, independent of the library's integration paths:
// composite Gauss-Legendre and adaptive Simpson quadrature, digit-product
// Walsh evaluation, long-double primitives, and a long-double brute-force
// prefix maximum. Nothing here calls the closed-form engine being verified.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// 16-point Gauss-Legendre nodes and weights on [-1, 1].
inline const double kGLNodes[16] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
inline const double kGLWeights[16] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

inline double gl16(const std::function<double(double)>& f, double a, double b) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 16; ++i) acc += kGLWeights[i] * f(mid + half * kGLNodes[i]);
  return acc * half;
}

inline double gl_composite(const std::function<double(double)>& f, double a, double b,
                           int panels) {
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    double lo = a + (b - a) * p / panels;
    double hi = a + (b - a) * (p + 1) / panels;
    acc += gl16(f, lo, hi);
  }
  return acc;
}

// Composite GL aligned with the integrand's breakpoints; panels are split
// across the smooth pieces so jumps never sit inside a panel.
inline double gl_piecewise(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints, int total_panels) {
  double acc = 0.0;
  int pieces = static_cast<int>(breakpoints.size()) - 1;
  int per_piece = total_panels / (pieces > 0 ? pieces : 1);
  if (per_piece < 1) per_piece = 1;
  for (int i = 0; i + 1 < static_cast<int>(breakpoints.size()); ++i)
    if (breakpoints[i + 1] > breakpoints[i])
      acc += gl_composite(f, breakpoints[i], breakpoints[i + 1], per_piece);
  return acc;
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double err = (left + right - whole) / 15.0;
  if (depth <= 0 || std::abs(err) <= tol) return left + right + err;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int depth = 40) {
  if (b <= a) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Walsh function of Paley order m as a literal product of Rademacher signs
// read off the binary digits of x.
inline double walsh_digit_product(std::uint64_t m, double x) {
  double prod = 1.0;
  for (int j = 0; m >> j; ++j) {
    if ((m >> j) & 1ULL) {
      double r;
      if (x >= 1.0) {
        r = -1.0;  // left limit: every digit is 1
      } else {
        double scaled = std::ldexp(x, j + 1);  // x * 2^{j+1}
        r = (static_cast<long long>(std::floor(scaled)) % 2 == 0) ? 1.0 : -1.0;
      }
      prod *= r;
    }
  }
  return prod;
}

// Long-double primitive of the k-th element at x, recomputed from scratch:
// closed trigonometric forms, brute cell accumulation for Walsh, and the
// triangular bump for Haar.
inline long double primitive_ld(int system, long k, long double x) {
  const long double sqrt2 = std::sqrt(2.0L);
  const long double twopi = 2.0L * 3.14159265358979323846264338327950288L;
  if (system == 0) {  // trig
    if (k == 1) return x;
    long m = k / 2;
    long double w = twopi * m;
    return (k % 2 == 0) ? sqrt2 * std::sin(w * x) / w : sqrt2 * (1.0L - std::cos(w * x)) / w;
  }
  if (system == 1) {  // walsh: accumulate over the constancy cells
    std::uint64_t m = static_cast<std::uint64_t>(k - 1);
    if (m == 0) return x;
    int levels = 0;
    while (m >> levels) ++levels;
    long cells = 1L << levels;
    long double width = 1.0L / cells;
    long double acc = 0.0L;
    for (long c = 0; c < cells; ++c) {
      long double lo = c * width;
      if (lo >= x) break;
      long double hi = (c + 1) * width;
      long double sign = walsh_digit_product(m, static_cast<double>(lo));
      acc += sign * ((x < hi ? x : hi) - lo);
    }
    return acc;
  }
  // haar
  if (k == 1) return x;
  int j = 0;
  while ((k - 1) >> (j + 1)) ++j;
  long i = k - (1L << j);
  long double w = 1.0L / (1L << j);
  long double a = (i - 1) * w, b = i * w, c = a + 0.5L * w;
  long double height = std::sqrt(static_cast<long double>(1L << j));
  if (x <= a || x >= b) return 0.0L;
  return (x <= c) ? height * (x - a) : height * (b - x);
}

struct PrefixMaxLD {
  long double value = 0.0L;
  long argmax = 1;
};

// max over i/n of |sum_k c_k Phi_k(i/n)| computed entirely in long double.
inline PrefixMaxLD prefix_max_ld(int system, const std::vector<long double>& coeffs, long n) {
  PrefixMaxLD out;
  for (long i = 1; i < n; ++i) {
    long double x = static_cast<long double>(i) / n;
    long double acc = 0.0L;
    for (long k = 1; k <= static_cast<long>(coeffs.size()); ++k)
      if (coeffs[k - 1] != 0.0L) acc += coeffs[k - 1] * primitive_ld(system, k, x);
    if (std::abs(acc) > out.value) {
      out.value = std::abs(acc);
      out.argmax = i;
    }
  }
  return out;
}

}  // namespace oracle
