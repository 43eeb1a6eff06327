#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace ortholab {

enum class SystemKind { Trigonometric, WalshPaley, Haar };

const char* system_name(SystemKind s);
SystemKind system_from_name(const std::string& name);  // "trig"|"walsh"|"haar"

/// True for the systems whose elements are step functions on dyadic intervals.
bool is_step_system(SystemKind s);

// Basis enumeration, 1-based:
//   Trigonometric: k=1 -> 1, k=2m -> sqrt(2)cos(2 pi m x), k=2m+1 -> sqrt(2)sin(2 pi m x)
//   WalshPaley:    k   -> Walsh function of Paley order k-1 (Rademacher digit products)
//   Haar:          k=1 -> 1, k=2^j+i (1<=i<=2^j) -> L2-normalized Haar on [(i-1)/2^j, i/2^j)
//
// Step-system values are right-continuous on [0,1); the value at x=1 is the left limit.

/// phi_k(x).
double basis_eval(SystemKind s, long k, double x);

/// Phi_k(x) = integral of phi_k over [0,x]. Closed form; Phi_k(0) = 0.
double basis_primitive(SystemKind s, long k, double x);

/// Second primitive: integral of Phi_k over [0,x]. Closed form.
double basis_primitive2(SystemKind s, long k, double x);

/// Uniform decay statistic of the primitive. For the trigonometric system this
/// is the harmonic amplitude sqrt(2)/(2 pi m) shared by the k=2m and k=2m+1
/// elements; for the step systems it is the exact maximum of |Phi_k| over the
/// dyadic breakpoints (the primitive is piecewise linear, so that maximum is
/// attained there).
double basis_primitive_sup(SystemKind s, long k);

/// Exact sup over [0,1] of |Phi_k(x)|. Differs from basis_primitive_sup only
/// for the odd trigonometric indices, whose primitive rides on a nonnegative
/// hump twice the oscillation amplitude.
double basis_primitive_max(SystemKind s, long k);

/// Dyadic partition of [0,1] on which phi_k is constant (step systems only).
/// Starts with 0, ends with 1, strictly increasing.
std::vector<double> basis_breakpoints(SystemKind s, long k);

/// Exact inner product <phi_k, phi_l>: product-to-sum reduction with integer
/// frequencies for trig, merged-breakpoint integration for the step systems.
double basis_inner_product(SystemKind s, long k, long l);

namespace detail {
// Walsh function of Paley order m at x, m >= 0.
double walsh_eval(unsigned long long m, double x);
// Dyadic level on which phi_k is constant (0 for the constant element).
int basis_level(SystemKind s, long k);
}  // namespace detail

}  // namespace ortholab
