#pragma once

#include <complex>
#include <stdexcept>

namespace glink {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

/// Arithmetic environment at a fixed root of unity xi = e^{2*pi*i/N}.
///
/// r is the smallest positive integer with [r]_xi = 0 (N/2 for even N,
/// N for odd N), and sigma = xi^{-r(r-1)/2} is the fourth root of unity
/// that shows up throughout the module formulas.
struct RootContext {
    int N = 0;
    int r = 0;
    Complex xi;
    Complex sigma;
    double tol = kDefaultTol;
};

/// Builds the context for xi = e^{2*pi*i/N}. Requires N >= 3 (otherwise
/// r < 2 and the r-dimensional modules degenerate).
RootContext make_context(int N, double tol = kDefaultTol);

/// xi^x = e^{2*pi*i*x/N} for arbitrary complex x.
Complex xi_pow(const RootContext& ctx, Complex x);

/// q-number [x] = xi^x - xi^{-x}.
Complex qnum(const RootContext& ctx, Complex x);

/// q-factorial [n]! = [n][n-1]...[1], with [0]! = 1. Requires 0 <= n < r
/// (for n >= r the value vanishes and later divisions blow up).
Complex qfact(const RootContext& ctx, int n);

/// log(x) + 2*pi*i*m on the principal branch (cut on the negative real
/// axis, Im in (-pi, pi]). Requires x != 0.
Complex branch_log(Complex x, int m);

/// |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(Complex a, Complex b, double tol);

}  // namespace glink
