#include "glink/qnum.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace glink {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

RootContext make_context(int N, double tol) {
    if (N < 3)
        throw std::invalid_argument("make_context: N must be >= 3, got " + std::to_string(N));
    if (!(tol > 0.0))
        throw std::invalid_argument("make_context: tolerance must be positive");
    RootContext ctx;
    ctx.N = N;
    ctx.r = (N % 2 == 0) ? N / 2 : N;
    ctx.tol = tol;
    ctx.xi = std::polar(1.0, kTwoPi / N);
    // sigma = xi^{-r(r-1)/2} is always a fourth root of unity. Build it
    // exactly from the integer exponent: a polar evaluation would leave
    // sigma^2 * kappa infinitesimally off the log branch cut for real kappa.
    const long e = static_cast<long>(ctx.r) * (ctx.r - 1) / 2;
    const long m = ((-e) % N + N) % N;
    static constexpr Complex kFourthRoots[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    ctx.sigma = kFourthRoots[4 * m / N];
    return ctx;
}

Complex xi_pow(const RootContext& ctx, Complex x) {
    return std::exp(Complex(0.0, kTwoPi / ctx.N) * x);
}

Complex qnum(const RootContext& ctx, Complex x) {
    return xi_pow(ctx, x) - xi_pow(ctx, -x);
}

Complex qfact(const RootContext& ctx, int n) {
    if (n < 0)
        throw std::invalid_argument("qfact: n must be nonnegative");
    if (n >= ctx.r)
        throw std::invalid_argument("qfact: n = " + std::to_string(n) + " >= r = " +
                                    std::to_string(ctx.r) + " (q-factorial vanishes)");
    Complex acc = 1.0;
    for (int k = 1; k <= n; ++k) acc *= qnum(ctx, static_cast<double>(k));
    return acc;
}

Complex branch_log(Complex x, int m) {
    if (x == Complex(0.0, 0.0))
        throw std::invalid_argument("branch_log: argument must be nonzero");
    return std::log(x) + Complex(0.0, kTwoPi * m);
}

bool approx_equal(Complex a, Complex b, double tol) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

}  // namespace glink
