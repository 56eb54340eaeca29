#include "glink/group.hpp"

namespace glink {

Eigen::Matrix2cd borel_of_color(const GStarColor& y) {
    Eigen::Matrix2cd m;
    m << y.kappa, -y.epsilon, Complex(0.0), 1.0 / y.kappa;
    return m;
}

ColorPair rmap(const GStarColor& x, const GStarColor& y) {
    const Complex k1 = x.kappa, e1 = x.epsilon;
    const Complex k2 = y.kappa, e2 = y.epsilon;
    GStarColor left(k1, e1 / k2);
    GStarColor right(k2, (e2 + e1 * (k2 - 1.0 / k2)) / k1);
    return {left, right};
}

ColorPair rmap_inv(const GStarColor& xp, const GStarColor& yp) {
    const Complex k1 = xp.kappa, e1 = xp.epsilon;
    const Complex k2 = yp.kappa, e2 = yp.epsilon;
    GStarColor x(k1, e1 * k2);
    GStarColor y(k2, e2 * k1 - e1 * k2 * (k2 - 1.0 / k2));
    return {x, y};
}

GStarColor smap(const GStarColor& y) { return GStarColor(y.kappa, y.epsilon / y.kappa); }

GStarColor smap_inv(const GStarColor& y) { return GStarColor(y.kappa, y.epsilon * y.kappa); }

bool is_admissible(const GStarColor& y, double tol) {
    const Complex k = y.kappa;
    return std::abs(k) > tol && std::abs(k - 1.0) > tol && std::abs(k + 1.0) > tol;
}

bool color_approx_equal(const GStarColor& a, const GStarColor& b, double tol) {
    return approx_equal(a.kappa, b.kappa, tol) && approx_equal(a.epsilon, b.epsilon, tol);
}

}  // namespace glink
