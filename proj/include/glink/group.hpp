#pragma once

#include <utility>

#include <Eigen/Dense>

#include "glink/qnum.hpp"

namespace glink {

/// A point (kappa, epsilon) of the factorized Borel group G*, attached to
/// a braid strand. kappa must stay away from 0; membership in the
/// admissible set Y* additionally excludes kappa near +-1.
struct GStarColor {
    Complex kappa;
    Complex epsilon;

    GStarColor() : kappa(1.0, 0.0), epsilon(0.0, 0.0) {}
    GStarColor(Complex k, Complex e, double tol = kDefaultTol) : kappa(k), epsilon(e) {
        if (std::abs(k) <= tol)
            throw std::invalid_argument("GStarColor: kappa must be nonzero");
    }
};

using ColorPair = std::pair<GStarColor, GStarColor>;

/// The upper-triangular SL2 matrix psi(y) = [[kappa, -epsilon], [0, 1/kappa]].
/// Its trace kappa + 1/kappa is the conjugacy invariant of the color.
Eigen::Matrix2cd borel_of_color(const GStarColor& y);

/// The set-theoretic Yang-Baxter map R(x, y) = (x_L, x_R):
///   x_L = (k1, e1/k2),  x_R = (k2, (e2 + e1*(k2 - 1/k2))/k1).
/// kappa components are preserved positionally; epsilons transform linearly.
ColorPair rmap(const GStarColor& x, const GStarColor& y);

/// Inverse of rmap, in closed form.
ColorPair rmap_inv(const GStarColor& xp, const GStarColor& yp);

/// Stabilization map s(kappa, epsilon) = (kappa, epsilon/kappa); satisfies
/// rmap(y, smap(y)) = (smap(y), y).
GStarColor smap(const GStarColor& y);
GStarColor smap_inv(const GStarColor& y);

/// Membership in Y*: kappa at distance > tol from each of {0, 1, -1}.
bool is_admissible(const GStarColor& y, double tol = kDefaultTol);

bool color_approx_equal(const GStarColor& a, const GStarColor& b, double tol);

}  // namespace glink
