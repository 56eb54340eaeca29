#pragma once

#include <random>

#include "glink/group.hpp"

namespace glink::testing {

inline Complex random_complex(std::mt19937_64& rng, double box = 1.0) {
    std::uniform_real_distribution<double> d(-box, box);
    const double re = d(rng);
    const double im = d(rng);
    return {re, im};
}

/// Random kappa with a guard band around {0, +-1} and moderate modulus,
/// so downstream q-number denominators stay well conditioned.
inline Complex random_admissible_kappa(std::mt19937_64& rng) {
    for (;;) {
        const Complex k = random_complex(rng, 1.6);
        const double a = std::abs(k);
        if (a < 0.5 || a > 1.7) continue;
        if (std::abs(k - 1.0) < 0.2 || std::abs(k + 1.0) < 0.2) continue;
        return k;
    }
}

inline GStarColor random_admissible_color(std::mt19937_64& rng) {
    return GStarColor(random_admissible_kappa(rng), random_complex(rng));
}

inline double matrix_max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace glink::testing
