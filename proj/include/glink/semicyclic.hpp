#pragma once

#include <Eigen/Dense>

#include "glink/group.hpp"

namespace glink {

/// Parameters (alpha, t, branch) of an r-dimensional twisted module V_alpha^t.
/// alpha must stay away from the integers and [r*alpha] away from zero
/// (equivalently the degree kappa away from +-1).
struct SemicyclicParams {
    Complex alpha;
    Complex t;
    int branch = 0;
    RootContext ctx;
};

/// Throws unless the parameters land in the admissible range.
void validate_params(const SemicyclicParams& p);

/// Inverts the degree map on a color: alpha = N*log_m(sigma^2*kappa)/(2*pi*i*r)
/// on the branch-m logarithm, t = -epsilon/(sigma*(kappa - 1/kappa)).
SemicyclicParams params_from_color(const RootContext& ctx, const GStarColor& y, int branch);

/// The G* degree of the module: (sigma^2 * xi^{r*alpha}, -sigma^{-1} * t * [r*alpha]).
GStarColor degree(const SemicyclicParams& p);

/// kappa component of the degree.
Complex degree_kappa(const SemicyclicParams& p);

/// Generator actions on V_alpha^t in the highest-weight basis v_0..v_{r-1}:
///   H v_i = (alpha + r - 1 - 2i) v_i,   K = xi^H (diagonal),
///   F v_i = v_{i+1}                      (subdiagonal of ones),
///   E v_i = ([i][alpha+r-i]/[1]^2) v_{i-1}  plus the twist correction
///   -t * ([1]^{2(r-1)}/[r-1]!) * [alpha] on the corner v_0 -> v_{r-1}.
/// The corner term is the whole effect of conjugating E by exp(t*f): the
/// commutator [E, f] commutes with f, so the conjugation series truncates.
struct RepMatrices {
    Eigen::MatrixXcd E_t;
    Eigen::MatrixXcd F;
    Eigen::MatrixXcd K;
    Eigen::VectorXcd Hdiag;
};

RepMatrices rep_matrices(const SemicyclicParams& p);

/// A color-dependent braiding operator on the tensor square, together with
/// the parameter bookkeeping. The matrix acts on the lexicographic basis
/// v_i (x) w_j of V1 (x) V2 (first factor most significant).
///
/// Domain slots carry (source1, source2). Codomain slots carry
/// (target1, target2): for flipped = true that is (p2', p1') -- the strand
/// exchange is included -- and for flipped = false it is (p1', p2').
/// The primed parameters keep each strand's alpha and branch and transport
///   t1' = t1/k2,   t2' = (1 - 1/k1^2)*t1 + t2/k1,
/// so that the target degrees are R(source degrees).
struct HolonomyOperator {
    Eigen::MatrixXcd matrix;
    SemicyclicParams source1, source2;
    SemicyclicParams target1, target2;
    bool flipped = false;
    double condition = 0.0;
};

/// Builds the holonomy operator
///   [flip o] D_H * sum_{n=0}^{r-1} ([1]^{2n} xi^{n(n-1)/2} / [n]!) E_t^n (x) F^n
/// with D_H diagonal xi^{lam_i*mu_j/2} on v_i (x) w_j (the H-weights of the
/// two factors). flipped = false is the bare R-matrix form, flipped = true
/// the braiding used on braid words.
HolonomyOperator holonomy_matrix(const SemicyclicParams& p1, const SemicyclicParams& p2,
                                 bool flipped);

/// Numerical inverse; source and target swap. Condition numbers above 1e8
/// are reported via the condition field (callers may warn).
HolonomyOperator holonomy_inverse(const HolonomyOperator& op);

/// Reconstructs the forward-crossing sources (P1, P2) from the slot
/// parameters (Pa, Pb) sitting *above* a positive crossing, i.e. inverts
/// the t-transport. Used to evaluate negative crossings.
std::pair<SemicyclicParams, SemicyclicParams> holonomy_presource(const SemicyclicParams& pa,
                                                                 const SemicyclicParams& pb);

/// Twist scalar theta = xi^{(alpha^2 - (r-1)^2)/2}; depends only on the
/// conjugacy class (kappa, branch), not on epsilon.
Complex twist(const SemicyclicParams& p);

/// Modified dimension r*[alpha]/[r*alpha].
Complex mod_dim(const SemicyclicParams& p);

/// Partial trace over the right factor W of (Id_V (x) K_W^{1-r}) * f,
/// for f a matrix on V (x) W. pw supplies the K-weights of W; dim(V) is
/// inferred from the size of f.
Eigen::MatrixXcd partial_trace_right(const Eigen::MatrixXcd& f, const SemicyclicParams& pw);

}  // namespace glink
