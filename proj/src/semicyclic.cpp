#include "glink/semicyclic.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace glink {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double distance_to_integers(Complex a) {
    return std::abs(a - Complex(std::round(a.real()), 0.0));
}
}  // namespace

void validate_params(const SemicyclicParams& p) {
    if (std::abs(qnum(p.ctx, static_cast<double>(p.ctx.r) * p.alpha)) <= p.ctx.tol)
        throw std::invalid_argument("semicyclic params: [r*alpha] vanishes (kappa at +-1)");
    if (distance_to_integers(p.alpha) <= p.ctx.tol)
        throw std::invalid_argument("semicyclic params: alpha too close to an integer");
}

SemicyclicParams params_from_color(const RootContext& ctx, const GStarColor& y, int branch) {
    if (!is_admissible(y, ctx.tol))
        throw std::invalid_argument("params_from_color: color not admissible");
    SemicyclicParams p;
    p.ctx = ctx;
    p.branch = branch;
    const Complex s2k = ctx.sigma * ctx.sigma * y.kappa;
    p.alpha = static_cast<double>(ctx.N) * branch_log(s2k, branch) /
              (Complex(0.0, kTwoPi) * static_cast<double>(ctx.r));
    p.t = -y.epsilon / (ctx.sigma * (y.kappa - 1.0 / y.kappa));
    validate_params(p);
    return p;
}

GStarColor degree(const SemicyclicParams& p) {
    const Complex eps =
        -p.t * qnum(p.ctx, static_cast<double>(p.ctx.r) * p.alpha) / p.ctx.sigma;
    return GStarColor(degree_kappa(p), eps);
}

Complex degree_kappa(const SemicyclicParams& p) {
    return p.ctx.sigma * p.ctx.sigma * xi_pow(p.ctx, static_cast<double>(p.ctx.r) * p.alpha);
}

RepMatrices rep_matrices(const SemicyclicParams& p) {
    validate_params(p);
    const RootContext& ctx = p.ctx;
    const int r = ctx.r;
    RepMatrices m;
    m.E_t = Eigen::MatrixXcd::Zero(r, r);
    m.F = Eigen::MatrixXcd::Zero(r, r);
    m.K = Eigen::MatrixXcd::Zero(r, r);
    m.Hdiag.resize(r);

    const Complex one2 = qnum(ctx, 1.0) * qnum(ctx, 1.0);
    for (int i = 0; i < r; ++i) {
        m.Hdiag(i) = p.alpha + static_cast<double>(r - 1 - 2 * i);
        m.K(i, i) = xi_pow(ctx, m.Hdiag(i));
        if (i + 1 < r) m.F(i + 1, i) = 1.0;
        if (i >= 1)
            m.E_t(i - 1, i) = qnum(ctx, static_cast<double>(i)) *
                              qnum(ctx, p.alpha + static_cast<double>(r - i)) / one2;
    }
    // corner of Ad_t(E) = E - t * F_{r-1} [H + 1 - r], supported on v_0 -> v_{r-1}
    Complex pref = 1.0;
    for (int k = 0; k < r - 1; ++k) pref *= one2;
    const Complex corner = pref / qfact(ctx, r - 1) * qnum(ctx, p.alpha);
    m.E_t(r - 1, 0) -= p.t * corner;
    return m;
}

namespace {

Eigen::MatrixXcd flip_matrix(int r) {
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(r * r, r * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) t(j * r + i, i * r + j) = 1.0;
    return t;
}

double condition_estimate(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / sv(sv.size() - 1);
}

}  // namespace

HolonomyOperator holonomy_matrix(const SemicyclicParams& p1, const SemicyclicParams& p2,
                                 bool flipped) {
    validate_params(p1);
    validate_params(p2);
    if (p1.ctx.N != p2.ctx.N)
        throw std::invalid_argument("holonomy_matrix: mismatched root contexts");
    const RootContext& ctx = p1.ctx;
    const int r = ctx.r;

    const RepMatrices m1 = rep_matrices(p1);
    const RepMatrices m2 = rep_matrices(p2);

    // sum_n c_n E_t^n (x) F^n with c_n = [1]^{2n} xi^{n(n-1)/2} / [n]!
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(r * r, r * r);
    Eigen::MatrixXcd epow = Eigen::MatrixXcd::Identity(r, r);
    Eigen::MatrixXcd fpow = Eigen::MatrixXcd::Identity(r, r);
    const Complex one2 = qnum(ctx, 1.0) * qnum(ctx, 1.0);
    Complex cn = 1.0;
    for (int n = 0; n < r; ++n) {
        if (n > 0) {
            epow = (m1.E_t * epow).eval();
            fpow = (m2.F * fpow).eval();
            cn *= one2 * xi_pow(ctx, static_cast<double>(n - 1)) / qnum(ctx, static_cast<double>(n));
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k)
                    for (int l = 0; l < r; ++l)
                        sum(i * r + j, k * r + l) += cn * epow(i, k) * fpow(j, l);
    }

    Eigen::VectorXcd dh(r * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            dh(i * r + j) = xi_pow(ctx, m1.Hdiag(i) * m2.Hdiag(j) / 2.0);

    HolonomyOperator op;
    op.flipped = flipped;
    op.matrix = dh.asDiagonal() * sum;
    if (flipped) op.matrix = (flip_matrix(r) * op.matrix).eval();

    const Complex k1 = degree_kappa(p1);
    const Complex k2 = degree_kappa(p2);
    SemicyclicParams q1 = p1;
    q1.t = p1.t / k2;
    SemicyclicParams q2 = p2;
    q2.t = (1.0 - 1.0 / (k1 * k1)) * p1.t + p2.t / k1;

    op.source1 = p1;
    op.source2 = p2;
    op.target1 = flipped ? q2 : q1;
    op.target2 = flipped ? q1 : q2;
    op.condition = condition_estimate(op.matrix);
    return op;
}

HolonomyOperator holonomy_inverse(const HolonomyOperator& op) {
    HolonomyOperator inv;
    inv.matrix = op.matrix.partialPivLu().inverse();
    inv.source1 = op.target1;
    inv.source2 = op.target2;
    inv.target1 = op.source1;
    inv.target2 = op.source2;
    inv.flipped = op.flipped;
    inv.condition = op.condition;
    return inv;
}

std::pair<SemicyclicParams, SemicyclicParams> holonomy_presource(const SemicyclicParams& pa,
                                                                 const SemicyclicParams& pb) {
    // Above a flipped positive crossing the slots hold (p2', p1'); undo
    //   t1' = t1/k2,  t2' = (1 - 1/k1^2) t1 + t2/k1.
    SemicyclicParams p1 = pb;
    SemicyclicParams p2 = pa;
    const Complex k1 = degree_kappa(p1);
    const Complex k2 = degree_kappa(p2);
    p1.t = k2 * pb.t;
    p2.t = k1 * pa.t - (k1 - 1.0 / k1) * k2 * pb.t;
    return {p1, p2};
}

Complex twist(const SemicyclicParams& p) {
    const double rm1 = static_cast<double>(p.ctx.r - 1);
    return xi_pow(p.ctx, (p.alpha * p.alpha - rm1 * rm1) / 2.0);
}

Complex mod_dim(const SemicyclicParams& p) {
    const Complex denom = qnum(p.ctx, static_cast<double>(p.ctx.r) * p.alpha);
    if (std::abs(denom) <= p.ctx.tol)
        throw std::invalid_argument("mod_dim: [r*alpha] vanishes");
    return static_cast<double>(p.ctx.r) * qnum(p.ctx, p.alpha) / denom;
}

Eigen::MatrixXcd partial_trace_right(const Eigen::MatrixXcd& f, const SemicyclicParams& pw) {
    const int r = pw.ctx.r;
    if (f.rows() != f.cols() || f.rows() % r != 0)
        throw std::invalid_argument("partial_trace_right: matrix size not divisible by r");
    const int dv = static_cast<int>(f.rows()) / r;

    Eigen::VectorXcd kw(r);  // diagonal of K_W^{1-r}
    for (int j = 0; j < r; ++j)
        kw(j) = xi_pow(pw.ctx, static_cast<double>(1 - r) *
                                   (pw.alpha + static_cast<double>(r - 1 - 2 * j)));

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dv, dv);
    for (int a = 0; a < dv; ++a)
        for (int b = 0; b < dv; ++b)
            for (int j = 0; j < r; ++j) out(a, b) += kw(j) * f(a * r + j, b * r + j);
    return out;
}

}  // namespace glink
