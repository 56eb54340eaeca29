#include "glink/invariant.hpp"

#include <cmath>
#include <string>

namespace glink {

namespace {

long checked_dim(int r, int n) {
    long dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= r;
        if (dim > kMaxTensorDim)
            throw std::invalid_argument("braid_operator: tensor dimension r^n = " +
                                        std::to_string(r) + "^" + std::to_string(n) +
                                        " exceeds the supported budget of " +
                                        std::to_string(kMaxTensorDim));
    }
    return dim;
}

// composite <- (I (x)...(x) block_{p,p+1} (x)...(x) I) * composite, without
// materializing the embedded factor. The pair (i_p, i_{p+1}) of base-r row
// digits forms one base-r^2 digit of stride s.
void apply_two_slot(const Eigen::MatrixXcd& block, int p, int r, int n,
                    Eigen::MatrixXcd& composite) {
    const long dim = composite.rows();
    const int rr = r * r;
    long s = 1;
    for (int j = p + 2; j < n; ++j) s *= r;
    const long outer = dim / (rr * s);

    Eigen::MatrixXcd gathered(rr, composite.cols());
    for (long hi = 0; hi < outer; ++hi) {
        for (long lo = 0; lo < s; ++lo) {
            const long base = hi * rr * s + lo;
            for (int d = 0; d < rr; ++d) gathered.row(d) = composite.row(base + d * s);
            gathered = (block * gathered).eval();
            for (int d = 0; d < rr; ++d) composite.row(base + d * s) = gathered.row(d);
        }
    }
}

double tuple_residual(const ColorTuple& a, const ColorTuple& b) {
    double res = 0.0;
    for (size_t i = 0; i < a.colors.size(); ++i) {
        res = std::max(res, std::abs(a.colors[i].kappa - b.colors[i].kappa));
        res = std::max(res, std::abs(a.colors[i].epsilon - b.colors[i].epsilon));
    }
    return res;
}

}  // namespace

BraidOperatorResult braid_operator(const BraidWord& b, const ColorTuple& y,
                                   const RootContext& ctx) {
    if (static_cast<int>(y.colors.size()) != b.strands)
        throw std::invalid_argument("braid_operator: coloring size mismatch");
    const int n = b.strands;
    const int r = ctx.r;
    const long dim = checked_dim(r, n);

    BraidOperatorResult out;
    out.initial.reserve(n);
    for (int i = 0; i < n; ++i)
        out.initial.push_back(params_from_color(ctx, y.colors[i], y.branch[i]));

    out.matrix = Eigen::MatrixXcd::Identity(dim, dim);
    out.max_condition = 1.0;
    std::vector<SemicyclicParams> slots = out.initial;

    for (int k : b.letters) {
        const int p = std::abs(k) - 1;
        if (k > 0) {
            HolonomyOperator op = holonomy_matrix(slots[p], slots[p + 1], true);
            apply_two_slot(op.matrix, p, r, n, out.matrix);
            slots[p] = op.target1;
            slots[p + 1] = op.target2;
            out.max_condition = std::max(out.max_condition, op.condition);
        } else {
            auto [p1, p2] = holonomy_presource(slots[p], slots[p + 1]);
            HolonomyOperator op = holonomy_inverse(holonomy_matrix(p1, p2, true));
            apply_two_slot(op.matrix, p, r, n, out.matrix);
            slots[p] = op.target1;  // = p1
            slots[p + 1] = op.target2;
            out.max_condition = std::max(out.max_condition, op.condition);
        }
    }
    out.final_slots = std::move(slots);
    return out;
}

Complex markov_trace(const Eigen::MatrixXcd& f, const std::vector<SemicyclicParams>& params) {
    if (params.empty()) throw std::invalid_argument("markov_trace: empty parameter list");
    const RootContext& ctx = params.front().ctx;
    const int r = ctx.r;
    const int n = static_cast<int>(params.size());
    const long dim = checked_dim(r, n);
    if (f.rows() != dim || f.cols() != dim)
        throw std::invalid_argument("markov_trace: matrix size does not match r^n");

    const Complex denom = qnum(ctx, static_cast<double>(r) * params[0].alpha);
    if (std::abs(denom) <= ctx.tol)
        throw std::invalid_argument("markov_trace: [r*alpha_1] vanishes");
    const Complex prefactor = qnum(ctx, params[0].alpha) / denom;

    // per-slot diagonal weights: identity on slot 0, K^{1-r} on the rest
    std::vector<Eigen::VectorXcd> w(n);
    for (int j = 0; j < n; ++j) {
        w[j].resize(r);
        for (int i = 0; i < r; ++i)
            w[j](i) = (j == 0) ? Complex(1.0)
                               : xi_pow(ctx, static_cast<double>(1 - r) *
                                                 (params[j].alpha +
                                                  static_cast<double>(r - 1 - 2 * i)));
    }

    Complex tr = 0.0;
    std::vector<int> digits(n, 0);
    for (long idx = 0; idx < dim; ++idx) {
        long rem = idx;
        Complex weight = 1.0;
        for (int j = n - 1; j >= 0; --j) {
            digits[j] = static_cast<int>(rem % r);
            rem /= r;
            weight *= w[j](digits[j]);
        }
        tr += weight * f(idx, idx);
    }
    return prefactor * tr;
}

InvariantResult evaluate_invariant(const BraidWord& b, const ColorTuple& y,
                                   const RootContext& ctx) {
    for (const auto& c : y.colors)
        if (!is_admissible(c, ctx.tol))
            throw std::invalid_argument("evaluate_invariant: coloring not admissible");
    const auto cc = components(b);
    for (int c = 0; c < cc.count; ++c) {
        const int p0 = cc.members[c].front();
        for (int p : cc.members[c]) {
            if (!approx_equal(y.colors[p].kappa, y.colors[p0].kappa, ctx.tol))
                throw std::invalid_argument(
                    "evaluate_invariant: kappa not constant on a closure component");
            if (y.branch[p] != y.branch[p0])
                throw std::invalid_argument(
                    "evaluate_invariant: branch not constant on a closure component");
        }
    }
    if (!is_fixed_point(b, y, ctx.tol))
        throw std::invalid_argument("evaluate_invariant: coloring is not a fixed point");

    InvariantResult res;
    res.coloring = y;
    res.fixed_point_residual = tuple_residual(act(b, y), y);

    BraidOperatorResult op = braid_operator(b, y, ctx);
    res.raw = markov_trace(op.matrix, op.initial);
    res.max_condition = op.max_condition;
    res.writhe = writhe_by_component(b);

    res.normalized = res.raw;
    for (int c = 0; c < cc.count; ++c) {
        const int p = cc.members[c].front();
        const Complex th = twist(params_from_color(ctx, y.colors[p], y.branch[p]));
        res.twists.push_back(th);
        const int w = res.writhe[c];
        for (int i = 0; i < std::abs(w); ++i) res.normalized *= (w > 0) ? 1.0 / th : th;
    }
    return res;
}

Complex ado_invariant(const BraidWord& b, const std::vector<Complex>& kappa_by_component,
                      const std::vector<int>& branch_by_component, const RootContext& ctx) {
    const ColorTuple y = tuple_from_components(b, kappa_by_component, branch_by_component);
    return evaluate_invariant(b, y, ctx).normalized;
}

ConjectureReport conjecture_compare(const BraidWord& b,
                                    const std::vector<Complex>& kappa_by_component,
                                    const std::vector<int>& branch_by_component,
                                    const std::vector<Complex>& scalings,
                                    const RootContext& ctx, double compare_tol) {
    ConjectureReport rep;
    rep.tolerance = compare_tol;
    rep.ado_value = ado_invariant(b, kappa_by_component, branch_by_component, ctx);

    ColoringSolutions sol =
        solve_colorings(b, kappa_by_component, branch_by_component, ctx.tol);
    rep.nullity = sol.nullity;
    rep.singular_values.assign(sol.singular_values.data(),
                               sol.singular_values.data() + sol.singular_values.size());
    rep.has_nontrivial = sol.nullity > 0;
    if (!rep.has_nontrivial) return rep;

    bool all_pass = true;
    for (int bi = 0; bi < static_cast<int>(sol.basis.size()); ++bi) {
        for (Complex lambda : scalings) {
            ColorTuple y = sol.basis[bi];
            for (auto& c : y.colors) c = GStarColor(c.kappa, lambda * c.epsilon);
            ConjectureEntry e;
            e.basis_index = bi;
            e.scaling = lambda;
            e.value = evaluate_invariant(b, y, ctx).normalized;
            e.abs_diff = std::abs(e.value - rep.ado_value);
            e.rel_diff = e.abs_diff / std::max(std::abs(rep.ado_value), 1e-300);
            e.pass = e.rel_diff < compare_tol;
            all_pass = all_pass && e.pass;
            rep.entries.push_back(e);
        }
    }
    rep.all_pass = all_pass;
    return rep;
}

}  // namespace glink
