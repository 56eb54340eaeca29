#include "glink/braid.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <numeric>
#include <string>

namespace glink {

BraidWord::BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
    if (strands < 1) throw std::invalid_argument("BraidWord: need at least one strand");
    for (int k : letters) {
        if (k == 0 || std::abs(k) >= strands)
            throw std::invalid_argument("BraidWord: letter " + std::to_string(k) +
                                        " invalid for " + std::to_string(strands) + " strands");
    }
}

ColorTuple::ColorTuple(std::vector<GStarColor> c, std::vector<int> b)
    : colors(std::move(c)), branch(std::move(b)) {
    if (branch.empty()) branch.assign(colors.size(), 0);
    if (branch.size() != colors.size())
        throw std::invalid_argument("ColorTuple: branch list must match color list");
}

std::vector<int> permutation(const BraidWord& b) {
    // strand_at[p] = id (bottom position) of the strand currently at p
    std::vector<int> strand_at(b.strands);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int k : b.letters) {
        const int p = std::abs(k) - 1;
        std::swap(strand_at[p], strand_at[p + 1]);
    }
    std::vector<int> perm(b.strands);
    for (int p = 0; p < b.strands; ++p) perm[strand_at[p]] = p;
    return perm;
}

ClosureComponents components(const BraidWord& b) {
    const auto perm = permutation(b);
    ClosureComponents cc;
    cc.of_position.assign(b.strands, -1);
    for (int start = 0; start < b.strands; ++start) {
        if (cc.of_position[start] >= 0) continue;
        const int id = cc.count++;
        cc.members.emplace_back();
        int p = start;
        do {
            cc.of_position[p] = id;
            cc.members[id].push_back(p);
            p = perm[p];
        } while (p != start);
        std::sort(cc.members[id].begin(), cc.members[id].end());
    }
    return cc;
}

std::vector<int> writhe_by_component(const BraidWord& b) {
    const auto cc = components(b);
    std::vector<int> strand_at(b.strands);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    std::vector<int> w(cc.count, 0);
    for (int k : b.letters) {
        const int p = std::abs(k) - 1;
        const int c1 = cc.of_position[strand_at[p]];
        const int c2 = cc.of_position[strand_at[p + 1]];
        if (c1 == c2) w[c1] += (k > 0) ? 1 : -1;
        std::swap(strand_at[p], strand_at[p + 1]);
    }
    return w;
}

ColorTuple act(const BraidWord& b, const ColorTuple& y) {
    if (static_cast<int>(y.colors.size()) != b.strands)
        throw std::invalid_argument("act: tuple size does not match strand count");
    ColorTuple cur = y;
    for (int k : b.letters) {
        const int p = std::abs(k) - 1;
        if (k > 0) {
            auto [left, right] = rmap(cur.colors[p], cur.colors[p + 1]);
            cur.colors[p] = right;  // tau after R
            cur.colors[p + 1] = left;
        } else {
            // (tau o R)^{-1} = R^{-1} o tau
            auto [x, yy] = rmap_inv(cur.colors[p + 1], cur.colors[p]);
            cur.colors[p] = x;
            cur.colors[p + 1] = yy;
        }
        std::swap(cur.branch[p], cur.branch[p + 1]);
    }
    return cur;
}

bool is_fixed_point(const BraidWord& b, const ColorTuple& y, double tol) {
    const ColorTuple out = act(b, y);
    for (int i = 0; i < b.strands; ++i) {
        if (!color_approx_equal(out.colors[i], y.colors[i], tol)) return false;
        if (out.branch[i] != y.branch[i]) return false;
    }
    return true;
}

Eigen::MatrixXcd epsilon_transfer_matrix(const BraidWord& b,
                                         const std::vector<Complex>& kappa_by_position) {
    if (static_cast<int>(kappa_by_position.size()) != b.strands)
        throw std::invalid_argument("epsilon_transfer_matrix: kappa list size mismatch");
    for (Complex k : kappa_by_position)
        if (std::abs(k) <= 1e-12)
            throw std::invalid_argument("epsilon_transfer_matrix: kappa too close to zero");

    const int n = b.strands;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
    std::vector<Complex> kap = kappa_by_position;
    for (int k : b.letters) {
        const int p = std::abs(k) - 1;
        const Complex k1 = kap[p], k2 = kap[p + 1];
        Eigen::Matrix2cd blk;
        if (k > 0) {
            blk << (k2 - 1.0 / k2) / k1, 1.0 / k1,
                   1.0 / k2,             Complex(0.0);
        } else {
            blk << Complex(0.0), k1,
                   k2,           -k1 * (k1 - 1.0 / k1);
        }
        m.middleRows(p, 2) = (blk * m.middleRows(p, 2)).eval();
        std::swap(kap[p], kap[p + 1]);
    }
    return m;
}

ColorTuple tuple_from_components(const BraidWord& b,
                                 const std::vector<Complex>& kappa_by_component,
                                 const std::vector<int>& branch_by_component,
                                 const std::vector<Complex>& epsilon_by_position) {
    const auto cc = components(b);
    if (static_cast<int>(kappa_by_component.size()) != cc.count)
        throw std::invalid_argument("expected " + std::to_string(cc.count) +
                                    " per-component kappas, got " +
                                    std::to_string(kappa_by_component.size()));
    if (static_cast<int>(branch_by_component.size()) != cc.count)
        throw std::invalid_argument("expected " + std::to_string(cc.count) +
                                    " per-component branches, got " +
                                    std::to_string(branch_by_component.size()));
    if (!epsilon_by_position.empty() &&
        static_cast<int>(epsilon_by_position.size()) != b.strands)
        throw std::invalid_argument("epsilon list must have one entry per strand");

    std::vector<GStarColor> colors;
    std::vector<int> branch;
    colors.reserve(b.strands);
    for (int p = 0; p < b.strands; ++p) {
        const int c = cc.of_position[p];
        const Complex eps = epsilon_by_position.empty() ? Complex(0.0) : epsilon_by_position[p];
        colors.emplace_back(kappa_by_component[c], eps);
        branch.push_back(branch_by_component[c]);
    }
    return ColorTuple(std::move(colors), std::move(branch));
}

ColoringSolutions solve_colorings(const BraidWord& b,
                                  const std::vector<Complex>& kappa_by_component,
                                  const std::vector<int>& branch_by_component,
                                  double tol) {
    for (Complex k : kappa_by_component)
        if (!is_admissible(GStarColor(k, 0.0), tol))
            throw std::invalid_argument("solve_colorings: kappa not admissible (near 0 or +-1)");

    const ColorTuple zero = tuple_from_components(b, kappa_by_component, branch_by_component);
    std::vector<Complex> kap(b.strands);
    for (int p = 0; p < b.strands; ++p) kap[p] = zero.colors[p].kappa;

    const int n = b.strands;
    const Eigen::MatrixXcd m = epsilon_transfer_matrix(b, kap);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m - Eigen::MatrixXcd::Identity(n, n),
                                           Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double cutoff = tol * std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);

    ColoringSolutions out;
    out.singular_values = sv;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= cutoff) ++out.nullity;

    for (int i = n - out.nullity; i < n; ++i) {
        Eigen::VectorXcd v = svd.matrixV().col(i);
        // canonical phase: largest-modulus entry real positive
        int arg_max = 0;
        for (int j = 1; j < n; ++j)
            if (std::abs(v(j)) > std::abs(v(arg_max))) arg_max = j;
        v *= std::conj(v(arg_max)) / std::abs(v(arg_max));
        v.normalize();
        std::vector<Complex> eps(v.data(), v.data() + n);
        out.basis.push_back(
            tuple_from_components(b, kappa_by_component, branch_by_component, eps));
    }
    return out;
}

ColoredBraid markov_rotate(const BraidWord& b, const ColorTuple& y, int k, double tol) {
    if (!is_fixed_point(b, y, tol))
        throw std::invalid_argument("markov_rotate: coloring is not a fixed point");
    const int len = static_cast<int>(b.letters.size());
    if (len == 0) return {b, y};
    k = ((k % len) + len) % len;
    BraidWord prefix(b.strands, {b.letters.begin(), b.letters.begin() + k});
    std::vector<int> rotated(b.letters.begin() + k, b.letters.end());
    rotated.insert(rotated.end(), b.letters.begin(), b.letters.begin() + k);
    return {BraidWord(b.strands, std::move(rotated)), act(prefix, y)};
}

ColoredBraid stabilize(const BraidWord& b, const ColorTuple& y, int sign, double tol) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("stabilize: sign must be +-1");
    if (!is_fixed_point(b, y, tol))
        throw std::invalid_argument("stabilize: coloring is not a fixed point");
    const int n = b.strands;
    std::vector<int> letters;
    letters.reserve(b.letters.size() + 1);
    letters.push_back(sign * n);
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());

    ColorTuple yy = y;
    yy.colors.push_back(smap(y.colors[n - 1]));
    yy.branch.push_back(y.branch[n - 1]);
    return {BraidWord(n + 1, std::move(letters)), std::move(yy)};
}

ColoredBraid destabilize(const BraidWord& b, const ColorTuple& y, double tol) {
    const int n = b.strands;
    if (n < 2 || b.letters.empty() || std::abs(b.letters.front()) != n - 1)
        throw std::invalid_argument("destabilize: word does not start with a +-(n-1) letter");
    for (size_t i = 1; i < b.letters.size(); ++i)
        if (std::abs(b.letters[i]) == n - 1)
            throw std::invalid_argument("destabilize: last strand is braided further up");
    if (!color_approx_equal(y.colors[n - 1], smap(y.colors[n - 2]), tol))
        throw std::invalid_argument("destabilize: last color is not smap of its neighbor");
    if (y.branch[n - 1] != y.branch[n - 2])
        throw std::invalid_argument("destabilize: branch mismatch on the stabilized strand");
    if (!is_fixed_point(b, y, tol))
        throw std::invalid_argument("destabilize: coloring is not a fixed point");

    BraidWord word(n - 1, {b.letters.begin() + 1, b.letters.end()});
    ColorTuple yy({y.colors.begin(), y.colors.end() - 1}, {y.branch.begin(), y.branch.end() - 1});
    return {std::move(word), std::move(yy)};
}

}  // namespace glink
