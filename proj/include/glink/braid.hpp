#pragma once

#include <vector>

#include <Eigen/Dense>

#include "glink/group.hpp"

namespace glink {

/// A braid word in B_n. Letters are signed 1-based generator indices:
/// +k is sigma_k acting on strand positions (k, k+1), -k its inverse.
/// Reading order is bottom of the braid to top: the first letter acts first.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> word);
};

/// Partition of the strand positions {0..n-1} into closure components
/// (cycles of the underlying permutation). Component ids are assigned in
/// order of each component's smallest position.
struct ClosureComponents {
    int count = 0;
    std::vector<int> of_position;            // position -> component id
    std::vector<std::vector<int>> members;   // component id -> sorted positions
};

/// Bottom colors of a braid, one per strand position, plus the branch
/// integer attached to each position. Branches must be constant on each
/// closure component; they ride along with the strand under the action.
struct ColorTuple {
    std::vector<GStarColor> colors;
    std::vector<int> branch;

    ColorTuple() = default;
    ColorTuple(std::vector<GStarColor> c, std::vector<int> b);
};

/// perm[i] = top position reached by the strand entering bottom position i.
std::vector<int> permutation(const BraidWord& b);

ClosureComponents components(const BraidWord& b);

/// Signed self-crossing count of each closure component: a letter
/// contributes its sign to component c iff both strands meeting at that
/// crossing belong to c.
std::vector<int> writhe_by_component(const BraidWord& b);

/// The Yang-Baxter action of the braid word on a color tuple:
/// sigma_k applies (tau o R) on slots (k, k+1), sigma_k^{-1} its inverse.
ColorTuple act(const BraidWord& b, const ColorTuple& y);

bool is_fixed_point(const BraidWord& b, const ColorTuple& y, double tol = kDefaultTol);

/// The n x n matrix M with act(b, (kappa, eps)) = (kappa o perm, M * eps),
/// exploiting linearity of R in the epsilons for fixed kappas.
/// kappa_by_position must be constant on closure components.
Eigen::MatrixXcd epsilon_transfer_matrix(const BraidWord& b,
                                         const std::vector<Complex>& kappa_by_position);

/// Basis of the fixed-point epsilon space for given per-component kappas.
struct ColoringSolutions {
    std::vector<ColorTuple> basis;    // each passes is_fixed_point; unit norm
    Eigen::VectorXd singular_values;  // of (M - I), descending
    int nullity = 0;
};

ColoringSolutions solve_colorings(const BraidWord& b,
                                  const std::vector<Complex>& kappa_by_component,
                                  const std::vector<int>& branch_by_component,
                                  double tol = kDefaultTol);

struct ColoredBraid {
    BraidWord word;
    ColorTuple coloring;
};

/// Markov move I as rotation: the first k letters move to the end and the
/// coloring is transported by their action. Requires a fixed point.
ColoredBraid markov_rotate(const BraidWord& b, const ColorTuple& y, int k,
                           double tol = kDefaultTol);

/// Markov move II: adds strand n+1 colored smap(y[n-1]) and prepends the
/// letter sign*n (acting first). The appended color is smap for both signs;
/// the sign only selects the crossing direction. Requires a fixed point.
ColoredBraid stabilize(const BraidWord& b, const ColorTuple& y, int sign,
                       double tol = kDefaultTol);

/// Inverse of stabilize. Requires the first letter to be +-(n-1), no other
/// letter touching the last strand, and the last color to equal
/// smap(second-to-last).
ColoredBraid destabilize(const BraidWord& b, const ColorTuple& y,
                         double tol = kDefaultTol);

/// Expands per-component kappas/branches into a per-position ColorTuple
/// with the given epsilons (defaulting to all zero).
ColorTuple tuple_from_components(const BraidWord& b,
                                 const std::vector<Complex>& kappa_by_component,
                                 const std::vector<int>& branch_by_component,
                                 const std::vector<Complex>& epsilon_by_position = {});

}  // namespace glink
