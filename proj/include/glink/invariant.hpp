#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glink/braid.hpp"
#include "glink/semicyclic.hpp"

namespace glink {

/// Hard cap on the tensor dimension r^n of a braid operator (the composite
/// is a dense r^n x r^n complex matrix).
inline constexpr long kMaxTensorDim = 1 << 13;

struct BraidOperatorResult {
    Eigen::MatrixXcd matrix;                    // endomorphism of the bottom object
    std::vector<SemicyclicParams> initial;      // per-slot params at the bottom
    std::vector<SemicyclicParams> final_slots;  // per-slot params at the top
    double max_condition = 0.0;                 // worst holonomy conditioning seen
};

/// Composes the (flipped) holonomy operators of the word bottom-to-top,
/// maintaining per-slot parameters. For a fixed-point coloring the result
/// is an endomorphism and final slot parameters match the initial ones.
BraidOperatorResult braid_operator(const BraidWord& b, const ColorTuple& y,
                                   const RootContext& ctx);

/// Modified Markov trace ([a1]/[r*a1]) * tr((Id (x) K_2^{1-r} (x) ... ) f)
/// of a matrix on the tensor product of the modules described by params.
Complex markov_trace(const Eigen::MatrixXcd& f, const std::vector<SemicyclicParams>& params);

struct InvariantResult {
    Complex raw;                      // markov trace of the braid operator
    Complex normalized;               // raw * prod_c twist_c^{-writhe_c}
    ColorTuple coloring;
    std::vector<int> writhe;          // per component
    std::vector<Complex> twists;      // per component
    double fixed_point_residual = 0.0;
    double max_condition = 0.0;
};

/// Full evaluation: raw trace and writhe-normalized value, with the
/// diagnostics. Requires an admissible fixed-point coloring with branches
/// constant per component.
InvariantResult evaluate_invariant(const BraidWord& b, const ColorTuple& y,
                                   const RootContext& ctx);

/// The nilpotent specialization: evaluate with the all-epsilon-zero
/// coloring (always a fixed point); returns the normalized value.
Complex ado_invariant(const BraidWord& b, const std::vector<Complex>& kappa_by_component,
                      const std::vector<int>& branch_by_component, const RootContext& ctx);

struct ConjectureEntry {
    int basis_index = 0;
    Complex scaling;
    Complex value;          // normalized invariant at epsilon = scaling * basis vector
    double abs_diff = 0.0;  // against the epsilon = 0 value
    double rel_diff = 0.0;
    bool pass = false;
};

struct ConjectureReport {
    Complex ado_value;
    int nullity = 0;
    std::vector<double> singular_values;
    std::vector<ConjectureEntry> entries;
    bool has_nontrivial = false;
    bool all_pass = false;  // vacuously false when no nontrivial coloring exists
    double tolerance = 0.0;
};

/// Compares the invariant on every solved epsilon-coloring (each basis
/// vector, each requested scaling) against the epsilon = 0 value.
ConjectureReport conjecture_compare(const BraidWord& b,
                                    const std::vector<Complex>& kappa_by_component,
                                    const std::vector<int>& branch_by_component,
                                    const std::vector<Complex>& scalings,
                                    const RootContext& ctx,
                                    double compare_tol = 1e-6);

}  // namespace glink
