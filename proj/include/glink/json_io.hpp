#pragma once

#include <json.hpp>

#include "glink/invariant.hpp"

namespace glink {

/// A computation request as read from a job file. Complex numbers are
/// [re, im] arrays throughout the JSON surface.
struct JobSpec {
    int N = 4;
    BraidWord braid;
    std::vector<Complex> kappa_by_component;
    enum class EpsilonMode { Zero, Solve, Explicit };
    EpsilonMode epsilon_mode = EpsilonMode::Zero;
    std::vector<Complex> epsilon_by_position;  // when Explicit
    std::vector<int> branch_by_component;
    std::vector<Complex> scalings;  // optional; comparator defaults apply
    double tolerance = kDefaultTol;
};

/// Parses and validates a job document. Structural problems (missing keys,
/// wrong JSON types) surface as nlohmann exceptions; semantic problems
/// (lengths, bad letters) as std::invalid_argument.
JobSpec parse_jobspec(const nlohmann::json& j);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const ColorTuple& y);
nlohmann::json params_to_json(const SemicyclicParams& p);
nlohmann::json invariant_to_json(const InvariantResult& r);
nlohmann::json solutions_to_json(const ColoringSolutions& s);
nlohmann::json holonomy_to_json(const HolonomyOperator& op);
nlohmann::json conjecture_to_json(const ConjectureReport& rep);

/// The tuple described by the job's epsilon mode ("zero" or explicit list).
/// Solve mode must be handled by the caller (it needs the basis choice).
ColorTuple jobspec_tuple(const JobSpec& spec);

}  // namespace glink
