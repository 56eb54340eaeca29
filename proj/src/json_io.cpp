#include "glink/json_io.hpp"

#include <string>

namespace glink {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex values must be [re, im] arrays");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

namespace {
std::vector<Complex> complex_list(const json& j) {
    std::vector<Complex> out;
    for (const auto& e : j) out.push_back(complex_from_json(e));
    return out;
}
}  // namespace

JobSpec parse_jobspec(const json& j) {
    JobSpec spec;
    spec.N = j.at("N").get<int>();

    std::vector<int> letters = j.at("braid").get<std::vector<int>>();
    int strands = 1;
    for (int k : letters) strands = std::max(strands, std::abs(k) + 1);
    if (j.contains("strands")) {
        const int declared = j.at("strands").get<int>();
        if (declared < strands)
            throw std::invalid_argument("declared strand count is below max|letter|+1");
        strands = declared;
    }
    spec.braid = BraidWord(strands, std::move(letters));

    spec.kappa_by_component = complex_list(j.at("kappa_by_component"));
    spec.branch_by_component = j.at("branch_by_component").get<std::vector<int>>();

    const int ncomp = components(spec.braid).count;
    if (static_cast<int>(spec.kappa_by_component.size()) != ncomp)
        throw std::invalid_argument("kappa_by_component must list " + std::to_string(ncomp) +
                                    " values (one per closure component)");
    if (static_cast<int>(spec.branch_by_component.size()) != ncomp)
        throw std::invalid_argument("branch_by_component must list " + std::to_string(ncomp) +
                                    " values (one per closure component)");

    const json& eps = j.at("epsilon");
    if (eps.is_string()) {
        const std::string mode = eps.get<std::string>();
        if (mode == "zero")
            spec.epsilon_mode = JobSpec::EpsilonMode::Zero;
        else if (mode == "solve")
            spec.epsilon_mode = JobSpec::EpsilonMode::Solve;
        else
            throw std::invalid_argument("epsilon must be \"zero\", \"solve\" or a list");
    } else {
        spec.epsilon_mode = JobSpec::EpsilonMode::Explicit;
        spec.epsilon_by_position = complex_list(eps);
        if (static_cast<int>(spec.epsilon_by_position.size()) != spec.braid.strands)
            throw std::invalid_argument("explicit epsilon list must have one entry per strand");
    }

    if (j.contains("scalings")) spec.scalings = complex_list(j.at("scalings"));
    if (j.contains("tolerance")) {
        spec.tolerance = j.at("tolerance").get<double>();
        if (!(spec.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    }
    return spec;
}

ColorTuple jobspec_tuple(const JobSpec& spec) {
    if (spec.epsilon_mode == JobSpec::EpsilonMode::Solve)
        throw std::invalid_argument("jobspec_tuple: solve mode needs a basis choice");
    return tuple_from_components(spec.braid, spec.kappa_by_component,
                                 spec.branch_by_component, spec.epsilon_by_position);
}

json coloring_to_json(const ColorTuple& y) {
    json kappa = json::array(), eps = json::array(), branch = json::array();
    for (const auto& c : y.colors) {
        kappa.push_back(complex_to_json(c.kappa));
        eps.push_back(complex_to_json(c.epsilon));
    }
    for (int b : y.branch) branch.push_back(b);
    return json{{"kappa", kappa}, {"epsilon", eps}, {"branch", branch}};
}

json params_to_json(const SemicyclicParams& p) {
    const GStarColor d = degree(p);
    return json{{"alpha", complex_to_json(p.alpha)},
                {"t", complex_to_json(p.t)},
                {"branch", p.branch},
                {"kappa", complex_to_json(d.kappa)},
                {"epsilon", complex_to_json(d.epsilon)}};
}

json invariant_to_json(const InvariantResult& r) {
    json twists = json::array(), writhe = json::array();
    for (const auto& t : r.twists) twists.push_back(complex_to_json(t));
    for (int w : r.writhe) writhe.push_back(w);
    return json{{"raw", complex_to_json(r.raw)},
                {"normalized", complex_to_json(r.normalized)},
                {"coloring", coloring_to_json(r.coloring)},
                {"writhe_by_component", writhe},
                {"twists", twists},
                {"diagnostics",
                 json{{"fixed_point_residual", r.fixed_point_residual},
                      {"max_condition", r.max_condition}}}};
}

json solutions_to_json(const ColoringSolutions& s) {
    json basis = json::array();
    for (const auto& t : s.basis) basis.push_back(coloring_to_json(t));
    json sv = json::array();
    for (int i = 0; i < s.singular_values.size(); ++i) sv.push_back(s.singular_values(i));
    return json{{"nullity", s.nullity}, {"singular_values", sv}, {"basis", basis}};
}

json holonomy_to_json(const HolonomyOperator& op) {
    json rows = json::array();
    for (int i = 0; i < op.matrix.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < op.matrix.cols(); ++j) row.push_back(complex_to_json(op.matrix(i, j)));
        rows.push_back(row);
    }
    return json{{"size", op.matrix.rows()},
                {"flipped", op.flipped},
                {"matrix", rows},
                {"source", json::array({params_to_json(op.source1), params_to_json(op.source2)})},
                {"target", json::array({params_to_json(op.target1), params_to_json(op.target2)})},
                {"condition", op.condition}};
}

json conjecture_to_json(const ConjectureReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        entries.push_back(json{{"basis_index", e.basis_index},
                               {"scaling", complex_to_json(e.scaling)},
                               {"value", complex_to_json(e.value)},
                               {"abs_diff", e.abs_diff},
                               {"rel_diff", e.rel_diff},
                               {"pass", e.pass}});
    }
    json sv = json::array();
    for (double v : rep.singular_values) sv.push_back(v);
    return json{{"ado_value", complex_to_json(rep.ado_value)},
                {"nullity", rep.nullity},
                {"singular_values", sv},
                {"has_nontrivial", rep.has_nontrivial},
                {"entries", entries},
                {"all_pass", rep.all_pass},
                {"tolerance", rep.tolerance}};
}

}  // namespace glink
