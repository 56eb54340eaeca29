#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "glink/json_io.hpp"
#include "glink/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadJson = 2;
constexpr int kExitPrecondition = 3;

struct GlobalOpts {
    double tolerance = glink::kDefaultTol;
    std::uint64_t seed = 7;
    std::string output;  // empty = stdout
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.output, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + g.output);
    f << text;
}

json load_job(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw json::other_error::create(500, "cannot read job file " + path, nullptr);
    return json::parse(f);
}

glink::JobSpec job_from_file(const std::string& path, const GlobalOpts& g) {
    json doc = load_job(path);
    if (!doc.contains("tolerance") && g.tolerance != glink::kDefaultTol)
        doc["tolerance"] = g.tolerance;
    return glink::parse_jobspec(doc);
}

glink::ColorTuple resolve_coloring(const glink::JobSpec& spec, const glink::RootContext& ctx,
                                   int basis_index, glink::Complex scale) {
    if (spec.epsilon_mode != glink::JobSpec::EpsilonMode::Solve) return jobspec_tuple(spec);
    const glink::ColoringSolutions sol = glink::solve_colorings(
        spec.braid, spec.kappa_by_component, spec.branch_by_component, ctx.tol);
    if (sol.nullity == 0)
        throw std::invalid_argument(
            "epsilon=\"solve\": only the zero coloring exists at this kappa");
    if (basis_index < 0 || basis_index >= static_cast<int>(sol.basis.size()))
        throw std::invalid_argument("basis index out of range (nullity is " +
                                    std::to_string(sol.nullity) + ")");
    glink::ColorTuple y = sol.basis[basis_index];
    for (auto& c : y.colors) c = glink::GStarColor(c.kappa, scale * c.epsilon);
    return y;
}

glink::Complex parse_complex_flag(const std::string& s) {
    std::stringstream ss(s);
    double re = 0, im = 0;
    char comma = 0;
    ss >> re;
    if (ss >> comma && comma == ',') ss >> im;
    if (ss.fail()) throw std::invalid_argument("cannot parse complex value: " + s);
    return {re, im};
}

/// --colorK accepts "k,e,m" (real kappa, real epsilon, branch) or
/// "kre,kim,ere,eim,m".
std::pair<glink::GStarColor, int> parse_color_flag(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    if (v.size() == 3)
        return {glink::GStarColor(v[0], v[1]), static_cast<int>(v[2])};
    if (v.size() == 5)
        return {glink::GStarColor({v[0], v[1]}, {v[2], v[3]}), static_cast<int>(v[4])};
    throw std::invalid_argument("color must be k,e,m or kre,kim,ere,eim,m");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-cyclic quantum invariants of colored braid closures"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--tolerance", g.tolerance, "comparison tolerance (default 1e-9)");
    app.add_option("--seed", g.seed, "seed for randomized verification suites");
    app.add_option("--output", g.output, "write results to a file instead of stdout");

    std::string job_path;
    int basis_index = 0;
    std::string scale_flag = "1,0";

    auto* inv = app.add_subcommand("invariant", "raw and normalized invariant of a job");
    inv->add_option("jobspec", job_path)->required();
    inv->add_option("--basis-index", basis_index, "which solved basis vector to use");
    inv->add_option("--scale", scale_flag, "scaling of the solved epsilon vector (re,im)");

    auto* solve = app.add_subcommand("solve", "epsilon-nullspace basis for a job");
    solve->add_option("jobspec", job_path)->required();

    auto* ado = app.add_subcommand("ado", "nilpotent specialization (epsilon forced to zero)");
    ado->add_option("jobspec", job_path)->required();

    auto* cmp = app.add_subcommand("compare", "solved colorings against the epsilon=0 value");
    cmp->add_option("jobspec", job_path)->required();

    int rm_N = 4;
    std::string color1, color2;
    bool flip = false;
    auto* rmx = app.add_subcommand("rmatrix", "dump one holonomy operator as JSON");
    rmx->add_option("--N", rm_N, "root order")->required();
    rmx->add_option("--color1", color1, "first strand color k,e,m")->required();
    rmx->add_option("--color2", color2, "second strand color k,e,m")->required();
    rmx->add_flag("--flip", flip, "include the strand exchange");

    std::string suite = "all";
    int verify_N = 4;
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    ver->add_option("--suite", suite,
                    "qnum|ybe|braid|semicyclic|golden4|holonomy|twist|trace|markov|conjecture|all");
    ver->add_option("--N", verify_N, "root order for the N-generic suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) {
            const glink::JobSpec spec = job_from_file(job_path, g);
            const glink::RootContext ctx = glink::make_context(spec.N, spec.tolerance);
            const glink::ColorTuple y =
                resolve_coloring(spec, ctx, basis_index, parse_complex_flag(scale_flag));
            emit(g, dump(invariant_to_json(evaluate_invariant(spec.braid, y, ctx))));
        } else if (solve->parsed()) {
            const glink::JobSpec spec = job_from_file(job_path, g);
            const auto sol = glink::solve_colorings(spec.braid, spec.kappa_by_component,
                                                    spec.branch_by_component, spec.tolerance);
            emit(g, dump(solutions_to_json(sol)));
        } else if (ado->parsed()) {
            const glink::JobSpec spec = job_from_file(job_path, g);
            const glink::RootContext ctx = glink::make_context(spec.N, spec.tolerance);
            const glink::Complex value = glink::ado_invariant(
                spec.braid, spec.kappa_by_component, spec.branch_by_component, ctx);
            emit(g, dump(json{{"ado", glink::complex_to_json(value)}}));
        } else if (cmp->parsed()) {
            const glink::JobSpec spec = job_from_file(job_path, g);
            const glink::RootContext ctx = glink::make_context(spec.N, spec.tolerance);
            std::vector<glink::Complex> scalings = spec.scalings;
            if (scalings.empty())
                scalings = {{1.0, 0.0}, {2.0, 1.0}, {0.1, 0.0}};
            const auto rep = glink::conjecture_compare(
                spec.braid, spec.kappa_by_component, spec.branch_by_component, scalings, ctx);
            emit(g, dump(conjecture_to_json(rep)));
        } else if (rmx->parsed()) {
            const glink::RootContext ctx = glink::make_context(rm_N, g.tolerance);
            const auto [c1, m1] = parse_color_flag(color1);
            const auto [c2, m2] = parse_color_flag(color2);
            const auto op = glink::holonomy_matrix(glink::params_from_color(ctx, c1, m1),
                                                   glink::params_from_color(ctx, c2, m2), flip);
            if (op.condition > 1e8)
                std::cerr << "warning: holonomy operator condition number " << op.condition
                          << " exceeds 1e8\n";
            emit(g, dump(holonomy_to_json(op)));
        } else if (ver->parsed()) {
            glink::verify::Options opt;
            opt.N = verify_N;
            opt.seed = g.seed;
            opt.tol = g.tolerance;
            const auto results = glink::verify::run_suites({suite}, opt);
            emit(g, glink::verify::format_results(results));
            return glink::verify::all_passed(results) ? 0 : kExitVerifyFailed;
        }
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitBadJson;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
