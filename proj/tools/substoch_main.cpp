// substoch: batch front end for substochastic operator analysis over
// plain-text matrix/vector files.
//
// Exit codes: 0 success / all properties pass, 1 property failure or cone
// rejection, 2 usage, parse, or precondition errors.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "substoch/applications.hpp"
#include "substoch/cone.hpp"
#include "substoch/inequalities.hpp"
#include "substoch/io.hpp"
#include "substoch/kernel_bridge.hpp"
#include "substoch/transforms.hpp"

using namespace substoch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct OperatorArgs {
    std::string matrix_path;
    std::string weights_path;  // empty: counting measure, all weights 1
};

void add_operator_options(CLI::App* cmd, OperatorArgs& args) {
    cmd->add_option("--matrix", args.matrix_path, "matrix file (header: matrix <n> <m>)")
        ->required();
    cmd->add_option("--weights", args.weights_path,
                    "weights file (header: weights <n>); defaults to all ones");
}

PositiveOperator load_operator(const OperatorArgs& args) {
    const ParsedMatrix m = parse_matrix_file(args.matrix_path);
    if (m.rows != m.cols)
        throw ParseError(args.matrix_path + ":1: operator matrix must be square, got " +
                         std::to_string(m.rows) + "x" + std::to_string(m.cols));
    SpacePtr space;
    if (args.weights_path.empty()) {
        space = uniform_space(m.rows);
    } else {
        auto w = parse_weights_file(args.weights_path);
        if (w.size() != m.rows)
            throw ParseError(args.weights_path + ":1: " + std::to_string(w.size()) +
                             " weights for a " + std::to_string(m.rows) + "x" +
                             std::to_string(m.cols) + " matrix");
        space = make_space(std::move(w));
    }
    return PositiveOperator(space, m.entries);
}

PositiveVector load_vector(const std::string& path, const SpacePtr& space) {
    auto v = parse_vector_file(path);
    if (v.size() != space->size())
        throw ParseError(path + ":1: vector has " + std::to_string(v.size()) +
                         " entries, expected " + std::to_string(space->size()));
    return PositiveVector(space, std::move(v));
}

int run_classify(const OperatorArgs& op_args, double tol) {
    const auto S = load_operator(op_args);
    std::cout << to_string(classify(S, tol)) << "\n";
    print_vector(std::cout, column_mass(S));
    return kExitOk;
}

int report_rejection(const ConeRejection& r) {
    if (r.reason == ConeRejection::Reason::NotStrictlyPositive)
        std::cout << "REJECTED not strictly positive at index " << (r.index + 1) << "\n";
    else
        std::cout << "REJECTED Sf exceeds f at index " << (r.index + 1) << " by "
                  << format_number(r.violation) << "\n";
    return kExitFailure;
}

int run_check_cone(const OperatorArgs& op_args, const std::string& vector_path, double tol) {
    const auto S = load_operator(op_args);
    const auto f = load_vector(vector_path, S.space());
    const auto check = in_cone(S, f, tol);
    if (!accepted(check)) return report_rejection(rejection(check));
    std::cout << "ACCEPTED\n";
    print_vector(std::cout, certificate(check).slack);
    return kExitOk;
}

int run_complete(const OperatorArgs& op_args, const std::string& vector_path, double tol) {
    const auto S = load_operator(op_args);
    const auto f = load_vector(vector_path, S.space());
    const auto check = in_cone(S, f, tol);
    if (!accepted(check)) return report_rejection(rejection(check));
    print_completion(std::cout, stochastic_completion(S, certificate(check)));
    return kExitOk;
}

int run_combine(const OperatorArgs& op_args, const std::vector<std::string>& vector_paths,
                std::vector<double> alphas, double tol) {
    const auto S = load_operator(op_args);
    std::vector<ConeCertificate> certs;
    for (const auto& path : vector_paths) {
        const auto check = in_cone(S, load_vector(path, S.space()), tol);
        if (!accepted(check)) {
            std::cout << path << ": ";
            return report_rejection(rejection(check));
        }
        certs.push_back(certificate(check));
    }
    if (alphas.empty())
        alphas.assign(certs.size(), 1.0 / static_cast<double>(certs.size()));
    const auto combined = log_convex_combine(S, certs, alphas);
    print_vector(std::cout, combined.f);
    return kExitOk;
}

int run_verify(const TrialConfig& config) {
    const auto reports = run_property_suite(config);
    bool all_pass = true;
    for (const auto& r : reports) {
        std::cout << format_report(r) << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitFailure;
}

int run_spectral(const OperatorArgs& op_args, std::size_t iters, double tol) {
    const auto S = load_operator(op_args);
    const auto est = spectral_radius(S, iters, tol);
    if (est.converged) {
        std::cout << "rho=" << format_number(est.value) << " converged=true\n";
    } else {
        const double gelfand = spectral_radius_gelfand(S);
        std::cout << "rho=" << format_number(gelfand)
                  << " converged=false power_estimate=" << format_number(est.value) << "\n";
    }
    return kExitOk;
}

int run_resolvent(const OperatorArgs& op_args, const std::string& vector_path, double lambda) {
    const auto S = load_operator(op_args);
    const auto f = load_vector(vector_path, S.space());
    print_vector(std::cout, resolvent_apply(S, lambda, f));
    return kExitOk;
}

int run_exp(const OperatorArgs& op_args, const std::string& vector_path) {
    const auto S = load_operator(op_args);
    const auto f = load_vector(vector_path, S.space());
    print_vector(std::cout, exp_apply(S, f));
    return kExitOk;
}

int run_leontief(const OperatorArgs& op_args, const std::string& vector_path, bool with_impact,
                 double tol) {
    const Economy economy{load_operator(op_args), {}, tol};
    const auto demand = load_vector(vector_path, economy.technology.space());
    print_vector(std::cout, leontief_solve(economy, demand));
    if (with_impact) print_matrix(std::cout, impact_matrix(economy));
    return kExitOk;
}

int run_pagerank(const OperatorArgs& op_args, const std::string& vector_path, double tol) {
    const auto S = load_operator(op_args);
    const auto births = load_vector(vector_path, S.space());
    print_vector(std::cout, pagerank_solve(S, births, tol));
    return kExitOk;
}

int run_kernel_demo(const std::string& kernel, std::size_t grid_n,
                    const std::vector<std::size_t>& refine) {
    const auto spec = KernelSpec::named(kernel, grid_n);
    if (!refine.empty()) {
        const auto rows = refinement_study(spec, refine);
        for (const auto& row : rows)
            std::cout << "n=" << row.n
                      << " colmass-error=" << format_number(row.column_mass_error)
                      << " worst-violation=" << format_number(row.worst_violation) << "\n";
        return kExitOk;
    }
    const auto disc = discretize(spec);
    const StochClass cls = classify(disc.op);
    std::cout << to_string(cls) << "\n";
    print_vector(std::cout, column_mass(disc.op));
    if (cls == StochClass::StrictlySubstochastic ||
        cls == StochClass::SubstochasticNotStochastic) {
        print_completion(std::cout, completion_demo(spec));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"substochastic operator toolkit: wedge membership, stochastic completion, "
                 "inequality certification, series transforms, and application solvers"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --tol after the subcommand name too

    double tol = kDefaultTol;
    app.add_option("--tol", tol, "comparison tolerance (default 1e-12)")
        ->capture_default_str();

    OperatorArgs classify_args;
    auto* cmd_classify =
        app.add_subcommand("classify", "classify column masses of an operator");
    add_operator_options(cmd_classify, classify_args);

    OperatorArgs cone_args;
    std::string cone_vector;
    auto* cmd_cone = app.add_subcommand("check-cone", "test membership of f in the wedge C(S)");
    add_operator_options(cmd_cone, cone_args);
    cmd_cone->add_option("--vector", cone_vector, "candidate vector file")->required();

    OperatorArgs complete_args;
    std::string complete_vector;
    auto* cmd_complete =
        app.add_subcommand("complete", "stochastic completion fixing a cone element");
    add_operator_options(cmd_complete, complete_args);
    cmd_complete->add_option("--vector", complete_vector, "cone element file")->required();

    OperatorArgs combine_args;
    std::vector<std::string> combine_vectors;
    std::vector<double> combine_alphas;
    auto* cmd_combine =
        app.add_subcommand("combine", "entrywise geometric mean of cone elements");
    add_operator_options(cmd_combine, combine_args);
    cmd_combine->add_option("--vectors", combine_vectors, "cone element files")
        ->required()
        ->delimiter(',');
    cmd_combine->add_option("--alphas", combine_alphas, "exponents (default: equal weights)")
        ->delimiter(',');

    TrialConfig verify_config;
    double verify_tol = 1e-10;
    auto* cmd_verify =
        app.add_subcommand("verify", "run the randomized inequality certification suite");
    cmd_verify->add_option("--seed", verify_config.seed, "base seed")->capture_default_str();
    cmd_verify->add_option("--trials", verify_config.trials, "trials per property")
        ->capture_default_str();
    cmd_verify->add_option("--n-min", verify_config.n_min, "smallest dimension")
        ->capture_default_str();
    cmd_verify->add_option("--n-max", verify_config.n_max, "largest dimension")
        ->capture_default_str();
    cmd_verify->add_option("--m-min", verify_config.m_min, "smallest tuple length")
        ->capture_default_str();
    cmd_verify->add_option("--m-max", verify_config.m_max, "largest tuple length")
        ->capture_default_str();
    cmd_verify->add_option("--tol", verify_tol, "violation tolerance (default 1e-10)")
        ->capture_default_str();

    OperatorArgs spectral_args;
    std::size_t spectral_iters = 1000;
    auto* cmd_spectral = app.add_subcommand("spectral", "spectral radius estimate");
    add_operator_options(cmd_spectral, spectral_args);
    cmd_spectral->add_option("--iters", spectral_iters, "power iteration budget")
        ->capture_default_str();

    OperatorArgs resolvent_args;
    std::string resolvent_vector;
    double resolvent_lambda = 1.0;
    auto* cmd_resolvent = app.add_subcommand("resolvent", "apply (lambda I - S)^-1");
    add_operator_options(cmd_resolvent, resolvent_args);
    cmd_resolvent->add_option("--vector", resolvent_vector, "input vector file")->required();
    cmd_resolvent->add_option("--lambda", resolvent_lambda, "shift, must exceed rho(S)")
        ->capture_default_str();

    OperatorArgs exp_args;
    std::string exp_vector;
    auto* cmd_exp = app.add_subcommand("exp", "apply exp(S)");
    add_operator_options(cmd_exp, exp_args);
    cmd_exp->add_option("--vector", exp_vector, "input vector file")->required();

    OperatorArgs leontief_args;
    std::string leontief_vector;
    bool leontief_impact = false;
    auto* cmd_leontief = app.add_subcommand("leontief", "open Leontief supply solve");
    add_operator_options(cmd_leontief, leontief_args);
    cmd_leontief->add_option("--vector", leontief_vector, "demand vector file")->required();
    cmd_leontief->add_flag("--impact", leontief_impact, "also print the impact matrix");

    OperatorArgs pagerank_args;
    std::string pagerank_vector;
    auto* cmd_pagerank = app.add_subcommand("pagerank", "steady state of the birth-death surf");
    add_operator_options(cmd_pagerank, pagerank_args);
    cmd_pagerank->add_option("--vector", pagerank_vector, "births vector file")->required();

    std::string kernel_name = "const:0.5";
    std::size_t kernel_n = 16;
    std::vector<std::size_t> kernel_refine;
    auto* cmd_kernel =
        app.add_subcommand("kernel-demo", "discretize a kernel on [0,1] and complete it");
    cmd_kernel->add_option("--kernel", kernel_name, "const:<c>, sum, product, or quadratic")
        ->capture_default_str();
    cmd_kernel->add_option("--n", kernel_n, "quadrature nodes")->capture_default_str();
    cmd_kernel->add_option("--refine", kernel_refine, "grid sizes for a refinement table")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_classify)) return run_classify(classify_args, tol);
        if (app.got_subcommand(cmd_cone)) return run_check_cone(cone_args, cone_vector, tol);
        if (app.got_subcommand(cmd_complete))
            return run_complete(complete_args, complete_vector, tol);
        if (app.got_subcommand(cmd_combine))
            return run_combine(combine_args, combine_vectors, combine_alphas, tol);
        if (app.got_subcommand(cmd_verify)) {
            verify_config.tol = verify_tol;
            return run_verify(verify_config);
        }
        if (app.got_subcommand(cmd_spectral))
            return run_spectral(spectral_args, spectral_iters, tol);
        if (app.got_subcommand(cmd_resolvent))
            return run_resolvent(resolvent_args, resolvent_vector, resolvent_lambda);
        if (app.got_subcommand(cmd_exp)) return run_exp(exp_args, exp_vector);
        if (app.got_subcommand(cmd_leontief))
            return run_leontief(leontief_args, leontief_vector, leontief_impact, tol);
        if (app.got_subcommand(cmd_pagerank))
            return run_pagerank(pagerank_args, pagerank_vector, tol);
        if (app.got_subcommand(cmd_kernel))
            return run_kernel_demo(kernel_name, kernel_n, kernel_refine);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
