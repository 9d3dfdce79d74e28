#include "opcert/cli.hpp"

#include "opcert/bandop.hpp"
#include "opcert/classes.hpp"
#include "opcert/intertwine.hpp"
#include "opcert/json_io.hpp"
#include "opcert/linalg.hpp"
#include "opcert/random.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace opcert {

namespace {

using nlohmann::json;

OperatorClass parse_class(const std::string& name) {
    if (name == "normal") return OperatorClass::Normal;
    if (name == "hyponormal") return OperatorClass::Hyponormal;
    if (name == "paranormal") return OperatorClass::Paranormal;
    if (name == "star-paranormal") return OperatorClass::StarParanormal;
    throw CLI::ValidationError("--class", "unknown class " + name);
}

BandOperator parse_band_operator(const std::string& spec) {
    if (spec == "paper-t") return paper_t();
    const std::string prefix = "shift:";
    if (spec.rfind(prefix, 0) == 0) {
        std::vector<double> weights;
        std::stringstream ss(spec.substr(prefix.size()));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t pos = 0;
                weights.push_back(std::stod(item, &pos));
                if (pos != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw CLI::ValidationError("--op", "bad weight '" + item + "'");
            }
        }
        if (weights.empty()) {
            throw CLI::ValidationError("--op", "shift needs at least one weight");
        }
        return weighted_shift(weights);
    }
    throw CLI::ValidationError("--op", "expected paper-t or shift:w0,w1,...");
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Certified: return kExitOk;
        case Verdict::Refuted: return kExitRefuted;
        case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

int run_check_class(const std::string& input, const std::string& cls_name,
                    int restarts, std::uint64_t seed, double tol,
                    std::ostream& out) {
    const ComplexMatrix t = read_matrix_file(input);
    const OperatorClass cls = parse_class(cls_name);
    SphereOptConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    const ClassCertificate cert = class_check(t, cls, cfg, tol);
    json report = certificate_to_json(cert);
    report["class"] = cls_name;
    report["input"] = input;
    emit(out, report);
    return verdict_exit(cert.verdict);
}

int run_verify_example(Index k, int restarts, std::uint64_t seed,
                       std::ostream& out) {
    const PfReport residuals = verify_counterexample(k);
    const TwoDimHeadReport head = two_dim_head_check(1000, seed);

    SphereOptConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    const BandOperator t = paper_t();
    json sweep = json::array();
    bool sweep_ok = true;
    for (Index kk = 1; kk <= k; ++kk) {
        const SphereMinimum m = support_defect_min(t, OperatorClass::Paranormal, kk, cfg);
        sweep.push_back({{"k", kk}, {"defect", m.value}});
        sweep_ok = sweep_ok && m.value >= -1e-9;
    }

    const bool residuals_ok = residuals.forward_residual <= 1e-14 &&
                              std::abs(residuals.adjoint_residual - 1.0) <= 1e-14;
    const bool pass = residuals_ok && head.pass && sweep_ok;

    json report{{"residuals", {residuals.forward_residual, residuals.adjoint_residual}},
                {"head", head_report_to_json(head)},
                {"sweep", std::move(sweep)},
                {"pass", pass}};
    emit(out, report);
    return pass ? kExitOk : kExitRefuted;
}

int run_band_defect(const std::string& op_spec, const std::string& kind_name,
                    Index k, int restarts, std::uint64_t seed, double tol,
                    std::ostream& out) {
    const BandOperator op = parse_band_operator(op_spec);
    const OperatorClass kind = kind_name == "paranormal"
                                   ? OperatorClass::Paranormal
                                   : OperatorClass::StarParanormal;
    SphereOptConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    const SphereMinimum m = support_defect_min(op, kind, k, cfg);
    json report{{"operator", op.name()},
                {"kind", kind_name},
                {"k", k},
                {"defect", m.value},
                {"witness", vector_to_json(m.argmin)}};
    emit(out, report);
    return m.value >= -tol ? kExitOk : kExitRefuted;
}

int run_gamma_check(const std::string& a_path, const std::string& b_path,
                    int samples, std::uint64_t seed, std::ostream& out) {
    const ComplexMatrix a = read_matrix_file(a_path);
    const ComplexMatrix b = read_matrix_file(b_path);
    const Superoperator gamma(a, b);

    double action_residual = 0.0;
    {
        Rng rng(mix_seed(seed, 0xac70));
        for (int s = 0; s < samples; ++s) {
            ComplexMatrix x = rng.ginibre(a.rows(), b.rows());
            x /= hs_norm(x);
            const ComplexVector lhs = vec(gamma.apply(x));
            const ComplexVector rhs = gamma.matrix_rep() * vec(x);
            action_residual = std::max(
                action_residual, (lhs - rhs).norm() / (1.0 + lhs.norm()));
        }
    }
    const double adjoint_residual = gamma_adjoint_check(a, b, samples, seed);
    const double adjoint_bound =
        1e-10 * (1.0 + operator_norm(a) * operator_norm(b));
    const bool pass = action_residual <= 1e-10 && adjoint_residual <= adjoint_bound;

    json report{{"action_residual", action_residual},
                {"adjoint_residual", adjoint_residual},
                {"samples", samples},
                {"pass", pass}};
    emit(out, report);
    return pass ? kExitOk : kExitRefuted;
}

int run_pf_test(const std::string& a_path, std::uint64_t seed, int trials,
                std::ostream& out) {
    const ComplexMatrix a = read_matrix_file(a_path);
    json trial_reports = json::array();
    int violations = 0;
    for (int i = 0; i < trials; ++i) {
        const PfTrialResult trial = pf_theorem_trial(a, mix_seed(seed, i));
        json reports = json::array();
        for (const PfReport& r : trial.reports) {
            reports.push_back(pf_report_to_json(r));
            if (r.adjoint_residual > 1e-8 * r.x_norm) ++violations;
        }
        trial_reports.push_back({{"reports", std::move(reports)},
                                 {"star_verdict", to_string(trial.star_verdict)},
                                 {"diagnostic", trial.diagnostic}});
    }
    json report{{"trials", std::move(trial_reports)}, {"violations", violations}};
    emit(out, report);
    return violations == 0 ? kExitOk : kExitRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Operator-class certification and intertwining workbench"};
    app.require_subcommand(1);

    // check-class
    auto* check = app.add_subcommand("check-class", "Certify or refute class membership");
    std::string input, cls_name;
    int restarts = 64;
    std::uint64_t seed = 0;
    double tol = kDefaultCertifyTol;
    check->add_option("--input", input, "matrix JSON file")->required();
    check->add_option("--class", cls_name, "operator class")
        ->required()
        ->check(CLI::IsMember({"normal", "hyponormal", "paranormal", "star-paranormal"}));
    check->add_option("--restarts", restarts, "optimizer restarts");
    check->add_option("--seed", seed, "optimizer seed");
    check->add_option("--tol", tol, "certification tolerance");

    // verify-example
    auto* verify = app.add_subcommand("verify-example", "Verify the counterexample and paranormality sweep");
    Index verify_k = 40;
    int verify_restarts = 64;
    std::uint64_t verify_seed = 0;
    verify->add_option("--k", verify_k, "section size / sweep bound");
    verify->add_option("--restarts", verify_restarts, "optimizer restarts");
    verify->add_option("--seed", verify_seed, "optimizer seed");

    // band-defect
    auto* band = app.add_subcommand("band-defect", "Defect of a banded operator on a finite support");
    std::string op_spec, kind_name;
    Index band_k = 8;
    int band_restarts = 64;
    std::uint64_t band_seed = 0;
    double band_tol = 1e-9;
    band->add_option("--op", op_spec, "paper-t or shift:w0,w1,...")->required();
    band->add_option("--kind", kind_name, "defect kind")
        ->required()
        ->check(CLI::IsMember({"paranormal", "star-paranormal"}));
    band->add_option("--k", band_k, "support length")->check(CLI::PositiveNumber);
    band->add_option("--restarts", band_restarts, "optimizer restarts");
    band->add_option("--seed", band_seed, "optimizer seed");
    band->add_option("--tol", band_tol, "nonnegativity tolerance");

    // gamma-check
    auto* gamma = app.add_subcommand("gamma-check", "Superoperator action and adjoint checks");
    std::string a_path, b_path;
    int samples = 20;
    std::uint64_t gamma_seed = 0;
    gamma->add_option("--a", a_path, "matrix JSON file")->required();
    gamma->add_option("--b", b_path, "matrix JSON file")->required();
    gamma->add_option("--samples", samples, "random sample count")->check(CLI::PositiveNumber);
    gamma->add_option("--seed", gamma_seed, "sampling seed");

    // pf-test
    auto* pf = app.add_subcommand("pf-test", "Intertwining theorem trials");
    std::string pf_a_path;
    std::uint64_t pf_seed = 0;
    int pf_trials = 1;
    pf->add_option("--a", pf_a_path, "matrix JSON file")->required();
    pf->add_option("--seed", pf_seed, "trial seed");
    pf->add_option("--trials", pf_trials, "number of seeded trials")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << app.help() << "\n";
        if (e.get_exit_code() != 0) err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) {
            return run_check_class(input, cls_name, restarts, seed, tol, out);
        }
        if (verify->parsed()) {
            return run_verify_example(verify_k, verify_restarts, verify_seed, out);
        }
        if (band->parsed()) {
            return run_band_defect(op_spec, kind_name, band_k, band_restarts,
                                   band_seed, band_tol, out);
        }
        if (gamma->parsed()) {
            return run_gamma_check(a_path, b_path, samples, gamma_seed, out);
        }
        if (pf->parsed()) {
            return run_pf_test(pf_a_path, pf_seed, pf_trials, out);
        }
    } catch (const JsonFormatError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DimensionError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NotHermitianError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    err << app.help() << "\n";
    return kExitUsage;
}

}  // namespace opcert
