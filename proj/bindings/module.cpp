#include "opcert/bandop.hpp"
#include "opcert/classes.hpp"
#include "opcert/intertwine.hpp"
#include "opcert/linalg.hpp"
#include "opcert/random.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace opcert;

namespace {

SphereOptConfig make_config(int restarts, int max_iters, double grad_tol,
                            std::uint64_t seed) {
    SphereOptConfig cfg;
    cfg.restarts = restarts;
    cfg.max_iters = max_iters;
    cfg.grad_tol = grad_tol;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Operator-class certification and intertwining workbench";

    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<NotHermitianError>(m, "NotHermitianError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::enum_<OperatorClass>(m, "OperatorClass")
        .value("Normal", OperatorClass::Normal)
        .value("Hyponormal", OperatorClass::Hyponormal)
        .value("Paranormal", OperatorClass::Paranormal)
        .value("StarParanormal", OperatorClass::StarParanormal);

    py::enum_<Verdict>(m, "Verdict")
        .value("Certified", Verdict::Certified)
        .value("Refuted", Verdict::Refuted)
        .value("Inconclusive", Verdict::Inconclusive);

    py::class_<SphereOptConfig>(m, "SphereOptConfig")
        .def(py::init(&make_config), py::arg("restarts") = 64,
             py::arg("max_iters") = 500, py::arg("grad_tol") = 1e-10,
             py::arg("seed") = 0)
        .def_readwrite("restarts", &SphereOptConfig::restarts)
        .def_readwrite("max_iters", &SphereOptConfig::max_iters)
        .def_readwrite("grad_tol", &SphereOptConfig::grad_tol)
        .def_readwrite("seed", &SphereOptConfig::seed);

    py::class_<OptDiagnostics>(m, "OptDiagnostics")
        .def_readonly("restarts_used", &OptDiagnostics::restarts_used)
        .def_readonly("best_objective", &OptDiagnostics::best_objective)
        .def_readonly("grad_norm", &OptDiagnostics::grad_norm)
        .def_readonly("iterations", &OptDiagnostics::iterations);

    py::class_<SphereMinimum>(m, "SphereMinimum")
        .def_readonly("value", &SphereMinimum::value)
        .def_readonly("argmin", &SphereMinimum::argmin)
        .def_readonly("diagnostics", &SphereMinimum::diagnostics);

    py::class_<ClassCertificate>(m, "ClassCertificate")
        .def_readonly("verdict", &ClassCertificate::verdict)
        .def_readonly("defect", &ClassCertificate::defect)
        .def_readonly("witness", &ClassCertificate::witness)
        .def_readonly("diagnostics", &ClassCertificate::diagnostics);

    py::class_<PfReport>(m, "PfReport")
        .def_readonly("forward_residual", &PfReport::forward_residual)
        .def_readonly("adjoint_residual", &PfReport::adjoint_residual)
        .def_readonly("x_norm", &PfReport::x_norm)
        .def_readonly("labels", &PfReport::labels)
        .def("forward_relative", &PfReport::forward_relative)
        .def("adjoint_relative", &PfReport::adjoint_relative);

    py::class_<EigenPairCheck>(m, "EigenPairCheck")
        .def_readonly("eigenvalue", &EigenPairCheck::eigenvalue)
        .def_readonly("adjoint_residual", &EigenPairCheck::adjoint_residual)
        .def_readonly("eigen_residual", &EigenPairCheck::eigen_residual)
        .def_readonly("vector", &EigenPairCheck::vector);

    py::class_<EigenAdjointReport>(m, "EigenAdjointReport")
        .def_readonly("pairs", &EigenAdjointReport::pairs)
        .def_readonly("diagnostic", &EigenAdjointReport::diagnostic);

    py::class_<TensorUnitaryReport>(m, "TensorUnitaryReport")
        .def_readonly("max_product_identity_error",
                      &TensorUnitaryReport::max_product_identity_error)
        .def_readonly("a_verdict", &TensorUnitaryReport::a_verdict)
        .def_readonly("tensor_verdict", &TensorUnitaryReport::tensor_verdict)
        .def_readonly("implication_holds", &TensorUnitaryReport::implication_holds)
        .def_readonly("max_family_error", &TensorUnitaryReport::max_family_error)
        .def_readonly("samples", &TensorUnitaryReport::samples);

    py::class_<PfTrialResult>(m, "PfTrialResult")
        .def_readonly("reports", &PfTrialResult::reports)
        .def_readonly("star_verdict", &PfTrialResult::star_verdict)
        .def_readonly("diagnostic", &PfTrialResult::diagnostic);

    py::class_<TwoDimHeadReport>(m, "TwoDimHeadReport")
        .def_readonly("samples", &TwoDimHeadReport::samples)
        .def_readonly("max_head_error", &TwoDimHeadReport::max_head_error)
        .def_readonly("min_head_discriminant", &TwoDimHeadReport::min_head_discriminant)
        .def_readonly("max_tail_error", &TwoDimHeadReport::max_tail_error)
        .def_readonly("pass_", &TwoDimHeadReport::pass);

    py::class_<BandOperator>(m, "BandOperator")
        .def(py::init<BandOperator::EntryRule, Index, Index, std::string>(),
             py::arg("entry_rule"), py::arg("lower_bandwidth"),
             py::arg("upper_bandwidth"), py::arg("name"))
        .def("entry", &BandOperator::entry)
        .def("adjoint", &BandOperator::adjoint)
        .def("section", &BandOperator::section, py::arg("k"))
        .def("square_section", &BandOperator::square_section, py::arg("n"))
        .def("apply", &BandOperator::apply, py::arg("coeffs"))
        .def("check_bandwidths", &BandOperator::check_bandwidths, py::arg("limit"))
        .def_property_readonly("lower_bandwidth", &BandOperator::lower_bandwidth)
        .def_property_readonly("upper_bandwidth", &BandOperator::upper_bandwidth)
        .def_property_readonly("name", &BandOperator::name);

    // linalg surface
    m.def("hs_inner", &hs_inner, py::arg("x"), py::arg("y"));
    m.def("hs_norm", &hs_norm, py::arg("x"));
    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def("vec", &vec, py::arg("x"));
    m.def("unvec", &unvec, py::arg("v"), py::arg("rows"), py::arg("cols"));
    m.def("min_eig_hermitian", &min_eig_hermitian, py::arg("h"),
          py::arg("sym_tol") = kDefaultSymTol);
    m.def("kernel_basis", &kernel_basis, py::arg("m"),
          py::arg("rank_tol") = kDefaultRankTol);
    m.def("unitarity_defect", &unitarity_defect, py::arg("u"));

    // class certification surface
    m.def("self_commutator", &self_commutator, py::arg("t"));
    m.def("defect_value", &defect_value, py::arg("t"), py::arg("kind"), py::arg("x"));
    m.def("defect_min", &defect_min, py::arg("t"), py::arg("kind"),
          py::arg("config") = SphereOptConfig{});
    m.def("class_check", &class_check, py::arg("t"), py::arg("cls"),
          py::arg("config") = SphereOptConfig{},
          py::arg("certify_tol") = kDefaultCertifyTol,
          py::arg("refute_margin") = kDefaultRefuteMargin);
    m.def("lambda_family_check", &lambda_family_check, py::arg("t"), py::arg("kind"),
          py::arg("lambdas"));

    // band operator surface
    m.def("paper_t", &paper_t);
    m.def("weighted_shift", &weighted_shift, py::arg("weights"));
    m.def("identity_band", &identity_band);
    m.def("support_defect_min", &support_defect_min, py::arg("op"), py::arg("kind"),
          py::arg("k"), py::arg("config") = SphereOptConfig{});
    m.def("verify_counterexample",
          py::overload_cast<Index>(&verify_counterexample), py::arg("k"));
    m.def("verify_counterexample",
          py::overload_cast<const BandOperator&, Index>(&verify_counterexample),
          py::arg("op"), py::arg("k"));
    m.def("two_dim_head_check", &two_dim_head_check, py::arg("samples"),
          py::arg("seed") = 0);

    // intertwining surface
    m.def("gamma_apply", &gamma_apply, py::arg("a"), py::arg("b"), py::arg("x"));
    m.def("gamma_adjoint_check", &gamma_adjoint_check, py::arg("a"), py::arg("b"),
          py::arg("samples"), py::arg("seed") = 0);
    m.def("solve_intertwiner", &solve_intertwiner, py::arg("a"), py::arg("u"),
          py::arg("rank_tol") = kDefaultRankTol);
    m.def("pf_residual", &pf_residual, py::arg("a"), py::arg("u"), py::arg("x"));
    m.def("eigen_adjoint_check", &eigen_adjoint_check, py::arg("t"),
          py::arg("tol") = 1e-9);
    m.def("tensor_unitary_check", &tensor_unitary_check, py::arg("a"), py::arg("u"),
          py::arg("samples"), py::arg("config") = SphereOptConfig{});
    m.def("pf_theorem_trial", &pf_theorem_trial, py::arg("a"), py::arg("seed"));
}
