#include "opcert/intertwine.hpp"

#include "opcert/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace opcert {

namespace {

void require_square(const ComplexMatrix& m, const char* op) {
    if (m.rows() != m.cols()) {
        throw DimensionError(std::string(op) + ": matrix must be square, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_gamma_shapes(const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& x, const char* op) {
    require_square(a, op);
    require_square(b, op);
    if (x.rows() != a.cols() || x.cols() != b.rows()) {
        throw DimensionError(std::string(op) + ": X must be " +
                             std::to_string(a.cols()) + "x" + std::to_string(b.rows()) +
                             ", got " + std::to_string(x.rows()) + "x" +
                             std::to_string(x.cols()));
    }
}

void require_unitary(const ComplexMatrix& u, const char* op) {
    require_square(u, op);
    const double defect = unitarity_defect(u);
    if (defect > 1e-10 * static_cast<double>(u.cols())) {
        throw PreconditionError(std::string(op) + ": operator is not numerically unitary (defect " +
                                std::to_string(defect) + ")");
    }
}

// Smallest right singular direction of m.
ComplexVector smallest_singular_vector(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    return svd.matrixV().col(m.cols() - 1);
}

}  // namespace

Superoperator::Superoperator(ComplexMatrix a, ComplexMatrix b)
    : a_(std::move(a)), b_(std::move(b)) {
    require_square(a_, "Superoperator");
    require_square(b_, "Superoperator");
}

Superoperator::Superoperator(const Superoperator& other)
    : a_(other.a_), b_(other.b_) {
    std::lock_guard<std::mutex> lock(other.rep_mutex_);
    if (other.rep_) rep_ = std::make_unique<const ComplexMatrix>(*other.rep_);
}

Superoperator& Superoperator::operator=(const Superoperator& other) {
    if (this == &other) return *this;
    std::unique_ptr<const ComplexMatrix> rep;
    {
        std::lock_guard<std::mutex> lock(other.rep_mutex_);
        if (other.rep_) rep = std::make_unique<const ComplexMatrix>(*other.rep_);
    }
    std::lock_guard<std::mutex> lock(rep_mutex_);
    a_ = other.a_;
    b_ = other.b_;
    rep_ = std::move(rep);
    return *this;
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& x) const {
    return gamma_apply(a_, b_, x);
}

const ComplexMatrix& Superoperator::matrix_rep() const {
    std::lock_guard<std::mutex> lock(rep_mutex_);
    if (!rep_) {
        rep_ = std::make_unique<const ComplexMatrix>(kron(b_.transpose(), a_));
    }
    return *rep_;
}

ComplexMatrix gamma_apply(const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& x) {
    require_gamma_shapes(a, b, x, "gamma_apply");
    return a * x * b;
}

double gamma_adjoint_check(const ComplexMatrix& a, const ComplexMatrix& b,
                           int samples, std::uint64_t seed) {
    if (samples < 1) throw DomainError("gamma_adjoint_check: samples must be >= 1");
    require_square(a, "gamma_adjoint_check");
    require_square(b, "gamma_adjoint_check");
    const ComplexMatrix a_adj = a.adjoint();
    const ComplexMatrix b_adj = b.adjoint();
    Rng rng(mix_seed(seed, 0xad10));
    double max_residual = 0.0;
    for (int s = 0; s < samples; ++s) {
        ComplexMatrix x = rng.ginibre(a.rows(), b.rows());
        ComplexMatrix y = rng.ginibre(a.rows(), b.rows());
        x /= hs_norm(x);
        y /= hs_norm(y);
        const Complex lhs = hs_inner(gamma_apply(a, b, x), y);
        const Complex rhs = hs_inner(x, gamma_apply(a_adj, b_adj, y));
        max_residual = std::max(max_residual, std::abs(lhs - rhs));
    }
    return max_residual;
}

std::vector<ComplexMatrix> solve_intertwiner(const ComplexMatrix& a,
                                             const ComplexMatrix& u,
                                             double rank_tol) {
    require_square(a, "solve_intertwiner");
    require_unitary(u, "solve_intertwiner");
    const Index n = a.rows();
    const Index m = u.rows();
    ComplexMatrix pencil = kron(u.conjugate(), a);
    pencil -= ComplexMatrix::Identity(n * m, n * m);
    std::vector<ComplexMatrix> solutions;
    for (const ComplexVector& v : kernel_basis(pencil, rank_tol)) {
        solutions.push_back(unvec(v, n, m));
    }
    return solutions;
}

PfReport pf_residual(const ComplexMatrix& a, const ComplexMatrix& u,
                     const ComplexMatrix& x) {
    require_gamma_shapes(a, u, x, "pf_residual");
    require_unitary(u, "pf_residual");
    PfReport report;
    report.forward_residual = hs_norm(a * x - x * u);
    report.adjoint_residual = hs_norm(a.adjoint() * x - x * u.adjoint());
    report.x_norm = hs_norm(x);
    return report;
}

EigenAdjointReport eigen_adjoint_check(const ComplexMatrix& t, double tol) {
    require_square(t, "eigen_adjoint_check");
    const Index n = t.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix t_adj = t.adjoint();
    const double scale = std::max(1.0, hs_norm(t));

    EigenAdjointReport report;
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(t, false);
    for (Index c = 0; c < n; ++c) {
        Complex lambda = solver.eigenvalues()(c);
        // The raw eigenvalue of a defective block can be off by sqrt(eps);
        // a couple of Rayleigh refinements through the smallest singular
        // direction tightens the pair to solver precision.
        ComplexVector x;
        double residual = 0.0;
        for (int round = 0; round < 3; ++round) {
            x = smallest_singular_vector(t - lambda * id);
            lambda = x.dot(t * x);
            residual = (t * x - lambda * x).norm();
            if (residual <= 1e-2 * tol) break;
        }
        if (residual > tol) continue;

        // Skip directions already covered by an accepted eigenpair of the
        // same eigenvalue cluster.
        ComplexVector deflated = x;
        for (const EigenPairCheck& seen : report.pairs) {
            if (std::abs(seen.eigenvalue - lambda) <= 1e-6 * scale) {
                deflated -= seen.vector.dot(deflated) * seen.vector;
            }
        }
        if (deflated.norm() <= 1e-6) continue;

        EigenPairCheck check;
        check.eigenvalue = lambda;
        check.eigen_residual = residual;
        check.adjoint_residual = (t_adj * x - std::conj(lambda) * x).norm();
        check.vector = x;
        report.pairs.push_back(std::move(check));
    }
    if (report.pairs.empty()) {
        report.diagnostic = "no eigenpair met the residual tolerance";
    }
    return report;
}

TensorUnitaryReport tensor_unitary_check(const ComplexMatrix& a,
                                         const ComplexMatrix& u, int samples,
                                         const SphereOptConfig& cfg) {
    if (samples < 1) throw DomainError("tensor_unitary_check: samples must be >= 1");
    require_square(a, "tensor_unitary_check");
    require_unitary(u, "tensor_unitary_check");

    TensorUnitaryReport report;
    report.samples = samples;
    const ComplexMatrix tensor = kron(a, u);
    Rng rng(mix_seed(cfg.seed, 0x7e45));

    for (int s = 0; s < samples; ++s) {
        const ComplexVector x = rng.unit_vector(a.rows());
        const ComplexVector y = rng.unit_vector(u.rows());
        const ComplexVector z = kron(x, y);  // product vector x (x) y
        const double f_tensor = defect_value(tensor, OperatorClass::StarParanormal, z);
        const double f_a = defect_value(a, OperatorClass::StarParanormal, x);
        report.max_product_identity_error =
            std::max(report.max_product_identity_error, std::abs(f_tensor - f_a));
    }

    report.a_verdict = class_check(a, OperatorClass::StarParanormal, cfg).verdict;
    report.tensor_verdict = class_check(tensor, OperatorClass::StarParanormal, cfg).verdict;
    report.implication_holds = report.a_verdict != Verdict::Certified ||
                               report.tensor_verdict == Verdict::Certified;

    std::vector<double> lambdas = {0.5, 1.0, 2.0};
    for (int i = 0; i < 2; ++i) lambdas.push_back(0.1 + 9.9 * rng.uniform());
    const auto fam_a = lambda_family_check(a, OperatorClass::StarParanormal, lambdas);
    const auto fam_t = lambda_family_check(tensor, OperatorClass::StarParanormal, lambdas);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        report.max_family_error = std::max(
            report.max_family_error, std::abs(fam_a[i].second - fam_t[i].second));
    }
    return report;
}

PfTrialResult pf_theorem_trial(const ComplexMatrix& a, std::uint64_t seed) {
    require_square(a, "pf_theorem_trial");
    const Index n = a.rows();

    PfTrialResult result;
    SphereOptConfig cfg;
    cfg.seed = mix_seed(seed, 0x5742);
    result.star_verdict =
        class_check(a, OperatorClass::StarParanormal, cfg).verdict;

    Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
    std::vector<Complex> circle_eigs;
    for (Index i = 0; i < n; ++i) {
        const Complex lambda = solver.eigenvalues()(i);
        if (std::abs(std::abs(lambda) - 1.0) > 1e-8) continue;
        bool duplicate = false;
        for (const Complex& seen : circle_eigs) {
            if (std::abs(seen - lambda) <= 1e-10) duplicate = true;
        }
        if (!duplicate) circle_eigs.push_back(lambda);
    }
    if (circle_eigs.empty()) {
        result.diagnostic =
            "no unit-circle eigenvalue: the intertwining equation has only the "
            "trivial solution at this dimension";
        return result;
    }

    for (std::size_t idx = 0; idx < circle_eigs.size(); ++idx) {
        const Complex lambda = circle_eigs[idx];
        Rng rng(mix_seed(seed, 0x1000 + idx));
        // Unitary carrying the shared eigenvalue, hidden by a random basis.
        ComplexVector diag(n);
        diag(0) = lambda / std::abs(lambda);
        for (Index i = 1; i < n; ++i) {
            const double theta = 2.0 * M_PI * rng.uniform();
            diag(i) = Complex(std::cos(theta), std::sin(theta));
        }
        const ComplexMatrix v = rng.haar_unitary(n);
        const ComplexMatrix u = v * diag.asDiagonal() * v.adjoint();

        const auto basis = solve_intertwiner(a, u);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            PfReport report = pf_residual(a, u, basis[j]);
            report.labels["a"] = "input";
            report.labels["u"] = "synthesized-unitary-" + std::to_string(idx);
            report.labels["x"] = "basis-" + std::to_string(j);
            result.reports.push_back(std::move(report));
        }
    }
    if (result.reports.empty()) {
        result.diagnostic = "intertwiner spaces were numerically empty";
    }
    return result;
}

}  // namespace opcert
