#include "opcert/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <string>

namespace opcert {

namespace {

void require_same_shape(const ComplexMatrix& x, const ComplexMatrix& y,
                        const char* op) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch (" +
                             std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                             " vs " + std::to_string(y.rows()) + "x" +
                             std::to_string(y.cols()) + ")");
    }
}

void require_square(const ComplexMatrix& m, const char* op) {
    if (m.rows() != m.cols()) {
        throw DimensionError(std::string(op) + ": matrix must be square, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

// Symmetrize after checking the deviation is within tolerance.
ComplexMatrix hermitian_part_checked(const ComplexMatrix& h, double sym_tol,
                                     const char* op) {
    require_square(h, op);
    const double defect = hs_norm(h - h.adjoint());
    if (defect > sym_tol * (1.0 + hs_norm(h))) {
        throw NotHermitianError(std::string(op) + ": symmetry defect " +
                                std::to_string(defect) + " exceeds tolerance");
    }
    return 0.5 * (h + h.adjoint());
}

}  // namespace

Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_shape(x, y, "hs_inner");
    return y.conjugate().cwiseProduct(x).sum();
}

double hs_norm(const ComplexMatrix& x) { return x.norm(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b);
}

ComplexVector vec(const ComplexMatrix& x) {
    return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols) {
    if (v.size() != rows * cols) {
        throw DimensionError("unvec: vector length " + std::to_string(v.size()) +
                             " does not equal " + std::to_string(rows) + "*" +
                             std::to_string(cols));
    }
    return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

double min_eig_hermitian(const ComplexMatrix& h, double sym_tol) {
    const ComplexMatrix sym = hermitian_part_checked(h, sym_tol, "min_eig_hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

EigPair min_eig_hermitian_pair(const ComplexMatrix& h, double sym_tol) {
    const ComplexMatrix sym = hermitian_part_checked(h, sym_tol, "min_eig_hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    EigPair pair;
    pair.value = solver.eigenvalues()(0);
    pair.vector = solver.eigenvectors().col(0);
    pair.vector /= pair.vector.norm();
    return pair;
}

std::vector<ComplexVector> kernel_basis(const ComplexMatrix& m, double rank_tol) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    std::vector<ComplexVector> basis;
    for (Index i = 0; i < m.cols(); ++i) {
        const double sigma = i < sv.size() ? sv(i) : 0.0;
        if (sigma <= rank_tol * sigma_max) {
            basis.push_back(svd.matrixV().col(i));
        }
    }
    return basis;
}

double unitarity_defect(const ComplexMatrix& u) {
    require_square(u, "unitarity_defect");
    return hs_norm(u.adjoint() * u -
                   ComplexMatrix::Identity(u.cols(), u.cols()));
}

double operator_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

}  // namespace opcert
