#pragma once

#include "opcert/matrix.hpp"

#include <vector>

namespace opcert {

inline constexpr double kDefaultSymTol = 1e-10;
inline constexpr double kDefaultRankTol = 1e-10;

/// Hilbert-Schmidt inner product trace(Y* X); linear in X, antilinear in Y.
Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

/// Hilbert-Schmidt (Frobenius) norm.
double hs_norm(const ComplexMatrix& x);

/// Kronecker product; block (i,j) of the result equals a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column-stacking vectorization: column j of x occupies entries
/// [j*rows, (j+1)*rows).
ComplexVector vec(const ComplexMatrix& x);

/// Inverse of vec; v must have exactly rows*cols entries.
ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols);

/// Smallest eigenvalue of a Hermitian matrix. The input is symmetrized as
/// (H + H*)/2 before solving; it must satisfy
/// ||H - H*||_HS <= sym_tol * (1 + ||H||_HS).
double min_eig_hermitian(const ComplexMatrix& h, double sym_tol = kDefaultSymTol);

struct EigPair {
    double value = 0.0;
    ComplexVector vector;
};

/// Smallest eigenvalue together with a unit eigenvector.
EigPair min_eig_hermitian_pair(const ComplexMatrix& h, double sym_tol = kDefaultSymTol);

/// Orthonormal basis of the numerical null space: right singular directions
/// with singular value <= rank_tol * sigma_max. Empty when none qualify.
std::vector<ComplexVector> kernel_basis(const ComplexMatrix& m,
                                        double rank_tol = kDefaultRankTol);

/// ||U*U - I||_HS, the deviation from unitarity.
double unitarity_defect(const ComplexMatrix& u);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

}  // namespace opcert
