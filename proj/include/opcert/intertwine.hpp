#pragma once

#include "opcert/classes.hpp"
#include "opcert/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace opcert {

/// Residual pair for one intertwining trial AX = XU.
struct PfReport {
    double forward_residual = 0.0;  // ||AX - XU||_HS
    double adjoint_residual = 0.0;  // ||A*X - XU*||_HS
    double x_norm = 0.0;            // ||X||_HS
    std::map<std::string, std::string> labels;

    double forward_relative() const {
        return x_norm > 0.0 ? forward_residual / x_norm : 0.0;
    }
    double adjoint_relative() const {
        return x_norm > 0.0 ? adjoint_residual / x_norm : 0.0;
    }
};

/// The map X -> AXB on matrices, with its Kronecker matrix representation
/// kron(B^T, A) under the column-stacking vec convention. The representation
/// is computed on first use; concurrent readers are safe.
class Superoperator {
   public:
    Superoperator(ComplexMatrix a, ComplexMatrix b);
    Superoperator(const Superoperator& other);
    Superoperator& operator=(const Superoperator& other);

    const ComplexMatrix& a() const { return a_; }
    const ComplexMatrix& b() const { return b_; }

    ComplexMatrix apply(const ComplexMatrix& x) const;
    const ComplexMatrix& matrix_rep() const;

   private:
    ComplexMatrix a_;
    ComplexMatrix b_;
    mutable std::mutex rep_mutex_;
    mutable std::unique_ptr<const ComplexMatrix> rep_;
};

/// A * X * B with shape validation.
ComplexMatrix gamma_apply(const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& x);

/// Max over sampled unit pairs (X, Y) of
/// |<AXB, Y> - <X, A*YB*>| in the Hilbert-Schmidt inner product.
double gamma_adjoint_check(const ComplexMatrix& a, const ComplexMatrix& b,
                           int samples, std::uint64_t seed = 0);

/// Orthonormal (Hilbert-Schmidt) basis of the numerical solution space of
/// AX = XU, computed as the kernel of kron(conj(U), A) - I. U must be
/// numerically unitary. Empty when A and U share no unit-circle eigenvalue.
std::vector<ComplexMatrix> solve_intertwiner(const ComplexMatrix& a,
                                             const ComplexMatrix& u,
                                             double rank_tol = kDefaultRankTol);

/// Computes both residuals of the intertwining pair; no verdict is taken.
PfReport pf_residual(const ComplexMatrix& a, const ComplexMatrix& u,
                     const ComplexMatrix& x);

struct EigenPairCheck {
    Complex eigenvalue;
    double adjoint_residual = 0.0;  // ||T*x - conj(lambda) x||
    double eigen_residual = 0.0;    // ||Tx - lambda x||
    ComplexVector vector;
};

struct EigenAdjointReport {
    std::vector<EigenPairCheck> pairs;
    std::string diagnostic;  // set when no eigenpair met the tolerance
};

/// For every numerically obtained unit eigenpair (lambda, x) of T with
/// ||Tx - lambda x|| <= tol, reports ||T*x - conj(lambda) x||.
EigenAdjointReport eigen_adjoint_check(const ComplexMatrix& t, double tol = 1e-9);

struct TensorUnitaryReport {
    double max_product_identity_error = 0.0;
    Verdict a_verdict = Verdict::Inconclusive;
    Verdict tensor_verdict = Verdict::Inconclusive;
    bool implication_holds = true;  // a certified => kron(a,u) certified
    double max_family_error = 0.0;
    int samples = 0;
};

/// Checks that tensoring with a unitary preserves the star-paranormal
/// structure: product-vector identity for the defect functional, verdict
/// propagation to kron(A, U), and collapse of the lambda family.
TensorUnitaryReport tensor_unitary_check(const ComplexMatrix& a,
                                         const ComplexMatrix& u, int samples,
                                         const SphereOptConfig& cfg = {});

struct PfTrialResult {
    std::vector<PfReport> reports;
    Verdict star_verdict = Verdict::Inconclusive;
    std::string diagnostic;
};

/// Synthesizes unitaries sharing a unit-circle eigenvalue with A, solves the
/// intertwiner space for each, and reports both residuals for every basis
/// element. Empty (with a diagnostic) when A has no unit-circle eigenvalue.
PfTrialResult pf_theorem_trial(const ComplexMatrix& a, std::uint64_t seed);

}  // namespace opcert
