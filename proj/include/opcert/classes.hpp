#pragma once

#include "opcert/linalg.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace opcert {

enum class OperatorClass { Normal, Hyponormal, Paranormal, StarParanormal };

enum class Verdict { Certified, Refuted, Inconclusive };

const char* to_string(OperatorClass cls);
const char* to_string(Verdict v);

inline constexpr double kDefaultCertifyTol = 1e-9;
inline constexpr double kDefaultRefuteMargin = 1e-6;

struct SphereOptConfig {
    int restarts = 64;
    int max_iters = 500;
    double grad_tol = 1e-10;
    double initial_step = 1.0;
    double step_shrink = 0.5;
    double sufficient_decrease = 1e-4;
    std::uint64_t seed = 0;
};

struct OptDiagnostics {
    int restarts_used = 0;
    double best_objective = 0.0;
    double grad_norm = 0.0;  // tangent gradient norm at the reported minimizer
    int iterations = 0;      // iterations spent by the winning restart
};

struct SphereMinimum {
    double value = 0.0;
    ComplexVector argmin;
    OptDiagnostics diagnostics;
};

/// Minimizes x*Gx - (x*Bx)^2 over the unit sphere by seeded multi-start
/// projected gradient descent. G and B are treated as Hermitian. The result
/// never exceeds the objective at any sampled start; ties between restarts
/// resolve to the lowest restart index.
SphereMinimum minimize_quartic_on_sphere(const ComplexMatrix& g,
                                         const ComplexMatrix& b,
                                         const SphereOptConfig& cfg);

/// T*T - TT*.
ComplexMatrix self_commutator(const ComplexMatrix& t);

/// Defect functional f(x) = ||T^2 x||^2 - b(x)^2 at a unit vector, with
/// b(x) = ||Tx||^2 (Paranormal) or ||T*x||^2 (StarParanormal). Membership in
/// the class is equivalent to f >= 0 on the sphere.
double defect_value(const ComplexMatrix& t, OperatorClass kind, const ComplexVector& x);

/// Euclidean gradient of the defect functional, 2*(T*^2T^2)x - 4*b(x)*Bx.
ComplexVector defect_gradient(const ComplexMatrix& t, OperatorClass kind,
                              const ComplexVector& x);

/// Best found minimum of the defect functional over the unit sphere.
SphereMinimum defect_min(const ComplexMatrix& t, OperatorClass kind,
                         const SphereOptConfig& cfg = {});

struct ClassCertificate {
    Verdict verdict = Verdict::Inconclusive;
    double defect = 0.0;
    std::optional<ComplexVector> witness;  // present iff Refuted
    OptDiagnostics diagnostics;
};

/// Certifies or refutes membership of T in the given class.
///   Normal:        defect = ||T*T - TT*||_HS, certified iff <= certify_tol.
///   Hyponormal:    defect = min eig of the self-commutator, certified iff
///                  >= -certify_tol.
///   Paranormal / StarParanormal: defect = defect_min value.
/// Refuted carries a unit witness whose defect functional value is below
/// -refute_margin; verdicts between the two thresholds are Inconclusive.
ClassCertificate class_check(const ComplexMatrix& t, OperatorClass cls,
                             const SphereOptConfig& cfg = {},
                             double certify_tol = kDefaultCertifyTol,
                             double refute_margin = kDefaultRefuteMargin);

/// Minimum eigenvalue of T*^2T^2 - 2*lambda*B + lambda^2 I for each lambda,
/// B = T*T (Paranormal) or TT* (StarParanormal). All lambdas must be > 0.
std::vector<std::pair<double, double>> lambda_family_check(
    const ComplexMatrix& t, OperatorClass kind, const std::vector<double>& lambdas);

}  // namespace opcert
