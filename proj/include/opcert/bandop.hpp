#pragma once

#include "opcert/classes.hpp"
#include "opcert/intertwine.hpp"
#include "opcert/matrix.hpp"

#include <functional>
#include <string>
#include <vector>

namespace opcert {

/// Rule-defined operator on l2 with finite bandwidth. Entries vanish outside
/// the band i - lower <= j <= i + upper, so rectangular sections act exactly
/// on finitely supported vectors.
class BandOperator {
   public:
    using EntryRule = std::function<Complex(Index, Index)>;

    BandOperator(EntryRule rule, Index lower_bandwidth, Index upper_bandwidth,
                 std::string name);

    Complex entry(Index i, Index j) const { return rule_(i, j); }
    Index lower_bandwidth() const { return lower_; }
    Index upper_bandwidth() const { return upper_; }
    const std::string& name() const { return name_; }

    BandOperator adjoint() const;

    /// The (k + lower) x k block realizing the operator exactly on vectors
    /// supported on the first k coordinates.
    ComplexMatrix section(Index k) const;

    /// Plain n x n truncation; exact only where the band permits.
    ComplexMatrix square_section(Index n) const;

    /// Exact image of a finitely supported vector; the result has support
    /// length k + lower.
    SupportVector apply(const SupportVector& h) const;

    /// Throws if the rule produces a nonzero entry outside the declared band;
    /// indices are spot-checked up to the given limit.
    void check_bandwidths(Index limit) const;

   private:
    EntryRule rule_;
    Index lower_;
    Index upper_;
    std::string name_;
};

/// The paper's operator: (x0, x1, x2, ...) -> (x0+x1, x1, x1, sqrt(8)x2, ...).
BandOperator paper_t();

/// Unilateral weighted shift e_i -> w_i e_{i+1}. Indices beyond the supplied
/// list reuse the last weight.
BandOperator weighted_shift(const std::vector<double>& weights);

BandOperator identity_band();

/// Best found minimum of the defect functional over unit vectors supported on
/// the first k coordinates, with norms computed exactly via rectangular
/// sections.
SphereMinimum support_defect_min(const BandOperator& op, OperatorClass kind,
                                 Index k, const SphereOptConfig& cfg = {});

/// Reproduces the rank-one intertwining counterexample at section size k + 1:
/// P the projection onto span{e0}, U the identity. The residual pair is
/// (||TP - PU||_HS, ||T*P - PU*||_HS), exactly (0, 1) for the paper operator.
PfReport verify_counterexample(const BandOperator& op, Index k);
PfReport verify_counterexample(Index k);

struct TwoDimHeadReport {
    int samples = 0;
    double max_head_error = 0.0;        // section computation vs head expansion
    double min_head_discriminant = 0.0; // min over samples of c*a - b^2
    double max_tail_error = 0.0;        // tail quadratic vs (lambda - 8)^2
    bool pass = false;
};

/// Verifies the orthogonal head/tail decomposition for the paper operator:
/// the two-coordinate head quadratic recomputed from exact sections, its
/// positivity over random samples, and the tail identity (lambda - 8)^2.
TwoDimHeadReport two_dim_head_check(int samples, std::uint64_t seed = 0);

}  // namespace opcert
