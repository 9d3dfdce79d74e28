#include "opcert/bandop.hpp"

#include "opcert/linalg.hpp"
#include "opcert/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace opcert {

BandOperator::BandOperator(EntryRule rule, Index lower_bandwidth,
                           Index upper_bandwidth, std::string name)
    : rule_(std::move(rule)),
      lower_(lower_bandwidth),
      upper_(upper_bandwidth),
      name_(std::move(name)) {
    if (lower_ < 0 || upper_ < 0) {
        throw DomainError("BandOperator: bandwidths must be nonnegative");
    }
}

BandOperator BandOperator::adjoint() const {
    EntryRule rule = rule_;
    return BandOperator(
        [rule](Index i, Index j) { return std::conj(rule(j, i)); },
        upper_, lower_, name_ + "*");
}

ComplexMatrix BandOperator::section(Index k) const {
    if (k < 1) throw DomainError("section: k must be >= 1");
    ComplexMatrix m(k + lower_, k);
    for (Index j = 0; j < k; ++j)
        for (Index i = 0; i < k + lower_; ++i) m(i, j) = rule_(i, j);
    return m;
}

ComplexMatrix BandOperator::square_section(Index n) const {
    if (n < 1) throw DomainError("square_section: n must be >= 1");
    ComplexMatrix m(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i) m(i, j) = rule_(i, j);
    return m;
}

SupportVector BandOperator::apply(const SupportVector& h) const {
    const Index k = h.size();
    if (k < 1) throw DomainError("apply: empty support");
    return section(k) * h;
}

void BandOperator::check_bandwidths(Index limit) const {
    for (Index i = 0; i < limit; ++i) {
        for (Index j = 0; j < limit; ++j) {
            if (j < i - lower_ || j > i + upper_) {
                if (rule_(i, j) != Complex(0.0, 0.0)) {
                    throw DomainError(name_ + ": nonzero entry (" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      ") escapes the declared band");
                }
            }
        }
    }
}

BandOperator paper_t() {
    auto rule = [](Index i, Index j) -> Complex {
        if (i == 0 && j == 0) return 1.0;
        if (i == 0 && j == 1) return 1.0;
        if (i == 1 && j == 1) return 1.0;
        if (i == 2 && j == 1) return 1.0;
        if (j >= 2 && i == j + 1) return std::sqrt(8.0);
        return 0.0;
    };
    return BandOperator(rule, 1, 1, "paper-t");
}

BandOperator weighted_shift(const std::vector<double>& weights) {
    if (weights.empty()) {
        throw DomainError("weighted_shift: at least one weight required");
    }
    auto rule = [weights](Index i, Index j) -> Complex {
        if (i != j + 1) return 0.0;
        const auto idx = std::min<Index>(j, static_cast<Index>(weights.size()) - 1);
        return weights[static_cast<std::size_t>(idx)];
    };
    return BandOperator(rule, 1, 0, "weighted-shift");
}

BandOperator identity_band() {
    return BandOperator([](Index i, Index j) -> Complex { return i == j ? 1.0 : 0.0; },
                        0, 0, "identity");
}

SphereMinimum support_defect_min(const BandOperator& op, OperatorClass kind,
                                 Index k, const SphereOptConfig& cfg) {
    if (k < 1) throw DomainError("support_defect_min: k must be >= 1");
    if (kind != OperatorClass::Paranormal && kind != OperatorClass::StarParanormal) {
        throw DomainError("support_defect_min: kind must be paranormal or star-paranormal");
    }
    const Index lower = op.lower_bandwidth();
    // op^2 realized exactly on k-supported vectors via stacked sections.
    const ComplexMatrix s1 = op.section(k);
    const ComplexMatrix s2 = op.section(k + lower);
    const ComplexMatrix sq = s2 * s1;
    const ComplexMatrix g = sq.adjoint() * sq;

    ComplexMatrix b;
    if (kind == OperatorClass::Paranormal) {
        b = s1.adjoint() * s1;
    } else {
        // ||op* h|| needs the adjoint band, whose lower bandwidth is the
        // original upper bandwidth.
        const ComplexMatrix sa = op.adjoint().section(k);
        b = sa.adjoint() * sa;
    }
    return minimize_quartic_on_sphere(g, b, cfg);
}

PfReport verify_counterexample(const BandOperator& op, Index k) {
    if (k < 3) throw DomainError("verify_counterexample: k must be >= 3");
    const Index n = k + 1;
    const ComplexMatrix t = op.square_section(n);
    const ComplexMatrix p = matrix_unit(n, n, 0, 0);
    const ComplexMatrix u = ComplexMatrix::Identity(n, n);
    PfReport report = pf_residual(t, u, p);
    report.labels["a"] = op.name() + "-section";
    report.labels["u"] = "identity";
    report.labels["x"] = "e0-projection";
    return report;
}

PfReport verify_counterexample(Index k) { return verify_counterexample(paper_t(), k); }

TwoDimHeadReport two_dim_head_check(int samples, std::uint64_t seed) {
    if (samples < 1) throw DomainError("two_dim_head_check: samples must be >= 1");
    const BandOperator t = paper_t();
    Rng rng(mix_seed(seed, 0x2d11));

    TwoDimHeadReport report;
    report.samples = samples;
    report.min_head_discriminant = std::numeric_limits<double>::infinity();

    for (int s = 0; s < samples; ++s) {
        const ComplexVector h = rng.unit_vector(2);
        const Complex alpha = h(0);
        const Complex beta = h(1);
        const double lambda = std::exp2(-3.0 + 7.0 * rng.uniform());

        const SupportVector th = t.apply(h);
        const SupportVector t2h = t.apply(th);
        const double a2 = h.squaredNorm();
        const double b2 = th.squaredNorm();
        const double c2 = t2h.squaredNorm();

        // Head quadratic from exact sections vs the recomputed expansion.
        const double q_section = c2 - 2.0 * lambda * b2 + lambda * lambda * a2;
        const double q_head = std::norm(alpha + 2.0 * beta) + 10.0 * std::norm(beta) -
                              2.0 * lambda * (std::norm(alpha + beta) + 2.0 * std::norm(beta)) +
                              lambda * lambda * (std::norm(alpha) + std::norm(beta));
        report.max_head_error =
            std::max(report.max_head_error, std::abs(q_section - q_head));

        // Minimum of the head quadratic over lambda is nonnegative iff
        // c*a - b^2 >= 0.
        report.min_head_discriminant =
            std::min(report.min_head_discriminant, c2 * a2 - b2 * b2);
    }

    // Tail identity: for n >= 2 the per-coordinate quadratic is (lambda-8)^2.
    const double lambdas[] = {1.0, 4.0, 8.0, 16.0};
    for (Index n = 2; n <= 20; ++n) {
        SupportVector en = SupportVector::Zero(n + 1);
        en(n) = Complex(1.0, 0.0);
        const SupportVector ten = t.apply(en);
        const SupportVector t2en = t.apply(ten);
        for (double lambda : lambdas) {
            const double q = t2en.squaredNorm() - 2.0 * lambda * ten.squaredNorm() +
                             lambda * lambda;
            const double expected = (lambda - 8.0) * (lambda - 8.0);
            report.max_tail_error =
                std::max(report.max_tail_error, std::abs(q - expected));
        }
    }

    report.pass = report.max_head_error <= 1e-12 &&
                  report.min_head_discriminant >= -1e-12 &&
                  report.max_tail_error <= 1e-12;
    return report;
}

}  // namespace opcert
