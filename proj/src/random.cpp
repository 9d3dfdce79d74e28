#include "opcert/random.hpp"

#include <Eigen/QR>

#include <cmath>

namespace opcert {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Complex Rng::cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) / std::sqrt(2.0);
}

ComplexVector Rng::unit_vector(Index n) {
    ComplexVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = cgaussian();
    const double norm = v.norm();
    if (norm == 0.0) {
        v.setZero();
        v(0) = Complex(1.0, 0.0);
        return v;
    }
    return v / norm;
}

ComplexMatrix Rng::ginibre(Index rows, Index cols) {
    ComplexMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = cgaussian();
    return m;
}

ComplexMatrix Rng::haar_unitary(Index n) {
    const ComplexMatrix g = ginibre(n, n);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is Haar.
    for (Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= a > 0.0 ? d / a : Complex(1.0, 0.0);
    }
    return q;
}

ComplexMatrix Rng::normal_matrix(Index n) {
    ComplexVector d(n);
    for (Index i = 0; i < n; ++i) d(i) = cgaussian();
    return normal_matrix_with_spectrum(d);
}

ComplexMatrix Rng::normal_matrix_with_spectrum(const ComplexVector& spectrum) {
    const Index n = spectrum.size();
    const ComplexMatrix u = haar_unitary(n);
    return u * spectrum.asDiagonal() * u.adjoint();
}

}  // namespace opcert
