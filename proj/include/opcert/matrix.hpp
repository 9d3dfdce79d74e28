#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace opcert {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Coefficients of an l2 vector supported on finitely many leading coordinates.
// The tail beyond the stored length is exactly zero.
using SupportVector = Eigen::VectorXcd;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline ComplexMatrix matrix_unit(Index rows, Index cols, Index i, Index j) {
    ComplexMatrix m = ComplexMatrix::Zero(rows, cols);
    m(i, j) = Complex(1.0, 0.0);
    return m;
}

}  // namespace opcert
