#pragma once

#include "opcert/matrix.hpp"

#include <cstdint>
#include <random>

namespace opcert {

/// Derives a decorrelated seed for a numbered stream (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded source of the standard test ensembles: Ginibre matrices, Haar-like
/// unitaries via QR, and normal matrices by unitary conjugation of a random
/// diagonal.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double gaussian() { return normal_(eng_); }
    double uniform() { return unif_(eng_); }
    Complex cgaussian();

    ComplexVector unit_vector(Index n);
    ComplexMatrix ginibre(Index rows, Index cols);
    ComplexMatrix haar_unitary(Index n);
    /// U diag(d) U* with i.i.d. complex Gaussian d and Haar-like U.
    ComplexMatrix normal_matrix(Index n);
    /// As normal_matrix but with the given spectrum.
    ComplexMatrix normal_matrix_with_spectrum(const ComplexVector& spectrum);

   private:
    std::mt19937_64 eng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

}  // namespace opcert
