#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cgg/graph.hpp"

namespace cgg {

// Eigenvalues of the normalized Laplacian, ascending.
struct Spectrum {
    std::vector<double> eigenvalues;

    std::size_t size() const noexcept { return eigenvalues.size(); }
};

// I - D^{-1/2} A D^{-1/2}, with D^{-1/2} taken as 0 for isolated nodes
// (their row and column are all zero).
Eigen::MatrixXd normalized_laplacian(const Graph& g);

// Throws ConvergenceFailure if the symmetric eigensolver does not converge.
Spectrum spectrum(const Graph& g);

// sqrt(Σ (λ_i - λ'_i)^2 / N). Throws LengthMismatch.
double spectral_distance(const Spectrum& a, const Spectrum& b);

// Mean of spectral_distance over all unordered pairs. Throws TooFewGraphs for fewer than two.
double ensemble_diversity(std::span<const Spectrum> spectra);

// Symmetric matrix of pairwise distances.
std::vector<std::vector<double>> distance_matrix(std::span<const Spectrum> spectra);

}  // namespace cgg
