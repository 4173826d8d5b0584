#include "cgg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cgg/errors.hpp"

namespace cgg {

Eigen::MatrixXd normalized_laplacian(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.num_nodes());
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> inv_sqrt(g.num_nodes(), 0.0);
    for (Node x = 0; x < g.num_nodes(); ++x) {
        if (g.degree(x) == 0) continue;
        inv_sqrt[x] = 1.0 / std::sqrt(static_cast<double>(g.degree(x)));
        lap(x, x) = 1.0;
    }
    for (const Edge& e : g.edges()) {
        const double w = -inv_sqrt[e.u] * inv_sqrt[e.v];
        lap(e.u, e.v) = w;
        lap(e.v, e.u) = w;
    }
    return lap;
}

Spectrum spectrum(const Graph& g) {
    Spectrum out;
    if (g.num_nodes() == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized_laplacian(g), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("normalized Laplacian eigensolver did not converge (n=" +
                                 std::to_string(g.num_nodes()) + ")");
    const auto& values = solver.eigenvalues();
    out.eigenvalues.assign(values.data(), values.data() + values.size());
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

double spectral_distance(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size())
        throw LengthMismatch("spectra have different lengths: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    if (a.size() == 0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a.eigenvalues[i] - b.eigenvalues[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

double ensemble_diversity(std::span<const Spectrum> spectra) {
    const std::size_t count = spectra.size();
    if (count < 2) throw TooFewGraphs("ensemble diversity needs at least two graphs, got " + std::to_string(count));
    double total = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) total += spectral_distance(spectra[i], spectra[j]);
    return total / (static_cast<double>(count) * static_cast<double>(count - 1) / 2.0);
}

std::vector<std::vector<double>> distance_matrix(std::span<const Spectrum> spectra) {
    const std::size_t count = spectra.size();
    std::vector<std::vector<double>> out(count, std::vector<double>(count, 0.0));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            out[i][j] = out[j][i] = spectral_distance(spectra[i], spectra[j]);
        }
    }
    return out;
}

}  // namespace cgg
