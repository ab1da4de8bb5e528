#ifndef CHORDED_SPECTRAL_HPP
#define CHORDED_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "chorded/graph.hpp"

namespace chorded {

struct SpectralResult {
    double rho = 0.0;
    std::optional<std::vector<double>> perron;  // present iff connected, n >= 1
    double residual = 0.0;                      // ||A x - rho x||_inf
    long iterations = 0;
};

// Spectral radius of the adjacency matrix: max over connected components
// of the component Perron value. Power iteration runs on A + I per
// component (the shift removes bipartite sign oscillation) with a
// Rayleigh-quotient estimate; converged when the estimate moves by at
// most 1e-12 between sweeps and the residual is at most 1e-9.
// Throws std::runtime_error after 1e6 iterations without convergence.
SpectralResult spectral_radius(const Graph& g);

// Unit positive eigenvector for rho(G). Throws if g is empty or disconnected.
std::vector<double> perron_vector(const Graph& g);

struct QuotientMatrix {
    std::vector<std::vector<double>> entries;  // b_ij
    std::vector<int> part_sizes;
    bool equitable = false;
};

// b_ij = average number of neighbors in part j per vertex of part i.
// The partition must cover V(G) exactly once with nonempty parts.
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<int>>& parts);

// Perron root of a small dense nonnegative square matrix (closed form for
// sizes 1 and 2, shifted power iteration with Collatz-Wielandt bounds above).
double matrix_spectral_radius(const std::vector<std::vector<double>>& m);

// Largest root of x^3 - x^2 + (t-m)x + m - 3t with t = floor(m/3),
// for 4 <= m <= 8; bracketed in [sqrt(m), m], accurate to 1e-12.
double theta(int m);

enum class ThresholdKind { chorded, k_chorded };

// chorded: theta(m) for m <= 8, sqrt(m) for m >= 9 (requires m >= 4).
// k_chorded: (k - 1 + sqrt(4m - k^2 + 1)) / 2 (requires k >= 2, 4m >= k^2 - 1).
double threshold(ThresholdKind kind, long long m, int k = 0);

}  // namespace chorded

#endif
