#include "chorded/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace chorded {

namespace {

constexpr double kConvergeTol = 1e-12;
constexpr double kResidualTol = 1e-9;
constexpr long kMaxIterations = 1000000;

// Power iteration on (A + I) restricted to one connected component.
// Returns the component's Perron value of A and its unit eigenvector.
std::pair<double, std::vector<double>> component_perron(const Graph& g,
                                                        const std::vector<int>& comp,
                                                        long& iterations) {
    size_t c = comp.size();
    if (c == 1) return {0.0, {1.0}};
    std::vector<std::vector<int>> nbrs(c);
    {
        std::vector<int> local(g.order(), -1);
        for (size_t i = 0; i < c; ++i) local[comp[i]] = static_cast<int>(i);
        for (size_t i = 0; i < c; ++i) {
            const Bitset& nb = g.neighbors(comp[i]);
            for (int w = nb.next(0); w != -1; w = nb.next(w + 1))
                nbrs[i].push_back(local[w]);
        }
    }
    std::vector<double> x(c, 1.0 / std::sqrt(static_cast<double>(c))), y(c);
    double lambda = 0.0;  // Rayleigh estimate for A + I
    for (long it = 1; it <= kMaxIterations; ++it) {
        for (size_t i = 0; i < c; ++i) {
            double s = x[i];
            for (int j : nbrs[i]) s += x[j];
            y[i] = s;
        }
        double rayleigh = 0.0, norm2 = 0.0;
        for (size_t i = 0; i < c; ++i) {
            rayleigh += x[i] * y[i];
            norm2 += y[i] * y[i];
        }
        double nrm = std::sqrt(norm2);
        for (size_t i = 0; i < c; ++i) x[i] = y[i] / nrm;
        bool settled = std::abs(rayleigh - lambda) <= kConvergeTol;
        lambda = rayleigh;
        if (settled) {
            // Residual of A x = (lambda - 1) x in the infinity norm.
            double res = 0.0;
            for (size_t i = 0; i < c; ++i) {
                double s = 0.0;
                for (int j : nbrs[i]) s += x[j];
                res = std::max(res, std::abs(s - (lambda - 1.0) * x[i]));
            }
            if (res <= kResidualTol) {
                iterations += it;
                return {lambda - 1.0, x};
            }
        }
    }
    throw std::runtime_error("spectral_radius: power iteration did not converge");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g) {
    SpectralResult r;
    if (g.order() == 0) return r;
    auto comps = g.components();
    long iterations = 0;
    std::vector<double> best_vec;
    double best = -1.0;
    for (const auto& comp : comps) {
        auto [rho, vec] = component_perron(g, comp, iterations);
        if (rho > best) {
            best = rho;
            best_vec = std::move(vec);
        }
    }
    r.rho = best;
    r.iterations = iterations;
    if (comps.size() == 1) {
        r.perron = std::move(best_vec);
        double res = 0.0;
        for (int v = 0; v < g.order(); ++v) {
            double s = 0.0;
            const Bitset& nb = g.neighbors(v);
            for (int w = nb.next(0); w != -1; w = nb.next(w + 1)) s += (*r.perron)[w];
            res = std::max(res, std::abs(s - r.rho * (*r.perron)[v]));
        }
        r.residual = res;
    }
    return r;
}

std::vector<double> perron_vector(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("perron_vector: empty graph");
    if (!g.is_connected()) throw std::invalid_argument("perron_vector: graph not connected");
    return *spectral_radius(g).perron;
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<int>>& parts) {
    std::vector<int> owner(g.order(), -1);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) throw std::invalid_argument("quotient_matrix: empty part");
        for (int v : parts[i]) {
            if (v < 0 || v >= g.order() || owner[v] != -1)
                throw std::invalid_argument("quotient_matrix: parts must partition V(G)");
            owner[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (owner[v] == -1)
            throw std::invalid_argument("quotient_matrix: parts must cover V(G)");

    size_t p = parts.size();
    QuotientMatrix q;
    q.entries.assign(p, std::vector<double>(p, 0.0));
    q.equitable = true;
    for (size_t i = 0; i < p; ++i) {
        q.part_sizes.push_back(static_cast<int>(parts[i].size()));
        for (size_t j = 0; j < p; ++j) {
            int first = -1;
            long long total = 0;
            for (int v : parts[i]) {
                int d = 0;
                for (int w : parts[j]) d += (v != w && g.has_edge(v, w)) ? 1 : 0;
                if (first == -1) first = d;
                else if (d != first) q.equitable = false;
                total += d;
            }
            q.entries[i][j] = static_cast<double>(total) / static_cast<double>(parts[i].size());
        }
    }
    return q;
}

double matrix_spectral_radius(const std::vector<std::vector<double>>& m) {
    size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("matrix_spectral_radius: not square");
        for (double e : row)
            if (e < 0.0) throw std::invalid_argument("matrix_spectral_radius: negative entry");
    }
    if (n == 0) return 0.0;
    if (n == 1) return m[0][0];
    if (n == 2) {
        double tr = m[0][0] + m[1][1];
        double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        return (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det))) / 2.0;
    }
    // Shifted power iteration; Collatz-Wielandt ratio bounds give the stop test.
    std::vector<double> x(n, 1.0), y(n);
    double lambda = 0.0;
    for (long it = 0; it < kMaxIterations; ++it) {
        double lo = 1e308, hi = 0.0, nrm = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double s = x[i];
            for (size_t j = 0; j < n; ++j) s += m[i][j] * x[j];
            y[i] = s;
            if (x[i] > 0.0) {
                lo = std::min(lo, s / x[i]);
                hi = std::max(hi, s / x[i]);
            }
            nrm = std::max(nrm, s);
        }
        if (nrm == 0.0) return 0.0;
        for (size_t i = 0; i < n; ++i) x[i] = y[i] / nrm;
        lambda = (lo + hi) / 2.0;
        if (hi - lo <= 1e-13 * std::max(1.0, hi)) return lambda - 1.0;
    }
    return lambda - 1.0;
}

double theta(int m) {
    if (m < 4 || m > 8) throw std::invalid_argument("theta: m must be 4..8");
    int t = m / 3;
    auto f = [&](double x) {
        return ((x - 1.0) * x + (t - m)) * x + (m - 3 * t);
    };
    double lo = std::sqrt(static_cast<double>(m)), hi = m;
    // f(sqrt(m)) < 0 (theta(m) > sqrt(m) for m <= 8) and f(m) > 0.
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        double mid = (lo + hi) / 2.0;
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2.0;
}

double threshold(ThresholdKind kind, long long m, int k) {
    if (kind == ThresholdKind::chorded) {
        if (m < 4) throw std::invalid_argument("threshold: chorded requires m >= 4");
        return m <= 8 ? theta(static_cast<int>(m)) : std::sqrt(static_cast<double>(m));
    }
    if (k < 2) throw std::invalid_argument("threshold: k_chorded requires k >= 2");
    long long disc = 4 * m - static_cast<long long>(k) * k + 1;
    if (disc < 0) throw std::invalid_argument("threshold: k_chorded requires 4m >= k^2 - 1");
    return (k - 1 + std::sqrt(static_cast<double>(disc))) / 2.0;
}

}  // namespace chorded
