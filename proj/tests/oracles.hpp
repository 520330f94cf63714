// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

/// s_c written out term by term in long double.
inline long double s_value(const std::vector<double>& x, long double c) {
    long double p2 = 0, p4 = 0;
    for (double v : x) {
        long double sq = static_cast<long double>(v) * v;
        p2 += sq;
        p4 += sq * sq;
    }
    return p4 - c * p2 * p2;
}

/// Central differences with step h.
inline std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                       const std::vector<double>& x, double h = 1e-6) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<double> up = x, down = x;
        up[i] += h;
        down[i] -= h;
        g[i] = (f(up) - f(down)) / (2.0 * h);
    }
    return g;
}

inline std::vector<double> random_trace_free(std::mt19937_64& gen, std::size_t n, double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x(n);
    double mean = 0.0;
    for (double& v : x) {
        v = scale * normal(gen);
        mean += v;
    }
    // two passes: the first can leave a residual of a few ulps of the raw entries
    for (int pass = 0; pass < 2; ++pass) {
        mean /= static_cast<double>(n);
        for (double& v : x) v -= mean;
        mean = 0.0;
        for (double v : x) mean += v;
    }
    return x;
}

inline std::vector<double> random_unit_trace_free(std::mt19937_64& gen, std::size_t n) {
    std::vector<double> x = random_trace_free(gen, n);
    double len = 0.0;
    for (double v : x) len += v * v;
    len = std::sqrt(len);
    for (double& v : x) v /= len;
    return x;
}

/// Random orthogonal matrix (row-major) from Gram-Schmidt on Gaussian columns.
inline std::vector<double> random_orthogonal(std::mt19937_64& gen, std::size_t n) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::vector<double>> cols(n, std::vector<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        for (double& v : cols[k]) v = normal(gen);
        for (std::size_t j = 0; j < k; ++j) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += cols[k][i] * cols[j][i];
            for (std::size_t i = 0; i < n; ++i) cols[k][i] -= dot * cols[j][i];
        }
        double len = 0.0;
        for (double v : cols[k]) len += v * v;
        len = std::sqrt(len);
        for (double& v : cols[k]) v /= len;
    }
    std::vector<double> q(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) q[i * n + k] = cols[k][i];
    return q;
}

/// Q D Q^T for diagonal D.
inline std::vector<double> conjugate_diagonal(const std::vector<double>& q, const std::vector<double>& diag) {
    const std::size_t n = diag.size();
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[i * n + j] += q[i * n + k] * diag[k] * q[j * n + k];
    return out;
}

/// Q A Q^T for a general square matrix.
inline std::vector<double> conjugate(const std::vector<double>& q, const std::vector<double>& a, std::size_t n) {
    std::vector<double> qa(n * n, 0.0), out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) qa[i * n + j] += q[i * n + k] * a[k * n + j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[i * n + j] += qa[i * n + k] * q[j * n + k];
    return out;
}

/// Every partition of n into at most three positive parts by exhaustive search
/// over triples, canonical (descending) form.
inline std::set<std::vector<int>> brute_force_partitions(int n) {
    std::set<std::vector<int>> out;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            for (int c = 0; c <= n; ++c) {
                if (a + b + c != n) continue;
                std::vector<int> p;
                for (int v : {a, b, c})
                    if (v > 0) p.push_back(v);
                std::sort(p.begin(), p.end(), std::greater<>());
                out.insert(p);
            }
    return out;
}

/// Distinct vectors among all permutations of d and -d.
inline std::size_t brute_force_orbit_size(std::vector<long> d) {
    std::set<std::vector<long>> seen;
    for (int sign : {1, -1}) {
        std::vector<long> v = d;
        for (long& x : v) x *= sign;
        std::sort(v.begin(), v.end());
        do {
            seen.insert(v);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return seen.size();
}

/// Smallest max-coordinate distance from x to the orbit of unit vector u
/// under permutations and sign. Sorted matching is optimal for the max-norm.
inline double orbit_distance(std::vector<double> x, const std::vector<double>& u) {
    std::sort(x.begin(), x.end());
    double best = INFINITY;
    for (int sign : {1, -1}) {
        std::vector<double> v = u;
        for (double& t : v) t *= sign;
        std::sort(v.begin(), v.end());
        double worst = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::fabs(x[i] - v[i]));
        best = std::min(best, worst);
    }
    return best;
}

/// Hand expansion for n = 3 with z = -x - y:
///   x^4 + y^4 + (x+y)^4           = 2x^4 + 4x^3y + 6x^2y^2 + 4xy^3 + 2y^4
///   (x^2 + y^2 + (x+y)^2)^2 / 2   = 2x^4 + 4x^3y + 6x^2y^2 + 4xy^3 + 2y^4
/// Coefficients of [x^4, x^3y, x^2y^2, xy^3, y^4].
inline constexpr int kN3QuarticCoeffs[5] = {2, 4, 6, 4, 2};
inline constexpr int kN3HalfSquareCoeffs[5] = {2, 4, 6, 4, 2};

}  // namespace oracle
