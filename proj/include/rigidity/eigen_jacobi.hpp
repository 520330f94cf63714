#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rigidity {

struct JacobiOptions {
    int max_sweeps = 100;
    double rel_tolerance = 1e-13;  // off-diagonal Frobenius norm relative to the inf-norm
};

struct JacobiResult {
    std::vector<double> eigenvalues;   // sorted descending
    std::vector<double> eigenvectors;  // column k pairs with eigenvalues[k], row-major n x n
    int sweeps = 0;
    double off_diagonal = 0.0;
};

/// Cyclic Jacobi diagonalization of a symmetric n x n row-major matrix.
/// Throws ConvergenceError (carrying the off-diagonal residual) when the
/// sweep cap is hit.
JacobiResult jacobi_eigen(std::span<const double> matrix, std::size_t n, const JacobiOptions& opts = {});

}  // namespace rigidity
