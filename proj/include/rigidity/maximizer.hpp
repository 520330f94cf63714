#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rigidity/invariant.hpp"

namespace rigidity {

struct OptimizerConfig {
    int num_starts = 100;
    std::uint64_t seed = 42;
    double step_init = 0.1;
    double step_shrink = 0.5;
    double grad_tolerance = 1e-12;
    int max_iters = 100000;

    /// Throws InvalidArgument if a field is out of range.
    void validate() const;
};

/// Per-step tolerance on the ascent's monotonicity.
inline constexpr double kAscentSlack = 1e-15;

struct AscentResult {
    CurvatureVector<double> point;
    double value = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct LocalMaximum {
    std::vector<double> point;
    double value = 0.0;
    int start_index = 0;
    bool converged = false;
};

struct MaximizeResult {
    double best_value = 0.0;
    CurvatureVector<double> best_point;
    std::vector<LocalMaximum> local_maxima;
    std::int64_t iterations_total = 0;
};

struct SharpConstantResult {
    int n = 0;
    double value = 0.0;
    CurvatureVector<double> maximizer;
    std::vector<int> partition;
};

/// Centers x and rescales it onto {sum x = 0, |x| = 1}. Throws
/// DegenerateDirection when the centered vector is numerically zero.
CurvatureVector<double> project_to_constraints(std::span<const double> x);

/// Gradient of s_c with its components along 1 and x removed.
std::vector<double> riemannian_gradient(const CurvatureVector<double>& x, const RigidityFunctional& f);

/// Observer sees every accepted iterate (the start included).
using AscentObserver = std::function<void(const CurvatureVector<double>&, double)>;

/// Projected gradient ascent with backtracking from a feasible start.
AscentResult ascend(const RigidityFunctional& f, const CurvatureVector<double>& start, const OptimizerConfig& cfg,
                    const AscentObserver& observer = {});

/// Start i draws standard normal entries from a generator seeded by
/// (cfg.seed, i), so the result does not depend on evaluation order.
MaximizeResult multi_start_maximize(const RigidityFunctional& f, const OptimizerConfig& cfg);

/// max of sum x^4 on the unit trace-free sphere: the smallest c for which
/// s_c <= 0 on every trace-free vector.
SharpConstantResult sharp_constant(int n, const OptimizerConfig& cfg);

/// (1 + (n-1)^3) / (n^2 (n-1)), the value at the (n-1, 1) direction.
Rational sharp_constant_candidate(int n);

}  // namespace rigidity
