#include "rigidity/maximizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "rigidity/errors.hpp"

namespace rigidity {
namespace {

double norm(std::span<const double> v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return std::sqrt(sum);
}

bool better(double value, std::span<const double> point, double best_value, std::span<const double> best_point) {
    if (value != best_value) return value > best_value;
    return std::lexicographical_compare(point.begin(), point.end(), best_point.begin(), best_point.end());
}

}  // namespace

void OptimizerConfig::validate() const {
    if (num_starts < 1) throw InvalidArgument("num_starts must be >= 1");
    if (!(grad_tolerance > 0.0)) throw InvalidArgument("grad_tolerance must be positive");
    if (!(step_shrink > 0.0 && step_shrink < 1.0)) throw InvalidArgument("step_shrink must lie in (0, 1)");
    if (!(step_init > 0.0)) throw InvalidArgument("step_init must be positive");
    if (max_iters < 0) throw InvalidArgument("max_iters must be non-negative");
}

CurvatureVector<double> project_to_constraints(std::span<const double> x) {
    if (x.size() < 2) throw InvalidArgument("projection needs at least 2 entries");
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    std::vector<double> out(x.begin(), x.end());
    for (double& v : out) v -= mean;
    const double len = norm(out);
    if (!(len >= 1e-300)) throw DegenerateDirection("centered vector has zero norm; resample the direction");
    for (double& v : out) v /= len;
    return CurvatureVector<double>(std::move(out));
}

std::vector<double> riemannian_gradient(const CurvatureVector<double>& x, const RigidityFunctional& f) {
    std::vector<double> g = gradient_s(x, f);
    double mean = 0.0;
    for (double v : g) mean += v;
    mean /= static_cast<double>(g.size());
    for (double& v : g) v -= mean;
    double radial = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) radial += g[i] * x[i];
    for (std::size_t i = 0; i < g.size(); ++i) g[i] -= radial * x[i];
    return g;
}

AscentResult ascend(const RigidityFunctional& f, const CurvatureVector<double>& start, const OptimizerConfig& cfg,
                    const AscentObserver& observer) {
    cfg.validate();
    if (start.size() != static_cast<std::size_t>(f.n()))
        throw DimensionMismatch("start has " + std::to_string(start.size()) + " entries, functional expects " +
                                std::to_string(f.n()));
    if (std::fabs(start.trace()) > 1e-10 || std::fabs(start.norm_sq() - 1.0) > 1e-10)
        throw InvalidArgument("ascent start must lie on the constraint sphere");

    const std::size_t n = start.size();
    // Below this the trial point equals x to rounding; nothing left to gain.
    const double min_step = cfg.step_init * 1e-20;

    AscentResult res;
    res.point = start;
    res.value = evaluate_s(start, f);
    if (observer) observer(res.point, res.value);
    const double start_value = res.value;

    std::vector<double> g = riemannian_gradient(res.point, f);
    std::vector<double> trial(n);
    while (true) {
        res.grad_norm = norm(g);
        if (res.grad_norm <= cfg.grad_tolerance) {
            res.converged = true;
            break;
        }
        if (res.iterations >= cfg.max_iters) break;

        bool accepted = false;
        for (double step = cfg.step_init; step >= min_step; step *= cfg.step_shrink) {
            for (std::size_t i = 0; i < n; ++i) trial[i] = res.point[i] + step * g[i];
            CurvatureVector<double> next = project_to_constraints(trial);
            const double value = evaluate_s(next, f);
            if (value >= res.value - kAscentSlack) {
                res.point = std::move(next);
                res.value = value;
                accepted = true;
                break;
            }
        }
        ++res.iterations;
        if (!accepted) break;  // numerical fixed point short of the tolerance
        if (observer) observer(res.point, res.value);
        g = riemannian_gradient(res.point, f);
    }

    if (res.value < start_value - kAscentSlack) {
        res.point = start;
        res.value = start_value;
    }
    return res;
}

MaximizeResult multi_start_maximize(const RigidityFunctional& f, const OptimizerConfig& cfg) {
    cfg.validate();
    const std::size_t n = static_cast<std::size_t>(f.n());
    constexpr int kResampleLimit = 16;

    MaximizeResult out;
    bool have_best = false;
    for (int start = 0; start < cfg.num_starts; ++start) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(start)};
        std::mt19937_64 gen(seq);
        std::normal_distribution<double> normal(0.0, 1.0);

        CurvatureVector<double> x;
        bool ok = false;
        for (int attempt = 0; attempt < kResampleLimit && !ok; ++attempt) {
            std::vector<double> raw(n);
            for (double& v : raw) v = normal(gen);
            try {
                x = project_to_constraints(raw);
                ok = true;
            } catch (const DegenerateDirection&) {
            }
        }
        if (!ok) continue;

        AscentResult r = ascend(f, x, cfg);
        out.iterations_total += r.iterations;
        std::vector<double> point(r.point.entries().begin(), r.point.entries().end());
        if (!have_best || better(r.value, point, out.best_value, out.best_point.entries())) {
            out.best_value = r.value;
            out.best_point = r.point;
            have_best = true;
        }
        out.local_maxima.push_back({std::move(point), r.value, start, r.converged});
    }
    if (!have_best) throw NumericalError("degenerate-starts", "every start direction was degenerate");
    return out;
}

SharpConstantResult sharp_constant(int n, const OptimizerConfig& cfg) {
    if (n < 2) throw InvalidArgument("sharp constant needs n >= 2");
    // On the unit sphere s_c = sum x^4 - c, so any positive c has the same maximizers.
    const RigidityFunctional f(n, Rational(1));
    MaximizeResult best = multi_start_maximize(f, cfg);

    double p2 = 0.0, p4 = 0.0;
    for (double x : best.best_point.entries()) {
        p2 += x * x;
        p4 += x * x * x * x;
    }
    SharpConstantResult out;
    out.n = n;
    out.value = p4 / (p2 * p2);
    out.maximizer = best.best_point;
    out.partition = partition_signature(best.best_point, 1e-6);
    return out;
}

Rational sharp_constant_candidate(int n) {
    if (n < 2) throw InvalidArgument("sharp constant needs n >= 2");
    const long m = n - 1;
    return make_rational(1 + m * m * m, static_cast<long>(n) * n * m);
}

}  // namespace rigidity
