#pragma once

#include <span>
#include <vector>

#include "rigidity/invariant.hpp"

namespace rigidity {

/// S^k(cos theta) x S^{4-k}(sin theta) inside the unit 5-sphere.
struct CliffordSpec {
    int k = 1;
    double theta = 0.0;

    /// The minimal member of the family: tan^2 theta = k / (4 - k).
    static CliffordSpec minimal(int k);
    /// tan^2 theta - k / (4 - k).
    double minimality_residual() const;
};

/// cot theta with multiplicity k, -tan theta with multiplicity 4 - k, sorted
/// descending. Throws NonMinimalSpec if |minimality_residual| > 1e-12.
CurvatureVector<double> clifford_curvatures(const CliffordSpec& spec);

/// A point on the profile curve r(z) of a rotation hypersurface of R^5.
struct ProfileState {
    double z = 0.0;
    double r = 0.0;
    double rp = 0.0;  // dr/dz
};

/// Right-hand side of the minimality ODE r'' = 3 (1 + r'^2) / r.
double catenoid_rpp(double r, double rp);

/// r^3 / sqrt(1 + r'^2); constant along solutions of the profile ODE.
double catenoid_first_integral(const ProfileState& st);

/// Classical RK4 with fixed step h from (0, r0, 0) to z_max.
///
/// The generalized catenoid in R^5 has a vertical asymptote at
/// z ~ 0.7011 r0, so long runs end in IntegrationBlowup. A step is treated as
/// a blowup when the state goes non-finite or the first integral drifts by
/// more than 1e-6 relative; the error reports the last valid z.
std::vector<ProfileState> catenoid_integrate(double r0, double z_max, double h);

/// Rotational curvature 1 / (r sqrt(1 + r'^2)) three times and profile
/// curvature -r'' / (1 + r'^2)^{3/2}, sorted descending. Positive rotational
/// curvature at the neck.
CurvatureVector<double> profile_curvatures(const ProfileState& st);

struct SurfaceSample {
    std::vector<double> params;
    CurvatureVector<double> curvatures;
    double area_weight = 0.0;
};

/// Product-grid samples over both sphere factors. Each weight is the exact
/// measure of its grid cell, so the weights sum to the total area.
std::vector<SurfaceSample> clifford_samples(const CliffordSpec& spec, int resolution);

/// Exact area of the Clifford product: |S^k| cos^k theta |S^{4-k}| sin^{4-k} theta.
double clifford_area(const CliffordSpec& spec);

/// One sample per profile state with weight r^3 sqrt(1 + r'^2) vol(S^3) times
/// the trapezoid width in z (params = {z}).
std::vector<SurfaceSample> catenoid_samples(std::span<const ProfileState> profile);

/// sum_i w_i (c |lambda_i|^4 - sum lambda_i^4): the negative of s integrated.
/// Throws InvalidArgument on a negative weight.
double energy_quadrature(std::span<const SurfaceSample> samples, const RigidityFunctional& f);

}  // namespace rigidity
