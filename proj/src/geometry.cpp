#include "rigidity/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rigidity/errors.hpp"

namespace rigidity {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinimalityTolerance = 1e-12;
constexpr double kFirstIntegralDrift = 1e-6;

// Cells of a round sphere S^dim(radius) with their exact measures.
struct Cell {
    std::vector<double> angles;
    double measure;
};

std::vector<Cell> sphere_cells(int dim, double radius, int res) {
    std::vector<Cell> cells;
    if (dim == 1) {
        const double d = 2.0 * kPi / res;
        for (int i = 0; i < res; ++i) cells.push_back({{(i + 0.5) * d}, radius * d});
    } else if (dim == 2) {
        // polar bands x azimuth sectors: r^2 (cos a - cos b) dphi
        const double dpolar = kPi / res;
        const double dphi = 2.0 * kPi / (2 * res);
        for (int i = 0; i < res; ++i) {
            const double a = i * dpolar, b = (i + 1) * dpolar;
            const double band = radius * radius * (std::cos(a) - std::cos(b)) * dphi;
            for (int j = 0; j < 2 * res; ++j) cells.push_back({{0.5 * (a + b), (j + 0.5) * dphi}, band});
        }
    } else if (dim == 3) {
        // Hopf coordinates (eta, xi1, xi2): dV = r^3 sin(eta) cos(eta) deta dxi1 dxi2
        const double deta = 0.5 * kPi / res;
        const double dxi = 2.0 * kPi / res;
        for (int i = 0; i < res; ++i) {
            const double a = i * deta, b = (i + 1) * deta;
            const double sa = std::sin(a), sb = std::sin(b);
            const double shell = radius * radius * radius * 0.5 * (sb * sb - sa * sa) * dxi * dxi;
            for (int j = 0; j < res; ++j)
                for (int l = 0; l < res; ++l) cells.push_back({{0.5 * (a + b), (j + 0.5) * dxi, (l + 0.5) * dxi}, shell});
        }
    } else {
        throw InvalidArgument("sphere factor dimension must be 1, 2 or 3");
    }
    return cells;
}

double unit_sphere_volume(int dim) {
    switch (dim) {
        case 1: return 2.0 * kPi;
        case 2: return 4.0 * kPi;
        case 3: return 2.0 * kPi * kPi;
        default: throw InvalidArgument("sphere factor dimension must be 1, 2 or 3");
    }
}

void require_k(int k) {
    if (k < 1 || k > 3) throw InvalidArgument("Clifford factor dimension k must be 1, 2 or 3, got " + std::to_string(k));
}

}  // namespace

CliffordSpec CliffordSpec::minimal(int k) {
    require_k(k);
    return {k, std::atan(std::sqrt(static_cast<double>(k) / (4 - k)))};
}

double CliffordSpec::minimality_residual() const {
    const double t = std::tan(theta);
    return t * t - static_cast<double>(k) / (4 - k);
}

CurvatureVector<double> clifford_curvatures(const CliffordSpec& spec) {
    require_k(spec.k);
    if (!(spec.theta > 0.0 && spec.theta < 0.5 * kPi))
        throw InvalidArgument("Clifford angle must lie in (0, pi/2)");
    const double residual = spec.minimality_residual();
    if (std::fabs(residual) > kMinimalityTolerance)
        throw NonMinimalSpec("Clifford product is not minimal: tan^2(theta) - k/(4-k) = " + std::to_string(residual),
                             residual);
    const double t = std::tan(spec.theta);
    std::vector<double> lam;
    for (int i = 0; i < spec.k; ++i) lam.push_back(1.0 / t);
    for (int i = spec.k; i < 4; ++i) lam.push_back(-t);
    return CurvatureVector<double>(std::move(lam)).sorted_descending();
}

double clifford_area(const CliffordSpec& spec) {
    require_k(spec.k);
    return unit_sphere_volume(spec.k) * std::pow(std::cos(spec.theta), spec.k) * unit_sphere_volume(4 - spec.k) *
           std::pow(std::sin(spec.theta), 4 - spec.k);
}

std::vector<SurfaceSample> clifford_samples(const CliffordSpec& spec, int resolution) {
    if (resolution < 1) throw InvalidArgument("resolution must be >= 1");
    const CurvatureVector<double> lam = clifford_curvatures(spec);
    const auto first = sphere_cells(spec.k, std::cos(spec.theta), resolution);
    const auto second = sphere_cells(4 - spec.k, std::sin(spec.theta), resolution);
    std::vector<SurfaceSample> out;
    out.reserve(first.size() * second.size());
    for (const auto& a : first)
        for (const auto& b : second) {
            SurfaceSample s{a.angles, lam, a.measure * b.measure};
            s.params.insert(s.params.end(), b.angles.begin(), b.angles.end());
            out.push_back(std::move(s));
        }
    return out;
}

double catenoid_rpp(double r, double rp) { return 3.0 * (1.0 + rp * rp) / r; }

double catenoid_first_integral(const ProfileState& st) { return st.r * st.r * st.r / std::sqrt(1.0 + st.rp * st.rp); }

std::vector<ProfileState> catenoid_integrate(double r0, double z_max, double h) {
    if (!(r0 > 0.0)) throw InvalidArgument("catenoid neck radius r0 must be positive");
    if (!(h > 0.0)) throw InvalidArgument("step h must be positive");
    if (!(z_max > 0.0)) throw InvalidArgument("z_max must be positive");

    const long steps = static_cast<long>(std::floor(z_max / h * (1.0 + 1e-12)));
    std::vector<ProfileState> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    out.push_back({0.0, r0, 0.0});
    const double invariant0 = catenoid_first_integral(out.front());

    double r = r0, p = 0.0;
    for (long i = 1; i <= steps; ++i) {
        const double k1r = p, k1p = catenoid_rpp(r, p);
        const double r2 = r + 0.5 * h * k1r, p2 = p + 0.5 * h * k1p;
        const double k2r = p2, k2p = catenoid_rpp(r2, p2);
        const double r3 = r + 0.5 * h * k2r, p3 = p + 0.5 * h * k2p;
        const double k3r = p3, k3p = catenoid_rpp(r3, p3);
        const double r4 = r + h * k3r, p4 = p + h * k3p;
        const double k4r = p4, k4p = catenoid_rpp(r4, p4);
        const double r_next = r + h / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
        const double p_next = p + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);

        const ProfileState next{static_cast<double>(i) * h, r_next, p_next};
        const bool finite = std::isfinite(r_next) && std::isfinite(p_next) && r_next > 0.0;
        if (!finite || std::fabs(catenoid_first_integral(next) / invariant0 - 1.0) > kFirstIntegralDrift)
            throw IntegrationBlowup("catenoid profile blew up after z = " + std::to_string(out.back().z) +
                                        " (vertical asymptote of the profile)",
                                    out.back().z);
        out.push_back(next);
        r = r_next;
        p = p_next;
    }
    return out;
}

CurvatureVector<double> profile_curvatures(const ProfileState& st) {
    if (!(st.r > 0.0)) throw InvalidArgument("profile radius must be positive");
    const double w = 1.0 + st.rp * st.rp;
    const double rotational = 1.0 / (st.r * std::sqrt(w));
    const double profile = -catenoid_rpp(st.r, st.rp) / (w * std::sqrt(w));
    return CurvatureVector<double>({rotational, rotational, rotational, profile}).sorted_descending();
}

std::vector<SurfaceSample> catenoid_samples(std::span<const ProfileState> profile) {
    std::vector<SurfaceSample> out;
    out.reserve(profile.size());
    const double sphere = unit_sphere_volume(3);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const auto& st = profile[i];
        double dz = 0.0;
        if (i > 0) dz += 0.5 * (st.z - profile[i - 1].z);
        if (i + 1 < profile.size()) dz += 0.5 * (profile[i + 1].z - st.z);
        const double weight = st.r * st.r * st.r * std::sqrt(1.0 + st.rp * st.rp) * sphere * dz;
        out.push_back({{st.z}, profile_curvatures(st), weight});
    }
    return out;
}

double energy_quadrature(std::span<const SurfaceSample> samples, const RigidityFunctional& f) {
    double total = 0.0;
    for (const auto& s : samples) {
        if (s.area_weight < 0.0) throw InvalidArgument("negative area weight in energy quadrature");
        total += s.area_weight * -evaluate_s(s.curvatures, f);
    }
    return total;
}

}  // namespace rigidity
