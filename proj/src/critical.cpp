#include "rigidity/critical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "rigidity/eigen_jacobi.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/polynomial.hpp"

namespace rigidity {
namespace {

using RVec = std::vector<Rational>;

std::map<Rational, int> value_multiplicities(const RVec& d) {
    std::map<Rational, int> counts;
    for (const auto& x : d) ++counts[x];
    return counts;
}

RVec sorted_desc(RVec d) {
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

// Primitive integer form; picks the lexicographically larger of d and -d after sorting, so antipodal
// directions share one representative.
RVec canonical_direction(const RVec& raw) {
    // Directions are built from integers; divide out the content.
    mpz_class content = 0;
    for (const auto& x : raw) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num_mpz_t());
    RVec d = raw;
    if (content > 1)
        for (auto& x : d) x /= content;
    RVec pos = sorted_desc(d);
    RVec neg;
    neg.reserve(d.size());
    for (const auto& x : d) neg.push_back(-x);
    neg = sorted_desc(std::move(neg));
    return std::lexicographical_compare(pos.begin(), pos.end(), neg.begin(), neg.end()) ? neg : pos;
}

std::uint64_t factorial(int k) {
    std::uint64_t out = 1;
    for (int i = 2; i <= k; ++i) out *= static_cast<std::uint64_t>(i);
    return out;
}

std::uint64_t orbit_size(const RVec& d) {
    std::uint64_t count = factorial(static_cast<int>(d.size()));
    for (const auto& [value, mult] : value_multiplicities(d)) count /= factorial(mult);
    RVec neg;
    for (const auto& x : d) neg.push_back(-x);
    return sorted_desc(neg) == sorted_desc(d) ? count : 2 * count;
}

// Points whose value multiplicities are all multiples of n/3 lie on the
// closure of the equal-multiplicity three-value family, which is a
// positive-dimensional set of critical points.
bool on_equal_multiplicity_continuum(const RVec& d) {
    const int n = static_cast<int>(d.size());
    if (n < 3 || n % 3 != 0) return false;
    const int m = n / 3;
    for (const auto& [value, mult] : value_multiplicities(d))
        if (mult % m != 0) return false;
    return true;
}

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// Inertia of the Hessian of sum x^4 restricted to the tangent space of
// {sum x = 0, |x| = 1} at d/|d|, scaled by |d|^2 so all entries stay rational:
//   P (12 diag(d^2) - 4 p4(d)/|d|^2 I) P,  P = I - 11^T/n - dd^T/|d|^2.
// The (c |x|^4) term is constant on the sphere and contributes nothing.
Inertia projected_hessian_inertia(const RVec& d, const Rational& norm_sq) {
    const std::size_t n = d.size();
    Rational p4 = 0;
    for (const auto& x : d) p4 += x * x * x * x;
    const Rational shift = 4 * p4 / norm_sq;

    RVec proj(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            proj[i * n + j] = Rational(i == j ? 1 : 0) - make_rational(1, static_cast<long>(n)) - d[i] * d[j] / norm_sq;

    RVec hp(n * n);  // H * P with H diagonal
    for (std::size_t i = 0; i < n; ++i) {
        Rational h = 12 * d[i] * d[i] - shift;
        for (std::size_t j = 0; j < n; ++j) hp[i * n + j] = h * proj[i * n + j];
    }
    RVec m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += proj[i * n + k] * hp[k * n + j];
            m[i * n + j] = acc;
        }

    // 1 and d span the kernel of P, so t^2 divides the characteristic
    // polynomial; the quotient carries the tangent spectrum. The matrix is
    // symmetric, so all roots are real and Descartes' count is exact.
    Polynomial chi = characteristic_polynomial(m, n);
    const auto& coeffs = chi.coeffs();
    if (coeffs.size() < 3 || coeffs[0] != 0 || coeffs[1] != 0)
        throw CertificationIncomplete("projected Hessian lost its normal-space kernel");
    Polynomial tangent(RVec(coeffs.begin() + 2, coeffs.end()));

    Inertia out;
    std::size_t lowest = 0;
    while (tangent.coeffs()[lowest] == 0) ++lowest;
    out.zero = static_cast<int>(lowest);
    Polynomial reduced(RVec(tangent.coeffs().begin() + static_cast<long>(lowest), tangent.coeffs().end()));
    out.positive = sign_variations(reduced);
    out.negative = reduced.degree() - out.positive;
    return out;
}

CriticalFamily degenerate_zero_family(const PartitionAnsatz& p) {
    CriticalFamily fam;
    fam.direction.assign(static_cast<std::size_t>(p.n()), Rational(0));
    fam.norm_sq = 0;
    fam.ratio = 0;
    fam.critical_value = 0;
    fam.hyperplane_multiplier = 0;
    fam.sphere_multiplier = 0;
    fam.partition = p;
    fam.classification = Classification::DegenerateZero;
    fam.orbit_size = 1;
    return fam;
}

// Fills the derived quantities of a family from its direction, checks the
// multiplier identity exactly and certifies the cubic root structure.
CriticalFamily build_family(const RVec& raw_direction, const PartitionAnsatz& p, const RigidityFunctional& f) {
    CriticalFamily fam;
    fam.direction = canonical_direction(raw_direction);
    fam.partition = p;
    const RVec& d = fam.direction;

    Rational n2 = 0, p4 = 0;
    for (const auto& x : d) {
        n2 += x * x;
        p4 += x * x * x * x;
    }
    fam.norm_sq = n2;
    fam.ratio = p4 / (n2 * n2);
    fam.critical_value = fam.ratio - f.c();

    // grad s(d)_i = 4 d_i^3 - 4 c |d|^2 d_i  =  lambda + 2 mu_d d_i
    const Rational scale = 4 * f.c() * n2;
    auto grad = [&](const Rational& x) { return Rational(4 * x * x * x - scale * x); };
    const auto counts = value_multiplicities(d);
    const Rational& a = counts.begin()->first;
    const Rational& b = counts.rbegin()->first;
    const Rational two_mu_d = (grad(a) - grad(b)) / (a - b);
    const Rational lambda = grad(a) - two_mu_d * a;
    for (const auto& x : d)
        if (grad(x) - lambda - two_mu_d * x != 0)
            throw CertificationIncomplete("multiplier identity fails for partition family");
    fam.hyperplane_multiplier = lambda;
    fam.sphere_multiplier = two_mu_d / 2 / n2;

    // Every distinct value must be a root of 4t^3 - (4c|d|^2 + 2mu_d) t - lambda,
    // located inside its own isolating interval.
    Polynomial cubic(RVec{Rational(-lambda), Rational(-(scale + two_mu_d)), Rational(0), Rational(4)});
    const auto roots = isolate_real_roots(cubic, default_isolation_width());
    for (const auto& [value, mult] : counts) {
        if (cubic(value) != 0)
            throw CertificationIncomplete("coordinate value is not a root of the critical cubic");
        auto hits = std::count_if(roots.begin(), roots.end(), [&](const RootInterval& r) { return r.contains(value); });
        if (hits != 1) throw CertificationIncomplete("coordinate value not isolated by the critical cubic's roots");
    }

    fam.orbit_size = orbit_size(d);
    fam.classification = classify(fam, f);
    if (fam.classification == Classification::DegenerateContinuum) fam.orbit_size = 0;
    return fam;
}

void validate_ansatz(const PartitionAnsatz& p, const RigidityFunctional& f) {
    const auto& m = p.multiplicities;
    if (m.empty() || m.size() > 3) throw InvalidArgument("partition ansatz must have 1 to 3 parts");
    if (!std::is_sorted(m.begin(), m.end(), std::greater<>()) || m.back() < 1)
        throw InvalidArgument("partition ansatz must be positive and sorted descending");
    if (p.n() != f.n())
        throw DimensionMismatch("partition sums to " + std::to_string(p.n()) + ", functional has n = " +
                                std::to_string(f.n()));
}

RVec expand(const std::vector<int>& mult, const RVec& values) {
    RVec d;
    for (std::size_t g = 0; g < mult.size(); ++g) d.insert(d.end(), static_cast<std::size_t>(mult[g]), values[g]);
    return d;
}

}  // namespace

int PartitionAnsatz::n() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::GlobalMaxCandidate: return "global-max-candidate";
        case Classification::LocalMax: return "local-max";
        case Classification::Saddle: return "saddle";
        case Classification::LocalMinCandidate: return "local-min-candidate";
        case Classification::Degenerate: return "degenerate";
        case Classification::DegenerateContinuum: return "degenerate-continuum";
        case Classification::DegenerateZero: return "degenerate-zero";
    }
    return "unknown";
}

Classification classification_from_string(std::string_view text) {
    for (auto c : {Classification::GlobalMaxCandidate, Classification::LocalMax, Classification::Saddle,
                   Classification::LocalMinCandidate, Classification::Degenerate,
                   Classification::DegenerateContinuum, Classification::DegenerateZero})
        if (to_string(c) == text) return c;
    throw InvalidArgument("unknown classification '" + std::string(text) + "'");
}

std::vector<double> CriticalFamily::unit_representative() const {
    std::vector<double> out;
    out.reserve(direction.size());
    if (norm_sq == 0) {
        out.assign(direction.size(), 0.0);
        return out;
    }
    const double norm = std::sqrt(norm_sq.get_d());
    for (const auto& x : direction) out.push_back(x.get_d() / norm);
    return out;
}

std::vector<PartitionAnsatz> enumerate_partitions(int n) {
    if (n < 2) throw InvalidArgument("partitions need n >= 2");
    std::vector<PartitionAnsatz> out;
    out.push_back({{n}});
    for (int a = n - 1; a >= 1; --a) {
        int rest = n - a;
        if (rest <= a) out.push_back({{a, rest}});
        for (int b = std::min(a, rest - 1); b >= 1; --b) {
            int c = rest - b;
            if (c <= b) out.push_back({{a, b, c}});
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<CriticalFamily> solve_ansatz(const PartitionAnsatz& p, const RigidityFunctional& f) {
    validate_ansatz(p, f);
    const auto& m = p.multiplicities;

    if (m.size() == 1) return {degenerate_zero_family(p)};

    if (m.size() == 2) {
        // m1 v1 + m2 v2 = 0 fixes the direction up to scale.
        return {build_family(expand(m, {Rational(m[1]), Rational(-m[0])}), p, f)};
    }

    // Three distinct roots of a depressed cubic sum to zero; with the trace
    // constraint the values are the cross product of (1,1,1) and m.
    RVec v{Rational(m[2] - m[1]), Rational(m[0] - m[2]), Rational(m[1] - m[0])};
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) {
        // m1 = m2 = m3: the two constraints coincide, leaving a curve of
        // critical directions. Report one representative.
        return {build_family(expand(m, {Rational(1), Rational(0), Rational(-1)}), p, f)};
    }
    if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) return {};  // collapses onto a two-part ansatz
    return {build_family(expand(m, v), p, f)};
}

Classification classify(const CriticalFamily& fam, const RigidityFunctional& f) {
    if (fam.norm_sq == 0) return Classification::DegenerateZero;
    if (fam.direction.size() != static_cast<std::size_t>(f.n()))
        throw DimensionMismatch("family dimension does not match functional");
    const Inertia in = projected_hessian_inertia(fam.direction, fam.norm_sq);
    if (in.zero > 0) {
        if (on_equal_multiplicity_continuum(fam.direction)) return Classification::DegenerateContinuum;
        if (in.positive > 0 && in.negative > 0) return Classification::Saddle;
        return Classification::Degenerate;
    }
    if (in.positive == 0) return Classification::GlobalMaxCandidate;
    if (in.negative == 0) return Classification::LocalMinCandidate;
    return Classification::Saddle;
}

Classification classify_point(const CurvatureVector<double>& x, const RigidityFunctional& f, double tol) {
    const std::size_t n = x.size();
    if (n != static_cast<std::size_t>(f.n())) throw DimensionMismatch("point dimension does not match functional");
    double p4 = 0.0;
    for (double v : x.entries()) p4 += v * v * v * v;

    std::vector<double> proj(n * n), m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            proj[i * n + j] = (i == j ? 1.0 : 0.0) - 1.0 / static_cast<double>(n) - x[i] * x[j];
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::fabs(12.0 * x[i] * x[i] - 4.0 * p4));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += proj[i * n + k] * (12.0 * x[k] * x[k] - 4.0 * p4) * proj[k * n + j];
            m[i * n + j] = acc;
        }
    JacobiResult eig = jacobi_eigen(m, n);

    // Drop the two eigenvectors that live in the normal space span(1, x).
    std::vector<std::pair<double, double>> weighted;  // (normal weight, eigenvalue)
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        double along_one = 0.0, along_x = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            along_one += eig.eigenvectors[i * n + k] * inv_sqrt_n;
            along_x += eig.eigenvectors[i * n + k] * x[i];
        }
        weighted.emplace_back(along_one * along_one + along_x * along_x, eig.eigenvalues[k]);
    }
    std::sort(weighted.begin(), weighted.end(), std::greater<>());

    int positive = 0, negative = 0, zero = 0;
    for (std::size_t k = 2; k < n; ++k) {
        double ev = weighted[k].second;
        if (std::fabs(ev) <= tol * scale)
            ++zero;
        else if (ev > 0)
            ++positive;
        else
            ++negative;
    }
    if (positive > 0 && negative > 0) return Classification::Saddle;
    if (zero > 0) return Classification::Degenerate;
    if (positive == 0) return Classification::GlobalMaxCandidate;
    return Classification::LocalMinCandidate;
}

bool restricted_quartic_is_constant(int n, Rational& ratio) {
    if (n < 2) throw InvalidArgument("restricted quartic needs n >= 2");
    const std::size_t vars = static_cast<std::size_t>(n - 1);
    std::vector<MultiPolynomial> coords;
    MultiPolynomial last(vars);
    for (std::size_t i = 0; i < vars; ++i) {
        coords.push_back(MultiPolynomial::variable(vars, i));
        last -= coords.back();
    }
    coords.push_back(last);

    MultiPolynomial p2(vars), p4(vars);
    for (const auto& x : coords) {
        MultiPolynomial sq = x * x;
        p2 += sq;
        p4 += sq * sq;
    }
    return p4.proportional_to(p2 * p2, ratio);
}

std::vector<CriticalFamily> enumerate_critical_families(const RigidityFunctional& f) {
    std::vector<CriticalFamily> out;
    for (const auto& p : enumerate_partitions(f.n())) {
        auto fams = solve_ansatz(p, f);
        out.insert(out.end(), fams.begin(), fams.end());
    }
    return out;
}

CertificateReport certify_nonpositivity(const RigidityFunctional& f) {
    if (f.n() > kMaxCertifyDimension)
        throw UnsupportedDimension("exact certification supports n <= " + std::to_string(kMaxCertifyDimension) +
                                   ", got n = " + std::to_string(f.n()));
    CertificateReport report{f, {}, Rational(0), {}, false};

    Rational constant_ratio;
    if (f.n() >= 3 && restricted_quartic_is_constant(f.n(), constant_ratio)) {
        // s_c is constant on the whole constraint sphere (only n = 3); every
        // point is critical.
        PartitionAnsatz p{{1, 1, 1}};
        report.families = solve_ansatz(p, f);
    } else {
        report.families = enumerate_critical_families(f);
    }

    bool any = false;
    for (const auto& fam : report.families) {
        if (fam.classification == Classification::DegenerateZero) continue;
        if (!any || fam.critical_value > report.max_critical_value) report.max_critical_value = fam.critical_value;
        any = true;
    }
    if (!any) throw CertificationIncomplete("no critical family on the constraint sphere");

    for (auto& fam : report.families) {
        if (fam.classification == Classification::DegenerateZero) continue;
        if (fam.critical_value == report.max_critical_value)
            report.maximizer_partitions.push_back(fam.partition);
        else if (fam.classification == Classification::GlobalMaxCandidate)
            fam.classification = Classification::LocalMax;
    }
    report.verdict = report.max_critical_value <= 0;
    return report;
}

}  // namespace rigidity
