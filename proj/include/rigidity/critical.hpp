#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rigidity/invariant.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

/// Largest dimension accepted by certify_nonpositivity.
inline constexpr int kMaxCertifyDimension = 6;

/// Multiplicities of the distinct coordinate values at a critical point,
/// sorted descending. At most three parts: every coordinate of a critical
/// point is a root of the same depressed cubic.
struct PartitionAnsatz {
    std::vector<int> multiplicities;

    int n() const;
    int parts() const { return static_cast<int>(multiplicities.size()); }

    friend bool operator==(const PartitionAnsatz&, const PartitionAnsatz&) = default;
    friend auto operator<=>(const PartitionAnsatz&, const PartitionAnsatz&) = default;
};

enum class Classification {
    GlobalMaxCandidate,   // strict local maximum on the constraint sphere
    LocalMax,             // strict local maximum below the certified maximum
    Saddle,
    LocalMinCandidate,    // strict local minimum
    Degenerate,           // semidefinite projected Hessian, isolated point
    DegenerateContinuum,  // lies on a positive-dimensional critical set
    DegenerateZero,       // inconsistent ansatz: only the zero vector
};

std::string_view to_string(Classification c);
Classification classification_from_string(std::string_view text);

/// One orbit (under coordinate permutations and x -> -x) of critical points of
/// s_c on {sum x = 0, |x| = 1}.
///
/// The unit representative is direction / sqrt(norm_sq); keeping the integer
/// direction and its exact squared norm keeps everything rational. Both
/// multipliers satisfy grad s(x) = lambda * 1 + 2 mu * x, with lambda taken at
/// the stored direction scale and mu at the unit representative (where
/// 4 s = 2 mu).
struct CriticalFamily {
    std::vector<Rational> direction;  // integers, sorted descending, canonical sign
    Rational norm_sq;
    Rational ratio;                   // sum d^4 / (sum d^2)^2
    Rational critical_value;          // s_c at the unit representative
    Rational hyperplane_multiplier;
    Rational sphere_multiplier;
    PartitionAnsatz partition;
    Classification classification = Classification::Degenerate;
    std::uint64_t orbit_size = 0;     // 0 for continua

    std::vector<double> unit_representative() const;
    friend bool operator==(const CriticalFamily&, const CriticalFamily&) = default;
};

struct CertificateReport {
    RigidityFunctional functional;
    std::vector<CriticalFamily> families;
    Rational max_critical_value;
    std::vector<PartitionAnsatz> maximizer_partitions;
    bool verdict = false;
};

/// Partitions of n into at most three parts, canonical, in descending
/// lexicographic order.
std::vector<PartitionAnsatz> enumerate_partitions(int n);

/// All critical families whose coordinates realize the ansatz. Ansätze whose
/// only solutions collapse onto another partition return an empty list; the
/// one-part ansatz returns the zero vector flagged DegenerateZero.
std::vector<CriticalFamily> solve_ansatz(const PartitionAnsatz& p, const RigidityFunctional& f);

/// Second-order test from the exact inertia of the projected Hessian.
Classification classify(const CriticalFamily& fam, const RigidityFunctional& f);

/// Float-mode second-order test at a unit point on the constraint sphere.
/// Eigenvalues within tol * max(1, |H|) count as zero.
Classification classify_point(const CurvatureVector<double>& x, const RigidityFunctional& f, double tol = 1e-9);

/// True when sum x^4 restricted to the trace-free hyperplane equals
/// ratio * (sum x^2)^2 identically (symbolic expansion after eliminating the
/// last coordinate). Only meaningful for n >= 3.
bool restricted_quartic_is_constant(int n, Rational& ratio);

/// Solves every ansatz and merges the families sorted by partition.
std::vector<CriticalFamily> enumerate_critical_families(const RigidityFunctional& f);

/// Exact non-positivity certificate for s_c on the trace-free hyperplane.
/// Throws UnsupportedDimension for n > kMaxCertifyDimension and
/// CertificationIncomplete if root isolation fails.
CertificateReport certify_nonpositivity(const RigidityFunctional& f);

}  // namespace rigidity
