#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rigidity/rational.hpp"

namespace rigidity {

inline constexpr double kDefaultTraceTolerance = 1e-10;
inline constexpr double kDefaultRotationalTolerance = 1e-6;
inline constexpr double kSymmetryTolerance = 1e-12;

/// Ordered principal curvatures (eigenvalues of a shape operator).
/// T is either double or Rational; the two are never mixed inside one value.
template <class T>
class CurvatureVector {
public:
    CurvatureVector() = default;
    explicit CurvatureVector(std::vector<T> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const T> entries() const noexcept { return entries_; }
    const T& operator[](std::size_t i) const { return entries_[i]; }

    T trace() const;
    T norm_sq() const;
    T max_abs() const;

    CurvatureVector sorted_descending() const;

    /// |trace| <= trace_tolerance * max(1, max|entry|); exact zero test for Rational.
    bool is_minimal(double trace_tolerance = kDefaultTraceTolerance) const;

    friend bool operator==(const CurvatureVector&, const CurvatureVector&) = default;

private:
    std::vector<T> entries_;
};

/// Square n x n matrix stored row-major. Symmetry is checked by the operations
/// that need it rather than at construction so the error surfaces there.
template <class T>
class ShapeOperator {
public:
    ShapeOperator() = default;
    ShapeOperator(std::size_t n, std::vector<T> row_major);

    static ShapeOperator diagonal(std::span<const T> diag);
    static ShapeOperator from_rows(const std::vector<std::vector<T>>& rows);

    std::size_t dim() const noexcept { return n_; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    std::span<const T> data() const noexcept { return data_; }

    /// Max absolute row sum.
    double inf_norm() const;
    T trace() const;

    /// Throws SymmetryViolation unless exactly symmetric (Rational) or
    /// symmetric within kSymmetryTolerance * inf_norm (double).
    void require_symmetric() const;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

/// The pair (n, c) defining s_c(x) = sum x_i^4 - c (sum x_i^2)^2.
class RigidityFunctional {
public:
    RigidityFunctional(int n, Rational c);

    /// The rotational rigidity instance (4, 7/12).
    static RigidityFunctional rotational();

    int n() const noexcept { return n_; }
    const Rational& c() const noexcept { return c_; }

    template <class T>
    T coefficient() const;

private:
    int n_;
    Rational c_;
};

template <class T>
T evaluate_s(const CurvatureVector<T>& lam, const RigidityFunctional& f);

/// tr(A^4) - c (tr A^2)^2 from matrix products; no eigendecomposition.
template <class T>
T evaluate_S(const ShapeOperator<T>& a, const RigidityFunctional& f);

/// Component i is 4 x_i^3 - 4 c |x|^2 x_i.
template <class T>
std::vector<T> gradient_s(const CurvatureVector<T>& lam, const RigidityFunctional& f);

/// Eigenvalues of a symmetric operator, sorted descending (cyclic Jacobi).
CurvatureVector<double> principal_curvatures(const ShapeOperator<double>& a);

/// Group sizes, sorted descending, of the entries after clustering values
/// whose sorted neighbours differ by at most rel_tol * max|entry|.
std::vector<int> partition_signature(const CurvatureVector<double>& lam, double rel_tol);

struct RotationalPattern {
    bool rotational = false;
    bool degenerate = false;  // every curvature is zero (totally geodesic)
    std::vector<int> signature;
};

/// Exactly three equal curvatures and a distinct fourth. Only n = 4 is
/// supported; the input must be trace-free.
RotationalPattern is_rotational_pattern(const CurvatureVector<double>& lam,
                                        double tol = kDefaultRotationalTolerance);

}  // namespace rigidity
