#include "rigidity/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "rigidity/eigen_jacobi.hpp"
#include "rigidity/errors.hpp"

namespace rigidity {
namespace {

double abs_value(double x) { return std::fabs(x); }
Rational abs_value(const Rational& x) { return abs(x); }

void require_same_dimension(std::size_t got, int expected) {
    if (got != static_cast<std::size_t>(expected))
        throw DimensionMismatch("dimension mismatch: input has " + std::to_string(got) +
                                " entries, functional expects n = " + std::to_string(expected));
}

}  // namespace

// ---- CurvatureVector ------------------------------------------------------

template <class T>
CurvatureVector<T>::CurvatureVector(std::vector<T> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2)
        throw InvalidArgument("curvature vector needs at least 2 entries, got " + std::to_string(entries_.size()));
}

template <class T>
T CurvatureVector<T>::trace() const {
    T sum = 0;
    for (const T& x : entries_) sum += x;
    return sum;
}

template <class T>
T CurvatureVector<T>::norm_sq() const {
    T sum = 0;
    for (const T& x : entries_) sum += x * x;
    return sum;
}

template <class T>
T CurvatureVector<T>::max_abs() const {
    T best = 0;
    for (const T& x : entries_) {
        T a = abs_value(x);
        if (a > best) best = a;
    }
    return best;
}

template <class T>
CurvatureVector<T> CurvatureVector<T>::sorted_descending() const {
    std::vector<T> sorted = entries_;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return CurvatureVector(std::move(sorted));
}

template <>
bool CurvatureVector<double>::is_minimal(double trace_tolerance) const {
    return std::fabs(trace()) <= trace_tolerance * std::max(1.0, max_abs());
}

template <>
bool CurvatureVector<Rational>::is_minimal(double) const {
    return trace() == 0;
}

// ---- ShapeOperator --------------------------------------------------------

template <class T>
ShapeOperator<T>::ShapeOperator(std::size_t n, std::vector<T> row_major) : n_(n), data_(std::move(row_major)) {
    if (n_ == 0 || data_.size() != n_ * n_)
        throw InvalidArgument("shape operator must be a non-empty square matrix");
}

template <class T>
ShapeOperator<T> ShapeOperator<T>::diagonal(std::span<const T> diag) {
    const std::size_t n = diag.size();
    std::vector<T> data(n * n, T(0));
    for (std::size_t i = 0; i < n; ++i) data[i * n + i] = diag[i];
    return ShapeOperator(n, std::move(data));
}

template <class T>
ShapeOperator<T> ShapeOperator<T>::from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t n = rows.size();
    std::vector<T> data;
    data.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw InvalidArgument("shape operator rows must all have length " + std::to_string(n));
        data.insert(data.end(), row.begin(), row.end());
    }
    return ShapeOperator(n, std::move(data));
}

template <class T>
double ShapeOperator<T>::inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) row += std::fabs(to_double((*this)(i, j)));
        best = std::max(best, row);
    }
    return best;
}

template <class T>
T ShapeOperator<T>::trace() const {
    T sum = 0;
    for (std::size_t i = 0; i < n_; ++i) sum += (*this)(i, i);
    return sum;
}

template <>
void ShapeOperator<double>::require_symmetric() const {
    const double bound = kSymmetryTolerance * inf_norm();
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
            double gap = std::fabs((*this)(i, j) - (*this)(j, i));
            if (gap > bound)
                throw SymmetryViolation("shape operator is not symmetric: |A[" + std::to_string(i) + "][" +
                                        std::to_string(j) + "] - A[" + std::to_string(j) + "][" +
                                        std::to_string(i) + "]| = " + std::to_string(gap));
        }
}

template <>
void ShapeOperator<Rational>::require_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                throw SymmetryViolation("shape operator is not symmetric at (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ")");
}

// ---- RigidityFunctional ---------------------------------------------------

RigidityFunctional::RigidityFunctional(int n, Rational c) : n_(n), c_(std::move(c)) {
    c_.canonicalize();
    if (n_ < 2) throw InvalidArgument("functional dimension must be >= 2, got " + std::to_string(n_));
    if (c_ <= 0) throw InvalidArgument("functional coefficient must be positive, got " + format_rational(c_));
}

RigidityFunctional RigidityFunctional::rotational() { return RigidityFunctional(4, make_rational(7, 12)); }

template <>
double RigidityFunctional::coefficient<double>() const { return c_.get_d(); }

template <>
Rational RigidityFunctional::coefficient<Rational>() const { return c_; }

// ---- evaluation -----------------------------------------------------------

template <class T>
T evaluate_s(const CurvatureVector<T>& lam, const RigidityFunctional& f) {
    require_same_dimension(lam.size(), f.n());
    T p2 = 0;
    T p4 = 0;
    for (const T& x : lam.entries()) {
        T sq = x * x;
        p2 += sq;
        p4 += sq * sq;
    }
    T c = f.coefficient<T>();
    return T(p4 - c * p2 * p2);
}

template <class T>
T evaluate_S(const ShapeOperator<T>& a, const RigidityFunctional& f) {
    require_same_dimension(a.dim(), f.n());
    a.require_symmetric();
    const std::size_t n = a.dim();
    // tr(A^2) = |A|_F^2 and, with A^2 symmetric, tr(A^4) = |A^2|_F^2.
    T tr_a2 = 0;
    T tr_a4 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            tr_a2 += a(i, j) * a(i, j);
            T sq_ij = 0;
            for (std::size_t k = 0; k < n; ++k) sq_ij += a(i, k) * a(k, j);
            tr_a4 += sq_ij * sq_ij;
        }
    }
    T c = f.coefficient<T>();
    return T(tr_a4 - c * tr_a2 * tr_a2);
}

template <class T>
std::vector<T> gradient_s(const CurvatureVector<T>& lam, const RigidityFunctional& f) {
    require_same_dimension(lam.size(), f.n());
    const T scale = 4 * f.coefficient<T>() * lam.norm_sq();
    std::vector<T> grad;
    grad.reserve(lam.size());
    for (const T& x : lam.entries()) grad.push_back(T(4 * x * x * x - scale * x));
    return grad;
}

CurvatureVector<double> principal_curvatures(const ShapeOperator<double>& a) {
    a.require_symmetric();
    const std::size_t n = a.dim();
    std::vector<double> sym(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sym[i * n + j] = 0.5 * (a(i, j) + a(j, i));

    JacobiResult eig = jacobi_eigen(sym, n);
    CurvatureVector<double> lam(std::move(eig.eigenvalues));
    const double residual = std::fabs(lam.trace() - a.trace());
    if (residual > 1e-10 * a.inf_norm())
        throw ConvergenceError("eigenvalue sum does not reproduce the trace", residual);
    return lam;
}

std::vector<int> partition_signature(const CurvatureVector<double>& lam, double rel_tol) {
    CurvatureVector<double> sorted = lam.sorted_descending();
    const double bound = rel_tol * sorted.max_abs();
    std::vector<int> groups{1};
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i - 1] - sorted[i] <= bound)
            ++groups.back();
        else
            groups.push_back(1);
    }
    std::sort(groups.begin(), groups.end(), std::greater<>());
    return groups;
}

RotationalPattern is_rotational_pattern(const CurvatureVector<double>& lam, double tol) {
    if (lam.size() != 4)
        throw UnsupportedDimension("rotational pattern is only characterized for n = 4, got n = " +
                                   std::to_string(lam.size()));
    if (!lam.is_minimal())
        throw InvalidArgument("rotational pattern requires trace-free curvatures, trace = " +
                              std::to_string(lam.trace()));
    RotationalPattern out;
    if (lam.max_abs() == 0.0) {
        out.degenerate = true;
        out.signature = {4};
        return out;
    }
    out.signature = partition_signature(lam, tol);
    out.rotational = out.signature == std::vector<int>{3, 1};
    return out;
}

template class CurvatureVector<double>;
template class CurvatureVector<Rational>;
template class ShapeOperator<double>;
template class ShapeOperator<Rational>;

template double evaluate_s(const CurvatureVector<double>&, const RigidityFunctional&);
template Rational evaluate_s(const CurvatureVector<Rational>&, const RigidityFunctional&);
template double evaluate_S(const ShapeOperator<double>&, const RigidityFunctional&);
template Rational evaluate_S(const ShapeOperator<Rational>&, const RigidityFunctional&);
template std::vector<double> gradient_s(const CurvatureVector<double>&, const RigidityFunctional&);
template std::vector<Rational> gradient_s(const CurvatureVector<Rational>&, const RigidityFunctional&);

}  // namespace rigidity
