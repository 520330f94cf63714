#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "rigidity/rational.hpp"

namespace rigidity {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& t) const;
    int sign_at(const Rational& t) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division a = q * b + r with deg r < deg b. b must be non-zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'): same roots, all simple.
Polynomial square_free_part(const Polynomial& p);

/// Sign variations in the coefficient sequence (zeros skipped). For a
/// polynomial whose roots are all real this equals the number of positive
/// roots counted with multiplicity.
int sign_variations(const Polynomial& p);

class SturmChain {
public:
    explicit SturmChain(const Polynomial& p);
    /// Number of distinct roots in the half-open interval (lo, hi].
    int count_roots(const Rational& lo, const Rational& hi) const;

private:
    int variations_at(const Rational& t) const;
    std::vector<Polynomial> chain_;
};

struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Isolates every real root of p in disjoint rational intervals of width at
/// most `width` (exact roots hit during bisection come back as [r, r]).
/// Throws CertificationIncomplete if more than `max_bisections` halvings
/// would be needed for any root.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& width, int max_bisections = 2000);

/// Default isolation width 1e-30.
Rational default_isolation_width();

/// Characteristic polynomial det(tI - M) of an n x n rational matrix
/// (Faddeev-LeVerrier).
Polynomial characteristic_polynomial(std::span<const Rational> matrix, std::size_t n);

/// Sparse multivariate polynomial over Q keyed by exponent vectors.
class MultiPolynomial {
public:
    explicit MultiPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    static MultiPolynomial constant(std::size_t num_vars, const Rational& value);
    static MultiPolynomial variable(std::size_t num_vars, std::size_t index);

    std::size_t num_vars() const noexcept { return num_vars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const noexcept { return terms_; }

    /// Returns r with *this == r * other, if such a rational exists.
    bool proportional_to(const MultiPolynomial& other, Rational& ratio) const;

    MultiPolynomial& operator+=(const MultiPolynomial& b);
    MultiPolynomial& operator-=(const MultiPolynomial& b);
    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
    friend MultiPolynomial operator*(const Rational& s, const MultiPolynomial& a);
    friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

private:
    void add_term(const std::vector<int>& exps, const Rational& coeff);
    std::size_t num_vars_;
    std::map<std::vector<int>, Rational> terms_;
};

}  // namespace rigidity
