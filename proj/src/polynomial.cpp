#include "rigidity/polynomial.hpp"

#include <algorithm>
#include <string>

#include "rigidity/errors.hpp"

namespace rigidity {

// ---- Polynomial -----------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

int Polynomial::sign_at(const Rational& t) const { return sgn((*this)(t)); }

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    std::vector<Rational> m = coeffs_;
    const Rational lead = leading();
    for (auto& c : m) c /= lead;
    return Polynomial(std::move(m));
}

Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> out = a.coeffs_;
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial{}, a};
    std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational q = rem[k + db] / b.leading();
        quot[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.degree() <= 0) return p;
    Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).first;
}

int sign_variations(const Polynomial& p) {
    int count = 0;
    int last = 0;
    for (const auto& c : p.coeffs()) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// ---- Sturm chains and isolation -------------------------------------------

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw InvalidArgument("Sturm chain of the zero polynomial");
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (!chain_.back().is_zero()) {
        Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
        chain_.push_back(-r);
    }
    chain_.pop_back();
}

int SturmChain::variations_at(const Rational& t) const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at(t);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

Rational default_isolation_width() {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 30);
    return Rational(mpz_class(1), den);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& width, int max_bisections) {
    if (p.is_zero()) throw InvalidArgument("cannot isolate roots of the zero polynomial");
    std::vector<RootInterval> roots;
    if (p.degree() == 0) return roots;

    const Polynomial sf = square_free_part(p);
    const SturmChain sturm(sf);

    // Cauchy bound: every root lies in (-bound, bound).
    Rational bound = 0;
    for (int i = 0; i < sf.degree(); ++i) {
        Rational r = abs(sf.coeffs()[i] / sf.leading());
        if (r > bound) bound = r;
    }
    bound += 1;

    struct Pending {
        Rational lo, hi;
        int depth;
    };
    std::vector<Pending> stack{{-bound, bound, 0}};
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        int count = sturm.count_roots(cur.lo, cur.hi);
        if (count == 0) continue;
        if (cur.depth > max_bisections)
            throw CertificationIncomplete("root isolation exceeded " + std::to_string(max_bisections) +
                                          " bisections");
        if (count == 1) {
            if (sf.sign_at(cur.hi) == 0) {
                roots.push_back({cur.hi, cur.hi});
                continue;
            }
            int depth = cur.depth;
            bool exact = false;
            while (cur.hi - cur.lo > width) {
                if (++depth > max_bisections)
                    throw CertificationIncomplete("root refinement exceeded " + std::to_string(max_bisections) +
                                                  " bisections");
                Rational mid = (cur.lo + cur.hi) / 2;
                if (sf.sign_at(mid) == 0) {
                    roots.push_back({mid, mid});
                    exact = true;
                    break;
                }
                if (sturm.count_roots(cur.lo, mid) == 1)
                    cur.hi = mid;
                else
                    cur.lo = mid;
            }
            if (!exact) roots.push_back({cur.lo, cur.hi});
            continue;
        }
        Rational mid = (cur.lo + cur.hi) / 2;
        stack.push_back({mid, cur.hi, cur.depth + 1});
        stack.push_back({cur.lo, mid, cur.depth + 1});
    }
    std::sort(roots.begin(), roots.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return roots;
}

Polynomial characteristic_polynomial(std::span<const Rational> matrix, std::size_t n) {
    if (matrix.size() != n * n) throw InvalidArgument("characteristic polynomial needs a square matrix");
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    std::vector<Rational> m(n * n, Rational(0));  // M_0 = 0
    std::vector<Rational> next(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational acc = (i == j) ? coeffs[n - k + 1] : Rational(0);
                for (std::size_t l = 0; l < n; ++l) acc += matrix[i * n + l] * m[l * n + j];
                next[i * n + j] = acc;
            }
        std::swap(m, next);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += matrix[i * n + l] * m[l * n + i];
        coeffs[n - k] = -tr / static_cast<long>(k);
    }
    return Polynomial(std::move(coeffs));
}

// ---- MultiPolynomial ------------------------------------------------------

MultiPolynomial MultiPolynomial::constant(std::size_t num_vars, const Rational& value) {
    MultiPolynomial p(num_vars);
    p.add_term(std::vector<int>(num_vars, 0), value);
    return p;
}

MultiPolynomial MultiPolynomial::variable(std::size_t num_vars, std::size_t index) {
    MultiPolynomial p(num_vars);
    std::vector<int> exps(num_vars, 0);
    exps.at(index) = 1;
    p.add_term(exps, Rational(1));
    return p;
}

void MultiPolynomial::add_term(const std::vector<int>& exps, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& b) {
    for (const auto& [exps, c] : b.terms_) add_term(exps, c);
    return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& b) {
    for (const auto& [exps, c] : b.terms_) add_term(exps, Rational(-c));
    return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.num_vars_ != b.num_vars_) throw InvalidArgument("multivariate product with mismatched variable counts");
    MultiPolynomial out(a.num_vars_);
    std::vector<int> exps(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            out.add_term(exps, Rational(ca * cb));
        }
    return out;
}

MultiPolynomial operator*(const Rational& s, const MultiPolynomial& a) {
    MultiPolynomial out(a.num_vars_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, Rational(s * c));
    return out;
}

bool MultiPolynomial::proportional_to(const MultiPolynomial& other, Rational& ratio) const {
    if (other.is_zero()) {
        ratio = 0;
        return is_zero();
    }
    const auto& [exps, c] = *other.terms_.begin();
    auto it = terms_.find(exps);
    Rational r = (it == terms_.end()) ? Rational(0) : Rational(it->second / c);
    if (r * other == *this) {
        ratio = r;
        return true;
    }
    return false;
}

}  // namespace rigidity
