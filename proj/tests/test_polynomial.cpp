#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/polynomial.hpp"

using namespace rigidity;

namespace {

Polynomial poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.push_back(make_rational(c, 1));
    return Polynomial(v);
}

// (t - r1)(t - r2)...
Polynomial from_roots(std::initializer_list<long> roots) {
    Polynomial p = poly({1});
    for (long r : roots) p = p * poly({-r, 1});
    return p;
}

}  // namespace

TEST_CASE("arithmetic and evaluation") {
    auto p = poly({-2, 0, 1});
    CHECK(p.degree() == 2);
    CHECK(p(Rational(3)) == 7);
    CHECK(p.sign_at(Rational(1)) == -1);
    CHECK(p.derivative() == poly({0, 2}));
    CHECK((p - p).is_zero());
    CHECK(poly({0, 0, 2}).monic() == poly({0, 0, 1}));
    CHECK(from_roots({1, 2}) == poly({2, -3, 1}));
}

TEST_CASE("division, gcd and square-free part") {
    auto a = from_roots({1, 2, 3});
    auto b = from_roots({1, 4});
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(gcd(a, b) == poly({-1, 1}));

    auto sq = from_roots({2, 2, 2, -1});
    CHECK(square_free_part(sq).monic() == from_roots({2, -1}));
}

TEST_CASE("sign variations count positive roots of real-rooted polynomials") {
    CHECK(sign_variations(from_roots({1, 2, -3})) == 2);
    CHECK(sign_variations(from_roots({-1, -2})) == 0);
    CHECK(sign_variations(poly({0, 0, 1})) == 0);
    CHECK(sign_variations(from_roots({5, 5, 5})) == 3);
}

TEST_CASE("sturm chain counts distinct roots on half-open intervals") {
    SturmChain s(from_roots({1, 2, -3}));
    CHECK(s.count_roots(Rational(-10), Rational(10)) == 3);
    CHECK(s.count_roots(Rational(0), Rational(2)) == 2);
    CHECK(s.count_roots(Rational(1), Rational(2)) == 1);
    CHECK(s.count_roots(Rational(-3), Rational(0)) == 0);
    SturmChain irr(poly({-2, 0, 1}));
    CHECK(irr.count_roots(Rational(0), Rational(2)) == 1);
}

TEST_CASE("root isolation") {
    auto exact = isolate_real_roots(from_roots({1, 2, -3}), default_isolation_width());
    REQUIRE(exact.size() == 3);
    CHECK(exact[0].contains(Rational(-3)));
    CHECK(exact[1].contains(Rational(1)));
    CHECK(exact[2].contains(Rational(2)));

    Rational width = default_isolation_width();
    auto irr = isolate_real_roots(poly({-2, 0, 1}), width);
    REQUIRE(irr.size() == 2);
    for (const auto& iv : irr) {
        CHECK(iv.hi - iv.lo <= width);
        Rational plo = iv.lo * iv.lo - 2, phi = iv.hi * iv.hi - 2;
        CHECK(plo * phi <= 0);
    }
    CHECK(irr[0].hi < 0);
    CHECK(irr[1].lo > 0);

    CHECK(isolate_real_roots(poly({1, 0, 1}), width).empty());
    CHECK_THROWS_AS(isolate_real_roots(poly({-2, 0, 1}), width, 3), CertificationIncomplete);
}

TEST_CASE("root isolation on a cluster of close roots") {
    // roots 1, 1 + 1e-20, 1 + 2e-20 scaled to integers
    Rational e = Rational(1) / Rational("100000000000000000000");
    Polynomial p = Polynomial({-Rational(1), Rational(1)}) * Polynomial({-(1 + e), Rational(1)}) *
                   Polynomial({-(1 + 2 * e), Rational(1)});
    auto roots = isolate_real_roots(p, default_isolation_width());
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].hi < roots[1].lo);
    CHECK(roots[1].hi < roots[2].lo);
}

TEST_CASE("characteristic polynomial") {
    std::vector<Rational> d{1, 0, 0, 0, 2, 0, 0, 0, 3};
    CHECK(characteristic_polynomial(d, 3) == from_roots({1, 2, 3}));
    std::vector<Rational> swap{0, 1, 1, 0};
    CHECK(characteristic_polynomial(swap, 2) == poly({-1, 0, 1}));
    std::vector<Rational> full{2, 1, 0, 1, 2, 1, 0, 1, 2};
    // (t-2)((t-2)^2 - 2)
    CHECK(characteristic_polynomial(full, 3) == poly({-4, 10, -6, 1}));
}

TEST_CASE("multivariate expansion for n = 3 matches the hand expansion") {
    auto x = MultiPolynomial::variable(2, 0);
    auto y = MultiPolynomial::variable(2, 1);
    auto z = MultiPolynomial::constant(2, Rational(0)) - x - y;
    auto quartic = x * x * x * x + y * y * y * y + z * z * z * z;
    auto p2 = x * x + y * y + z * z;
    auto half_sq = make_rational(1, 2) * (p2 * p2);

    for (int i = 0; i <= 4; ++i) {
        std::vector<int> exps{4 - i, i};
        CHECK(quartic.terms().at(exps) == oracle::kN3QuarticCoeffs[i]);
        CHECK(half_sq.terms().at(exps) == oracle::kN3HalfSquareCoeffs[i]);
    }
    Rational ratio;
    CHECK(quartic.proportional_to(p2 * p2, ratio));
    CHECK(ratio == make_rational(1, 2));
    CHECK_FALSE(quartic.proportional_to(x * x * x * x, ratio));
}
