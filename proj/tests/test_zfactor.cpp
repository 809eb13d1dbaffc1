#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "basefree/parser.hpp"
#include "basefree/zfactor.hpp"

using namespace basefree;

static PolyQ P(const char* s) { return parse_poly(s, vars_t3()); }

static PolyQ reassemble(const QFactorization& qf) {
    PolyQ out = PolyQ::constant(vars_t3(), qf.unit);
    for (auto& [fac, m] : qf.factors) out = out * fac.pow(static_cast<unsigned long>(m));
    return out;
}

TEST_CASE("splitting of products of linear factors") {
    PolyQ f = P("(t1 - 2*t3)*(t1 + 3*t3)^2*(2*t1 - t3)").dehomogenize(2);
    auto qf = factor_univariate(f, 0);
    CHECK(qf.factors.size() == 3);
    CHECK(reassemble(qf).str() == f.str());
    for (auto& [fac, m] : qf.factors) CHECK(fac.degree_in(0) == 1);
}

TEST_CASE("irreducible quadratics and quartics stay whole") {
    auto qf = factor_univariate(P("t1^2 + 1"), 0);
    REQUIRE(qf.factors.size() == 1);
    CHECK(qf.factors[0].factor.str() == P("t1^2 + 1").str());
    CHECK(qf.factors[0].multiplicity == 1);
    // x^4 + 1 is irreducible over Q though reducible mod every prime
    auto qf2 = factor_univariate(P("t1^4 + 1"), 0);
    REQUIRE(qf2.factors.size() == 1);
    CHECK(qf2.factors[0].factor.degree_in(0) == 4);
}

TEST_CASE("mixed factorization with rational content") {
    PolyQ f = P("3/4*(t1^2 - 2)*(t1 - 1/3)^2");
    auto qf = factor_univariate(f, 0);
    CHECK(qf.factors.size() == 2);
    CHECK(reassemble(qf).str() == f.str());
}

TEST_CASE("random products reassemble") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        PolyQ f = PolyQ::constant(vars_t3(), Rational(1));
        for (int k = 0; k < 3; ++k) {
            long a = static_cast<long>(rng() % 19) - 9;
            long b = static_cast<long>(rng() % 19) - 9;
            PolyQ lin = PolyQ::zero(vars_t3());
            lin.add_term({1, 0, 0}, Rational(a == 0 ? 1 : a));
            lin.add_term({0, 0, 0}, Rational(b));
            f = f * lin;
        }
        auto qf = factor_univariate(f, 0);
        CHECK(reassemble(qf).str() == f.str());
        for (auto& [fac, m] : qf.factors) {
            auto sub = factor_univariate(fac, 0);
            CHECK(sub.factors.size() == 1);  // declared factors are irreducible
        }
    }
}

TEST_CASE("rational roots") {
    auto roots = rational_roots(P("(t1 - 2)*(t1 + 5/3)*(t1^2 + 7)"), 0);
    REQUIRE(roots.size() == 2);
    std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) {
        return a < b;
    });
    CHECK(roots[0] == Rational(-5, 3));
    CHECK(roots[1] == Rational(2));
}
