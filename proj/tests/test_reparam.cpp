#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace bftest;

static PolyQ T(const char* s) { return parse_poly(s, vars_t3()); }

TEST_CASE("power of linear form detection") {
    auto e = is_power_of_linear_form(T("(2*t1 - t2 + 5*t3)^4"));
    REQUIRE(e.has_value());
    CHECK(proportional({*e}, {T("2*t1 - t2 + 5*t3")}));
    auto f = is_power_of_linear_form(T("-3*(t2 - t3)^2"));
    REQUIRE(f.has_value());
    CHECK(proportional({*f}, {T("t2 - t3")}));
    CHECK(!is_power_of_linear_form(T("t1*t2")).has_value());
    CHECK(!is_power_of_linear_form(T("t1^2 + t2^2")).has_value());
    CHECK(!is_power_of_linear_form(T("t1^2 + t2")).has_value());
}

TEST_CASE("almost polynomial normalization") {
    auto V = vars_t3();
    SurfaceParam P({T("t1^2"), T("t2^2"), T("t1*t3"), T("(t1 + 2*t2 + 3*t3)^2")});
    auto r = polynomial_reparametrize(P, 1);
    CHECK(r.outcome == ReparamResult::Outcome::AlreadyAlmostPolynomial);
    REQUIRE(r.parametrization.has_value());
    const SurfaceParam& Q = *r.parametrization;
    // fourth component becomes a pure power of t3
    CHECK(Q[3].degree_in(2) == Q.degree());
    CHECK(Q[3].terms().size() == 1);
    // the normalization is P o L^{-1} for the returned projectivity L
    REQUIRE(r.normalizing_projectivity.has_value());
    SurfaceParam QL = compose_planar(Q, *r.normalizing_projectivity);
    CHECK(proportional(QL.components(), P.components()));
    (void)V;
}

TEST_CASE("transversality of the golden examples") {
    TransversalityReport t1 = transversality_test(read_surface_param(fixture("example51.txt")), 1);
    CHECK(t1.transversal);
    for (auto& pp : t1.per_point) {
        CHECK(pp.is_perfect_square);
        CHECK(pp.tangent_gcd_trivial);
    }
    TransversalityReport t2 = transversality_test(read_surface_param(fixture("example52.txt")), 1);
    CHECK(t2.transversal);
    TransversalityReport t3 = transversality_test(read_surface_param(fixture("example53.txt")), 1);
    CHECK(!t3.transversal);
    CHECK(t3.reason.find("44") != std::string::npos);
    CHECK(t3.reason.find("not a perfect square") != std::string::npos);
}

TEST_CASE("transversality invariant under right projectivities") {
    SurfaceParam P = read_surface_param(fixture("example51.txt"));
    std::mt19937_64 rng(6);
    for (int t = 0; t < 2; ++t) {
        PlanarMap L = projectivity3(random_invertible(3, rng, 3));
        CHECK(transversality_test(compose_planar(P, L), 1).transversal);
    }
    SurfaceParam P3 = read_surface_param(fixture("example53.txt"));
    PlanarMap L = projectivity3(random_invertible(3, rng, 3));
    CHECK(!transversality_test(compose_planar(P3, L), 1).transversal);
}

TEST_CASE("surface degree") {
    SurfaceParam P = read_surface_param(fixture("example51.txt"));
    BaseLocusReport bl = surface_base_locus(P, 1);
    CHECK(surface_degree(P, bl) == 9);
    SurfaceParam P2 = read_surface_param(fixture("example52.txt"));
    CHECK(surface_degree(P2, surface_base_locus(P2, 1)) == 4);
}

TEST_CASE("example 5.1 reparametrization") {
    SurfaceParam P = read_surface_param(fixture("example51.txt"));
    auto r = polynomial_reparametrize(P, 1);
    REQUIRE(r.outcome == ReparamResult::Outcome::Polynomial);
    const SurfaceParam& Q = *r.parametrization;
    CHECK(Q.degree() == 3);
    CHECK(Q[3].degree_in(2) == 3);
    CHECK(Q[3].terms().size() == 1);
    CHECK(proportional(compose_planar(Q, *r.sbar).components(), P.components()));
    CHECK(surface_base_locus(Q, 1).families.empty());
    CHECK(r.sbar->degree() == 2);
    CHECK(r.rbar->degree() == 2);
}

TEST_CASE("example 5.2 reparametrization") {
    SurfaceParam P = read_surface_param(fixture("example52.txt"));
    auto r = polynomial_reparametrize(P, 1);
    REQUIRE(r.outcome == ReparamResult::Outcome::Polynomial);
    const SurfaceParam& Q = *r.parametrization;
    CHECK(Q.degree() == 2);
    CHECK(r.sbar->degree() == 3);
    CHECK(proportional(compose_planar(Q, *r.sbar).components(), P.components()));
    CHECK(surface_base_locus(Q, 1).families.empty());
}

TEST_CASE("example 5.3 is not applicable") {
    SurfaceParam P = read_surface_param(fixture("example53.txt"));
    auto r = polynomial_reparametrize(P, 1);
    CHECK(r.outcome == ReparamResult::Outcome::NotApplicable);
    CHECK(r.reason.find("44") != std::string::npos);
}

TEST_CASE("reparam result is seed independent") {
    SurfaceParam P = read_surface_param(fixture("example51.txt"));
    auto r1 = polynomial_reparametrize(P, 1);
    auto r2 = polynomial_reparametrize(P, 424242);
    REQUIRE(r1.parametrization.has_value());
    REQUIRE(r2.parametrization.has_value());
    for (size_t i = 0; i < 4; ++i)
        CHECK((*r1.parametrization)[i].str() == (*r2.parametrization)[i].str());
}
