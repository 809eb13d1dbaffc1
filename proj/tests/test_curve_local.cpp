#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "basefree/curve_local.hpp"
#include "basefree/parser.hpp"

using namespace basefree;

static PolyQ T(const char* s) { return parse_poly(s, vars_t3()); }

static PolyQ U(const char* s) { return parse_poly(s, local_vars()); }

// random local curve through the origin: dense in (u1, u2) up to total
// degree d, no constant term, at least one term of order 1 or 2
static PolyQ random_local(std::mt19937_64& rng, int d) {
    for (;;) {
        PolyQ f = PolyQ::zero(local_vars());
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) {
                if (i == 0 && j == 0) continue;
                long c = static_cast<long>(rng() % 7) - 3;
                if (c != 0) f.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)},
                                       Rational(c));
            }
        if (!f.is_zero_poly() && f.order_at_origin() <= 2) return f;
    }
}

TEST_CASE("point multiplicity and tangent cone at chart points") {
    ProjPoint2 A = ProjPoint2::rational(Rational(1), Rational(1), Rational(1));
    PolyQ f = T("(t1 - t3)*(t2 - t3)*t3");
    CHECK(point_multiplicity(f, A) == 2);
    TangentCone tc = tangent_cone(f, A);
    CHECK(tc.multiplicity == 2);
    CHECK(tc.cone.terms().size() == 1);  // cone = u1*u2 up to scalar
    CHECK(tc.cone.degree_in(0) == 1);
    CHECK(tc.cone.degree_in(1) == 1);
    ProjPoint2 B = ProjPoint2::rational(Rational(0), Rational(0), Rational(1));
    CHECK(point_multiplicity(T("t1^2 - t2*t3"), B) == 1);
    CHECK_THROWS_AS(tangent_cone(T("t1 - t3"), B), not_on_curve_error);
}

TEST_CASE("intersection multiplicity basics") {
    CHECK(intersection_multiplicity_local(U("u1"), U("u2")) == 1);
    CHECK(intersection_multiplicity_local(U("u2 - u1^2"), U("u2")) == 2);
    CHECK(intersection_multiplicity_local(U("u2^2 - u1^3"), U("u2^2 + u1^3")) == 6);
    CHECK_THROWS_AS(intersection_multiplicity_local(U("u1*u2"), U("u1*(u1 + u2)")),
                    common_component_error);
}

TEST_CASE("fulton axioms on randomized pairs") {
    std::mt19937_64 rng(42);
    int done = 0;
    while (done < 50) {
        PolyQ f = random_local(rng, 3), g = random_local(rng, 3);
        if (!gcd_poly(f, g).is_constant()) continue;
        long i_fg = intersection_multiplicity_local(f, g);
        // symmetry
        CHECK(intersection_multiplicity_local(g, f) == i_fg);
        // invariance under adding a multiple of the partner
        PolyQ a = random_local(rng, 2);
        CHECK(intersection_multiplicity_local(f, g + a * f) == i_fg);
        // additivity on products
        PolyQ h = random_local(rng, 2);
        if (gcd_poly(f, h).is_constant()) {
            long i_fh = intersection_multiplicity_local(f, h);
            CHECK(intersection_multiplicity_local(f, g * h) == i_fg + i_fh);
        }
        // lower bound by multiplicities, equality iff transversal cones
        long m = f.order_at_origin(), mp = g.order_at_origin();
        CHECK(i_fg >= m * mp);
        PolyQ cf = f.homogeneous_part(static_cast<unsigned>(m));
        PolyQ cg = g.homogeneous_part(static_cast<unsigned>(mp));
        bool transversal = gcd_poly(cf, cg).is_constant();
        CHECK((i_fg == m * mp) == transversal);
        ++done;
    }
}

TEST_CASE("resultant order oracle on monic instances") {
    // f = prod (u2 - a_i(u1)), g = prod (u2 - b_j(u1)) with a_i(0)=b_j(0)=0:
    // I_origin = sum_ij ord(a_i - b_j) = ord_{u1} Res_{u2}(f, g)
    std::mt19937_64 rng(99);
    auto branch = [&](int maxdeg) {
        PolyQ a = PolyQ::zero(local_vars());
        for (int k = 1; k <= maxdeg; ++k) {
            long c = static_cast<long>(rng() % 9) - 4;
            if (c != 0) a.add_term({static_cast<unsigned>(k), 0}, Rational(c));
        }
        return a;
    };
    PolyQ u2 = PolyQ::variable(local_vars(), 1, Rational(1));
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<PolyQ> as, bs;
        for (int i = 0; i < 2; ++i) as.push_back(branch(3));
        for (int j = 0; j < 2; ++j) bs.push_back(branch(3));
        bool ok = true;
        long expected = 0;
        for (auto& a : as)
            for (auto& b : bs) {
                PolyQ d = a - b;
                if (d.is_zero_poly()) ok = false;
                else expected += d.order_at_origin();
            }
        if (!ok) continue;
        PolyQ f = PolyQ::constant(local_vars(), Rational(1));
        PolyQ g = f;
        for (auto& a : as) f = f * (u2 - a);
        for (auto& b : bs) g = g * (u2 - b);
        CHECK(intersection_multiplicity_local(f, g) == expected);
        PolyQ res = resultant(f, g, 1);
        CHECK(res.order_at_origin() == expected);
    }
}

TEST_CASE("tangent product gcd flags shared tangents") {
    ProjPoint2 B = ProjPoint2::rational(Rational(0), Rational(0), Rational(1));
    std::vector<TangentCone> shared = {tangent_cone(T("t1*t2"), B),
                                       tangent_cone(T("t1*(t1 + t2)"), B)};
    CHECK(!tangent_product_gcd(shared).is_constant());
    std::vector<TangentCone> clean = {tangent_cone(T("t1"), B), tangent_cone(T("t2"), B)};
    CHECK(tangent_product_gcd(clean).is_constant());
}
