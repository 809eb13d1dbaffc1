#ifndef BASEFREE_BIRATIONAL_HPP
#define BASEFREE_BIRATIONAL_HPP

#include "basefree/linear_system.hpp"

namespace basefree {

// A planar inverse together with the cofactor identity witness:
// s_i(R) = t_i * cofactor componentwise, deg cofactor = deg(S)^2 - 1.
struct MapInverse {
    PlanarMap inverse;
    PolyQ cofactor;
};

namespace detail {

// joint canonical scaling: divide out the polynomial gcd, then make the
// coefficient set integer-primitive with a positive leading coefficient on
// the first component
inline void reduce_components(std::vector<PolyQ>& comps) {
    bool all_zero = true;
    for (auto& c : comps)
        if (!c.is_zero_poly()) all_zero = false;
    if (all_zero) throw degenerate_input_error("composition has identically zero image");
    std::vector<PolyQ> nonzero;
    for (auto& c : comps)
        if (!c.is_zero_poly()) nonzero.push_back(c);
    PolyQ g = gcd_poly(nonzero);
    if (!g.is_constant())
        for (auto& c : comps) {
            auto q = c.divide_exact(g);
            if (!q) throw structural_error("component gcd does not divide");
            c = std::move(*q);
        }
    Integer ng(0), dl(1);
    for (auto& c : comps)
        for (auto& [m, v] : c.terms()) accumulate_content(v, ng, dl);
    Rational scale(dl, ng);
    for (auto& c : comps)
        if (!c.is_zero_poly() && sgn(c.leading_coeff()) < 0) {
            scale = -scale;
            break;
        }
    for (auto& c : comps) c.scale(scale);
}

inline std::vector<PolyQ> substitute_components(const std::vector<PolyQ>& f,
                                                const PlanarMap& g) {
    std::vector<PolyQ> images(g.components().begin(), g.components().end());
    std::vector<PolyQ> out;
    for (auto& c : f) out.push_back(c.substitute(images));
    return out;
}

}  // namespace detail

inline PlanarMap compose_planar(const PlanarMap& f, const PlanarMap& g) {
    std::vector<PolyQ> comps = detail::substitute_components(f.components(), g);
    detail::reduce_components(comps);
    return PlanarMap(std::move(comps));
}

inline SurfaceParam compose_planar(const SurfaceParam& f, const PlanarMap& g) {
    std::vector<PolyQ> comps = detail::substitute_components(f.components(), g);
    detail::reduce_components(comps);
    return SurfaceParam(std::move(comps));
}

inline long map_degree(const PlanarMap& m) { return m.degree(); }
inline long map_degree(const SurfaceParam& m) { return m.degree(); }

namespace detail {

// Variables for the elimination ideal of the graph: source t's, target x's.
inline const VarsPtr& graph_vars() {
    static VarsPtr v = make_vars({"t1", "t2", "t3", "x1", "x2", "x3"});
    return v;
}

// From the resultant R(t, x1, x2, x3): drop the coefficient content in the
// x's (factors free of t and the exceptional-curve factors), drop stray
// powers of t, and reduce to the squarefree part in t.  The survivor is the
// generic fiber over (x1 : x2 : x3).
inline PolyQ fiber_polynomial(PolyQ R, size_t tvar) {
    if (R.is_zero_poly())
        throw not_birational_error("elimination collapsed: components are not independent", 0);
    // coefficient content with respect to tvar
    std::vector<PolyQ> coeffs;
    for (long k = 0; k <= R.degree_in(tvar); ++k) {
        PolyQ c = R.coeff_of(tvar, k);
        if (!c.is_zero_poly()) coeffs.push_back(std::move(c));
    }
    PolyQ cont = gcd_poly(coeffs);
    if (!cont.is_constant()) {
        auto q = R.divide_exact(cont);
        if (!q) throw structural_error("content does not divide resultant");
        R = std::move(*q);
    }
    // factors free of the x's: content of R grouped by x-monomial
    std::map<Mono, PolyQ, GrlexLess> groups;
    for (auto& [m, c] : R.terms()) {
        Mono xm = m;
        xm[tvar] = 0;
        auto it = groups.try_emplace(xm, PolyQ::zero(R.vars())).first;
        Mono tm(m.size(), 0);
        tm[tvar] = m[tvar];
        it->second.add_term(tm, c);
    }
    std::vector<PolyQ> xcoeffs;
    for (auto& [xm, c] : groups) xcoeffs.push_back(std::move(c));
    PolyQ xcont = gcd_poly(xcoeffs);
    if (!xcont.is_constant()) {
        auto q = R.divide_exact(xcont);
        if (!q) throw structural_error("x-content does not divide resultant");
        R = std::move(*q);
    }
    // stray power of t: divide by t^v
    long v = 0;
    for (auto& [m, c] : R.terms()) {
        long e = static_cast<long>(m[tvar]);
        if (v == 0 || e < v) v = e;
        if (e == 0) { v = 0; break; }
    }
    if (v > 0) {
        PolyQ tp = PolyQ::variable(R.vars(), tvar, Rational(1)).pow(v);
        R = *R.divide_exact(tp);
    }
    // squarefree part in t
    PolyQ d = R.derivative(tvar);
    if (!d.is_zero_poly()) {
        PolyQ g = gcd_poly(R, d);
        if (!g.is_constant()) R = *R.divide_exact(g);
    }
    return R;
}

}  // namespace detail

// Invert a birational planar map by resultant elimination on the graph,
// certifying the result through the exact cofactor identity.
inline MapInverse invert_planar(const PlanarMap& map) {
    const VarsPtr& gv = detail::graph_vars();
    std::vector<PolyQ> s;
    for (auto& c : map.components()) s.push_back(c.rebase(gv, {0, 1, 2}));
    PolyQ x1 = PolyQ::variable(gv, 3, Rational(1));
    PolyQ x2 = PolyQ::variable(gv, 4, Rational(1));
    PolyQ x3 = PolyQ::variable(gv, 5, Rational(1));
    PolyQ G1 = (x2 * s[0] - x1 * s[1]).dehomogenize(2);
    PolyQ G2 = (x3 * s[0] - x1 * s[2]).dehomogenize(2);
    if (G1.is_zero_poly() || G2.is_zero_poly())
        throw not_birational_error("graph equations degenerate", 0);

    // fiber in t1: eliminate t2; fiber in t2: eliminate t1
    std::array<PolyQ, 2> lin = {PolyQ::zero(gv), PolyQ::zero(gv)};
    for (size_t tv = 0; tv < 2; ++tv) {
        size_t other = 1 - tv;
        PolyQ R = (G1.degree_in(other) == 0 && G2.degree_in(other) == 0)
                      ? gcd_poly(G1, G2)
                      : resultant(G1, G2, other);
        PolyQ fiber = detail::fiber_polynomial(std::move(R), tv);
        long fdeg = fiber.degree_in(tv);
        if (fdeg != 1)
            throw not_birational_error("generic fiber is not a single point", fdeg);
        lin[tv] = std::move(fiber);
    }
    // lin[i] = a_i * t_{i+1} - (-b_i)  with a, b in the x's only
    PolyQ a1 = lin[0].coeff_of(0, 1), b1 = lin[0].coeff_of(0, 0);
    PolyQ a2 = lin[1].coeff_of(1, 1), b2 = lin[1].coeff_of(1, 0);
    if (a1.degree_in(0) > 0 || a1.degree_in(1) > 0 || a2.degree_in(0) > 0 || a2.degree_in(1) > 0)
        throw not_birational_error("fiber coordinate is not rational in the target", 2);
    b1 = b1 * Rational(-1);
    b2 = b2 * Rational(-1);
    std::vector<PolyQ> comps6 = {b1 * a2, b2 * a1, a1 * a2};
    std::vector<PolyQ> comps;
    for (auto& c : comps6) {
        for (size_t v = 0; v < 3; ++v)
            if (c.degree_in(v) > 0)
                throw not_birational_error("fiber coordinate is not rational in the target", 2);
        // only x1, x2, x3 occur; the leading t-slots carry exponent 0
        comps.push_back(c.rebase(vars_t3(), {0, 1, 2, 0, 1, 2}));
    }
    detail::reduce_components(comps);
    for (auto& c : comps)
        if (c.is_zero_poly() || !c.is_homogeneous())
            throw not_birational_error("inverse candidate is not a projective map", 0);
    PlanarMap inv(std::move(comps));

    // certify: s_i(R) = t_i * cofactor, deg cofactor = deg(S)^2 - 1
    std::vector<PolyQ> images(inv.components().begin(), inv.components().end());
    PolyQ t1 = PolyQ::variable(vars_t3(), 0, Rational(1));
    auto cof = map.components()[0].substitute(images).divide_exact(t1);
    if (!cof) throw not_birational_error("cofactor identity fails", 0);
    for (int i = 1; i < 3; ++i) {
        PolyQ ti = PolyQ::variable(vars_t3(), static_cast<size_t>(i), Rational(1));
        if (!(map.components()[static_cast<size_t>(i)].substitute(images) - ti * *cof)
                 .is_zero_poly())
            throw not_birational_error("cofactor identity fails", 0);
    }
    if (cof->degree() != map.degree() * map.degree() - 1 ||
        inv.degree() != map.degree())
        throw not_birational_error("inverse degree inconsistent", 0);
    return MapInverse{std::move(inv), std::move(*cof)};
}

}  // namespace basefree

#endif
