#ifndef BASEFREE_REPARAM_HPP
#define BASEFREE_REPARAM_HPP

#include "basefree/birational.hpp"

namespace basefree {

struct PerPointTransversality {
    ConjugatePointFamily family;
    long multiplicity;
    bool is_perfect_square;
    bool tangent_gcd_trivial;
};

struct TransversalityReport {
    BaseLocusReport base_locus;
    std::vector<PerPointTransversality> per_point;
    bool transversal;
    std::string reason;  // empty when transversal
};

struct ReparamResult {
    enum class Outcome {
        AlreadyAlmostPolynomial,
        Polynomial,
        NoPolynomialParametrization,
        NotApplicable,
    };
    Outcome outcome;
    std::string reason;  // for the two failure outcomes
    std::optional<SurfaceParam> parametrization;  // normalized Q (or normalized P)
    std::optional<PlanarMap> sbar;
    std::optional<PlanarMap> rbar;
    std::optional<PlanarMap> normalizing_projectivity;  // L, linear components
};

// f = c * ell^deg(f) for a linear form ell?  Reads candidate coefficients off
// the pure-power and near-pure-power monomials, then verifies exactly.
inline std::optional<PolyQ> is_power_of_linear_form(const PolyQ& f) {
    if (f.is_zero_poly()) throw degenerate_input_error("is_power_of_linear_form: zero form");
    if (!f.is_homogeneous()) return std::nullopt;
    long d = f.degree();
    size_t base = 3;
    Rational c;
    for (size_t i = 0; i < 3 && base == 3; ++i) {
        Mono m(3, 0);
        m[i] = static_cast<unsigned>(d);
        auto it = f.terms().find(m);
        if (it != f.terms().end()) {
            base = i;
            c = it->second;
        }
    }
    if (base == 3) return std::nullopt;  // no pure power present
    PolyQ ell = PolyQ::variable(f.vars(), base, Rational(1));
    for (size_t j = 0; j < 3; ++j) {
        if (j == base) continue;
        Mono m(3, 0);
        m[base] = static_cast<unsigned>(d - 1);
        m[j] = 1;
        auto it = f.terms().find(m);
        if (it == f.terms().end()) continue;
        Mono mj(3, 0);
        mj[j] = 1;
        ell.add_term(mj, it->second / (c * Rational(d)));
    }
    PolyQ check = ell.pow(static_cast<unsigned long>(d));
    check.scale(c);
    if ((check - f).is_zero_poly()) return ell;
    return std::nullopt;
}

namespace detail {

// Exact inverse of an invertible 3x3 rational matrix via the adjugate.
inline std::array<std::array<Rational, 3>, 3> invert3(
    const std::array<std::array<Rational, 3>, 3>& M) {
    auto minor2 = [&](size_t r0, size_t r1, size_t c0, size_t c1) -> Rational {
        return M[r0][c0] * M[r1][c1] - M[r0][c1] * M[r1][c0];
    };
    Rational det = M[0][0] * minor2(1, 2, 1, 2) - M[0][1] * minor2(1, 2, 0, 2) +
                   M[0][2] * minor2(1, 2, 0, 1);
    if (is_zero(det)) throw degenerate_input_error("projectivity matrix is singular");
    std::array<std::array<Rational, 3>, 3> inv;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            if (r0 > r1) std::swap(r0, r1);
            if (c0 > c1) std::swap(c0, c1);
            Rational cof = minor2(r0, r1, c0, c1);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = cof / det;
        }
    return inv;
}

inline PlanarMap matrix_to_map(const std::array<std::array<Rational, 3>, 3>& M) {
    std::vector<PolyQ> comps;
    for (size_t i = 0; i < 3; ++i) {
        PolyQ row = PolyQ::zero(vars_t3());
        for (size_t j = 0; j < 3; ++j)
            if (!is_zero(M[i][j])) {
                Mono m(3, 0);
                m[j] = 1;
                row.add_term(m, M[i][j]);
            }
        comps.push_back(std::move(row));
    }
    return PlanarMap(std::move(comps));
}

}  // namespace detail

struct Normalization {
    SurfaceParam param;  // P composed with L^{-1}
    PlanarMap L;
    PlanarMap L_inverse;
};

// Build L = (t_i, t_j, ell), omitting an index k with nonzero coefficient in
// ell, and return P composed with L^{-1}; the fourth component becomes a
// power of t3.
inline Normalization normalize_almost_polynomial(const SurfaceParam& P, const PolyQ& ell) {
    if (ell.degree() != 1 || !ell.is_homogeneous())
        throw invalid_input_error("normalize_almost_polynomial: not a linear form");
    std::array<Rational, 3> a{};
    for (size_t j = 0; j < 3; ++j) {
        Mono m(3, 0);
        m[j] = 1;
        auto it = ell.terms().find(m);
        if (it != ell.terms().end()) a[j] = it->second;
    }
    size_t k = 3;
    for (size_t j = 0; j < 3; ++j)
        if (!is_zero(a[j])) k = j;  // last nonzero coefficient
    if (k == 3) throw invalid_input_error("normalize_almost_polynomial: zero form");
    std::array<std::array<Rational, 3>, 3> M{};
    size_t row = 0;
    for (size_t j = 0; j < 3; ++j) {
        if (j == k) continue;
        M[row][j] = Rational(1);
        ++row;
    }
    for (size_t j = 0; j < 3; ++j) M[2][j] = a[j];
    auto inv = detail::invert3(M);
    PlanarMap Linv = detail::matrix_to_map(inv);
    SurfaceParam out = compose_planar(P, Linv);
    if (!is_power_of_linear_form(out[3]) || out[3].degree_in(2) != out.degree())
        throw structural_error("normalization did not produce a power of t3");
    return {std::move(out), detail::matrix_to_map(M), std::move(Linv)};
}

// Algorithm 1: every base-point multiplicity a perfect square and every
// per-point gcd of the four tangent products trivial.
inline TransversalityReport transversality_test(const SurfaceParam& P, uint64_t seed,
                                                long max_ext_degree = kDefaultMaxExtDegree) {
    TransversalityReport rep{surface_base_locus(P, seed, max_ext_degree), {}, true, ""};
    for (auto& fam : rep.base_locus.families) {
        PerPointTransversality pp{fam, fam.multiplicity, false, false};
        pp.is_perfect_square = perfect_square_root(fam.multiplicity).has_value();
        std::vector<TangentCone> cones;
        for (auto& c : P.components()) cones.push_back(tangent_cone(c, fam.point));
        pp.tangent_gcd_trivial = tangent_product_gcd(cones).is_constant();
        if (rep.transversal && !pp.is_perfect_square) {
            rep.transversal = false;
            rep.reason = "multiplicity " + std::to_string(fam.multiplicity) + " at " +
                         fam.point.str() + " is not a perfect square";
        }
        if (rep.transversal && !pp.tangent_gcd_trivial) {
            rep.transversal = false;
            rep.reason = "tangent products at " + fam.point.str() + " share a common factor";
        }
        rep.per_point.push_back(std::move(pp));
    }
    return rep;
}

inline long surface_degree(const SurfaceParam& P, const BaseLocusReport& base) {
    long d = P.degree() * P.degree() - base.total_multiplicity;
    if (d <= 0)
        throw invalid_input_error("surface degree " + std::to_string(d) +
                                  " is not positive: input is not a proper parametrization");
    return d;
}

// Algorithm 2.
inline ReparamResult polynomial_reparametrize(const SurfaceParam& P, uint64_t seed,
                                              long max_ext_degree = kDefaultMaxExtDegree) {
    ReparamResult res{ReparamResult::Outcome::Polynomial, "", {}, {}, {}, {}};
    // Steps 1-4: almost polynomial input
    if (auto ell = is_power_of_linear_form(P[3])) {
        Normalization norm = normalize_almost_polynomial(P, *ell);
        res.outcome = ReparamResult::Outcome::AlreadyAlmostPolynomial;
        res.parametrization = std::move(norm.param);
        res.normalizing_projectivity = std::move(norm.L);
        return res;
    }
    // Step 5
    TransversalityReport tr = transversality_test(P, seed, max_ext_degree);
    if (!tr.transversal) {
        res.outcome = ReparamResult::Outcome::NotApplicable;
        res.reason = "input is not transversal: " + tr.reason;
        return res;
    }
    // Step 6
    long degSurf = surface_degree(P, tr.base_locus);
    auto s = perfect_square_root(degSurf);
    if (!s) {
        res.outcome = ReparamResult::Outcome::NoPolynomialParametrization;
        res.reason = "surface degree " + std::to_string(degSurf) + " is not a perfect square";
        return res;
    }
    if (P.degree() % *s != 0) {
        res.outcome = ReparamResult::Outcome::NoPolynomialParametrization;
        res.reason = "map degree " + std::to_string(P.degree()) + "/" + std::to_string(*s) +
                     " is not an integer";
        return res;
    }
    long degSbar = P.degree() / *s;
    // Step 7: linear system of degree-degSbar curves through the base locus
    DivisorSpec spec{degSbar, {}};
    for (auto& fam : tr.base_locus.families) {
        if (fam.multiplicity % degSurf != 0) {
            res.outcome = ReparamResult::Outcome::NoPolynomialParametrization;
            res.reason = "multiplicity " + std::to_string(fam.multiplicity) + " at " +
                         fam.point.str() + " is not divisible by the surface degree";
            return res;
        }
        auto req = perfect_square_root(fam.multiplicity / degSurf);
        if (!req) {
            res.outcome = ReparamResult::Outcome::NoPolynomialParametrization;
            res.reason = "required multiplicity at " + fam.point.str() +
                         " is not an integer";
            return res;
        }
        spec.assignments.push_back({fam, *req});
    }
    LinearSystemBasis basis = build_linear_system(spec);
    if (basis.projective_dimension != 2) {
        res.outcome = ReparamResult::Outcome::NoPolynomialParametrization;
        res.reason = "linear system has projective dimension " +
                     std::to_string(basis.projective_dimension) + ", expected 2";
        return res;
    }
    PlanarMap sbar(basis.basis);
    // Steps 8-9
    MapInverse inv = invert_planar(sbar);
    SurfaceParam Qraw = compose_planar(P, inv.inverse);
    // Steps 10-12
    auto ell = is_power_of_linear_form(Qraw[3]);
    if (!ell) {
        res.outcome = ReparamResult::Outcome::NoPolynomialParametrization;
        res.reason = "composed fourth component is not a power of a linear form";
        res.sbar = std::move(sbar);
        res.rbar = std::move(inv.inverse);
        return res;
    }
    Normalization norm = normalize_almost_polynomial(Qraw, *ell);
    res.outcome = ReparamResult::Outcome::Polynomial;
    res.parametrization = std::move(norm.param);
    // fold L into the planar maps: Q parametrizes via L o sbar, whose
    // inverse is rbar o L^{-1}
    res.sbar = compose_planar(norm.L, sbar);
    res.rbar = compose_planar(inv.inverse, norm.L_inverse);
    res.normalizing_projectivity = std::move(norm.L);
    return res;
}

}  // namespace basefree

#endif
