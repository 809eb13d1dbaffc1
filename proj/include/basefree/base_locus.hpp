#ifndef BASEFREE_BASE_LOCUS_HPP
#define BASEFREE_BASE_LOCUS_HPP

#include <cstdint>
#include <random>

#include "basefree/maps.hpp"

namespace basefree {

// A Galois orbit of base points: one representative with coordinates in
// Q(alpha); the orbit has size [Q(alpha):Q] (or 1 over Q itself).
struct ConjugatePointFamily {
    FieldPtr field;
    ProjPoint2 point;
    long family_size;
    long multiplicity;  // -1 until computed
};

struct BaseLocusReport {
    std::vector<ConjugatePointFamily> families;
    long total_multiplicity = 0;  // sum of family_size * multiplicity
};

inline constexpr long kDefaultMaxExtDegree = 12;
inline constexpr long kSpecializationBound = 10000;  // B: draws from [-B, B]
inline constexpr int kSpecializationRetries = 12;

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// uniform integer in [-B, B] without distribution objects, so that the
// stream is identical on every platform
inline long draw_int(std::mt19937_64& rng, long B) {
    return static_cast<long>(rng() % static_cast<uint64_t>(2 * B + 1)) - B;
}

inline bool vanishes_at(const PolyQ& f, const ProjPoint2& A) {
    PolyA lf = lift_to_field(f, A.field());
    return lf.evaluate({A[0], A[1], A[2]}).is_zero_val();
}

inline bool vanishes_on_all(const std::vector<PolyQ>& comps, const ProjPoint2& A) {
    for (auto& c : comps)
        if (!vanishes_at(c, A)) return false;
    return true;
}

// roots of the gcd of a set of univariate PolyA (in variable `var`), as
// elements of their common field; nonlinear factors signal points that
// would need a field tower
inline std::vector<AlgebraicNumber> common_roots_in_field(const std::vector<PolyA>& polys,
                                                          size_t var, bool& tower) {
    tower = false;
    std::vector<PolyA> active;
    for (auto& p : polys) {
        if (p.is_zero_poly()) continue;  // imposes no condition at this t1
        if (p.is_constant()) return {};
        active.push_back(p);
    }
    if (active.empty()) throw invalid_input_error("base locus is not zero-dimensional");
    PolyA g = gcd_poly(active);
    if (g.is_constant()) return {};
    std::vector<AlgebraicNumber> roots;
    for (auto& af : factor_univariate_alg(g, var).second) {
        if (af.factor.degree_in(var) == 1) {
            roots.push_back(-af.factor.coeff_of(var, 0).constant_term());
        } else {
            tower = true;
        }
    }
    return roots;
}

}  // namespace detail

// All common projective zeros of the components, grouped into conjugate
// families (multiplicities left unset at -1).  Procedure: affine chart
// t3=1 via pairwise resultants eliminating t2, then the line t3=0 via the
// chart t1=1, then the single remaining point (0:1:0).
inline std::vector<ConjugatePointFamily> compute_base_points(
    const std::vector<PolyQ>& comps, long max_ext_degree = kDefaultMaxExtDegree) {
    if (comps.size() < 2) throw invalid_input_error("need at least two components");
    for (auto& c : comps)
        if (c.nvars() != 3 || c.is_zero_poly() || !c.is_homogeneous())
            throw invalid_input_error("components must be nonzero trivariate forms");
    if (!gcd_poly(comps).is_constant())
        throw invalid_input_error("components share a common factor");

    std::vector<ConjugatePointFamily> families;

    // ---- affine chart t3 = 1 ----
    std::vector<PolyQ> aff;
    for (auto& c : comps) aff.push_back(c.dehomogenize(2));
    bool empty_chart = false;
    for (auto& c : aff)
        if (c.is_constant()) empty_chart = true;  // nonzero constant: no zeros here
    if (!empty_chart) {
        // candidates for t1: gcd of t2-free components and of the nonzero
        // pairwise resultants
        std::vector<PolyQ> pool;
        std::vector<PolyQ> with_t2;
        for (auto& c : aff) {
            if (c.degree_in(1) == 0)
                pool.push_back(c);
            else
                with_t2.push_back(c);
        }
        for (size_t i = 0; i < with_t2.size(); ++i)
            for (size_t j = i + 1; j < with_t2.size(); ++j) {
                PolyQ r = resultant(with_t2[i], with_t2[j], 1);
                if (!r.is_zero_poly()) pool.push_back(r);
            }
        if (pool.empty()) {
            // every pair shares a factor; fall back to resultants of random
            // linear combinations (deterministic internal seed)
            std::mt19937_64 rng(0xb10cba5eULL);
            for (int attempt = 0; attempt < 32 && pool.empty(); ++attempt) {
                PolyQ u = PolyQ::zero(comps[0].vars());
                PolyQ v = PolyQ::zero(comps[0].vars());
                for (auto& c : with_t2) {
                    u += c * Rational(detail::draw_int(rng, 50));
                    v += c * Rational(detail::draw_int(rng, 50));
                }
                if (u.degree_in(1) == 0 || v.degree_in(1) == 0) continue;
                PolyQ r = resultant(u, v, 1);
                if (!r.is_zero_poly()) pool.push_back(r);
            }
            if (pool.empty())
                throw genericity_failure_error(
                    "compute_base_points: could not isolate t1 candidates");
        }
        PolyQ g = gcd_poly(pool);
        if (g.is_zero_poly()) throw invalid_input_error("base locus is not zero-dimensional");
        if (!g.is_constant()) {
            for (auto& [mf, mult] : factor_univariate(g, 0).factors) {
                (void)mult;
                long extdeg = mf.degree_in(0);
                FieldPtr field;
                AlgebraicNumber t1val;
                if (extdeg == 1) {
                    field = NumberField::rationals();
                    t1val = AlgebraicNumber(-mf.coeff_of(0, 0).constant_term());
                } else {
                    if (extdeg > max_ext_degree)
                        throw size_limit_error("base point needs extension of degree " +
                                               std::to_string(extdeg));
                    field = NumberField::create(mf, 0);
                    t1val = AlgebraicNumber::generator(field);
                }
                // back-substitute: solve for t2 over the field
                std::vector<PolyA> spec;
                for (auto& c : aff) spec.push_back(lift_to_field(c, field).substitute_var(0, t1val));
                bool tower = false;
                if (field->is_rationals()) {
                    // t2 may itself need an extension: work over Q directly
                    std::vector<PolyQ> specq;
                    bool nonzero_const = false;
                    for (auto& c : aff) {
                        PolyQ s = c.substitute_var(0, t1val.rational_value());
                        if (s.is_zero_poly()) continue;  // no condition at this t1
                        if (s.is_constant()) nonzero_const = true;
                        specq.push_back(s);
                    }
                    if (nonzero_const) continue;
                    if (specq.empty())
                        throw invalid_input_error("base locus is not zero-dimensional");
                    PolyQ g2 = gcd_poly(specq);
                    if (g2.is_constant()) continue;
                    for (auto& [hf, hm] : factor_univariate(g2, 1).factors) {
                        (void)hm;
                        long hd = hf.degree_in(1);
                        if (hd == 1) {
                            ProjPoint2 A = ProjPoint2::rational(
                                t1val.rational_value(), -hf.coeff_of(1, 0).constant_term(),
                                Rational(1));
                            if (detail::vanishes_on_all(comps, A))
                                families.push_back(
                                    {NumberField::rationals(), A, 1, -1});
                        } else {
                            if (hd > max_ext_degree)
                                throw size_limit_error("base point needs extension of degree " +
                                                       std::to_string(hd));
                            FieldPtr f2 = NumberField::create(hf, 1);
                            AlgebraicNumber beta = AlgebraicNumber::generator(f2);
                            ProjPoint2 A(AlgebraicNumber(f2, {t1val.rational_value()}), beta,
                                         AlgebraicNumber(f2, {Rational(1)}));
                            if (detail::vanishes_on_all(comps, A))
                                families.push_back({f2, A, hd, -1});
                        }
                    }
                } else {
                    std::vector<AlgebraicNumber> t2roots =
                        detail::common_roots_in_field(spec, 1, tower);
                    if (tower)
                        throw size_limit_error(
                            "base point needs a tower of field extensions");
                    for (auto& t2v : t2roots) {
                        ProjPoint2 A(t1val, t2v, AlgebraicNumber(field, {Rational(1)}));
                        if (detail::vanishes_on_all(comps, A))
                            families.push_back({field, A, extdeg, -1});
                    }
                }
            }
        }
    }

    // ---- line t3 = 0, chart t1 = 1 ----
    {
        std::vector<PolyQ> line;
        bool nonzero_const = false;
        for (auto& c : comps) {
            PolyQ s = c.substitute_var(2, Rational(0)).dehomogenize(0);
            if (s.is_zero_poly()) continue;  // this component vanishes on the line
            if (s.is_constant()) nonzero_const = true;
            line.push_back(s);
        }
        if (!nonzero_const && !line.empty()) {
            PolyQ g = gcd_poly(line);
            if (g.is_zero_poly()) throw invalid_input_error("base locus is not zero-dimensional");
            if (!g.is_constant()) {
                for (auto& [hf, hm] : factor_univariate(g, 1).factors) {
                    (void)hm;
                    long hd = hf.degree_in(1);
                    if (hd == 1) {
                        ProjPoint2 A = ProjPoint2::rational(
                            Rational(1), -hf.coeff_of(1, 0).constant_term(), Rational(0));
                        if (detail::vanishes_on_all(comps, A))
                            families.push_back({NumberField::rationals(), A, 1, -1});
                    } else {
                        if (hd > max_ext_degree)
                            throw size_limit_error("base point needs extension of degree " +
                                                   std::to_string(hd));
                        FieldPtr f2 = NumberField::create(hf, 1);
                        AlgebraicNumber beta = AlgebraicNumber::generator(f2);
                        ProjPoint2 A(AlgebraicNumber(f2, {Rational(1)}), beta,
                                     AlgebraicNumber(f2, {}));
                        if (detail::vanishes_on_all(comps, A))
                            families.push_back({f2, A, hd, -1});
                    }
                }
            }
        }
    }

    // ---- the point (0:1:0) ----
    {
        ProjPoint2 A = ProjPoint2::rational(Rational(0), Rational(1), Rational(0));
        if (detail::vanishes_on_all(comps, A))
            families.push_back({NumberField::rationals(), A, 1, -1});
    }

    return families;
}

// mult(A, B(P)) = I_A(C(W1), C(W2)) for W1, W2 the auxiliary curves with the
// free coefficients specialized at random integers.  Two agreeing draws are
// required; the generic value is the minimum over specializations.
inline long base_point_multiplicity(const std::vector<PolyQ>& comps, const ProjPoint2& A,
                                    uint64_t seed) {
    std::mt19937_64 rng(detail::splitmix64(seed));
    auto draw = [&]() -> long {
        for (;;) {
            PolyQ W1 = PolyQ::zero(comps[0].vars());
            PolyQ W2 = PolyQ::zero(comps[0].vars());
            for (auto& c : comps) {
                W1 += c * Rational(detail::draw_int(rng, kSpecializationBound));
                W2 += c * Rational(detail::draw_int(rng, kSpecializationBound));
            }
            if (W1.is_zero_poly() || W2.is_zero_poly()) continue;
            return intersection_multiplicity(W1, W2, A);
        }
    };
    std::vector<long> draws;
    auto next = [&]() -> long {
        // a specialization may accidentally share a component through A;
        // that is a non-generic draw, so redraw (counted against the bound)
        for (int i = 0; i < kSpecializationRetries; ++i) {
            try {
                long v = draw();
                draws.push_back(v);
                return v;
            } catch (const common_component_error&) {
                continue;
            }
        }
        throw genericity_failure_error("base_point_multiplicity: specializations kept failing");
    };
    long v1 = next();
    long v2 = next();
    if (v1 == v2) return v1;
    long candidate = std::min(v1, v2);
    for (int i = 0; i < kSpecializationRetries; ++i) {
        long v = next();
        if (v == candidate) return candidate;
        candidate = std::min(candidate, v);
    }
    std::string diag = "base_point_multiplicity: no agreement; draws:";
    for (long v : draws) diag += " " + std::to_string(v);
    throw genericity_failure_error(diag);
}

inline BaseLocusReport base_locus(const std::vector<PolyQ>& comps, uint64_t seed,
                                  long max_ext_degree = kDefaultMaxExtDegree) {
    BaseLocusReport rep;
    rep.families = compute_base_points(comps, max_ext_degree);
    for (size_t i = 0; i < rep.families.size(); ++i) {
        auto& fam = rep.families[i];
        fam.multiplicity =
            base_point_multiplicity(comps, fam.point, detail::splitmix64(seed) ^ (i + 1));
        rep.total_multiplicity += fam.family_size * fam.multiplicity;
    }
    return rep;
}

inline BaseLocusReport surface_base_locus(const SurfaceParam& P, uint64_t seed,
                                          long max_ext_degree = kDefaultMaxExtDegree) {
    return base_locus(P.components(), seed, max_ext_degree);
}

inline BaseLocusReport planar_base_locus(const PlanarMap& S, uint64_t seed,
                                         long max_ext_degree = kDefaultMaxExtDegree) {
    return base_locus(S.components(), seed, max_ext_degree);
}

}  // namespace basefree

#endif
