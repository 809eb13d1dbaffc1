#ifndef BASEFREE_CURVE_LOCAL_HPP
#define BASEFREE_CURVE_LOCAL_HPP

#include <array>

#include "basefree/number_field.hpp"

namespace basefree {

// Projective plane point with exact coordinates, possibly in Q(alpha).
// Canonical form: the last nonzero coordinate is scaled to 1.
class ProjPoint2 {
  public:
    ProjPoint2(AlgebraicNumber c0, AlgebraicNumber c1, AlgebraicNumber c2)
        : coords_{std::move(c0), std::move(c1), std::move(c2)} {
        int last = -1;
        for (int i = 0; i < 3; ++i)
            if (!coords_[i].is_zero_val()) last = i;
        if (last < 0) throw invalid_input_error("ProjPoint2: all coordinates zero");
        chart_ = last;
        AlgebraicNumber inv = inverse(coords_[chart_]);
        for (auto& c : coords_) c = c * inv;
    }

    static ProjPoint2 rational(const Rational& a, const Rational& b, const Rational& c) {
        return ProjPoint2(AlgebraicNumber(a), AlgebraicNumber(b), AlgebraicNumber(c));
    }

    const AlgebraicNumber& operator[](size_t i) const { return coords_[i]; }
    // index of the coordinate normalized to 1 (the affine chart used for
    // localization)
    int chart() const { return chart_; }

    // the non-trivial number field carried by the coordinates, if any
    FieldPtr field() const {
        for (auto& c : coords_)
            if (!c.field()->is_rationals()) return c.field();
        return NumberField::rationals();
    }

    bool is_rational_point() const {
        for (auto& c : coords_)
            if (!c.is_rational_val()) return false;
        return true;
    }

    friend bool operator==(const ProjPoint2& a, const ProjPoint2& b) {
        return a.coords_[0] == b.coords_[0] && a.coords_[1] == b.coords_[1] &&
               a.coords_[2] == b.coords_[2];
    }
    friend bool operator!=(const ProjPoint2& a, const ProjPoint2& b) { return !(a == b); }

    std::string str() const {
        return "(" + coords_[0].str() + " : " + coords_[1].str() + " : " + coords_[2].str() + ")";
    }

  private:
    std::array<AlgebraicNumber, 3> coords_;
    int chart_;
};

inline const VarsPtr& local_vars() {
    static VarsPtr uv = make_vars({"u1", "u2"});
    return uv;
}

// Move A to the origin: dehomogenize at the chart coordinate and translate
// the two remaining coordinates by the point.  Result lives in (u1, u2).
inline PolyA localize_at(const PolyA& f, const ProjPoint2& A) {
    if (f.nvars() != 3) throw structural_error("localize_at: expected a trivariate form");
    const VarsPtr& uv = local_vars();
    AlgebraicNumber ex = A[0] + A[1] + A[2];  // exemplar in the richest field
    std::vector<PolyA> images;
    int slot = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == A.chart()) {
            images.push_back(PolyA::constant(uv, one_like(ex)));
        } else {
            images.push_back(PolyA::variable(uv, slot, ex) + PolyA::constant(uv, A[i] + zero_like(ex)));
            ++slot;
        }
    }
    return f.substitute(images);
}

inline PolyA localize_at(const PolyQ& f, const ProjPoint2& A) {
    return localize_at(lift_to_field(f, A.field()), A);
}

template <typename F>
long point_multiplicity(const F& f, const ProjPoint2& A) {
    if (f.is_zero_poly()) throw degenerate_input_error("point_multiplicity: zero form");
    return localize_at(f, A).order_at_origin();
}

struct TangentCone {
    ProjPoint2 point;
    PolyA cone;  // homogeneous in (u1, u2)
    long multiplicity;
};

template <typename F>
TangentCone tangent_cone(const F& f, const ProjPoint2& A) {
    if (f.is_zero_poly()) throw degenerate_input_error("tangent_cone: zero form");
    PolyA loc = localize_at(f, A);
    long m = loc.order_at_origin();
    if (m == 0) throw not_on_curve_error("tangent_cone: point not on the curve");
    return TangentCone{A, loc.homogeneous_part(m), m};
}

inline PolyA tangent_product_gcd(const std::vector<TangentCone>& cones) {
    if (cones.empty()) throw structural_error("tangent_product_gcd: empty cone list");
    for (size_t i = 1; i < cones.size(); ++i)
        if (!(cones[i].point == cones[0].point))
            throw structural_error("tangent_product_gcd: cones at different points");
    std::vector<PolyA> forms;
    for (auto& c : cones) forms.push_back(c.cone);
    return gcd_poly(forms);
}

namespace detail {

// Strip the rational content so that coefficients stay small during the
// Fulton reduction.  Any nonzero scalar multiple defines the same curve.
template <typename K>
void strip_content(MultiPoly<K>& f) {
    if (f.is_zero_poly()) return;
    Integer ng(0), dl(1);
    for (auto& [m, c] : f.terms()) accumulate_content(c, ng, dl);
    if (sgn(ng) == 0) return;
    Rational s(dl, ng);
    if (!is_one(s)) f.scale(from_rational(f.leading_coeff(), s));
}

// drop all terms of total degree >= n (working modulo (u1,u2)^n)
template <typename K>
void truncate_order(MultiPoly<K>& f, long n) {
    MultiPoly<K> out = MultiPoly<K>::zero(f.vars());
    for (auto& [m, c] : f.terms()) {
        long d = 0;
        for (unsigned e : m) d += static_cast<long>(e);
        if (d < n) out.add_term(m, c);
    }
    f = std::move(out);
}

// Fulton's reduction at the origin of the (u1, u2) plane, working modulo
// (u1,u2)^n.  The intersection number is finitely determined, so a result m
// is trustworthy once 2m + 2 <= n; the caller escalates the precision
// otherwise.  Once part of the total is banked only the remainder needs
// resolving, so the working precision decays while keeping the certificate.
// Common components through the origin surface as both curves reducing to
// multiples of u2, or one reduction cancelling the other.
template <typename K>
long fulton_origin_trunc(MultiPoly<K> F, MultiPoly<K> G, long n) {
    long total = 0;
    long prec = n;
    truncate_order(F, prec);
    truncate_order(G, prec);
    for (;;) {
        if (F.is_zero_poly() || G.is_zero_poly())
            throw common_component_error(
                "intersection_multiplicity: curves share a component through the point");
        if (F.order_at_origin() < 1 || G.order_at_origin() < 1) return total;
        K z0 = zero_like(F.leading_coeff());
        MultiPoly<K> f0 = F.substitute_var(1, z0);
        MultiPoly<K> g0 = G.substitute_var(1, z0);
        long r = f0.is_zero_poly() ? -1 : f0.degree_in(0);
        long s = g0.is_zero_poly() ? -1 : g0.degree_in(0);
        if (r > s) {
            std::swap(F, G);
            std::swap(f0, g0);
            std::swap(r, s);
        }
        if (r == -1) {
            if (s == -1)
                throw common_component_error(
                    "intersection_multiplicity: curves share the component u2 through the point");
            // F = u2 * H;  I(u2, G) = ord_{u1} G(u1, 0)
            MultiPoly<K> u2 = MultiPoly<K>::variable(F.vars(), 1, one_like(F.leading_coeff()));
            auto H = F.divide_exact(u2);
            if (!H) throw structural_error("fulton: expected u2 to divide");
            total += g0.order_at_origin();
            F = std::move(*H);
            prec = std::min(prec - 1, n - 2 * total);
            if (prec < 2) prec = 2;
            truncate_order(F, prec);
            truncate_order(G, prec);
            continue;
        }
        // 0 < r <= s: kill the leading u1-term of G on the axis
        K a = f0.leading_coeff_in(0).constant_term();
        K b = g0.leading_coeff_in(0).constant_term();
        MultiPoly<K> shift =
            MultiPoly<K>::variable(G.vars(), 0, one_like(a)).pow(static_cast<unsigned long>(s - r));
        G.scale(a);
        G -= (F * shift).scale(b);
        truncate_order(G, prec);
        strip_content(G);
    }
}

}  // namespace detail

// Dense bivariate integer specialization of the same procedure, used for
// rational points where the coefficient field carries no extension.  Rows
// are indexed by the u2 exponent, columns by the u1 exponent.
using BiZ = std::vector<std::vector<Integer>>;

inline void biz_trim(BiZ& f) {
    for (auto& row : f)
        while (!row.empty() && sgn(row.back()) == 0) row.pop_back();
    while (!f.empty() && f.back().empty()) f.pop_back();
}

inline bool biz_zero(const BiZ& f) {
    for (auto& row : f)
        if (!row.empty()) return false;
    return true;
}

inline void biz_strip_content(BiZ& f) {
    Integer g(0);
    for (auto& row : f)
        for (auto& c : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(g) == 0 || g == 1) return;
    for (auto& row : f)
        for (auto& c : row) c /= g;
}

// drop all terms of total degree >= n (working modulo (u1,u2)^n)
inline void biz_truncate(BiZ& f, long n) {
    for (size_t j = 0; j < f.size(); ++j) {
        long keep = n - static_cast<long>(j);
        if (keep < 0) keep = 0;
        if (static_cast<long>(f[j].size()) > keep) f[j].resize(static_cast<size_t>(keep));
    }
    biz_trim(f);
}

inline BiZ biz_from_poly(const PolyQ& f) {
    Integer den(1);
    for (auto& [m, c] : f.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    BiZ r;
    for (auto& [m, c] : f.terms()) {
        size_t i = m[0], j = m[1];
        if (r.size() <= j) r.resize(j + 1);
        if (r[j].size() <= i) r[j].resize(i + 1, Integer(0));
        Rational v = c * Rational(den);
        r[j][i] = Integer(v.get_num());
    }
    biz_trim(r);
    biz_strip_content(r);
    return r;
}

namespace detail {

// One reduction pass working modulo (u1,u2)^prec.  The intersection number
// is finitely determined, so a result m is trustworthy once 2m + 2 <= n;
// the caller escalates the precision otherwise.  Once part of the total is
// banked only the remainder needs resolving, so the working precision decays
// to n - 2*total while keeping the same certificate.
inline long fulton_origin_z(BiZ F, BiZ G, long n) {
    long total = 0;
    long prec = n;
    biz_truncate(F, prec);
    biz_truncate(G, prec);
    for (;;) {
        biz_trim(F);
        biz_trim(G);
        if (biz_zero(F) || biz_zero(G))
            throw common_component_error(
                "intersection_multiplicity: curves share a component through the point");
        // order-0 check: constant term nonzero
        bool f_at0 = !F[0].empty() && sgn(F[0][0]) != 0;
        bool g_at0 = !G[0].empty() && sgn(G[0][0]) != 0;
        if (f_at0 || g_at0) return total;
        long r = F.empty() || F[0].empty() ? -1 : static_cast<long>(F[0].size()) - 1;
        long s = G.empty() || G[0].empty() ? -1 : static_cast<long>(G[0].size()) - 1;
        if (r > s) {
            std::swap(F, G);
            std::swap(r, s);
        }
        if (r == -1) {
            if (s == -1)
                throw common_component_error(
                    "intersection_multiplicity: curves share the component u2 through the point");
            // F divisible by u2: drop one power; I(u2, G) = ord_{u1} G(u1,0)
            long axis = 0;
            while (sgn(G[0][static_cast<size_t>(axis)]) == 0) ++axis;
            total += axis;
            F.erase(F.begin());
            prec = std::min(prec - 1, n - 2 * total);
            if (prec < 2) prec = 2;
            biz_truncate(F, prec);
            biz_truncate(G, prec);
            continue;
        }
        Integer a = F[0].back();
        Integer b = G[0].back();
        Integer d;
        mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= d;
        b /= d;
        size_t k = static_cast<size_t>(s - r);
        // G := a*G - b*u1^k*F
        if (G.size() < F.size()) G.resize(F.size());
        for (size_t j = 0; j < G.size(); ++j) {
            const std::vector<Integer>* frow = j < F.size() ? &F[j] : nullptr;
            size_t need = frow ? std::max(G[j].size(), frow->size() + k) : G[j].size();
            G[j].resize(need, Integer(0));
            for (auto& c : G[j]) c *= a;
            if (frow)
                for (size_t i = 0; i < frow->size(); ++i) G[j][i + k] -= b * (*frow)[i];
        }
        biz_truncate(G, prec);
        biz_strip_content(G);
    }
}

}  // namespace detail

// Fulton directly on local bivariate equations (origin of the (u1,u2) plane).
template <typename K>
long intersection_multiplicity_local(MultiPoly<K> f, MultiPoly<K> g) {
    if (f.is_zero_poly() || g.is_zero_poly())
        throw common_component_error(
            "intersection_multiplicity: curves share a component through the point");
    detail::strip_content(f);
    detail::strip_content(g);
    long cap = 2 * f.degree() * g.degree() + 4;
    long n = 32;
    for (;;) {
        if (n > cap) n = cap;
        long m = -1;
        try {
            m = detail::fulton_origin_trunc(f, g, n);
            if (2 * m + 2 <= n) return m;
        } catch (const common_component_error&) {
            if (n >= cap) throw;  // genuine shared component, not truncation
        }
        if (n >= cap)
            throw common_component_error(
                "intersection_multiplicity: curves share a component through the point");
        n = std::max(2 * n, m >= 0 ? 2 * m + 8 : 0);
    }
}

inline long intersection_multiplicity_local(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero_poly() || g.is_zero_poly())
        throw common_component_error(
            "intersection_multiplicity: curves share a component through the point");
    BiZ F = biz_from_poly(f), G = biz_from_poly(g);
    long cap = 2 * f.degree() * g.degree() + 4;
    long n = 32;
    for (;;) {
        if (n > cap) n = cap;
        long m = -1;
        try {
            m = detail::fulton_origin_z(F, G, n);
            if (2 * m + 2 <= n) return m;
        } catch (const common_component_error&) {
            if (n >= cap) throw;  // genuine shared component, not truncation
        }
        if (n >= cap)
            throw common_component_error(
                "intersection_multiplicity: curves share a component through the point");
        n = std::max(2 * n, m >= 0 ? 2 * m + 8 : 0);
    }
}

// Localization over plain Q when both the forms and the point are rational;
// avoids dragging number-field arithmetic through the reduction.
inline PolyQ localize_at_rational(const PolyQ& f, const ProjPoint2& A) {
    if (f.nvars() != 3) throw structural_error("localize_at: expected a trivariate form");
    const VarsPtr& uv = local_vars();
    std::vector<PolyQ> images;
    int slot = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == A.chart()) {
            images.push_back(PolyQ::constant(uv, Rational(1)));
        } else {
            images.push_back(PolyQ::variable(uv, slot, Rational(1)) +
                             PolyQ::constant(uv, A[i].rational_value()));
            ++slot;
        }
    }
    return f.substitute(images);
}

inline long intersection_multiplicity(const PolyQ& f, const PolyQ& g, const ProjPoint2& A) {
    if (A.is_rational_point())
        return intersection_multiplicity_local(localize_at_rational(f, A),
                                               localize_at_rational(g, A));
    return intersection_multiplicity_local(localize_at(f, A), localize_at(g, A));
}

inline long intersection_multiplicity(const PolyA& f, const PolyA& g, const ProjPoint2& A) {
    return intersection_multiplicity_local(localize_at(f, A), localize_at(g, A));
}

}  // namespace basefree

#endif
