#ifndef BASEFREE_POLYGCD_HPP
#define BASEFREE_POLYGCD_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "basefree/multipoly.hpp"

namespace basefree {

// ---------------------------------------------------------------------------
// Univariate views
// ---------------------------------------------------------------------------

template <typename K>
std::vector<MultiPoly<K>> univar_coeffs(const MultiPoly<K>& f, size_t var) {
    long d = f.degree_in(var);
    std::vector<MultiPoly<K>> cs;
    if (d < 0) return cs;
    cs.reserve(d + 1);
    for (long k = 0; k <= d; ++k) cs.push_back(f.coeff_of(var, static_cast<unsigned>(k)));
    return cs;
}

template <typename K>
MultiPoly<K> from_univar_coeffs(const std::vector<MultiPoly<K>>& cs, size_t var, VarsPtr vars) {
    MultiPoly<K> f(vars);
    MultiPoly<K> x = MultiPoly<K>::variable(vars, var, K());
    MultiPoly<K> xp = MultiPoly<K>::constant(vars, one_like(K()));
    for (size_t k = 0; k < cs.size(); ++k) {
        f += cs[k] * xp;
        xp *= x;
    }
    return f;
}

// Pseudo-remainder of f by g w.r.t. var: prem = lc(g)^(df-dg+1) * f mod g.
template <typename K>
MultiPoly<K> pseudo_rem(const MultiPoly<K>& f, const MultiPoly<K>& g, size_t var) {
    long df = f.degree_in(var), dg = g.degree_in(var);
    if (dg < 0) throw degenerate_input_error("pseudo-remainder by zero polynomial");
    if (df < dg) return f;
    MultiPoly<K> r = f;
    MultiPoly<K> lcg = g.leading_coeff_in(var);
    long e = df - dg + 1;
    MultiPoly<K> xvar = MultiPoly<K>::variable(f.vars(), var, K());
    while (!r.is_zero_poly()) {
        long dr = r.degree_in(var);
        if (dr < dg) break;
        MultiPoly<K> lcr = r.coeff_of(var, static_cast<unsigned>(dr));
        r = r * lcg - lcr * g * xvar.pow(static_cast<unsigned long>(dr - dg));
        --e;
    }
    // exact prem demands the full lc(g)^(df-dg+1) scaling
    for (long i = 0; i < e; ++i) r *= lcg;
    return r;
}

// ---------------------------------------------------------------------------
// gcd
// ---------------------------------------------------------------------------

namespace detail {

// Variables actually occurring in f.
template <typename K>
void occurring_vars(const MultiPoly<K>& f, std::vector<bool>& present) {
    present.assign(f.nvars(), false);
    for (const auto& [m, c] : f.terms())
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i]) present[i] = true;
}

inline Integer int_content(const std::vector<Integer>& v) {
    Integer g(0);
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Primitive integer coefficient vector of a univariate rational polynomial.
inline std::vector<Integer> to_primitive_int(const std::vector<Rational>& cs) {
    Integer den(1);
    for (const auto& c : cs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> z;
    z.reserve(cs.size());
    for (const auto& c : cs) z.push_back(c.get_num() * (den / c.get_den()));
    Integer g = int_content(z);
    if (g > 1)
        for (auto& x : z) x /= g;
    return z;
}

inline void int_strip(std::vector<Integer>& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

inline void int_make_primitive(std::vector<Integer>& v) {
    Integer g = int_content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    if (!v.empty() && sgn(v.back()) < 0)
        for (auto& x : v) x = -x;
}

// Pseudo-remainder over Z, in place style.
inline std::vector<Integer> int_prem(std::vector<Integer> f, const std::vector<Integer>& g) {
    const Integer& lcg = g.back();
    long dg = static_cast<long>(g.size()) - 1;
    while (static_cast<long>(f.size()) - 1 >= dg) {
        Integer lcf = f.back();
        long shift = static_cast<long>(f.size()) - 1 - dg;
        for (auto& x : f) x *= lcg;
        for (long i = 0; i <= dg; ++i) f[i + shift] -= lcf * g[i];
        int_strip(f);
        if (f.empty()) break;
    }
    return f;
}

// Primitive PRS gcd over Z; inputs primitive with nonzero leading coeff.
inline std::vector<Integer> int_gcd_univar(std::vector<Integer> f, std::vector<Integer> g) {
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
        std::vector<Integer> r = int_prem(f, g);
        int_make_primitive(r);
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

// Scale to integer coefficients with content 1 and positive leading term.
inline void poly_int_primitive(PolyQ& f) {
    if (f.is_zero_poly()) return;
    Integer num(0), den(1);
    for (const auto& [m, c] : f.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational s(den, num);
    if (sgn(f.leading_coeff()) < 0) s = -s;
    f.scale(s);
}

inline Integer poly_height(const PolyQ& f) {
    Integer h(0);
    for (const auto& [m, c] : f.terms()) {
        Integer a = abs(c.get_num());
        if (a > h) h = std::move(a);
    }
    return h;
}

}  // namespace detail

template <typename K>
MultiPoly<K> gcd_poly(const MultiPoly<K>& a, const MultiPoly<K>& b);

namespace detail {

inline std::optional<PolyQ> gcdheu(const PolyQ& f, const PolyQ& g, int depth = 0);

}  // namespace detail

namespace detail {

// Content of f w.r.t. var: gcd of the univariate coefficients.
template <typename K>
MultiPoly<K> content_in(const MultiPoly<K>& f, size_t var) {
    MultiPoly<K> c(f.vars());
    long d = f.degree_in(var);
    for (long k = d; k >= 0; --k) {
        c = gcd_poly(c, f.coeff_of(var, static_cast<unsigned>(k)));
        if (c.is_constant() && !c.is_zero_poly()) break;
    }
    return c;
}

// Fast path: single-variable gcd over Q through primitive integer PRS.
inline PolyQ gcd_univar_q(const PolyQ& f, const PolyQ& g, size_t var) {
    std::vector<Rational> fc, gc;
    for (const auto& p : univar_coeffs(f, var)) fc.push_back(p.constant_term());
    for (const auto& p : univar_coeffs(g, var)) gc.push_back(p.constant_term());
    auto zf = to_primitive_int(fc), zg = to_primitive_int(gc);
    auto zr = int_gcd_univar(std::move(zf), std::move(zg));
    std::vector<PolyQ> cs;
    for (const auto& z : zr) cs.push_back(PolyQ::constant(f.vars(), Rational(z)));
    return from_univar_coeffs(cs, var, f.vars()).monic();
}

// Euclidean gcd in one variable over a general field.
template <typename K>
MultiPoly<K> gcd_univar_field(MultiPoly<K> f, MultiPoly<K> g, size_t var) {
    while (!g.is_zero_poly()) {
        g = g.monic();
        // field division remainder
        MultiPoly<K> r = f;
        long dg = g.degree_in(var);
        MultiPoly<K> xvar = MultiPoly<K>::variable(f.vars(), var, K());
        while (!r.is_zero_poly() && r.degree_in(var) >= dg) {
            long dr = r.degree_in(var);
            MultiPoly<K> lcr = r.coeff_of(var, static_cast<unsigned>(dr));
            r -= lcr * g * xvar.pow(static_cast<unsigned long>(dr - dg));
        }
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

}  // namespace detail

namespace detail {

// Heuristic gcd over Z, content inclusive: evaluate one variable at a large
// integer xi, take the gcd of the images recursively, and read the candidate
// back as balanced base-xi digits.  Integer contents are carried through the
// recursion (they encode the images of eliminated variables); the true
// content of the result is gcd of the input contents (Gauss).  A candidate
// whose primitive part divides both inputs is the gcd (standard GCDHEU
// argument); otherwise the caller retries or falls back to the PRS.
inline Integer poly_icontent(const PolyQ& f) {
    Integer c(0);
    for (const auto& [m, v] : f.terms())
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_num().get_mpz_t());
    return c;
}

inline std::optional<PolyQ> gcdheu(const PolyQ& f, const PolyQ& g, int depth) {
    std::vector<bool> pf, pg;
    occurring_vars(f, pf);
    occurring_vars(g, pg);
    size_t var = 0, nactive = 0;
    for (size_t i = 0; i < f.nvars(); ++i)
        if (pf[i] || pg[i]) {
            ++nactive;
            var = i;
        }
    Integer c0;
    mpz_gcd(c0.get_mpz_t(), poly_icontent(f).get_mpz_t(), poly_icontent(g).get_mpz_t());
    if (nactive == 0 || (nactive == 1 && (!pf[var] || !pg[var])))
        return PolyQ::constant(f.vars(), Rational(c0));
    if (nactive == 1) {
        std::vector<Rational> fc, gc;
        for (const auto& p : univar_coeffs(f, var)) fc.push_back(p.constant_term());
        for (const auto& p : univar_coeffs(g, var)) gc.push_back(p.constant_term());
        auto zr = int_gcd_univar(to_primitive_int(fc), to_primitive_int(gc));
        PolyQ r = PolyQ::zero(f.vars());
        for (size_t k = 0; k < zr.size(); ++k) {
            Mono m(f.nvars(), 0);
            m[var] = static_cast<unsigned>(k);
            r.add_term(std::move(m), Rational(zr[k] * c0));
        }
        return r;
    }
    Integer hf = poly_height(f), hg = poly_height(g);
    Integer xi = 2 * (hf < hg ? hf : hg) + 29;
    long dcap = std::min(f.degree_in(var), g.degree_in(var));
    for (int attempt = 0; attempt < 4; ++attempt) {
        PolyQ fe = f.substitute_var(var, Rational(xi));
        PolyQ ge = g.substitute_var(var, Rational(xi));
        if (!fe.is_zero_poly() && !ge.is_zero_poly()) {
            auto rec = gcdheu(fe, ge, depth + 1);
            if (rec && !rec->is_zero_poly()) {
                // balanced base-xi reconstruction
                PolyQ G = PolyQ::zero(f.vars());
                PolyQ R = *rec;
                Integer half = xi / 2;
                long k = 0;
                for (; !R.is_zero_poly() && k <= dcap; ++k) {
                    PolyQ digit = PolyQ::zero(f.vars());
                    PolyQ next = PolyQ::zero(f.vars());
                    for (const auto& [m, c] : R.terms()) {
                        Integer d;
                        mpz_fdiv_r(d.get_mpz_t(), c.get_num().get_mpz_t(), xi.get_mpz_t());
                        if (d > half) d -= xi;
                        if (sgn(d) != 0) {
                            Mono mm(m);
                            mm[var] = static_cast<unsigned>(k);
                            digit.add_term(std::move(mm), Rational(d));
                        }
                        Integer q = (Integer(c.get_num()) - d) / xi;
                        if (sgn(q) != 0) next.add_term(m, Rational(q));
                    }
                    G += digit;
                    R = std::move(next);
                }
                if (R.is_zero_poly() && !G.is_zero_poly()) {
                    // normalize to the true content, then verify
                    Integer cg = poly_icontent(G);
                    G.scale(Rational(c0, cg));
                    if (G.is_constant()) return G;
                    if (f.divide_exact(G) && g.divide_exact(G)) return G;
                }
            }
        }
        // unlucky evaluation: grow xi and retry
        xi = xi * 2 + 29;
        if (depth > 0) break;  // let the top level drive retries
    }
    return std::nullopt;
}

}  // namespace detail

// Monic-normalized gcd over a field (Q or Q(alpha)); gcd(a, 0) = normalize(a).
template <typename K>
MultiPoly<K> gcd_poly(const MultiPoly<K>& a, const MultiPoly<K>& b) {
    if (!same_vars(a.vars(), b.vars()))
        throw structural_error("gcd operands have mismatched variable lists");
    if (a.is_zero_poly()) return b.monic();
    if (b.is_zero_poly()) return a.monic();
    if (a.is_constant() || b.is_constant())
        return MultiPoly<K>::constant(a.vars(), one_like(a.leading_coeff()));

    std::vector<bool> pa, pb;
    detail::occurring_vars(a, pa);
    detail::occurring_vars(b, pb);
    size_t nactive = 0;
    size_t var = 0;
    for (size_t i = 0; i < a.nvars(); ++i) {
        if (pa[i] || pb[i]) {
            ++nactive;
            var = i;  // last active variable becomes the main one
        }
    }

    if (nactive == 1) {
        if constexpr (std::is_same_v<K, Rational>) {
            return detail::gcd_univar_q(a, b, var);
        } else {
            return detail::gcd_univar_field(a, b, var);
        }
    }

    if constexpr (std::is_same_v<K, Rational>) {
        PolyQ fa = a, fb = b;
        detail::poly_int_primitive(fa);
        detail::poly_int_primitive(fb);
        if (auto h = detail::gcdheu(fa, fb)) return h->monic();
    }

    // Primitive PRS in the main variable, contents handled recursively.
    MultiPoly<K> ca = detail::content_in(a, var);
    MultiPoly<K> cb = detail::content_in(b, var);
    MultiPoly<K> cg = gcd_poly(ca, cb);
    MultiPoly<K> f = *a.divide_exact(ca);
    MultiPoly<K> g = *b.divide_exact(cb);
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    while (!g.is_zero_poly() && g.degree_in(var) > 0) {
        MultiPoly<K> r = pseudo_rem(f, g, var);
        if (!r.is_zero_poly()) {
            MultiPoly<K> cr = detail::content_in(r, var);
            r = *r.divide_exact(cr);
        }
        f = std::move(g);
        g = std::move(r);
    }
    MultiPoly<K> pp = MultiPoly<K>::zero(a.vars());
    if (g.is_zero_poly()) {
        pp = f;
    } else {
        // nonzero remainder of degree 0 in var: primitive parts are coprime
        pp = MultiPoly<K>::constant(a.vars(), one_like(a.leading_coeff()));
    }
    return (cg * pp).monic();
}

template <typename K>
MultiPoly<K> gcd_poly(const std::vector<MultiPoly<K>>& polys) {
    if (polys.empty()) throw structural_error("gcd of empty list");
    MultiPoly<K> g = MultiPoly<K>::zero(polys.front().vars());
    for (const auto& p : polys) {
        g = gcd_poly(g, p);
        if (g.is_constant() && !g.is_zero_poly()) break;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Resultants
// ---------------------------------------------------------------------------

// Sylvester determinant by fraction-free (Bareiss) elimination.  Used for
// small operands and as a cross-check oracle for the PRS route.
template <typename K>
MultiPoly<K> sylvester_resultant(const MultiPoly<K>& a, const MultiPoly<K>& b, size_t var) {
    long m = a.degree_in(var), n = b.degree_in(var);
    if (m < 0 || n < 0) throw degenerate_input_error("resultant of zero polynomial");
    if (m == 0 && n == 0)
        throw degenerate_input_error("resultant needs positive degree in the eliminated variable");
    const VarsPtr& vars = a.vars();
    MultiPoly<K> one = MultiPoly<K>::constant(vars, one_like(a.leading_coeff()));
    if (m == 0) return a.pow(static_cast<unsigned long>(n));
    if (n == 0) return b.pow(static_cast<unsigned long>(m));

    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<MultiPoly<K>>> mat(size, std::vector<MultiPoly<K>>(size, MultiPoly<K>::zero(vars)));
    for (long row = 0; row < n; ++row)
        for (long k = 0; k <= m; ++k) mat[row][row + k] = a.coeff_of(var, static_cast<unsigned>(m - k));
    for (long row = 0; row < m; ++row)
        for (long k = 0; k <= n; ++k) mat[n + row][row + k] = b.coeff_of(var, static_cast<unsigned>(n - k));

    int sign = 1;
    MultiPoly<K> prev = one;
    for (size_t k = 0; k + 1 < size; ++k) {
        if (mat[k][k].is_zero_poly()) {
            size_t swap_row = k + 1;
            while (swap_row < size && mat[swap_row][k].is_zero_poly()) ++swap_row;
            if (swap_row == size) return MultiPoly<K>::zero(vars);
            std::swap(mat[k], mat[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < size; ++i) {
            for (size_t j = k + 1; j < size; ++j) {
                MultiPoly<K> num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mat[i][j] = *num.divide_exact(prev);
            }
            mat[i][k] = MultiPoly<K>::zero(vars);
        }
        prev = mat[k][k];
    }
    MultiPoly<K> det = mat[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

// Sylvester resultant eliminating var, via the subresultant PRS
// (coefficient-swell control); small operands go through the determinant.
template <typename K>
MultiPoly<K> resultant(const MultiPoly<K>& a, const MultiPoly<K>& b, size_t var) {
    if (!same_vars(a.vars(), b.vars()))
        throw structural_error("resultant operands have mismatched variable lists");
    long m = a.degree_in(var), n = b.degree_in(var);
    if (m < 0 || n < 0) throw degenerate_input_error("resultant of zero polynomial");
    if (m == 0 && n == 0)
        throw degenerate_input_error("resultant needs positive degree in the eliminated variable");
    const VarsPtr& vars = a.vars();
    if (m == 0) return a.pow(static_cast<unsigned long>(n));
    if (n == 0) return b.pow(static_cast<unsigned long>(m));
    if (m <= 4 && n <= 4) return sylvester_resultant(a, b, var);

    MultiPoly<K> A = a, B = b;
    int s = 1;
    if (m < n) {
        std::swap(A, B);
        std::swap(m, n);
        if ((m & 1) && (n & 1)) s = -s;
    }
    MultiPoly<K> ca = detail::content_in(A, var);
    MultiPoly<K> cb = detail::content_in(B, var);
    A = *A.divide_exact(ca);
    B = *B.divide_exact(cb);
    MultiPoly<K> one = MultiPoly<K>::constant(vars, one_like(a.leading_coeff()));
    MultiPoly<K> t = ca.pow(static_cast<unsigned long>(B.degree_in(var))) *
                     cb.pow(static_cast<unsigned long>(A.degree_in(var)));
    MultiPoly<K> g = one, h = one;
    while (true) {
        long dA = A.degree_in(var), dB = B.degree_in(var);
        long delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        MultiPoly<K> R = pseudo_rem(A, B, var);
        A = B;
        MultiPoly<K> divisor = g * h.pow(static_cast<unsigned long>(delta));
        B = R.is_zero_poly() ? R : *R.divide_exact(divisor);
        g = A.leading_coeff_in(var);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = *g.pow(static_cast<unsigned long>(delta))
                     .divide_exact(h.pow(static_cast<unsigned long>(delta - 1)));
        }
        if (B.is_zero_poly()) return MultiPoly<K>::zero(vars);
        if (B.degree_in(var) == 0) break;
    }
    long dA = A.degree_in(var);
    MultiPoly<K> res = *B.pow(static_cast<unsigned long>(dA))
                            .divide_exact(h.pow(static_cast<unsigned long>(dA - 1)));
    res = res * t;
    return s < 0 ? -res : res;
}

}  // namespace basefree

#endif
