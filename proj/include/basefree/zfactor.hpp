#ifndef BASEFREE_ZFACTOR_HPP
#define BASEFREE_ZFACTOR_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "basefree/polygcd.hpp"

// Univariate factorization over Q: Yun squarefree decomposition, then
// Zassenhaus on each squarefree part (factor mod p, Hensel lift, subset
// recombination against the Landau-Mignotte bound).

namespace basefree {

namespace zf {

using ZPoly = std::vector<Integer>;  // ascending coefficients, no trailing zeros

inline void trim(ZPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}
inline long deg(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }

inline ZPoly mod_p(const ZPoly& f, const Integer& p) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        mpz_mod(r[i].get_mpz_t(), f[i].get_mpz_t(), p.get_mpz_t());
    }
    trim(r);
    return r;
}

// ---- arithmetic in (Z/p)[x], p an odd prime, coefficients in [0,p) ----

inline ZPoly p_add(const ZPoly& a, const ZPoly& b, const Integer& p) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

inline ZPoly p_sub(const ZPoly& a, const ZPoly& b, const Integer& p) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
        if (sgn(r[i]) < 0) r[i] += p;
    }
    trim(r);
    return r;
}

inline ZPoly p_mul(const ZPoly& a, const ZPoly& b, const Integer& p) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) c %= p;
    trim(r);
    return r;
}

inline Integer p_inv(const Integer& a, const Integer& p) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw structural_error("non-invertible element mod p");
    return r;
}

inline ZPoly p_scale(const ZPoly& a, const Integer& c, const Integer& p) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * c) % p;
    trim(r);
    return r;
}

inline ZPoly p_monic(const ZPoly& a, const Integer& p) {
    if (a.empty()) return a;
    return p_scale(a, p_inv(a.back(), p), p);
}

// division with remainder; b nonzero
inline void p_divmod(const ZPoly& a, const ZPoly& b, const Integer& p, ZPoly& q, ZPoly& r) {
    q.assign(a.size(), Integer(0));
    r = a;
    Integer binv = p_inv(b.back(), p);
    while (deg(r) >= deg(b)) {
        long k = deg(r) - deg(b);
        Integer c = (r.back() * binv) % p;
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            r[k + i] -= c * b[i];
            mpz_mod(r[k + i].get_mpz_t(), r[k + i].get_mpz_t(), p.get_mpz_t());
        }
        trim(r);
    }
    trim(q);
}

inline ZPoly p_rem(const ZPoly& a, const ZPoly& b, const Integer& p) {
    ZPoly q, r;
    p_divmod(a, b, p, q, r);
    return r;
}

inline ZPoly p_gcd(ZPoly a, ZPoly b, const Integer& p) {
    while (!b.empty()) {
        ZPoly r = p_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return p_monic(a, p);
}

inline ZPoly p_powmod(const ZPoly& base, Integer e, const ZPoly& m, const Integer& p) {
    ZPoly r{Integer(1)};
    ZPoly b = p_rem(base, m, p);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = p_rem(p_mul(r, b, p), m, p);
        b = p_rem(p_mul(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

inline ZPoly p_deriv(const ZPoly& f, const Integer& p) {
    if (f.size() <= 1) return {};
    ZPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = (f[i] * Integer(static_cast<long>(i))) % p;
    trim(r);
    return r;
}

// ---- factorization over GF(p), f monic squarefree ----

// distinct-degree: returns (product of irreducibles of degree d, d) pairs
inline std::vector<std::pair<ZPoly, long>> distinct_degree(const ZPoly& f, const Integer& p) {
    std::vector<std::pair<ZPoly, long>> out;
    ZPoly v = f;
    ZPoly h{Integer(0), Integer(1)};  // x
    long d = 0;
    while (deg(v) >= 1) {
        ++d;
        if (2 * d > deg(v)) {
            out.emplace_back(v, deg(v));
            break;
        }
        h = p_powmod(h, p, v, p);  // h = x^(p^d) mod v
        ZPoly g = p_gcd(p_sub(h, ZPoly{Integer(0), Integer(1)}, p), v, p);
        if (deg(g) >= 1) {
            out.emplace_back(g, d);
            ZPoly q, r;
            p_divmod(v, g, p, q, r);
            v = q;
            h = p_rem(h, v, p);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting; f monic, all factors of degree d
inline void equal_degree(const ZPoly& f, long d, const Integer& p, std::mt19937_64& rng,
                         std::vector<ZPoly>& out) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer e = (Integer(1) << 1);  // placeholder, computed below
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        ZPoly a(static_cast<size_t>(deg(f)), Integer(0));
        for (auto& c : a) c = Integer(static_cast<unsigned long>(rng() % 1000000007ull)) % p;
        trim(a);
        if (a.empty()) continue;
        ZPoly g = p_gcd(a, f, p);
        if (deg(g) < 1) {
            ZPoly b = p_powmod(a, e, f, p);
            g = p_gcd(p_sub(b, ZPoly{Integer(1)}, p), f, p);
        }
        if (deg(g) >= 1 && deg(g) < deg(f)) {
            ZPoly q, r;
            p_divmod(f, g, p, q, r);
            equal_degree(g, d, p, rng, out);
            equal_degree(q, d, p, rng, out);
            return;
        }
    }
}

inline std::vector<ZPoly> factor_gfp(const ZPoly& f, const Integer& p, std::mt19937_64& rng) {
    std::vector<ZPoly> out;
    for (auto& [prod, d] : distinct_degree(f, p)) equal_degree(prod, d, p, rng, out);
    std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

// ---- Hensel lifting ----

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// f = g*h (mod m), s*g + t*h = 1 (mod m), h monic, deg s < deg h,
// deg t < deg g.  One quadratic step lifts everything to mod m^2.
struct HenselPair {
    ZPoly g, h, s, t;
};

inline void hensel_step(const ZPoly& f, HenselPair& hp, const Integer& m) {
    Integer m2 = m * m;
    ZPoly e = mod_p(z_sub(f, z_mul(hp.g, hp.h)), m2);
    ZPoly q, r;
    p_divmod(mod_p(z_mul(hp.s, e), m2), hp.h, m2, q, r);  // h monic
    ZPoly gstar = mod_p(p_add(hp.g, p_add(mod_p(z_mul(hp.t, e), m2), mod_p(z_mul(q, hp.g), m2), m2), m2), m2);
    ZPoly hstar = mod_p(p_add(hp.h, r, m2), m2);
    ZPoly b = mod_p(z_sub(p_add(mod_p(z_mul(hp.s, gstar), m2), mod_p(z_mul(hp.t, hstar), m2), m2), ZPoly{Integer(1)}), m2);
    ZPoly c, d;
    p_divmod(mod_p(z_mul(hp.s, b), m2), hstar, m2, c, d);
    ZPoly sstar = mod_p(z_sub(hp.s, d), m2);
    ZPoly tstar = mod_p(z_sub(hp.t, p_add(mod_p(z_mul(hp.t, b), m2), mod_p(z_mul(c, gstar), m2), m2)), m2);
    hp = {gstar, hstar, sstar, tstar};
}

// extended Euclid over GF(p)[x]: returns (s, t) with s*a + t*b = 1
inline std::pair<ZPoly, ZPoly> p_bezout(const ZPoly& a, const ZPoly& b, const Integer& p) {
    ZPoly r0 = a, r1 = b;
    ZPoly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
    while (!r1.empty()) {
        ZPoly q, r;
        p_divmod(r0, r1, p, q, r);
        ZPoly s2 = p_sub(s0, p_mul(q, s1, p), p);
        ZPoly t2 = p_sub(t0, p_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw structural_error("hensel: factors not coprime mod p");
    Integer u = p_inv(r0[0], p);
    return {p_scale(s0, u, p), p_scale(t0, u, p)};
}

// Lift f = lc(f) * prod(monic factors) (mod p) to the target modulus, a
// power p^(2^j).  Recursive two-way split; leaves come back monic.
inline std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<ZPoly>& facs,
                                           const Integer& p, const Integer& target) {
    if (facs.size() == 1) return {p_monic(mod_p(f, target), target)};
    size_t half = facs.size() / 2;
    ZPoly g{f.back() % p};
    for (size_t i = 0; i < half; ++i) g = p_mul(g, facs[i], p);
    ZPoly h{Integer(1)};
    for (size_t i = half; i < facs.size(); ++i) h = p_mul(h, facs[i], p);
    auto [s, t] = p_bezout(g, h, p);
    HenselPair hp{g, h, s, t};
    Integer m = p;
    while (m < target) {
        hensel_step(f, hp, m);
        m = m * m;
    }
    std::vector<ZPoly> left = hensel_lift_tree(hp.g, {facs.begin(), facs.begin() + half}, p, target);
    std::vector<ZPoly> right = hensel_lift_tree(hp.h, {facs.begin() + half, facs.end()}, p, target);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

// symmetric representative in (-m/2, m/2]
inline Integer symm(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

inline ZPoly symm_poly(const ZPoly& f, const Integer& m) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = symm(f[i], m);
    trim(r);
    return r;
}

inline Integer content_z(const ZPoly& f) {
    Integer c(0);
    for (auto& a : f) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    return c;
}

// exact division in Z[x]; returns false if not divisible
inline bool z_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) return false;
    ZPoly r = a;
    q.assign(a.size(), Integer(0));
    while (deg(r) >= deg(b)) {
        Integer c, rem;
        mpz_fdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        if (sgn(rem) != 0) return false;  // leading coefficient not divisible
        long k = deg(r) - deg(b);
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
        if (!r.empty() && sgn(r.back()) != 0) return false;
        trim(r);
    }
    trim(q);
    return r.empty();
}

// Zassenhaus on a primitive squarefree f in Z[x], deg >= 1.
// Returns irreducible primitive factors with positive leading coefficient
// ordering aside; product equals +-f.
inline std::vector<ZPoly> zassenhaus(ZPoly f) {
    std::vector<ZPoly> result;
    if (deg(f) == 1) {
        result.push_back(f);
        return result;
    }
    std::mt19937_64 rng(0x5eedf00dULL);
    // choose a prime
    Integer p(3);
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (f.back() % p == 0) continue;
        ZPoly fp = p_monic(mod_p(f, p), p);
        if (deg(p_gcd(fp, p_deriv(fp, p), p)) == 0) break;
    }
    ZPoly fp = p_monic(mod_p(f, p), p);
    std::vector<ZPoly> mf = factor_gfp(fp, p, rng);
    if (mf.size() == 1) {
        result.push_back(f);
        return result;
    }
    // Landau-Mignotte bound on coefficients of any factor of f times lc(f)
    Integer norm2(0);
    for (auto& c : f) norm2 += c * c;
    Integer bnd;
    mpz_sqrt(bnd.get_mpz_t(), norm2.get_mpz_t());
    bnd += 1;
    Integer two_n(1);
    mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), static_cast<unsigned long>(deg(f) + 1));
    Integer B = two_n * bnd * abs(f.back());
    Integer target = p;
    while (target <= 2 * B) target = target * target;
    std::vector<ZPoly> lifted = hensel_lift_tree(mod_p(f, target), mf, p, target);
    // recombination
    std::vector<bool> used(lifted.size(), false);
    size_t remaining = lifted.size();
    for (size_t sz = 1; sz <= remaining && remaining > 0; ) {
        if (2 * sz > remaining) break;
        // iterate subsets of size sz of unused indices
        std::vector<size_t> avail;
        for (size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) avail.push_back(i);
        std::vector<size_t> idx(sz);
        for (size_t i = 0; i < sz; ++i) idx[i] = i;
        bool found = false;
        for (;;) {
            ZPoly g{f.back() % target};
            for (size_t i = 0; i < sz; ++i)
                g = mod_p(z_mul(g, lifted[avail[idx[i]]]), target);
            g = symm_poly(g, target);
            Integer c = content_z(g);
            if (sgn(c) != 0) {
                if (sgn(g.back()) < 0) c = -c;
                for (auto& a : g) a /= c;
            }
            ZPoly q;
            if (z_divide(f, g, q)) {
                result.push_back(g);
                for (size_t i = 0; i < sz; ++i) used[avail[idx[i]]] = true;
                remaining -= sz;
                f = q;
                found = true;
                break;
            }
            // next subset
            long pos = static_cast<long>(sz) - 1;
            while (pos >= 0 && idx[pos] == avail.size() - sz + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < sz; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++sz;
    }
    if (deg(f) >= 1) result.push_back(f);
    return result;
}

}  // namespace zf

struct QFactor {
    PolyQ factor;  // monic irreducible over Q
    long multiplicity;
};

struct QFactorization {
    Rational unit;  // f = unit * prod factor^multiplicity
    std::vector<QFactor> factors;
};

namespace zf {

// convert a univariate PolyQ to a primitive ZPoly; returns the rational
// scalar c with f = c * zpoly
inline ZPoly to_zpoly(const PolyQ& f, size_t var, Rational& scalar) {
    long d = f.degree_in(var);
    ZPoly num(static_cast<size_t>(d + 1), Integer(0));
    Integer den(1);
    std::vector<Rational> cs(static_cast<size_t>(d + 1));
    for (long k = 0; k <= d; ++k) {
        PolyQ ck = f.coeff_of(var, static_cast<unsigned>(k));
        if (!ck.is_constant())
            throw structural_error("to_zpoly: polynomial not univariate");
        cs[static_cast<size_t>(k)] = ck.constant_term();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), cs[static_cast<size_t>(k)].get_den_mpz_t());
    }
    for (long k = 0; k <= d; ++k) {
        Rational v = cs[static_cast<size_t>(k)] * Rational(den);
        num[static_cast<size_t>(k)] = Integer(v.get_num());
    }
    trim(num);
    Integer cont = content_z(num);
    if (sgn(cont) == 0) {
        scalar = 0;
        return {};
    }
    if (sgn(num.back()) < 0) cont = -cont;
    for (auto& a : num) a /= cont;
    scalar = Rational(cont) / Rational(den);
    return num;
}

inline PolyQ from_zpoly(const ZPoly& f, const VarsPtr& vars, size_t var) {
    PolyQ r = PolyQ::zero(vars);
    for (size_t k = 0; k < f.size(); ++k) {
        if (sgn(f[k]) == 0) continue;
        Mono m(vars->size(), 0);
        m[var] = static_cast<unsigned>(k);
        r.add_term(m, Rational(f[k]));
    }
    return r;
}

}  // namespace zf

// Complete factorization of a univariate polynomial over Q.  The returned
// factors are monic and irreducible; unit * prod(factor^mult) reproduces f.
inline QFactorization factor_univariate(const PolyQ& f, size_t var) {
    if (f.is_zero_poly()) throw degenerate_input_error("factor_univariate: zero polynomial");
    QFactorization out;
    out.unit = Rational(1);
    if (f.is_constant()) {
        out.unit = f.constant_term();
        return out;
    }
    Rational scalar;
    zf::ZPoly z = zf::to_zpoly(f, var, scalar);
    // every reported factor is monic, so the unit is just the leading coeff
    out.unit = f.leading_coeff_in(var).constant_term();
    // Yun squarefree decomposition
    PolyQ g = zf::from_zpoly(z, f.vars(), var);
    std::vector<std::pair<PolyQ, long>> sqfree;
    {
        PolyQ d = g.derivative(var, 1);
        PolyQ a = gcd_poly(g, d);
        if (a.is_constant()) {
            sqfree.emplace_back(g, 1);
        } else {
            // gcd_poly returns a monic result, so the exact divisions hold
            PolyQ b = *g.divide_exact(a);
            PolyQ c = *d.divide_exact(a);
            PolyQ dd = c - b.derivative(var, 1);
            long i = 1;
            while (!b.is_constant()) {
                PolyQ ai = gcd_poly(b, dd);
                if (ai.degree() > 0) sqfree.emplace_back(ai, i);
                b = *b.divide_exact(ai);
                dd = *dd.divide_exact(ai) - b.derivative(var, 1);
                ++i;
            }
        }
    }
    for (auto& [part, m] : sqfree) {
        Rational s;
        zf::ZPoly zp = zf::to_zpoly(part, var, s);
        for (auto& fz : zf::zassenhaus(zp)) {
            PolyQ fq = zf::from_zpoly(fz, f.vars(), var);
            out.factors.push_back({fq.monic(), m});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const QFactor& a, const QFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.str() < b.factor.str();
    });
    return out;
}

// Rational roots of a univariate polynomial, from its linear factors.
inline std::vector<Rational> rational_roots(const PolyQ& f, size_t var) {
    std::vector<Rational> roots;
    for (auto& [fac, m] : factor_univariate(f, var).factors) {
        if (fac.degree_in(var) != 1) continue;
        Rational a = fac.leading_coeff_in(var).constant_term();
        Rational b = fac.coeff_of(var, 0).constant_term();
        roots.push_back(-b / a);
        (void)m;
    }
    return roots;
}

}  // namespace basefree

#endif
