#ifndef BASEFREE_NUMBER_FIELD_HPP
#define BASEFREE_NUMBER_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "basefree/zfactor.hpp"

namespace basefree {

// Simple extension Q(alpha) = Q[x]/(m(x)).  The trivial field (m = x, so
// alpha = 0) represents plain Q; rational values travel as AlgebraicNumbers
// in that field and promote silently when mixed with a larger field.
class NumberField {
  public:
    // min_poly given as ascending coefficients, monic, degree >= 1
    static std::shared_ptr<const NumberField> create(std::vector<Rational> min_poly) {
        if (min_poly.size() < 2 || !is_one(min_poly.back()))
            throw invalid_input_error("NumberField: minimal polynomial must be monic of degree >= 1");
        return std::shared_ptr<const NumberField>(new NumberField(std::move(min_poly)));
    }

    static std::shared_ptr<const NumberField> create(const PolyQ& min_poly, size_t var) {
        long d = min_poly.degree_in(var);
        std::vector<Rational> cs(static_cast<size_t>(d + 1));
        for (long k = 0; k <= d; ++k) {
            PolyQ ck = min_poly.coeff_of(var, static_cast<unsigned>(k));
            if (!ck.is_constant())
                throw invalid_input_error("NumberField: minimal polynomial must be univariate");
            cs[static_cast<size_t>(k)] = ck.constant_term();
        }
        return create(std::move(cs));
    }

    static const std::shared_ptr<const NumberField>& rationals() {
        static std::shared_ptr<const NumberField> q =
            std::shared_ptr<const NumberField>(new NumberField({Rational(0), Rational(1)}));
        return q;
    }

    long degree() const { return static_cast<long>(min_poly_.size()) - 1; }
    const std::vector<Rational>& min_poly() const { return min_poly_; }
    bool is_rationals() const {
        return degree() == 1 && is_zero(min_poly_[0]);
    }

    std::string min_poly_str() const {
        static VarsPtr xv = make_vars({"x"});
        PolyQ p = PolyQ::zero(xv);
        for (size_t k = 0; k < min_poly_.size(); ++k)
            if (!basefree::is_zero(min_poly_[k])) p.add_term({static_cast<unsigned>(k)}, min_poly_[k]);
        return p.str();
    }

    bool same_as(const NumberField& o) const {
        return this == &o || min_poly_ == o.min_poly_;
    }

  private:
    explicit NumberField(std::vector<Rational> mp) : min_poly_(std::move(mp)) {}
    std::vector<Rational> min_poly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class AlgebraicNumber {
  public:
    AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
    explicit AlgebraicNumber(const Rational& q)
        : field_(NumberField::rationals()), rep_{q} {}
    AlgebraicNumber(FieldPtr field, std::vector<Rational> rep) : field_(std::move(field)) {
        rep.resize(static_cast<size_t>(field_->degree()), Rational(0));
        rep_ = std::move(rep);
        reduce_unchecked();
    }

    static AlgebraicNumber generator(const FieldPtr& field) {
        std::vector<Rational> r(static_cast<size_t>(field->degree()), Rational(0));
        if (field->degree() >= 2)
            r[1] = 1;
        else
            r[0] = -field->min_poly()[0];  // degree-1 field: alpha is rational
        return AlgebraicNumber(field, std::move(r));
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& rep() const { return rep_; }

    bool is_zero_val() const {
        for (auto& c : rep_)
            if (!basefree::is_zero(c)) return false;
        return true;
    }
    bool is_rational_val() const {
        for (size_t i = 1; i < rep_.size(); ++i)
            if (!basefree::is_zero(rep_[i])) return false;
        return true;
    }
    // the rational value, when the alpha-components vanish
    Rational rational_value() const {
        if (!is_rational_val())
            throw structural_error("AlgebraicNumber: value is not rational");
        return rep_.empty() ? Rational(0) : rep_[0];
    }

    friend AlgebraicNumber operator-(const AlgebraicNumber& a) {
        AlgebraicNumber r = a;
        for (auto& c : r.rep_) c = -c;
        return r;
    }

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        auto [x, y] = promote(a, b);
        for (size_t i = 0; i < y.rep_.size(); ++i) x.rep_[i] += y.rep_[i];
        return x;
    }
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        auto [x, y] = promote(a, b);
        for (size_t i = 0; i < y.rep_.size(); ++i) x.rep_[i] -= y.rep_[i];
        return x;
    }
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        auto [x, y] = promote(a, b);
        size_t n = x.rep_.size();
        std::vector<Rational> prod(2 * n - 1, Rational(0));
        for (size_t i = 0; i < n; ++i) {
            if (basefree::is_zero(x.rep_[i])) continue;
            for (size_t j = 0; j < n; ++j) prod[i + j] += x.rep_[i] * y.rep_[j];
        }
        x.rep_ = reduce_mod(std::move(prod), x.field_);
        return x;
    }
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a * inverse(b);
    }
    AlgebraicNumber& operator+=(const AlgebraicNumber& b) { return *this = *this + b; }
    AlgebraicNumber& operator-=(const AlgebraicNumber& b) { return *this = *this - b; }
    AlgebraicNumber& operator*=(const AlgebraicNumber& b) { return *this = *this * b; }
    AlgebraicNumber& operator/=(const AlgebraicNumber& b) { return *this = *this / b; }

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return (a - b).is_zero_val();
    }
    friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

    friend AlgebraicNumber inverse(const AlgebraicNumber& a) {
        if (a.is_zero_val()) throw structural_error("AlgebraicNumber: division by zero");
        // extended Euclid: s*rep + t*m = 1 in Q[x]
        std::vector<Rational> r0 = a.field_->min_poly();
        std::vector<Rational> r1 = a.rep_;
        trimq(r1);
        std::vector<Rational> t0, t1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r] = divmodq(r0, r1);
            std::vector<Rational> t2 = subq(t0, mulq(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.size() != 1)
            throw structural_error("AlgebraicNumber: representative not invertible (minimal polynomial reducible?)");
        Rational u = basefree::inverse(r0[0]);
        for (auto& c : t0) c *= u;
        return AlgebraicNumber(a.field_, std::move(t0));
    }

    std::string str() const {
        static VarsPtr av = make_vars({"alpha"});
        PolyQ p = PolyQ::zero(av);
        for (size_t k = 0; k < rep_.size(); ++k)
            if (!basefree::is_zero(rep_[k])) p.add_term({static_cast<unsigned>(k)}, rep_[k]);
        return p.str();
    }

  private:
    static void trimq(std::vector<Rational>& f) {
        while (!f.empty() && basefree::is_zero(f.back())) f.pop_back();
    }
    static std::vector<Rational> subq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> r(std::max(a.size(), b.size()), Rational(0));
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        trimq(r);
        return r;
    }
    static std::vector<Rational> mulq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        trimq(r);
        return r;
    }
    static std::pair<std::vector<Rational>, std::vector<Rational>> divmodq(
        const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> q(a.size(), Rational(0)), r = a;
        trimq(r);
        while (r.size() >= b.size()) {
            size_t k = r.size() - b.size();
            Rational c = r.back() / b.back();
            q[k] = c;
            for (size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
            trimq(r);
        }
        trimq(q);
        return {std::move(q), std::move(r)};
    }
    static std::vector<Rational> reduce_mod(std::vector<Rational> f, const FieldPtr& field) {
        const auto& m = field->min_poly();
        trimq(f);
        while (f.size() >= m.size()) {
            size_t k = f.size() - m.size();
            Rational c = f.back();  // m monic
            for (size_t i = 0; i < m.size(); ++i) f[k + i] -= c * m[i];
            trimq(f);
        }
        f.resize(m.size() - 1, Rational(0));
        return f;
    }
    void reduce_unchecked() { rep_ = reduce_mod(std::move(rep_), field_); }

    static std::pair<AlgebraicNumber, AlgebraicNumber> promote(const AlgebraicNumber& a,
                                                               const AlgebraicNumber& b) {
        if (a.field_->same_as(*b.field_)) return {a, b};
        if (a.field_->is_rationals() && a.is_rational_val())
            return {AlgebraicNumber(b.field_, {a.rep_[0]}), b};
        if (b.field_->is_rationals() && b.is_rational_val())
            return {a, AlgebraicNumber(a.field_, {b.rep_[0]})};
        throw structural_error("AlgebraicNumber: mixed number fields");
    }

    FieldPtr field_;
    std::vector<Rational> rep_;  // length = field degree
};

inline bool is_zero(const AlgebraicNumber& a) { return a.is_zero_val(); }
inline bool is_one(const AlgebraicNumber& a) { return (a - AlgebraicNumber(Rational(1))).is_zero_val(); }
inline AlgebraicNumber zero_like(const AlgebraicNumber& a) {
    return AlgebraicNumber(a.field(), {});
}
inline AlgebraicNumber one_like(const AlgebraicNumber& a) {
    return AlgebraicNumber(a.field(), {Rational(1)});
}
inline AlgebraicNumber from_rational(const AlgebraicNumber& exemplar, const Rational& q) {
    return AlgebraicNumber(exemplar.field(), {q});
}
inline std::string to_string(const AlgebraicNumber& a) { return a.str(); }

inline void accumulate_content(const AlgebraicNumber& c, Integer& num_gcd, Integer& den_lcm) {
    for (auto& q : c.rep()) accumulate_content(q, num_gcd, den_lcm);
}

using PolyA = MultiPoly<AlgebraicNumber>;

// Formal conjugate tags: one symbolic embedding per root of the minimal
// polynomial.  Degree-1 fields report the rational root itself.
inline std::vector<std::string> conjugates(const NumberField& f) {
    if (f.degree() == 1) {
        Rational root = -f.min_poly()[0];
        return {to_string(root)};
    }
    std::vector<std::string> tags;
    for (long k = 0; k < f.degree(); ++k) tags.push_back("alpha_" + std::to_string(k));
    return tags;
}

// lift a rational-coefficient polynomial into Q(alpha) coefficients
inline PolyA lift_to_field(const PolyQ& f, const FieldPtr& field) {
    PolyA r = PolyA::zero(f.vars());
    for (auto& [m, c] : f.terms()) r.add_term(m, AlgebraicNumber(field, {c}));
    return r;
}

// substitute a specific algebraic number for one variable of a PolyQ,
// keeping the rest symbolic is not supported here: f must be univariate.
inline AlgebraicNumber eval_univariate(const PolyQ& f, size_t var, const AlgebraicNumber& x) {
    AlgebraicNumber acc = zero_like(x);
    long d = f.degree_in(var);
    for (long k = d; k >= 0; --k) {
        PolyQ ck = f.coeff_of(var, static_cast<unsigned>(k));
        if (!ck.is_constant()) throw structural_error("eval_univariate: not univariate");
        acc = acc * x + from_rational(x, ck.constant_term());
    }
    return acc;
}

struct AFactor {
    PolyA factor;  // monic irreducible over Q(alpha)
    long multiplicity;
};

namespace trager {

// replace alpha by a fresh variable: PolyA univariate in `var` becomes a
// bivariate PolyQ in {x_alpha, var}
inline PolyQ alpha_to_var(const PolyA& f, size_t var, const VarsPtr& biv) {
    // biv = {"x#alpha", <var name>}; alpha exponent in slot 0, var in slot 1
    PolyQ r = PolyQ::zero(biv);
    for (auto& [m, c] : f.terms()) {
        for (size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] != 0)
                throw structural_error("trager: polynomial not univariate");
        const auto& rep = c.rep();
        for (size_t k = 0; k < rep.size(); ++k) {
            if (basefree::is_zero(rep[k])) continue;
            r.add_term({static_cast<unsigned>(k), m[var]}, rep[k]);
        }
    }
    return r;
}

}  // namespace trager

// Trager: factor a univariate squarefree monic polynomial over Q(alpha).
inline std::vector<PolyA> factor_squarefree_alg(const PolyA& f, size_t var) {
    FieldPtr field = f.leading_coeff_in(var).constant_term().field();
    if (field->is_rationals()) {
        // plain Q: reuse Zassenhaus
        PolyQ fq = PolyQ::zero(f.vars());
        for (auto& [m, c] : f.terms()) fq.add_term(m, c.rational_value());
        std::vector<PolyA> out;
        for (auto& [fac, mult] : factor_univariate(fq, var).factors) {
            out.push_back(lift_to_field(fac, field));
            (void)mult;
        }
        return out;
    }
    static VarsPtr biv = make_vars({"x#alpha", "y#main"});
    PolyQ mpoly = PolyQ::zero(biv);
    {
        const auto& m = field->min_poly();
        for (size_t k = 0; k < m.size(); ++k)
            if (!basefree::is_zero(m[k])) mpoly.add_term({static_cast<unsigned>(k), 0}, m[k]);
    }
    AlgebraicNumber alpha = AlgebraicNumber::generator(field);
    for (long shift = 0;; ++shift) {
        // g(y) = f(y - shift*alpha), as a bivariate in (x, y) with alpha -> x
        PolyA g = f;
        if (shift != 0) {
            std::vector<PolyA> sub;
            for (size_t i = 0; i < f.vars()->size(); ++i)
                sub.push_back(PolyA::variable(f.vars(), i, alpha));
            sub[var] = PolyA::variable(f.vars(), var, alpha) -
                       PolyA::constant(f.vars(), from_rational(alpha, Rational(shift)) * alpha);
            g = f.substitute(sub);
        }
        PolyQ gbiv = trager::alpha_to_var(g, var, biv);
        if (gbiv.degree_in(0) == 0) continue;  // no alpha yet; shift again
        PolyQ norm = resultant(mpoly, gbiv, 0);  // eliminate the alpha variable
        // need the norm squarefree
        PolyQ nd = gcd_poly(norm, norm.derivative(1, 1));
        if (!nd.is_constant()) continue;
        std::vector<PolyA> out;
        for (auto& [h, mult] : factor_univariate(norm, 1).factors) {
            (void)mult;
            // candidate factor: gcd over Q(alpha) of f and h(y + shift*alpha)
            PolyA ha = PolyA::zero(f.vars());
            long hd = h.degree_in(1);
            for (long k = 0; k <= hd; ++k) {
                Rational ck = h.coeff_of(1, static_cast<unsigned>(k)).constant_term();
                if (basefree::is_zero(ck)) continue;
                Mono mono(f.vars()->size(), 0);
                mono[var] = static_cast<unsigned>(k);
                ha.add_term(mono, from_rational(alpha, ck));
            }
            if (shift != 0) {
                std::vector<PolyA> sub;
                for (size_t i = 0; i < f.vars()->size(); ++i)
                    sub.push_back(PolyA::variable(f.vars(), i, alpha));
                sub[var] = PolyA::variable(f.vars(), var, alpha) +
                           PolyA::constant(f.vars(), from_rational(alpha, Rational(shift)) * alpha);
                ha = ha.substitute(sub);
            }
            PolyA fac = gcd_poly(f, ha);
            if (fac.degree() > 0) out.push_back(fac.monic());
        }
        return out;
    }
}

// Full factorization over Q(alpha): monic irreducible factors with
// multiplicities; unit * prod(factor^mult) = f.
inline std::pair<AlgebraicNumber, std::vector<AFactor>> factor_univariate_alg(const PolyA& f,
                                                                              size_t var) {
    if (f.is_zero_poly()) throw degenerate_input_error("factor_univariate_alg: zero polynomial");
    AlgebraicNumber unit = f.is_constant() ? f.constant_term()
                                           : f.leading_coeff_in(var).constant_term();
    std::vector<AFactor> factors;
    if (f.is_constant()) return {unit, factors};
    PolyA g = f.monic();
    // Yun over Q(alpha)
    PolyA d = g.derivative(var, 1);
    PolyA a = gcd_poly(g, d);
    std::vector<std::pair<PolyA, long>> sqfree;
    if (a.is_constant()) {
        sqfree.emplace_back(g, 1);
    } else {
        PolyA b = *g.divide_exact(a);
        PolyA c = *d.divide_exact(a);
        PolyA dd = c - b.derivative(var, 1);
        long i = 1;
        while (!b.is_constant()) {
            PolyA ai = gcd_poly(b, dd);
            if (ai.degree() > 0) sqfree.emplace_back(ai, i);
            b = *b.divide_exact(ai);
            dd = *dd.divide_exact(ai) - b.derivative(var, 1);
            ++i;
        }
    }
    for (auto& [part, m] : sqfree)
        for (auto& fac : factor_squarefree_alg(part.monic(), var)) factors.push_back({fac, m});
    return {unit, factors};
}

// All roots of f lying in the coefficient field Q(alpha).
inline std::vector<AlgebraicNumber> alg_roots(const PolyA& f, size_t var) {
    std::vector<AlgebraicNumber> roots;
    for (auto& af : factor_univariate_alg(f, var).second) {
        if (af.factor.degree_in(var) != 1) continue;
        AlgebraicNumber b = af.factor.coeff_of(var, 0).constant_term();
        roots.push_back(-b);  // factor is monic: y + b
    }
    return roots;
}

}  // namespace basefree

#endif
