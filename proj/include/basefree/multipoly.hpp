#ifndef BASEFREE_MULTIPOLY_HPP
#define BASEFREE_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "basefree/error.hpp"
#include "basefree/rational.hpp"

namespace basefree {

// Ordered variable list, shared between polynomials.  Compared by content:
// two polynomials are compatible iff their variable names match positionwise.
using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;

inline VarsPtr make_vars(std::initializer_list<std::string> names) {
    return std::make_shared<const VarList>(names);
}
inline VarsPtr make_vars(VarList names) {
    return std::make_shared<const VarList>(std::move(names));
}

inline bool same_vars(const VarsPtr& a, const VarsPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector; length always equals the variable count.
using Mono = std::vector<unsigned>;

inline unsigned total_degree(const Mono& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

// Graded lexicographic order with the first listed variable largest
// (t1 > t2 > t3).  Fixed globally so canonical forms are deterministic.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        // lexicographic: bigger exponent on an earlier variable = bigger mono
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

// The zero polynomial reports this sentinel as its degree.
inline constexpr long kZeroDegree = -1;

// Exact multivariate polynomial over a coefficient field K (Rational or
// AlgebraicNumber).  Terms map exponent vectors to nonzero coefficients;
// canonical form is maintained after every operation.
template <typename K>
class MultiPoly {
  public:
    using Terms = std::map<Mono, K, GrlexLess>;

    explicit MultiPoly(VarsPtr vars) : vars_(std::move(vars)) {
        if (!vars_) throw structural_error("null variable list");
    }

    static MultiPoly zero(VarsPtr vars) { return MultiPoly(std::move(vars)); }

    static MultiPoly constant(VarsPtr vars, K c) {
        MultiPoly p(std::move(vars));
        if (!is_zero(c)) p.terms_.emplace(Mono(p.nvars(), 0), std::move(c));
        return p;
    }

    static MultiPoly variable(VarsPtr vars, size_t index, const K& exemplar) {
        MultiPoly p(vars);
        if (index >= p.nvars()) throw structural_error("variable index out of range");
        Mono m(p.nvars(), 0);
        m[index] = 1;
        p.terms_.emplace(std::move(m), one_like(exemplar));
        return p;
    }

    const VarsPtr& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    const Terms& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    // Max total degree over stored terms; kZeroDegree for the zero polynomial.
    long degree() const {
        if (terms_.empty()) return kZeroDegree;
        return static_cast<long>(total_degree(terms_.rbegin()->first));
    }

    long degree_in(size_t var) const {
        check_var(var);
        long d = kZeroDegree;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = total_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (total_degree(m) != d) return false;
        return true;
    }

    // Largest term in graded-lex order.
    const std::pair<const Mono, K>& leading_term() const {
        if (terms_.empty()) throw degenerate_input_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }
    const K& leading_coeff() const { return leading_term().second; }

    K constant_term() const {
        auto it = terms_.find(Mono(nvars(), 0));
        if (it != terms_.end()) return it->second;
        if (terms_.empty()) return K();
        return zero_like(terms_.begin()->second);
    }

    void add_term(Mono m, K c) {
        if (m.size() != nvars()) throw structural_error("exponent vector length mismatch");
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_compat(o);
        for (const auto& [m, c] : o.terms_) {
            auto [it, inserted] = terms_.try_emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (is_zero(it->second)) terms_.erase(it);
            }
        }
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_compat(o);
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_.emplace(m, -c);
            } else {
                it->second -= c;
                if (is_zero(it->second)) terms_.erase(it);
            }
        }
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compat(b);
        MultiPoly r(a.vars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                K c = ca * cb;
                if (is_zero(c)) continue;
                Mono m(ma);
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                auto [it, inserted] = r.terms_.try_emplace(std::move(m), c);
                if (!inserted) {
                    it->second += c;
                    if (is_zero(it->second)) r.terms_.erase(it);
                }
            }
        }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& scale(const K& c) {
        if (is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v = v * c;
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const K& c) { return a.scale(c); }

    MultiPoly pow(unsigned long e) const {
        MultiPoly r = constant(vars_, sample_one());
        MultiPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            if ((e >>= 1)) b *= b;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (!same_vars(vars_, o.vars_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        }
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(size_t var, unsigned order = 1) const {
        check_var(var);
        MultiPoly r = *this;
        for (unsigned k = 0; k < order; ++k) {
            MultiPoly d(vars_);
            for (const auto& [m, c] : r.terms_) {
                if (m[var] == 0) continue;
                Mono n(m);
                n[var] -= 1;
                d.add_term(std::move(n), c * from_rational(c, Rational(m[var])));
            }
            r = std::move(d);
        }
        return r;
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != nvars()) throw structural_error("evaluation point arity mismatch");
        if (terms_.empty()) return point.empty() ? K() : zero_like(point[0]);
        K acc = zero_like(terms_.begin()->second);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (size_t i = 0; i < m.size(); ++i) {
                for (unsigned e = 0; e < m[i]; ++e) t = t * point[i];
            }
            acc += t;
        }
        return acc;
    }

    // Componentwise substitution var_i -> images[i]; powers are cached.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (images.size() != nvars()) throw structural_error("substitution arity mismatch");
        VarsPtr tv = images.empty() ? vars_ : images[0].vars_;
        for (const auto& g : images)
            if (!same_vars(g.vars_, tv)) throw structural_error("substitution images disagree on variables");
        MultiPoly r(tv);
        if (terms_.empty()) return r;
        std::vector<std::vector<MultiPoly>> powers(nvars());
        auto power = [&](size_t i, unsigned e) -> const MultiPoly& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(MultiPoly::constant(tv, sample_one()));
            while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
            return cache[e];
        };
        for (const auto& [m, c] : terms_) {
            MultiPoly t = MultiPoly::constant(tv, c);
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i]) t *= power(i, m[i]);
            r += t;
        }
        return r;
    }

    // Set one variable to a constant, keeping the variable list.
    MultiPoly substitute_var(size_t var, const K& value) const {
        check_var(var);
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (unsigned e = 0; e < m[var]; ++e) t = t * value;
            Mono n(m);
            n[var] = 0;
            r.add_term(std::move(n), std::move(t));
        }
        return r;
    }

    // Set var to 1 (chart map for homogeneous forms).
    MultiPoly dehomogenize(size_t var) const {
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            Mono n(m);
            n[var] = 0;
            r.add_term(std::move(n), c);
        }
        return r;
    }

    // Raise every term to total degree `deg` with powers of var.
    MultiPoly homogenize(size_t var, unsigned deg) const {
        check_var(var);
        if (degree() > static_cast<long>(deg))
            throw range_error("homogenization degree below polynomial degree");
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            Mono n(m);
            n[var] += deg - total_degree(m);
            r.add_term(std::move(n), c);
        }
        return r;
    }

    // Coefficient of var^k, as a polynomial in the same variable list.
    MultiPoly coeff_of(size_t var, unsigned k) const {
        check_var(var);
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] != k) continue;
            Mono n(m);
            n[var] = 0;
            r.terms_.emplace(std::move(n), c);
        }
        return r;
    }

    // Leading coefficient viewed as a univariate polynomial in var.
    MultiPoly leading_coeff_in(size_t var) const {
        long d = degree_in(var);
        if (d < 0) throw degenerate_input_error("leading coefficient of zero polynomial");
        return coeff_of(var, static_cast<unsigned>(d));
    }

    // Homogeneous part of given total degree.
    MultiPoly homogeneous_part(unsigned deg) const {
        MultiPoly r(vars_);
        for (const auto& [m, c] : terms_)
            if (total_degree(m) == deg) r.terms_.emplace(m, c);
        return r;
    }

    // Least total degree of a nonzero term (order of vanishing at the origin).
    long order_at_origin() const {
        if (terms_.empty()) return kZeroDegree;
        return static_cast<long>(total_degree(terms_.begin()->first));
    }

    MultiPoly monic() const {
        if (terms_.empty()) return *this;
        MultiPoly r = *this;
        r.scale(inverse(leading_coeff()));
        return r;
    }

    // Exact division; nullopt when g does not divide *this.
    std::optional<MultiPoly> divide_exact(const MultiPoly& g) const {
        check_compat(g);
        if (g.is_zero_poly()) throw degenerate_input_error("division by zero polynomial");
        MultiPoly q(vars_);
        MultiPoly r = *this;
        const auto& [gm, gc] = g.leading_term();
        while (!r.is_zero_poly()) {
            const auto& [rm, rc] = r.leading_term();
            Mono qm(rm.size());
            for (size_t i = 0; i < rm.size(); ++i) {
                if (rm[i] < gm[i]) return std::nullopt;
                qm[i] = rm[i] - gm[i];
            }
            K qc = rc * inverse(gc);
            MultiPoly t(vars_);
            t.terms_.emplace(std::move(qm), std::move(qc));
            q += t;
            r -= t * g;
        }
        return q;
    }

    // Remap coefficients into another field.
    template <typename F>
    auto map_coeffs(F f) const -> MultiPoly<decltype(f(std::declval<K>()))> {
        using K2 = decltype(f(std::declval<K>()));
        MultiPoly<K2> r(vars_);
        for (const auto& [m, c] : terms_) r.add_term(Mono(m), f(c));
        return r;
    }

    // Same polynomial over an extended variable list; `position[i]` gives the
    // index of old variable i in the new list.
    MultiPoly rebase(VarsPtr new_vars, const std::vector<size_t>& position) const {
        if (position.size() != nvars()) throw structural_error("rebase map arity mismatch");
        MultiPoly r(new_vars);
        for (const auto& [m, c] : terms_) {
            Mono n(new_vars->size(), 0);
            for (size_t i = 0; i < m.size(); ++i) n[position[i]] = m[i];
            r.terms_.emplace(std::move(n), c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string cs = to_string(c);
            bool negated = !cs.empty() && cs[0] == '-';
            if (first) {
                if (negated) out << "-";
            } else {
                out << (negated ? " - " : " + ");
            }
            if (negated) cs = cs.substr(1);
            bool has_vars = total_degree(m) > 0;
            bool coeff_is_one = (cs == "1");
            bool coeff_atomic = cs.find_first_of("+- ") == std::string::npos;
            if (!has_vars || !coeff_is_one) {
                if (coeff_atomic)
                    out << cs;
                else
                    out << "(" << cs << ")";
                if (has_vars) out << "*";
            }
            bool first_var = true;
            for (size_t i = 0; i < m.size(); ++i) {
                if (!m[i]) continue;
                if (!first_var) out << "*";
                out << (*vars_)[i];
                if (m[i] > 1) out << "^" << m[i];
                first_var = false;
            }
            first = false;
        }
        return out.str();
    }

  private:
    K sample_one() const {
        if (!terms_.empty()) return one_like(terms_.begin()->second);
        return one_like(K());
    }

    void check_var(size_t var) const {
        if (var >= nvars()) throw structural_error("variable index out of range");
    }
    void check_compat(const MultiPoly& o) const {
        if (!same_vars(vars_, o.vars_))
            throw structural_error("operands have mismatched variable lists");
    }

    VarsPtr vars_;
    Terms terms_;
};

using PolyQ = MultiPoly<Rational>;

// A homogeneous polynomial with its recorded degree.  Construction checks
// every term has total degree exactly d.
template <typename K>
class FormT {
  public:
    explicit FormT(MultiPoly<K> p) : poly_(std::move(p)) {
        if (!poly_.is_homogeneous()) throw structural_error("form is not homogeneous");
        degree_ = poly_.degree();
    }
    FormT(MultiPoly<K> p, unsigned degree) : poly_(std::move(p)), degree_(degree) {
        if (!poly_.is_homogeneous()) throw structural_error("form is not homogeneous");
        if (!poly_.is_zero_poly() && poly_.degree() != static_cast<long>(degree))
            throw structural_error("form degree mismatch");
    }

    const MultiPoly<K>& poly() const { return poly_; }
    long degree() const { return poly_.is_zero_poly() ? kZeroDegree : static_cast<long>(degree_); }

  private:
    MultiPoly<K> poly_;
    unsigned degree_ = 0;
};

using Form = FormT<Rational>;

// Standard variable lists.
inline const VarsPtr& vars_t3() {
    static VarsPtr v = make_vars({"t1", "t2", "t3"});
    return v;
}

}  // namespace basefree

#endif
