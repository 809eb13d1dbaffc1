#ifndef BASEFREE_LINEAR_SYSTEM_HPP
#define BASEFREE_LINEAR_SYSTEM_HPP

#include "basefree/base_locus.hpp"

namespace basefree {

// An effective divisor: required multiplicities at conjugate point families.
struct DivisorSpec {
    long degree;
    std::vector<std::pair<ConjugatePointFamily, long>> assignments;
};

struct LinearSystemBasis {
    std::vector<PolyQ> basis;  // degree-d forms over Q, integer-primitive
    long projective_dimension;  // count - 1; -1 for the empty system
};

namespace detail {

// all exponent vectors of total degree d in 3 variables, graded-lex order
// matching the term order (leading monomial first)
inline std::vector<Mono> degree_monomials3(long d) {
    std::vector<Mono> out;
    for (long a = d; a >= 0; --a)
        for (long b = d - a; b >= 0; --b)
            out.push_back({static_cast<unsigned>(a), static_cast<unsigned>(b),
                           static_cast<unsigned>(d - a - b)});
    return out;
}

// exact reduced row echelon form; returns pivot column of each row
inline std::vector<size_t> rref(std::vector<std::vector<Rational>>& M) {
    std::vector<size_t> pivots;
    if (M.empty()) return pivots;
    size_t rows = M.size(), cols = M[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && basefree::is_zero(M[p][c])) ++p;
        if (p == rows) continue;
        std::swap(M[r], M[p]);
        Rational inv = 1 / M[r][c];
        for (size_t j = c; j < cols; ++j) M[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || basefree::is_zero(M[i][c])) continue;
            Rational f = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    M.resize(pivots.size(), std::vector<Rational>(cols));
    return pivots;
}

// nullspace basis of M (cols unknowns), one vector per free column
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> M,
                                                    size_t cols) {
    std::vector<size_t> pivots = rref(M);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline PolyQ vector_to_form(const std::vector<Rational>& v, const std::vector<Mono>& monos) {
    PolyQ f = PolyQ::zero(vars_t3());
    for (size_t i = 0; i < monos.size(); ++i)
        if (!basefree::is_zero(v[i])) f.add_term(monos[i], v[i]);
    return f;
}

inline PolyQ make_integer_primitive(const PolyQ& f) {
    if (f.is_zero_poly()) return f;
    Integer ng(0), dl(1);
    for (auto& [m, c] : f.terms()) accumulate_content(c, ng, dl);
    PolyQ g = f;
    g.scale(Rational(dl, ng));
    // sign normalization: positive leading coefficient
    if (sgn(g.leading_coeff()) < 0) g.scale(Rational(-1));
    return g;
}

}  // namespace detail

// Basis of the degree-d forms with mult(A, C(f)) >= m at every assigned
// family representative.  Conditions are imposed over Q(alpha) and split by
// alpha-power components into rational constraints; the result is the RREF
// canonical basis of the nullspace, cleared to integer-primitive forms.
inline LinearSystemBasis build_linear_system(const DivisorSpec& spec) {
    if (spec.degree < 1) throw invalid_input_error("build_linear_system: degree must be >= 1");
    std::vector<Mono> monos = detail::degree_monomials3(spec.degree);
    size_t cols = monos.size();
    std::vector<std::vector<Rational>> M;
    for (auto& [fam, req] : spec.assignments) {
        if (req < 1) throw invalid_input_error("required multiplicity must be >= 1");
        const FieldPtr& field = fam.field;
        long e = field->degree();
        AlgebraicNumber ex = fam.point[0] + fam.point[1] + fam.point[2];
        // powers of the coordinates
        std::vector<std::vector<AlgebraicNumber>> pw(3);
        for (int v = 0; v < 3; ++v) {
            pw[v].push_back(one_like(ex));
            for (long k = 1; k <= spec.degree; ++k)
                pw[v].push_back(pw[v].back() * fam.point[static_cast<size_t>(v)]);
        }
        for (long i = 0; i <= req - 1; ++i)
            for (long j = 0; i + j <= req - 1; ++j) {
                long k = 0;
                for (; i + j + k <= req - 1; ++k) {
                    // one condition: d^{i,j,k} f (A) = 0, split into e rows
                    std::vector<std::vector<Rational>> rows(static_cast<size_t>(e),
                                                           std::vector<Rational>(cols, Rational(0)));
                    for (size_t c = 0; c < cols; ++c) {
                        long a = monos[c][0], b = monos[c][1], d3 = monos[c][2];
                        if (a < i || b < j || d3 < k) continue;
                        Rational coef(1);
                        for (long t = 0; t < i; ++t) coef *= Rational(a - t);
                        for (long t = 0; t < j; ++t) coef *= Rational(b - t);
                        for (long t = 0; t < k; ++t) coef *= Rational(d3 - t);
                        AlgebraicNumber val = pw[0][static_cast<size_t>(a - i)] *
                                              pw[1][static_cast<size_t>(b - j)] *
                                              pw[2][static_cast<size_t>(d3 - k)];
                        for (long comp = 0; comp < e; ++comp)
                            rows[static_cast<size_t>(comp)][c] =
                                coef * val.rep()[static_cast<size_t>(comp)];
                    }
                    for (auto& row : rows) M.push_back(std::move(row));
                }
                (void)k;
            }
    }
    std::vector<std::vector<Rational>> null = detail::nullspace(std::move(M), cols);
    // canonicalize: RREF the nullspace vectors themselves
    detail::rref(null);
    LinearSystemBasis out;
    for (auto& v : null) out.basis.push_back(detail::make_integer_primitive(detail::vector_to_form(v, monos)));
    out.projective_dimension = static_cast<long>(out.basis.size()) - 1;
    return out;
}

inline bool membership_check(const PolyQ& f, const DivisorSpec& spec) {
    if (f.is_zero_poly() || f.degree() != spec.degree || !f.is_homogeneous())
        throw invalid_input_error("membership_check: degree mismatch");
    for (auto& [fam, req] : spec.assignments)
        if (point_multiplicity(f, fam.point) < req) return false;
    return true;
}

}  // namespace basefree

#endif
