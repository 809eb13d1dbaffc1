#ifndef BASEFREE_TEST_UTIL_HPP
#define BASEFREE_TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "basefree/io.hpp"
#include "basefree/reparam.hpp"

namespace bftest {

using namespace basefree;

inline std::string fixture(const std::string& name) {
    return std::string(BASEFREE_FIXTURES) + "/" + name;
}

inline bool proportional(const std::vector<PolyQ>& A, const std::vector<PolyQ>& B) {
    if (A.size() != B.size()) return false;
    size_t i0 = 0;
    while (i0 < A.size() && A[i0].is_zero_poly() && B[i0].is_zero_poly()) ++i0;
    if (i0 == A.size()) return true;
    for (size_t i = 0; i < A.size(); ++i)
        if (!(A[i] * B[i0] - B[i] * A[i0]).is_zero_poly()) return false;
    return true;
}

// sorted (family_size, multiplicity) pairs: the projectivity-invariant shape
// of a base locus
inline std::vector<std::pair<long, long>> locus_shape(const BaseLocusReport& rep) {
    std::vector<std::pair<long, long>> out;
    for (auto& f : rep.families) out.push_back({f.family_size, f.multiplicity});
    std::sort(out.begin(), out.end());
    return out;
}

// random invertible n x n integer matrix with entries in [-bound, bound]
inline std::vector<std::vector<long>> random_invertible(size_t n, std::mt19937_64& rng,
                                                        long bound) {
    auto det3 = [](const std::vector<std::vector<long>>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    for (;;) {
        std::vector<std::vector<long>> m(n, std::vector<long>(n));
        for (auto& row : m)
            for (auto& e : row)
                e = static_cast<long>(rng() % (2 * bound + 1)) - bound;
        if (n == 3) {
            if (det3(m) != 0) return m;
            continue;
        }
        // generic 4x4: Laplace along the first row
        long d = 0;
        for (size_t j = 0; j < 4; ++j) {
            std::vector<std::vector<long>> sub;
            for (size_t r = 1; r < 4; ++r) {
                std::vector<long> row;
                for (size_t c = 0; c < 4; ++c)
                    if (c != j) row.push_back(m[r][c]);
                sub.push_back(row);
            }
            long cof = det3(sub);
            d += (j % 2 == 0 ? 1 : -1) * m[0][j] * cof;
        }
        if (d != 0) return m;
    }
}

// projectivity of the source plane as a linear PlanarMap
inline PlanarMap projectivity3(const std::vector<std::vector<long>>& m) {
    std::vector<PolyQ> comps;
    for (size_t i = 0; i < 3; ++i) {
        PolyQ row = PolyQ::zero(vars_t3());
        for (size_t j = 0; j < 3; ++j)
            if (m[i][j] != 0) {
                Mono mo(3, 0);
                mo[j] = 1;
                row.add_term(mo, Rational(m[i][j]));
            }
        comps.push_back(std::move(row));
    }
    return PlanarMap(std::move(comps));
}

// left projectivity of the target P^3: invertible linear recombination of
// the four components
inline SurfaceParam left_transform(const SurfaceParam& P,
                                   const std::vector<std::vector<long>>& m) {
    std::vector<PolyQ> comps;
    for (size_t i = 0; i < 4; ++i) {
        PolyQ row = PolyQ::zero(vars_t3());
        for (size_t j = 0; j < 4; ++j)
            if (m[i][j] != 0) row += P[j] * Rational(m[i][j]);
        comps.push_back(std::move(row));
    }
    return SurfaceParam(std::move(comps));
}

// coefficient vectors of degree-deg forms over the graded-lex monomial list
inline std::vector<std::vector<Rational>> coeff_rows(const std::vector<PolyQ>& fs, long deg) {
    std::vector<Mono> monos;
    for (unsigned i = 0; i <= static_cast<unsigned>(deg); ++i)
        for (unsigned j = 0; i + j <= static_cast<unsigned>(deg); ++j)
            monos.push_back({i, j, static_cast<unsigned>(deg) - i - j});
    std::vector<std::vector<Rational>> rows;
    for (auto& f : fs) {
        std::vector<Rational> row;
        for (auto& m : monos) {
            auto it = f.terms().find(m);
            row.push_back(it == f.terms().end() ? Rational(0) : it->second);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline size_t rank_of(std::vector<std::vector<Rational>> rows) {
    size_t rank = 0, cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        size_t piv = rank;
        while (piv < rows.size() && is_zero(rows[piv][c])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || is_zero(rows[r][c])) continue;
            Rational q = rows[r][c] / rows[rank][c];
            for (size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// equality of linear spans of two sets of degree-deg forms
inline bool same_span(const std::vector<PolyQ>& A, const std::vector<PolyQ>& B, long deg) {
    auto ra = coeff_rows(A, deg), rb = coeff_rows(B, deg);
    auto all = ra;
    all.insert(all.end(), rb.begin(), rb.end());
    size_t r = rank_of(ra);
    return r == rank_of(rb) && r == rank_of(all);
}

}  // namespace bftest

#endif
