#pragma once

// Reference computations written independently of the library algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "knotadj.hpp"

namespace oracle {

using knotadj::Integer;
using knotadj::IntMatrix;
using knotadj::LaurentPoly;

/// Dense coefficient vectors, index = exponent - offset.
struct Dense {
    int offset = 0;
    std::vector<long long> c;
};

inline Dense to_dense(const LaurentPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    d.offset = p.min_exponent();
    d.c.assign(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1), 0);
    for (const auto& [e, v] : p.terms()) d.c[static_cast<std::size_t>(e - d.offset)] = static_cast<long long>(v);
    return d;
}

inline LaurentPoly from_dense(const Dense& d) {
    LaurentPoly p;
    for (std::size_t i = 0; i < d.c.size(); ++i) p.add_term(d.offset + static_cast<int>(i), d.c[i]);
    return p;
}

/// Schoolbook convolution.
inline Dense convolve(const Dense& a, const Dense& b) {
    Dense r;
    if (a.c.empty() || b.c.empty()) return r;
    r.offset = a.offset + b.offset;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

/// Determinant by permutation expansion (small n only).
inline Integer leibniz(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// det(V - t V^T) by interpolation: evaluate at t = 0..2n with Leibniz, then
/// solve for the coefficients with exact Lagrange interpolation over rationals.
inline LaurentPoly alexander_by_interpolation(const IntMatrix& v) {
    const std::size_t n = v.rows();
    if (n == 0) return LaurentPoly(1);
    const std::size_t points = n + 1;
    std::vector<Integer> values;
    for (std::size_t k = 0; k < points; ++k) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = v(i, j) - Integer(k) * v(j, i);
        values.push_back(leibniz(m));
    }
    // Newton divided differences on x = 0, 1, ..., n (exact since values are integral polynomials).
    using Q = boost::rational<Integer>;
    std::vector<Q> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < points; ++level)
        for (std::size_t i = points - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Q(Integer(level));
            if (i == level) break;
        }
    // p(x) = sum dd[i] * prod_{j<i} (x - j)
    std::vector<Q> coeff(points, Q(0));
    std::vector<Q> basis{Q(1)};
    for (std::size_t i = 0; i < points; ++i) {
        for (std::size_t k = 0; k < basis.size(); ++k) coeff[k] += dd[i] * basis[k];
        std::vector<Q> next(basis.size() + 1, Q(0));
        for (std::size_t k = 0; k < basis.size(); ++k) {
            next[k + 1] += basis[k];
            next[k] -= basis[k] * Q(Integer(i));
        }
        basis = std::move(next);
    }
    LaurentPoly p;
    for (std::size_t k = 0; k < points; ++k) {
        if (coeff[k].denominator() != 1) throw std::logic_error("interpolation not integral");
        p.add_term(static_cast<int>(k), coeff[k].numerator());
    }
    return knotadj::normalize(p);
}

/// Kauffman bracket by tracing every state's loops explicitly. Arc ends are
/// (crossing, slot) pairs; a loop alternates between "same arc" and "smoothing" links.
inline LaurentPoly bracket_by_tracing(const knotadj::PlanarDiagram& d) {
    const std::size_t c = d.crossing_count();
    if (c == 0) return LaurentPoly(1);
    const std::size_t ends = 4 * c;
    std::vector<std::size_t> along(ends);
    std::map<int, std::vector<std::size_t>> where;
    for (std::size_t x = 0; x < c; ++x)
        for (std::size_t s = 0; s < 4; ++s) where[d.crossings()[x].arcs[s]].push_back(4 * x + s);
    for (const auto& [a, v] : where) {
        along[v[0]] = v[1];
        along[v[1]] = v[0];
    }
    std::map<int, long long> total;  // exponent of A -> coefficient
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
        std::vector<std::size_t> smooth(ends);
        int a_count = 0;
        for (std::size_t x = 0; x < c; ++x) {
            const std::size_t b = 4 * x;
            if (state >> x & 1) {  // A: a-b, c-d
                ++a_count;
                smooth[b] = b + 1, smooth[b + 1] = b, smooth[b + 2] = b + 3, smooth[b + 3] = b + 2;
            } else {  // B: a-d, b-c
                smooth[b] = b + 3, smooth[b + 3] = b, smooth[b + 1] = b + 2, smooth[b + 2] = b + 1;
            }
        }
        std::vector<bool> seen(ends, false);
        int loops = 0;
        for (std::size_t start = 0; start < ends; ++start) {
            if (seen[start]) continue;
            ++loops;
            std::size_t cur = start;
            do {
                seen[cur] = true;
                const std::size_t mate = along[cur];
                seen[mate] = true;
                cur = smooth[mate];
            } while (cur != start);
        }
        // A^(a-b) (-A^2 - A^-2)^(loops-1), expanded by the binomial theorem.
        const int b_count = static_cast<int>(c) - a_count;
        const int k = loops - 1;
        long long binom = 1;
        for (int j = 0; j <= k; ++j) {
            const long long sign = (k % 2 == 0) ? 1 : -1;
            total[a_count - b_count + 2 * j - 2 * (k - j)] += sign * binom;
            binom = binom * (k - j) / (j + 1);
        }
    }
    LaurentPoly p;
    for (const auto& [e, v] : total) p.add_term(e, v);
    return p;
}

inline LaurentPoly jones_by_tracing(const knotadj::PlanarDiagram& d) {
    const int w = d.writhe();
    return bracket_by_tracing(d) * LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
}

/// Random braid words whose closure is a knot and that use every generator.
inline std::vector<knotadj::BraidWord> random_knot_braids(std::mt19937& rng, std::size_t count, int max_strands,
                                                         int max_letters) {
    std::vector<knotadj::BraidWord> out;
    while (out.size() < count) {
        knotadj::BraidWord b;
        b.strands = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_strands - 1));
        const int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_letters));
        for (int i = 0; i < c; ++i) {
            const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(b.strands - 1));
            b.letters.push_back(rng() % 2 ? g : -g);
        }
        if (knotadj::closure_components(b) != 1) continue;
        bool all = true;
        for (int g = 1; g < b.strands; ++g)
            all = all && std::any_of(b.letters.begin(), b.letters.end(), [g](int e) { return e == g || e == -g; });
        if (all) out.push_back(std::move(b));
    }
    return out;
}

/// Unimodular matrix as a random product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 6) {
    IntMatrix p = IntMatrix::identity(n);
    if (n == 0) return p;
    std::uniform_int_distribution<int> small(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = rng() % n;
        const std::size_t j = rng() % n;
        IntMatrix e = IntMatrix::identity(n);
        switch (rng() % 3) {
            case 0:
                if (i != j) e(i, j) = small(rng);
                break;
            case 1:
                e(i, i) = -1;
                break;
            default:
                if (i != j) {
                    e(i, i) = 0, e(j, j) = 0, e(i, j) = 1, e(j, i) = 1;
                }
        }
        p = e * p;
    }
    return p;
}

inline std::vector<knotadj::TableEntry> table() { return knotadj::load_table(TABLE_CSV); }

}  // namespace oracle
