#pragma once

// Seifert matrices of knots, their abelian invariants, and S-equivalence moves.
//
// Convention: the right-handed trefoil has Seifert matrix [[-1,1],[0,-1]] and
// signature -2. Everything downstream inherits its signs from this choice.

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "laurent.hpp"
#include "matrix.hpp"

namespace knotadj {

class SeifertMatrix {
   public:
    SeifertMatrix() = default;
    explicit SeifertMatrix(IntMatrix entries) : m_(std::move(entries)) {
        if (!m_.is_square()) throw input_error("not a knot Seifert matrix: matrix is not square");
        if (m_.rows() % 2 != 0) throw input_error("not a knot Seifert matrix: odd size " + std::to_string(m_.rows()));
    }
    SeifertMatrix(std::initializer_list<std::initializer_list<Integer>> rows) : SeifertMatrix(IntMatrix(rows)) {}

    std::size_t size() const noexcept { return m_.rows(); }
    /// Genus of the surface the matrix presents (size / 2).
    int surface_genus() const noexcept { return static_cast<int>(m_.rows() / 2); }
    const IntMatrix& entries() const noexcept { return m_; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.m_ == b.m_; }

   private:
    IntMatrix m_;
};

/// True iff det(V - V^T) = 1, i.e. V presents a knot rather than a link.
inline bool validate(const SeifertMatrix& v) {
    return determinant(v.entries() - v.entries().transposed()) == 1;
}

inline void require_valid(const SeifertMatrix& v) {
    if (!validate(v)) throw input_error("not a knot Seifert matrix: det(V - V^T) != 1");
}

/// normalize(det(V - t V^T)); the empty matrix gives 1.
inline LaurentPoly alexander(const SeifertMatrix& v) {
    const auto& m = v.entries();
    IntMatrix neg_t = m.transposed().map([](const Integer& x) { return Integer(-x); });
    return normalize(pencil_determinant(m, neg_t));
}

/// Characteristic polynomial det(x I - s) of a square integer matrix.
inline LaurentPoly characteristic_polynomial(const IntMatrix& s) {
    IntMatrix neg = s.map([](const Integer& x) { return Integer(-x); });
    return pencil_determinant(neg, IntMatrix::identity(s.rows()));
}

namespace detail {

inline int sign_changes(const LaurentPoly& p) {
    int changes = 0;
    int last = 0;
    for (const auto& [e, c] : p.terms()) {
        const int s = c < 0 ? -1 : 1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

/// Signature of a symmetric integer matrix.
///
/// The characteristic polynomial of a symmetric matrix is real-rooted, so
/// Descartes' rule of signs counts positive and negative eigenvalues exactly.
inline int signature(const IntMatrix& s) {
    if (!(s == s.transposed())) throw input_error("signature: matrix is not symmetric");
    if (s.rows() == 0) return 0;
    const LaurentPoly p = characteristic_polynomial(s);
    LaurentPoly at_neg_x;
    for (const auto& [e, c] : p.terms()) at_neg_x.add_term(e, e % 2 == 0 ? c : Integer(-c));
    return detail::sign_changes(p) - detail::sign_changes(at_neg_x);
}

struct AbelianInvariants {
    LaurentPoly alexander;
    int degree = 0;
    bool monic = true;
    int signature = 0;
    Integer determinant = 1;
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

inline AbelianInvariants abelian_invariants(const SeifertMatrix& v) {
    require_valid(v);
    AbelianInvariants inv;
    inv.alexander = alexander(v);
    const SpanMonic sm = span_monic(inv.alexander);
    inv.degree = sm.degree;
    inv.monic = sm.monic;
    inv.signature = signature(v.entries() + v.entries().transposed());
    Integer at_minus_one = inv.alexander.evaluate(-1);
    inv.determinant = at_minus_one < 0 ? Integer(-at_minus_one) : at_minus_one;
    const Integer at_one = inv.alexander.evaluate(1);
    if (at_one != 1 && at_one != -1) throw invariant_violation("Alexander polynomial has |Delta(1)| != 1");
    return inv;
}

// ---------------------------------------------------------------------------
// S-equivalence moves

enum class EnlargeVariant { row, column };

struct Congruence {
    IntMatrix p;
};

/// Inserts a hyperbolic pair at rows/cols (position, position+1).
///
/// Row variant: row `position` is zero, row `position+1` is e_position, and the
/// new column `position` carries xi in the old rows. Column variant is the
/// transpose pattern.
struct Enlarge {
    std::size_t position = 0;
    std::vector<Integer> xi;
    EnlargeVariant variant = EnlargeVariant::row;
};

struct Destabilize {
    std::size_t position = 0;
};

using Move = std::variant<Congruence, Enlarge, Destabilize>;

struct MoveCertificate {
    std::vector<Move> moves;
};

namespace detail {

inline std::string entry_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

/// Empty string if rows/cols (p, p+1) of m form the xi = 0 enlargement pattern
/// of the given variant, else a description of the first violating entry.
inline std::string enlargement_mismatch(const IntMatrix& m, std::size_t p, EnlargeVariant variant) {
    const std::size_t n = m.rows();
    const std::size_t one_row = variant == EnlargeVariant::row ? p + 1 : p;
    const std::size_t one_col = variant == EnlargeVariant::row ? p : p + 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool in_pair = i == p || i == p + 1 || j == p || j == p + 1;
            if (!in_pair) continue;
            const Integer expected = (i == one_row && j == one_col) ? 1 : 0;
            if (m(i, j) != expected)
                return "entry " + entry_name(i, j) + " is " + m(i, j).str() + ", expected " + expected.str();
        }
    return {};
}

}  // namespace detail

inline bool is_unimodular(const IntMatrix& p) {
    if (!p.is_square()) return false;
    const Integer d = determinant(p);
    return d == 1 || d == -1;
}

inline SeifertMatrix apply_move(const SeifertMatrix& v, const Move& move) {
    const IntMatrix& m = v.entries();
    const std::size_t n = m.rows();
    if (const auto* c = std::get_if<Congruence>(&move)) {
        if (c->p.rows() != n || c->p.cols() != n) throw input_error("congruence: matrix size does not match");
        if (!is_unimodular(c->p)) throw input_error("congruence: matrix is not unimodular");
        return SeifertMatrix(c->p * m * c->p.transposed());
    }
    if (const auto* e = std::get_if<Enlarge>(&move)) {
        const std::size_t p = e->position;
        if (p > n) throw input_error("enlarge: position out of range");
        if (!e->xi.empty() && e->xi.size() != n) throw input_error("enlarge: xi has wrong length");
        IntMatrix r(n + 2, n + 2);
        auto dst = [&](std::size_t i) { return i < p ? i : i + 2; };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(dst(i), dst(j)) = m(i, j);
        if (e->variant == EnlargeVariant::row) {
            r(p + 1, p) = 1;
            for (std::size_t i = 0; i < e->xi.size(); ++i) r(dst(i), p) = e->xi[i];
        } else {
            r(p, p + 1) = 1;
            for (std::size_t i = 0; i < e->xi.size(); ++i) r(p, dst(i)) = e->xi[i];
        }
        return SeifertMatrix(std::move(r));
    }
    const auto& d = std::get<Destabilize>(move);
    if (d.position + 2 > n) throw input_error("destabilize: position out of range");
    const std::string row_err = detail::enlargement_mismatch(m, d.position, EnlargeVariant::row);
    if (!row_err.empty()) {
        const std::string col_err = detail::enlargement_mismatch(m, d.position, EnlargeVariant::column);
        if (!col_err.empty()) throw input_error("destabilize: pattern mismatch, " + row_err);
    }
    return SeifertMatrix(m.without(d.position, 2));
}

inline SeifertMatrix replay(const SeifertMatrix& v, const MoveCertificate& cert) {
    SeifertMatrix cur = v;
    for (const auto& mv : cert.moves) cur = apply_move(cur, mv);
    return cur;
}

/// Appends one [[0,0],[1,q_i]] block per twist parameter, uncoupled from v.
inline SeifertMatrix block_extend(const SeifertMatrix& v, const std::vector<Integer>& q) {
    require_valid(v);
    if (q.empty()) throw input_error("block_extend: need at least one twist parameter");
    const std::size_t base = v.size();
    IntMatrix r(base + 2 * q.size(), base + 2 * q.size());
    for (std::size_t i = 0; i < base; ++i)
        for (std::size_t j = 0; j < base; ++j) r(i, j) = v(i, j);
    for (std::size_t k = 0; k < q.size(); ++k) {
        const std::size_t p = base + 2 * k;
        r(p + 1, p) = 1;
        r(p + 1, p + 1) = q[k];
    }
    return SeifertMatrix(std::move(r));
}

/// Twist parameter of the appended block at rows (p, p+1), if there is one.
inline std::optional<Integer> extension_block_twist(const SeifertMatrix& v, std::size_t p) {
    const IntMatrix& m = v.entries();
    const std::size_t n = m.rows();
    if (p + 2 > n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool in_pair = i == p || i == p + 1 || j == p || j == p + 1;
            if (!in_pair || (i == p + 1 && j == p + 1)) continue;
            const Integer expected = (i == p + 1 && j == p) ? 1 : 0;
            if (m(i, j) != expected) return std::nullopt;
        }
    return m(p + 1, p + 1);
}

/// Positions of trailing appended blocks, scanning from the end. With `count`,
/// exactly that many are required; otherwise as many as are found.
inline std::vector<std::size_t> detect_extension_sites(const SeifertMatrix& v, std::optional<std::size_t> count = {}) {
    std::vector<std::size_t> sites;
    std::size_t end = v.size();
    while (end >= 2 && (!count || sites.size() < *count)) {
        if (!extension_block_twist(v, end - 2)) break;
        sites.push_back(end - 2);
        end -= 2;
    }
    if (count && sites.size() != *count) throw input_error("not a block extension");
    if (sites.empty()) throw input_error("not a block extension");
    std::reverse(sites.begin(), sites.end());
    return sites;
}

/// Certificate of congruences and destabilizations undoing block_extend.
inline MoveCertificate reduce_extension(const SeifertMatrix& v, std::vector<std::size_t> sites) {
    if (sites.empty()) throw input_error("not a block extension");
    std::sort(sites.begin(), sites.end());
    for (std::size_t k = 1; k < sites.size(); ++k)
        if (sites[k] < sites[k - 1] + 2) throw input_error("not a block extension: overlapping sites");
    MoveCertificate cert;
    SeifertMatrix cur = v;
    for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
        const std::size_t p = *it;
        const auto q = extension_block_twist(cur, p);
        if (!q) throw input_error("not a block extension: no appended block at row " + std::to_string(p + 1));
        if (*q != 0) {
            IntMatrix pm = IntMatrix::identity(cur.size());
            pm(p + 1, p) = -*q;
            cert.moves.push_back(Congruence{pm});
            cur = apply_move(cur, cert.moves.back());
        }
        cert.moves.push_back(Destabilize{p});
        cur = apply_move(cur, cert.moves.back());
    }
    return cert;
}

inline SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    require_valid(a);
    require_valid(b);
    return SeifertMatrix(direct_sum(a.entries(), b.entries()));
}

}  // namespace knotadj
