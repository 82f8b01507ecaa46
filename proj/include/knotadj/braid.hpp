#pragma once

// Braid words, the braided Seifert surface, and the reduced Burau representation.
//
// Letter e > 0 is the positive crossing sigma_e, e < 0 its inverse. Strands run
// upward; in sigma_i the strand at position i passes over to position i+1.

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "diagram.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "seifert.hpp"

namespace knotadj {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Permutation of strand positions induced by the word (0-based).
inline std::vector<int> closure_permutation(const BraidWord& b) {
    std::vector<int> perm(b.strands);
    std::iota(perm.begin(), perm.end(), 0);
    // perm[p]: where the strand starting at p currently sits.
    std::vector<int> at(b.strands);
    std::iota(at.begin(), at.end(), 0);  // at[position] = starting strand
    for (int e : b.letters) {
        const int i = (e < 0 ? -e : e) - 1;
        std::swap(at[i], at[i + 1]);
    }
    for (int pos = 0; pos < b.strands; ++pos) perm[at[pos]] = pos;
    return perm;
}

inline int closure_components(const BraidWord& b) {
    const auto perm = closure_permutation(b);
    std::vector<bool> seen(perm.size(), false);
    int comps = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++comps;
        for (std::size_t cur = s; !seen[cur]; cur = static_cast<std::size_t>(perm[cur])) seen[cur] = true;
    }
    return comps;
}

inline std::string to_string(const BraidWord& b) {
    std::string out = "braid " + std::to_string(b.strands) + ":";
    for (int e : b.letters) out += " " + std::to_string(e);
    return out;
}

inline void validate_braid(const BraidWord& b, bool require_knot = true) {
    if (b.strands < 1) throw input_error("braid needs at least one strand");
    for (std::size_t k = 0; k < b.letters.size(); ++k) {
        const int e = b.letters[k];
        if (e == 0 || e >= b.strands || -e >= b.strands)
            throw input_error("braid letter " + std::to_string(k + 1) + " (" + std::to_string(e) +
                              ") is out of range for " + std::to_string(b.strands) + " strands");
    }
    if (require_knot) {
        const int comps = closure_components(b);
        if (comps != 1)
            throw input_error("braid closure has " + std::to_string(comps) + " components, expected a knot");
    }
}

/// Parses "braid k: e1 e2 ...".
inline BraidWord parse_braid(std::string_view text, bool require_knot = true) {
    std::string s(text);
    const auto colon = s.find(':');
    std::istringstream head(s.substr(0, colon));
    std::string keyword;
    BraidWord b;
    if (colon == std::string::npos || !(head >> keyword) || keyword != "braid" || !(head >> b.strands))
        throw input_error("expected \"braid k: e1 e2 ...\"");
    std::string extra;
    if (head >> extra) throw input_error("unexpected text before ':' in braid");
    std::istringstream body(s.substr(colon + 1));
    std::string tok;
    while (body >> tok) {
        std::size_t used = 0;
        int e = 0;
        try {
            e = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || used == 0) throw input_error("bad braid letter '" + tok + "'");
        b.letters.push_back(e);
    }
    validate_braid(b, require_knot);
    return b;
}

inline BraidWord mirror(BraidWord b) {
    for (int& e : b.letters) e = -e;
    return b;
}

// ---------------------------------------------------------------------------

/// Rational lower bound and integer upper bound on the genus of one knot.
struct GenusInterval {
    boost::rational<long long> lower{0};
    int upper = 0;
};

struct BraidSurface {
    SeifertMatrix v;
    int genus_upper = 0;
};

/// Seifert matrix of the disk-band surface of the closed braid.
///
/// Basis loops run through consecutive bands of one generator, ordered by
/// generator and then by position. Linking numbers with push-offs:
///  - a loop with itself: -(e1 + e2) / 2 for the signs of its two bands;
///  - consecutive loops of one generator sharing a band of sign e: the entry
///    (earlier, later) is 1 when e > 0, the entry (later, earlier) is -1 when e < 0;
///  - a loop on generator i over bands (a, b) and one on i+1 over (c, d):
///    a < c < b < d gives (lower, upper) = -1, c < a < d < b gives (lower, upper) = 1;
///    any other pair is unlinked.
inline BraidSurface seifert_from_braid(const BraidWord& b) {
    validate_braid(b, true);
    const int c = static_cast<int>(b.letters.size());
    const int k = b.strands;
    const int twice_genus = c - k + 1;
    if (twice_genus < 0 || twice_genus % 2 != 0) throw input_error("not a knot surface");
    std::vector<std::vector<int>> positions(static_cast<std::size_t>(k));
    for (int p = 0; p < c; ++p) {
        const int e = b.letters[static_cast<std::size_t>(p)];
        positions[static_cast<std::size_t>(e < 0 ? -e : e)].push_back(p);
    }
    for (int g = 1; g < k; ++g)
        if (positions[static_cast<std::size_t>(g)].empty())
            throw input_error("generator " + std::to_string(g) + " does not occur; surface is disconnected");

    struct Loop {
        int gen;
        int first;
        int second;
        std::size_t ordinal;  // index within its generator
    };
    std::vector<Loop> loops;
    for (int g = 1; g < k; ++g) {
        const auto& pos = positions[static_cast<std::size_t>(g)];
        for (std::size_t j = 0; j + 1 < pos.size(); ++j) loops.push_back({g, pos[j], pos[j + 1], j});
    }
    auto sgn = [&](int p) { return b.letters[static_cast<std::size_t>(p)] > 0 ? 1 : -1; };
    const std::size_t n = loops.size();
    IntMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Loop& x = loops[i];
        v(i, i) = -(sgn(x.first) + sgn(x.second)) / 2;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Loop& y = loops[j];
            if (x.gen == y.gen && y.ordinal == x.ordinal + 1) {
                if (sgn(x.second) > 0)
                    v(i, j) = 1;
                else
                    v(j, i) = -1;
            } else if (y.gen == x.gen + 1) {
                if (x.first < y.first && y.first < x.second && x.second < y.second) v(i, j) = -1;
                if (y.first < x.first && x.first < y.second && y.second < x.second) v(i, j) = 1;
            }
        }
    }
    return {SeifertMatrix(std::move(v)), twice_genus / 2};
}

// ---------------------------------------------------------------------------

/// Reduced Burau matrix of a single letter on k strands ((k-1) x (k-1)).
inline LaurentMatrix reduced_burau_letter(int strands, int letter) {
    const std::size_t n = static_cast<std::size_t>(strands - 1);
    LaurentMatrix m = LaurentMatrix::identity(n);
    const std::size_t i = static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1);
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
    if (letter > 0) {
        m(i, i) = -t;
        if (i > 0) m(i, i - 1) = t;
        if (i + 1 < n) m(i, i + 1) = LaurentPoly(1);
    } else {
        m(i, i) = -tinv;
        if (i > 0) m(i, i - 1) = LaurentPoly(1);
        if (i + 1 < n) m(i, i + 1) = tinv;
    }
    return m;
}

inline LaurentMatrix reduced_burau(const BraidWord& b) {
    LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(b.strands - 1));
    for (int e : b.letters) m = m * reduced_burau_letter(b.strands, e);
    return m;
}

/// normalize(det(rho(b) - I) (t - 1) / (t^k - 1)).
inline LaurentPoly alexander_via_burau(const BraidWord& b) {
    validate_braid(b, true);
    LaurentMatrix m = reduced_burau(b) - LaurentMatrix::identity(static_cast<std::size_t>(b.strands - 1));
    const LaurentPoly det = determinant(std::move(m));
    std::vector<Integer> ones(static_cast<std::size_t>(b.strands), Integer(1));
    const LaurentPoly cyclotomic_sum = LaurentPoly::from_coefficients(ones);
    const auto q = det.divide_exact(cyclotomic_sum);
    if (!q || q->is_zero()) throw invariant_violation("Burau identity violated");
    return normalize(*q);
}

// ---------------------------------------------------------------------------

/// PD code of the closed braid; crossing k is letter k. Arcs are numbered
/// along the orientation starting from the bottom of strand position 1.
inline PlanarDiagram braid_to_pd(const BraidWord& b) {
    validate_braid(b, true);
    if (b.letters.empty()) return PlanarDiagram{};
    const std::size_t k = static_cast<std::size_t>(b.strands);
    // Bottom arcs get labels 1..k; each crossing creates two fresh outgoing arcs.
    std::vector<int> current(k);
    std::iota(current.begin(), current.end(), 1);
    int next_label = static_cast<int>(k) + 1;
    std::vector<Crossing> crossings;
    std::map<int, int> alias;  // top arc label -> bottom arc label at the same position
    for (int e : b.letters) {
        const std::size_t i = static_cast<std::size_t>((e < 0 ? -e : e) - 1);
        const int x_in = current[i];
        const int y_in = current[i + 1];
        const int x_out = next_label++;
        const int y_out = next_label++;
        if (e > 0)
            crossings.push_back(Crossing{{y_in, y_out, x_out, x_in}});
        else
            crossings.push_back(Crossing{{x_in, y_in, y_out, x_out}});
        current[i] = x_out;
        current[i + 1] = y_out;
    }
    for (std::size_t p = 0; p < k; ++p) alias[current[p]] = static_cast<int>(p) + 1;
    for (auto& c : crossings)
        for (auto& a : c.arcs)
            if (auto it = alias.find(a); it != alias.end()) a = it->second;
    return PlanarDiagram(std::move(crossings)).canonical();
}

}  // namespace knotadj
