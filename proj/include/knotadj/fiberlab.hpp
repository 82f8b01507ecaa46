#pragma once

// Fibering obstructions: monicity, the adjacency verdict, m(K) and alpha bounds.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "adjacency.hpp"
#include "braid.hpp"
#include "diagram.hpp"
#include "seifert.hpp"

namespace knotadj {

enum class FiberedKind { fibered, not_fibered, unknown };

inline const char* to_string(FiberedKind k) {
    switch (k) {
        case FiberedKind::fibered: return "FIBERED";
        case FiberedKind::not_fibered: return "NOT_FIBERED";
        default: return "UNKNOWN";
    }
}

struct FiberedStatus {
    FiberedKind kind = FiberedKind::unknown;
    std::string detail;  // source for FIBERED, reason for NOT_FIBERED
};

struct MInterval {
    long long lower = 0;
    long long upper = 0;
};

struct KnotReport {
    std::string id;
    LaurentPoly alexander{1};
    int degree = 0;
    bool monic = true;
    std::optional<int> signature;
    Integer determinant = 1;
    std::optional<LaurentPoly> jones;
    GenusInterval genus;
    MInterval m;
    FiberedStatus status;
    std::map<std::string, LaurentPoly> oracles;  // oracle name -> normalized Delta
    std::vector<std::string> warnings;

    bool m_certified_zero() const { return m.lower == 0 && m.upper == 0; }
};

/// Reference data that may narrow a report.
struct TableHints {
    std::optional<bool> fibered;
    std::optional<int> genus;
};

inline long long ceil_of(const boost::rational<long long>& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

/// [max(0, 2 lower - delta), 2 upper - delta], with 2 lower rounded up.
inline MInterval m_interval(const GenusInterval& g, int degree) {
    MInterval m;
    m.lower = std::max<long long>(0, ceil_of(2 * g.lower) - degree);
    m.upper = 2LL * g.upper - degree;
    return m;
}

inline bool is_genus_one_fibered_polynomial(const LaurentPoly& alexander) {
    return alexander == LaurentPoly(1) || alexander == parse_laurent("1 - t + t^2") ||
           alexander == parse_laurent("1 - 3*t + t^2");
}

/// Polynomial plus genus certificate; never an identification up to isotopy.
inline FiberedStatus genus1_fibered_classify(KnotReport& r) {
    if (r.genus.upper > 1) throw input_error("genus-1 classification needs a genus upper bound <= 1");
    if (is_genus_one_fibered_polynomial(r.alexander) && r.m_certified_zero())
        return {FiberedKind::fibered, "genus-1 classification"};
    if (is_genus_one_fibered_polynomial(r.alexander)) {
        r.warnings.push_back("Alexander polynomial matches a genus <= 1 fibered knot but m(K) = 0 is not certified");
        if (r.alexander == LaurentPoly(1) && r.jones && *r.jones != LaurentPoly(1))
            r.warnings.push_back("Jones polynomial differs from the unknot's");
    }
    return {FiberedKind::unknown, {}};
}

namespace detail {

inline void finish_report(KnotReport& r, const TableHints& hints) {
    if (r.oracles.empty()) throw invariant_violation("report without an Alexander oracle");
    r.alexander = r.oracles.begin()->second;
    for (const auto& [name, poly] : r.oracles)
        if (poly != r.alexander) {
            std::string msg = "Alexander oracles disagree:";
            for (const auto& [n2, p2] : r.oracles) msg += " " + n2 + "=" + to_string(p2);
            throw invariant_violation(msg);
        }
    const SpanMonic sm = span_monic(r.alexander);
    r.degree = sm.degree;
    r.monic = sm.monic;
    r.determinant = determinant_of(r.alexander);
    r.genus.lower = boost::rational<long long>(r.degree, 2);
    if (r.genus.lower > r.genus.upper)
        throw invariant_violation("Seifert bound violated: degree/2 exceeds the surface genus");
    if (hints.genus) {
        const int g = *hints.genus;
        if (boost::rational<long long>(g) < r.genus.lower || g > r.genus.upper)
            throw input_error("reference genus " + std::to_string(g) + " is outside the computed interval [" +
                              std::to_string(r.degree) + "/2, " + std::to_string(r.genus.upper) + "]");
        r.genus.lower = g;
        r.genus.upper = g;
    }
    r.m = m_interval(r.genus, r.degree);
    if (!r.monic) {
        r.status = {FiberedKind::not_fibered, "non-monic"};
        if (hints.fibered && *hints.fibered)
            throw input_error("reference data marks a knot with non-monic Alexander polynomial as fibered");
        return;
    }
    if (r.genus.upper <= 1) r.status = genus1_fibered_classify(r);
    if (r.status.kind == FiberedKind::unknown && hints.fibered && *hints.fibered)
        r.status = {FiberedKind::fibered, "table"};
}

inline int seifert_circles(const PlanarDiagram& d) {
    const auto& occ = DiagramAccess::occurrences(d);
    // Oriented smoothing: incoming under -> outgoing over, incoming over -> outgoing under.
    std::map<int, int> next;
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
        const auto& a = d.crossings()[x].arcs;
        const int over_out = d.is_outgoing(x, 1) ? 1 : 3;
        const int over_in = 4 - over_out;
        next[a[0]] = a[static_cast<std::size_t>(over_out)];
        next[a[static_cast<std::size_t>(over_in)]] = a[2];
    }
    std::set<int> seen;
    int circles = 0;
    for (const auto& [label, unused] : occ) {
        if (seen.count(label)) continue;
        ++circles;
        for (int cur = label; !seen.count(cur); cur = next.at(cur)) seen.insert(cur);
    }
    return circles;
}

}  // namespace detail

inline KnotReport report_from_braid(const std::string& id, const BraidWord& b, const TableHints& hints = {},
                                    std::size_t max_crossings = default_max_crossings) {
    KnotReport r;
    r.id = id;
    const BraidSurface surface = seifert_from_braid(b);
    const PlanarDiagram pd = braid_to_pd(b);
    const AbelianInvariants inv = abelian_invariants(surface.v);
    r.oracles["seifert"] = inv.alexander;
    r.oracles["burau"] = alexander_via_burau(b);
    r.oracles["region"] = alexander_from_pd(pd);
    r.signature = inv.signature;
    r.jones = kauffman_jones(pd, max_crossings).poly;
    r.genus.upper = surface.genus_upper;
    detail::finish_report(r, hints);
    return r;
}

/// PD input: only the region oracle applies; the genus bound comes from
/// Seifert's algorithm on the diagram itself.
inline KnotReport report_from_pd(const std::string& id, const PlanarDiagram& d, const TableHints& hints = {},
                                 std::size_t max_crossings = default_max_crossings) {
    KnotReport r;
    r.id = id;
    r.oracles["region"] = alexander_from_pd(d);
    r.jones = kauffman_jones(d, max_crossings).poly;
    const int c = static_cast<int>(d.crossing_count());
    r.genus.upper = (c - detail::seifert_circles(d) + 1) / 2;
    r.warnings.push_back("signature not computed for PD input");
    detail::finish_report(r, hints);
    return r;
}

/// Matrix input: no diagram, so Jones only if supplied.
inline KnotReport report_from_matrix(const std::string& id, const SeifertMatrix& v, const TableHints& hints = {},
                                     std::optional<LaurentPoly> jones = {}) {
    KnotReport r;
    r.id = id;
    const AbelianInvariants inv = abelian_invariants(v);
    r.oracles["seifert"] = inv.alexander;
    r.signature = inv.signature;
    r.jones = std::move(jones);
    r.genus.upper = v.surface_genus();
    detail::finish_report(r, hints);
    return r;
}

// ---------------------------------------------------------------------------

enum class VerdictKind { not_fibered, inconclusive, inapplicable };

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::not_fibered: return "NOT_FIBERED";
        case VerdictKind::inconclusive: return "INCONCLUSIVE";
        default: return "INAPPLICABLE";
    }
}

struct FiberingVerdict {
    VerdictKind kind = VerdictKind::inapplicable;
    std::vector<std::string> chain;
    std::string reason;
    std::optional<std::string> corollary;
};

inline constexpr const char* zero_surgery_corollary = "K(0) does not admit a fibration over S^1";

/// Distinctness of K and K' from computed invariants or the certificate.
inline std::optional<std::string> distinctness_witness(const KnotReport& k, const KnotReport& kp,
                                                       const AdjacencyCertificate& cert) {
    if (k.jones && kp.jones && *k.jones != *kp.jones) return "Jones polynomials differ";
    if (k.signature && kp.signature && *k.signature != *kp.signature) return "signatures differ";
    if (cert.distinctness && cert.base == k.id && cert.target == kp.id)
        return "certificate witness: " + cert.distinctness->invariant + " differs";
    return std::nullopt;
}

inline FiberingVerdict fibering_verdict(const KnotReport& k, const KnotReport& kp, const AdjacencyCertificate& cert) {
    FiberingVerdict v;
    auto inapplicable = [&](std::string why) {
        v.kind = VerdictKind::inapplicable;
        v.reason = std::move(why);
        return v;
    };
    if (cert.verdict != Verdict::pass) return inapplicable("adjacency certificate is not PASS");
    if (cert.n <= 1) return inapplicable("requires n>1");
    if (cert.target != kp.id) return inapplicable("certificate target " + cert.target + " is not " + kp.id);
    if (kp.status.kind != FiberedKind::fibered) return inapplicable("K' is not known to be fibered");
    if (k.alexander != kp.alexander) return inapplicable("Alexander polynomials of K and K' differ");
    v.chain = {
        "Delta(K) = Delta(K') = " + to_string(k.alexander),
        "K' = " + kp.id + " is fibered (" + kp.status.detail + ")",
        "K is " + std::to_string(cert.n) + "-adjacent to K' with n > 1 (certificate " + cert.id() + ")",
    };
    const auto witness = distinctness_witness(k, kp, cert);
    if (!witness) {
        v.kind = VerdictKind::inconclusive;
        v.reason = "no distinctness witness: K may be isotopic to K'";
        return v;
    }
    v.chain.push_back("K is not K': " + *witness);
    v.chain.push_back("adjacency obstruction: a knot n-adjacent (n > 1) to a different fibered knot with the same "
                      "Alexander polynomial is not fibered");
    v.kind = VerdictKind::not_fibered;
    v.corollary = zero_surgery_corollary;
    return v;
}

// ---------------------------------------------------------------------------

struct AlphaWitness {
    AdjacencyCertificate certificate;
    KnotReport target;
};

struct AlphaWitnessRecord {
    std::string target;
    int n = 0;
    std::string certificate_id;
    bool valid = false;
    std::string verdict;
};

struct AlphaBoundsReport {
    bool applicable = true;
    std::string reason;
    long long lower = 0;
    long long upper = 0;
    std::vector<AlphaWitnessRecord> witnesses;
    std::string symplectic_flag;
};

inline constexpr const char* symplectic_obstructed = "OBSTRUCTED: S^1 x K(0) admits no symplectic structure";
inline constexpr const char* symplectic_clear = "no obstruction from alpha";

inline AlphaBoundsReport alpha_and_symplectic(const KnotReport& k, const std::vector<AlphaWitness>& witnesses) {
    AlphaBoundsReport a;
    if (!k.monic) {
        a.applicable = false;
        a.reason = "INAPPLICABLE: alpha is defined only for monic Alexander polynomials";
        return a;
    }
    for (const auto& w : witnesses) {
        const FiberingVerdict v = fibering_verdict(k, w.target, w.certificate);
        AlphaWitnessRecord rec{w.target.id, w.certificate.n, w.certificate.id(), v.kind == VerdictKind::not_fibered,
                               to_string(v.kind)};
        if (rec.valid) a.lower = std::max<long long>(a.lower, rec.n);
        a.witnesses.push_back(std::move(rec));
    }
    a.upper = k.m_certified_zero() ? 0 : std::max(0LL, 6LL * k.genus.upper - 3);
    if (a.lower > a.upper)
        throw input_error("alpha bounds inconsistent: witnessed " + std::to_string(a.lower) + " exceeds upper bound " +
                          std::to_string(a.upper));
    a.symplectic_flag = a.lower > 0 ? symplectic_obstructed : symplectic_clear;
    return a;
}

}  // namespace knotadj
