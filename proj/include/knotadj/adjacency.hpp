#pragma once

// n-adjacency: presentations with twist sites, the subset verifier, matrix-level
// families built from appended blocks, and the genus feasibility bound.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "braid.hpp"
#include "diagram.hpp"
#include "seifert.hpp"

namespace knotadj {

/// Reference invariants of the knot K' a presentation should reach.
struct TargetInvariants {
    std::string name;
    LaurentPoly alexander{1};
    std::optional<LaurentPoly> jones;
    Integer determinant = 1;
};

inline Integer determinant_of(const LaurentPoly& alexander) {
    Integer v = alexander.evaluate(-1);
    return v < 0 ? Integer(-v) : v;
}

inline void check_target(const TargetInvariants& t) {
    if (t.alexander.is_zero()) throw input_error("target " + t.name + ": zero Alexander polynomial");
    if (t.determinant != determinant_of(t.alexander))
        throw input_error("target " + t.name + ": determinant " + t.determinant.str() + " != |Delta(-1)| = " +
                          determinant_of(t.alexander).str());
}

inline TargetInvariants target_from_diagram(std::string name, const PlanarDiagram& d,
                                            std::size_t max_crossings = default_max_crossings) {
    TargetInvariants t;
    t.name = std::move(name);
    t.alexander = alexander_from_pd(d);
    t.jones = kauffman_jones(d, max_crossings).poly;
    t.determinant = determinant_of(t.alexander);
    return t;
}

struct AdjacencyPresentation {
    std::string base_name;
    PlanarDiagram base;  // carries the twist sites
    TargetInvariants target;
    int n = 0;
};

inline void validate(const AdjacencyPresentation& p) {
    if (p.n < 1) throw input_error("presentation: n must be positive");
    if (static_cast<std::size_t>(p.n) != p.base.twist_sites().size())
        throw input_error("presentation: n = " + std::to_string(p.n) + " but " +
                          std::to_string(p.base.twist_sites().size()) + " twist sites are given");
    check_target(p.target);
}

enum class Verdict { pass, fail };

inline const char* to_string(Verdict v) { return v == Verdict::pass ? "PASS" : "FAIL"; }

struct SubsetRecord {
    std::vector<std::size_t> subset;  // 1-based site indices, ascending
    LaurentPoly alexander;
    std::optional<LaurentPoly> jones;
    bool match = false;
    std::string note;
};

/// An invariant in which the base knot and the target differ.
struct DistinctnessWitness {
    std::string invariant;
    std::string base_value;
    std::string target_value;
};

struct AdjacencyCertificate {
    std::string level;  // "diagram" or "matrix"
    std::string base;
    std::string target;
    int n = 0;
    std::vector<SubsetRecord> records;
    Verdict verdict = Verdict::fail;
    std::optional<DistinctnessWitness> distinctness;
    std::string scope;

    /// FNV-1a over the canonical text form; stable across runs.
    std::string id() const {
        std::ostringstream os;
        os << level << '|' << base << '|' << target << '|' << n << '|' << to_string(verdict);
        for (const auto& r : records) {
            os << "|{";
            for (auto s : r.subset) os << s << ',';
            os << '}' << knotadj::to_string(r.alexander) << ';'
               << (r.jones ? knotadj::to_string(*r.jones, 'A') : "-") << ';' << r.match;
        }
        std::uint64_t h = 14695981039346656037ull;
        for (unsigned char ch : os.str()) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        std::ostringstream hex;
        hex << std::hex;
        hex.width(16);
        hex.fill('0');
        hex << h;
        return hex.str();
    }
};

inline constexpr const char* invariant_level_scope =
    "invariant-level certificate: every listed subset matches the target on the computed invariants; "
    "this is a necessary condition for adjacency, not an isotopy proof";

/// Nonempty subsets of {0..n-1} sorted by size, then lexicographically.
inline std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
    if (n >= 63) throw input_error("too many twist sites");
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace detail {

inline std::vector<std::size_t> one_based(const std::vector<std::size_t>& s) {
    std::vector<std::size_t> r;
    for (auto i : s) r.push_back(i + 1);
    return r;
}

}  // namespace detail

inline AdjacencyCertificate verify_adjacency(const AdjacencyPresentation& p,
                                             std::size_t max_crossings = default_max_crossings) {
    validate(p);
    if (p.base.crossing_count() > max_crossings)
        throw input_error("diagram has " + std::to_string(p.base.crossing_count()) +
                          " crossings, above the state-sum cap of " + std::to_string(max_crossings) +
                          " (raise it with --max-crossings)");
    AdjacencyCertificate cert;
    cert.level = "diagram";
    cert.base = p.base_name;
    cert.target = p.target.name;
    cert.n = p.n;
    cert.scope = invariant_level_scope;
    bool all = true;
    for (const auto& subset : nonempty_subsets(static_cast<std::size_t>(p.n))) {
        const PlanarDiagram changed = apply_twist_subset(p.base, std::set<std::size_t>(subset.begin(), subset.end()));
        SubsetRecord r;
        r.subset = detail::one_based(subset);
        r.alexander = alexander_from_pd(changed);
        r.jones = kauffman_jones(changed, max_crossings).poly;
        const bool alex_ok = r.alexander == p.target.alexander;
        const bool jones_ok = !p.target.jones || *r.jones == *p.target.jones;
        r.match = alex_ok && jones_ok;
        if (!alex_ok) r.note = "Alexander polynomial differs";
        else if (!jones_ok) r.note = "Jones polynomial differs";
        all = all && r.match;
        cert.records.push_back(std::move(r));
    }
    cert.verdict = all ? Verdict::pass : Verdict::fail;
    const LaurentPoly base_alex = alexander_from_pd(p.base);
    const LaurentPoly base_jones = kauffman_jones(p.base, max_crossings).poly;
    if (base_jones != p.target.jones.value_or(base_jones))
        cert.distinctness = DistinctnessWitness{"jones", to_string(base_jones, 'A'), to_string(*p.target.jones, 'A')};
    else if (base_alex != p.target.alexander)
        cert.distinctness = DistinctnessWitness{"alexander", to_string(base_alex), to_string(p.target.alexander)};
    return cert;
}

// ---------------------------------------------------------------------------
// Matrix-level families

struct FamilySubsetCheck {
    std::vector<std::size_t> subset;  // 1-based
    std::vector<Integer> q;           // twist vector after zeroing the subset
    MoveCertificate certificate;
    bool replays_to_base = false;
    bool alexander_equal = false;
};

/// For every nonempty subset S, zero q_i on S, reduce the block extension and
/// replay the certificate. Returns the per-subset checks and a certificate whose
/// records carry the Alexander polynomial of each changed matrix.
inline std::pair<std::vector<FamilySubsetCheck>, AdjacencyCertificate> verify_family_subsets(
    const SeifertMatrix& base, const std::vector<Integer>& q, const std::string& base_name = "V'",
    const std::string& member_name = "V_n") {
    require_valid(base);
    const LaurentPoly target = alexander(base);
    std::vector<FamilySubsetCheck> checks;
    AdjacencyCertificate cert;
    cert.level = "matrix";
    cert.base = member_name;
    cert.target = base_name;
    cert.n = static_cast<int>(q.size());
    cert.scope = invariant_level_scope;
    bool all = true;
    for (const auto& subset : nonempty_subsets(q.size())) {
        FamilySubsetCheck c;
        c.subset = detail::one_based(subset);
        c.q = q;
        for (auto i : subset) c.q[i] = 0;
        const SeifertMatrix changed = block_extend(base, c.q);
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i < q.size(); ++i) sites.push_back(base.size() + 2 * i);
        c.certificate = reduce_extension(changed, sites);
        c.replays_to_base = replay(changed, c.certificate) == base;
        const LaurentPoly alex = alexander(changed);
        c.alexander_equal = alex == target;
        SubsetRecord r;
        r.subset = c.subset;
        r.alexander = alex;
        r.match = c.replays_to_base && c.alexander_equal;
        if (!c.replays_to_base) r.note = "certificate does not replay to the base matrix";
        all = all && r.match;
        cert.records.push_back(std::move(r));
        checks.push_back(std::move(c));
    }
    cert.verdict = all ? Verdict::pass : Verdict::fail;
    return {std::move(checks), std::move(cert)};
}

struct FamilyReport {
    SeifertMatrix member;
    AbelianInvariants base_invariants;
    AbelianInvariants member_invariants;
    bool alexander_equal = false;
    bool signature_equal = false;
    bool determinant_equal = false;
    int base_surface_genus = 0;
    int surface_genus = 0;
    MoveCertificate reduction;
    bool reduction_replays = false;
    bool some_twist_exceeds_one = false;
    std::vector<std::string> rationale;
};

inline std::vector<Integer> default_twists(int n) { return std::vector<Integer>(static_cast<std::size_t>(n), 2); }

inline FamilyReport generate_family(const SeifertMatrix& base, int n, std::vector<Integer> q = {}) {
    require_valid(base);
    if (n < 1) throw input_error("generate_family: n must be positive");
    if (q.empty()) q = default_twists(n);
    if (q.size() != static_cast<std::size_t>(n))
        throw input_error("generate_family: expected " + std::to_string(n) + " twist parameters, got " +
                          std::to_string(q.size()));
    FamilyReport r;
    r.member = block_extend(base, q);
    r.base_invariants = abelian_invariants(base);
    r.member_invariants = abelian_invariants(r.member);
    r.alexander_equal = r.member_invariants.alexander == r.base_invariants.alexander;
    r.signature_equal = r.member_invariants.signature == r.base_invariants.signature;
    r.determinant_equal = r.member_invariants.determinant == r.base_invariants.determinant;
    r.base_surface_genus = base.surface_genus();
    r.surface_genus = r.member.surface_genus();
    std::vector<std::size_t> sites;
    for (int i = 0; i < n; ++i) sites.push_back(base.size() + 2 * static_cast<std::size_t>(i));
    r.reduction = reduce_extension(r.member, sites);
    r.reduction_replays = replay(r.member, r.reduction) == base;
    for (const auto& x : q)
        if (x > 1 || x < -1) r.some_twist_exceeds_one = true;
    r.rationale = {
        "the member and the base share the Alexander module: the certificate reduces one Seifert matrix to the other",
        "changing any nonempty subset of the " + std::to_string(n) + " sites gives back the base matrix",
        "if the base knot is fibered and the member is a different knot, n-adjacency with n > 1 and equal "
        "Alexander polynomials rule out a fibration of the member",
    };
    if (!r.some_twist_exceeds_one)
        r.rationale.push_back("no |q_i| > 1: the primeness hypothesis for the realized knots is not met");
    return r;
}

// ---------------------------------------------------------------------------

struct BoundDiagnostic {
    bool feasible = true;
    GenusInterval interval;
    boost::rational<long long> required{0};  // (n + 3) / 6
    std::string message;
};

/// n-adjacency to a different knot with the same Alexander polynomial forces
/// (n + 3) / 6 <= g.
inline BoundDiagnostic bound_check(int n, GenusInterval g) {
    BoundDiagnostic d;
    d.required = boost::rational<long long>(n + 3, 6);
    if (d.required > g.upper) {
        d.feasible = false;
        d.interval = g;
        std::string need = std::to_string(d.required.numerator());
        if (d.required.denominator() != 1) need += "/" + std::to_string(d.required.denominator());
        d.message = "INFEASIBLE: adjacency of degree " + std::to_string(n) + " needs genus >= " + need +
                    " but the upper bound is " + std::to_string(g.upper);
        return d;
    }
    if (d.required > g.lower) g.lower = d.required;
    d.interval = g;
    d.message = "feasible";
    return d;
}

}  // namespace knotadj
