#pragma once

// JSON forms of the library's values. Key order is fixed so output is byte-stable.
// Integers that fit in int64 are numbers, larger ones are decimal strings.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adjacency.hpp"
#include "fiberlab.hpp"
#include "laurent.hpp"
#include "seifert.hpp"
#include "surgery.hpp"

namespace knotadj::json {

using Json = nlohmann::ordered_json;

inline Json from_integer(const Integer& v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v);
    return v.str();
}

inline Integer to_integer(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Integer(s);
    }
    throw input_error(where + ": expected an integer");
}

inline int to_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw input_error(where + ": expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw input_error(where + ": integer out of range");
    return static_cast<int>(v);
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw input_error(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw input_error(where + ": missing field \"" + key + "\"");
    return *it;
}

// --- polynomials --------------------------------------------------------

inline Json from_poly(const LaurentPoly& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) a.push_back(Json::array({e, from_integer(c)}));
    return a;
}

inline LaurentPoly to_poly(const Json& j, const std::string& where) {
    if (j.is_string()) return parse_laurent(j.get<std::string>());
    if (!j.is_array()) throw input_error(where + ": expected [[exponent, coefficient], ...]");
    LaurentPoly p;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string w = where + "/" + std::to_string(k);
        if (!j[k].is_array() || j[k].size() != 2) throw input_error(w + ": expected [exponent, coefficient]");
        p.add_term(to_int(j[k][0], w + "/0"), to_integer(j[k][1], w + "/1"));
    }
    return p;
}

// --- matrices and certificates -----------------------------------------

inline Json from_rows(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(from_integer(m(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline IntMatrix to_rows(const Json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected an array of rows");
    const std::size_t n = j.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string w = where + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != n)
            throw input_error(w + ": expected a row of length " + std::to_string(n));
        for (std::size_t k = 0; k < n; ++k) m(i, k) = to_integer(j[i][k], w + "/" + std::to_string(k));
    }
    return m;
}

inline Json from_matrix(const SeifertMatrix& v) { return Json{{"size", v.size()}, {"rows", from_rows(v.entries())}}; }

inline SeifertMatrix to_matrix(const Json& j, const std::string& where = "") {
    const IntMatrix rows = to_rows(field(j, "rows", where), where + "/rows");
    if (auto it = j.find("size"); it != j.end() && to_int(*it, where + "/size") != static_cast<int>(rows.rows()))
        throw input_error(where + "/size: does not match the number of rows");
    return SeifertMatrix(rows);
}

inline Json from_move(const Move& m) {
    if (const auto* c = std::get_if<Congruence>(&m)) return Json{{"type", "congruence"}, {"P", from_rows(c->p)}};
    if (const auto* e = std::get_if<Enlarge>(&m)) {
        Json xi = Json::array();
        for (const auto& x : e->xi) xi.push_back(from_integer(x));
        return Json{{"type", "enlarge"},
                    {"position", e->position + 1},
                    {"xi", xi},
                    {"variant", e->variant == EnlargeVariant::row ? "row" : "column"}};
    }
    return Json{{"type", "destabilize"}, {"position", std::get<Destabilize>(m).position + 1}};
}

inline Move to_move(const Json& j, const std::string& where) {
    const Json& type = field(j, "type", where);
    if (type == "congruence") return Congruence{to_rows(field(j, "P", where), where + "/P")};
    const int pos = to_int(field(j, "position", where), where + "/position");
    if (pos < 1) throw input_error(where + "/position: positions are 1-based");
    if (type == "destabilize") return Destabilize{static_cast<std::size_t>(pos - 1)};
    if (type == "enlarge") {
        Enlarge e;
        e.position = static_cast<std::size_t>(pos - 1);
        if (auto it = j.find("xi"); it != j.end()) {
            if (!it->is_array()) throw input_error(where + "/xi: expected an array");
            for (std::size_t k = 0; k < it->size(); ++k)
                e.xi.push_back(to_integer((*it)[k], where + "/xi/" + std::to_string(k)));
        }
        if (auto it = j.find("variant"); it != j.end()) {
            if (*it == "column")
                e.variant = EnlargeVariant::column;
            else if (*it != "row")
                throw input_error(where + "/variant: expected \"row\" or \"column\"");
        }
        return e;
    }
    throw input_error(where + "/type: unknown move type");
}

inline Json from_certificate(const MoveCertificate& c) {
    Json moves = Json::array();
    for (const auto& m : c.moves) moves.push_back(from_move(m));
    return Json{{"moves", moves}};
}

inline MoveCertificate to_certificate(const Json& j, const std::string& where = "") {
    const Json& moves = field(j, "moves", where);
    if (!moves.is_array()) throw input_error(where + "/moves: expected an array");
    MoveCertificate c;
    for (std::size_t k = 0; k < moves.size(); ++k) c.moves.push_back(to_move(moves[k], where + "/moves/" + std::to_string(k)));
    return c;
}

inline Json from_abelian(const AbelianInvariants& a) {
    return Json{{"alexander", from_poly(a.alexander)},
                {"alexander_text", to_string(a.alexander)},
                {"degree", a.degree},
                {"monic", a.monic},
                {"signature", a.signature},
                {"determinant", from_integer(a.determinant)}};
}

// --- reports ------------------------------------------------------------

inline Json from_rational(const boost::rational<long long>& r) {
    if (r.denominator() == 1) return r.numerator();
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Json from_report(const KnotReport& r) {
    Json oracles = Json::object();
    for (const auto& [name, p] : r.oracles) oracles[name] = to_string(p);
    Json j{{"id", r.id},
           {"alexander", from_poly(r.alexander)},
           {"alexander_text", to_string(r.alexander)},
           {"degree", r.degree},
           {"monic", r.monic},
           {"signature", r.signature ? Json(*r.signature) : Json(nullptr)},
           {"determinant", from_integer(r.determinant)},
           {"jones", r.jones ? from_poly(*r.jones) : Json(nullptr)},
           {"jones_text", r.jones ? Json(to_string(*r.jones, 'A')) : Json(nullptr)},
           {"genus", Json{{"lower", from_rational(r.genus.lower)}, {"upper", r.genus.upper}}},
           {"m_interval", Json::array({r.m.lower, r.m.upper})},
           {"fibered_status", Json{{"status", to_string(r.status.kind)}, {"detail", r.status.detail}}},
           {"oracles", oracles},
           {"warnings", r.warnings}};
    return j;
}

inline Json from_adjacency(const AdjacencyCertificate& c) {
    Json records = Json::array();
    for (const auto& r : c.records) {
        Json rec{{"subset", r.subset},
                 {"alexander", to_string(r.alexander)},
                 {"jones", r.jones ? Json(to_string(*r.jones, 'A')) : Json(nullptr)},
                 {"match", r.match}};
        if (!r.note.empty()) rec["note"] = r.note;
        records.push_back(std::move(rec));
    }
    Json j{{"id", c.id()},
           {"level", c.level},
           {"base", c.base},
           {"target", c.target},
           {"n", c.n},
           {"verdict", to_string(c.verdict)},
           {"records", records}};
    j["distinctness"] = c.distinctness ? Json{{"invariant", c.distinctness->invariant},
                                              {"base", c.distinctness->base_value},
                                              {"target", c.distinctness->target_value}}
                                       : Json(nullptr);
    j["scope"] = c.scope;
    return j;
}

inline Json from_family(const FamilyReport& f, const std::vector<FamilySubsetCheck>& checks) {
    Json subsets = Json::array();
    for (const auto& c : checks) {
        Json q = Json::array();
        for (const auto& x : c.q) q.push_back(from_integer(x));
        subsets.push_back(Json{{"subset", c.subset},
                               {"q", q},
                               {"moves", c.certificate.moves.size()},
                               {"replays_to_base", c.replays_to_base},
                               {"alexander_equal", c.alexander_equal}});
    }
    return Json{{"member", from_matrix(f.member)},
                {"base_invariants", from_abelian(f.base_invariants)},
                {"member_invariants", from_abelian(f.member_invariants)},
                {"checks",
                 Json{{"alexander_equal", f.alexander_equal},
                      {"signature_equal", f.signature_equal},
                      {"determinant_equal", f.determinant_equal},
                      {"reduction_replays", f.reduction_replays}}},
                {"surface_genus", Json{{"base", f.base_surface_genus}, {"member", f.surface_genus}}},
                {"some_twist_exceeds_one", f.some_twist_exceeds_one},
                {"reduction", from_certificate(f.reduction)},
                {"subsets", subsets},
                {"rationale", f.rationale}};
}

inline Json from_verdict(const FiberingVerdict& v) {
    return Json{{"verdict", to_string(v.kind)},
                {"reason", v.reason},
                {"chain", v.chain},
                {"corollary", v.corollary ? Json(*v.corollary) : Json(nullptr)}};
}

inline Json from_alpha(const AlphaBoundsReport& a) {
    Json w = Json::array();
    for (const auto& r : a.witnesses)
        w.push_back(Json{{"target", r.target},
                         {"n", r.n},
                         {"certificate", r.certificate_id},
                         {"valid", r.valid},
                         {"verdict", r.verdict}});
    if (!a.applicable) return Json{{"applicable", false}, {"reason", a.reason}};
    return Json{{"applicable", true},
                {"lower", a.lower},
                {"upper", a.upper},
                {"witnesses", w},
                {"symplectic", a.symplectic_flag}};
}

inline Json from_bound(const BoundDiagnostic& d) {
    return Json{{"verdict", d.feasible ? "FEASIBLE" : "INFEASIBLE"},
                {"required_genus", from_rational(d.required)},
                {"genus", Json{{"lower", from_rational(d.interval.lower)}, {"upper", d.interval.upper}}},
                {"message", d.message}};
}

inline Json from_formal_sum(const FormalSum& s) {
    Json j = Json::object();
    for (const auto& [l, c] : s.terms()) j[l] = from_integer(c);
    return j;
}

}  // namespace knotadj::json
