#pragma once

// Command-line front end. `run` is the whole program; main only forwards to it.
// Exit status: 0 success, 1 verification failure, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adjacency.hpp"
#include "braid.hpp"
#include "diagram.hpp"
#include "fiberlab.hpp"
#include "json_io.hpp"
#include "surgery.hpp"
#include "table.hpp"

#ifndef KNOTADJ_DEFAULT_TABLE
#define KNOTADJ_DEFAULT_TABLE "data/knot_table.csv"
#endif

namespace knotadj::cli {

using json::Json;

enum Exit { ok = 0, verification_failed = 1, bad_input = 2 };

struct Options {
    std::size_t max_crossings = default_max_crossings;
    std::string out_dir;
    std::string table_path = KNOTADJ_DEFAULT_TABLE;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Parses JSON text, turning parse errors into "file: line L, column C: ..." messages.
inline Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw input_error(source + ": line " + std::to_string(line) + ", column " + std::to_string(col) +
                          ": invalid JSON");
    }
}

inline std::string trim(std::string s) { return knotadj::detail::trim(s); }

inline bool looks_like_pd(const std::string& s) {
    return s.empty() || s.rfind("X[", 0) == 0 || s.rfind("PD[", 0) == 0;
}

class Context {
   public:
    explicit Context(Options o) : opts(std::move(o)) {}

    const std::vector<TableEntry>& table() {
        if (!table_) table_ = load_table(opts.table_path);
        return *table_;
    }

    /// Report for a knot given as braid text, PD text, or a table name.
    KnotReport report_for_text(const std::string& text, const std::string& id) {
        const std::string t = trim(text);
        if (t.rfind("braid", 0) == 0) return report_from_braid(id, parse_braid(t), {}, opts.max_crossings);
        if (t == "unknot") return report_from_braid(id, parse_braid("braid 1:"), {}, opts.max_crossings);
        if (looks_like_pd(t)) return report_from_pd(id, parse_pd(t), {}, opts.max_crossings);
        if (auto e = find_entry(table(), t)) {
            TableHints hints{e->fibered, e->genus};
            return report_from_braid(id, e->braid(), hints, opts.max_crossings);
        }
        throw input_error("cannot interpret '" + t + "' as a braid, a PD code, or a table knot");
    }

    /// Diagram for a {"braid": ...} / {"pd": ...} object or a name.
    PlanarDiagram diagram_for(const Json& j, const std::string& where) {
        if (j.is_string()) {
            const std::string name = j.get<std::string>();
            if (name == "unknot") return PlanarDiagram{};
            if (auto e = find_entry(table(), name)) return braid_to_pd(e->braid());
            throw input_error(where + ": unknown knot '" + name + "'");
        }
        if (j.is_object() && j.contains("braid")) {
            const Json& b = j["braid"];
            if (!b.is_string()) throw input_error(where + "/braid: expected a string");
            return braid_to_pd(parse_braid(b.get<std::string>()));
        }
        if (j.is_object() && j.contains("pd")) {
            const Json& p = j["pd"];
            if (!p.is_string()) throw input_error(where + "/pd: expected a string");
            return parse_pd(p.get<std::string>());
        }
        throw input_error(where + ": expected a knot name, {\"braid\": ...} or {\"pd\": ...}");
    }

    std::optional<TableHints> hints_for(const Json& j) {
        if (!j.is_string()) return std::nullopt;
        const std::string name = j.get<std::string>();
        if (name == "unknot") return TableHints{true, 0};
        if (auto e = find_entry(table(), name)) return TableHints{e->fibered, e->genus};
        return std::nullopt;
    }

    Options opts;

   private:
    std::optional<std::vector<TableEntry>> table_;
};

inline void emit(const Json& j, const std::string& name, const Options& opts, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    out << text;
    if (!opts.out_dir.empty()) {
        std::filesystem::create_directories(opts.out_dir);
        std::ofstream f(std::filesystem::path(opts.out_dir) / (name + ".json"), std::ios::binary);
        if (!f) throw input_error("cannot write to " + opts.out_dir);
        f << text;
    }
}

inline std::string file_stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

// --- subcommands -----------------------------------------------------------

inline int cmd_invariants(Context& ctx, const std::string& input, std::string name, std::ostream& out) {
    KnotReport r;
    std::string stem = "invariants";
    if (std::filesystem::is_regular_file(input)) {
        const std::string text = read_file(input);
        const std::string t = trim(text);
        if (name.empty()) name = file_stem(input);
        if (!t.empty() && t[0] == '{') {
            const Json j = parse_json(text, input);
            if (j.contains("rows"))
                r = report_from_matrix(name, json::to_matrix(j, input));
            else
                r = report_from_pd(name, ctx.diagram_for(j, input), {}, ctx.opts.max_crossings);
        } else {
            r = ctx.report_for_text(t, name);
        }
    } else {
        if (name.empty()) name = trim(input);
        r = ctx.report_for_text(input, name);
    }
    Json j = json::from_report(r);
    j["alpha"] = json::from_alpha(alpha_and_symplectic(r, {}));
    emit(j, stem, ctx.opts, out);
    return ok;
}

inline std::vector<Integer> parse_q_list(const std::string& s) {
    std::vector<Integer> q;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cell = trim(cell);
        const std::size_t start = (!cell.empty() && (cell[0] == '-' || cell[0] == '+')) ? 1 : 0;
        if (cell.size() <= start || cell.find_first_not_of("0123456789", start) != std::string::npos)
            throw input_error("--q: '" + cell + "' is not an integer");
        q.emplace_back(cell[0] == '+' ? cell.substr(1) : cell);
    }
    return q;
}

inline int cmd_extend(Context& ctx, const std::string& path, int n, const std::string& q_text, std::ostream& out) {
    const SeifertMatrix base = json::to_matrix(parse_json(read_file(path), path), path);
    std::vector<Integer> q = q_text.empty() ? default_twists(n) : parse_q_list(q_text);
    const FamilyReport family = generate_family(base, n, q);
    auto [checks, cert] = verify_family_subsets(base, q, file_stem(path), file_stem(path) + "_ext");
    Json j{{"base", json::from_matrix(base)}, {"n", n}};
    Json qj = Json::array();
    for (const auto& x : q) qj.push_back(json::from_integer(x));
    j["q"] = qj;
    const Json fj = json::from_family(family, checks);
    for (const auto& [k, v] : fj.items()) j[k] = v;
    j["adjacency_certificate"] = json::from_adjacency(cert);
    const KnotReport member = report_from_matrix("member", family.member);
    j["bound"] = json::from_bound(bound_check(n, member.genus));
    emit(j, "extend", ctx.opts, out);
    const bool good = family.alexander_equal && family.signature_equal && family.determinant_equal &&
                      family.reduction_replays && cert.verdict == Verdict::pass;
    return good ? ok : verification_failed;
}

inline int cmd_verify(Context& ctx, const std::string& path, std::ostream& out) {
    const Json j = parse_json(read_file(path), path);
    const std::string base_name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "K";
    const Json& base_j = json::field(j, "base", path);
    PlanarDiagram base = ctx.diagram_for(base_j, path + "/base");
    std::vector<TwistSite> sites;
    const Json& sites_j = json::field(j, "twist_sites", path);
    if (!sites_j.is_array()) throw input_error(path + "/twist_sites: expected an array");
    for (std::size_t k = 0; k < sites_j.size(); ++k) {
        const std::string w = path + "/twist_sites/" + std::to_string(k);
        TwistSite s;
        s.q = json::to_int(json::field(sites_j[k], "q", w), w + "/q");
        const Json& cr = json::field(sites_j[k], "crossings", w);
        if (!cr.is_array()) throw input_error(w + "/crossings: expected an array");
        for (std::size_t i = 0; i < cr.size(); ++i) {
            const int x = json::to_int(cr[i], w + "/crossings/" + std::to_string(i));
            if (x < 1) throw input_error(w + "/crossings/" + std::to_string(i) + ": crossings are numbered from 1");
            s.crossings.push_back(static_cast<std::size_t>(x - 1));
        }
        sites.push_back(std::move(s));
    }
    base = base.with_sites(std::move(sites));

    const Json& target_j = json::field(j, "target", path);
    AdjacencyPresentation p;
    p.base_name = base_name;
    p.base = base;
    p.n = json::to_int(json::field(j, "n", path), path + "/n");
    std::optional<KnotReport> target_report;
    if (target_j.is_object() && target_j.contains("alexander")) {
        const std::string w = path + "/target";
        p.target.name = target_j.value("name", std::string("target"));
        p.target.alexander = normalize(json::to_poly(target_j["alexander"], w + "/alexander"));
        if (target_j.contains("jones")) p.target.jones = json::to_poly(target_j["jones"], w + "/jones");
        p.target.determinant = target_j.contains("determinant")
                                   ? json::to_integer(target_j["determinant"], w + "/determinant")
                                   : determinant_of(p.target.alexander);
    } else {
        std::string tname = target_j.is_string() ? target_j.get<std::string>() : "target";
        if (target_j.is_object() && target_j.contains("name")) tname = target_j["name"].get<std::string>();
        const PlanarDiagram td = ctx.diagram_for(target_j, path + "/target");
        p.target = target_from_diagram(tname, td, ctx.opts.max_crossings);
        target_report = report_from_pd(tname, td, ctx.hints_for(target_j).value_or(TableHints{}), ctx.opts.max_crossings);
    }
    const AdjacencyCertificate cert = verify_adjacency(p, ctx.opts.max_crossings);
    Json out_j = json::from_adjacency(cert);
    if (target_report) {
        const KnotReport base_report = report_from_pd(base_name, base, {}, ctx.opts.max_crossings);
        out_j["fibering_verdict"] = json::from_verdict(fibering_verdict(base_report, *target_report, cert));
    }
    emit(out_j, "verify", ctx.opts, out);
    return cert.verdict == Verdict::pass ? ok : verification_failed;
}

inline int cmd_reduce(Context& ctx, const std::string& path, int sites_count, std::ostream& out) {
    const Json j = parse_json(read_file(path), path);
    const SeifertMatrix v = json::to_matrix(j, path);
    Json out_j{{"input", json::from_matrix(v)}};
    MoveCertificate cert;
    if (j.contains("certificate")) {
        cert = json::to_certificate(j["certificate"], path + "/certificate");
        out_j["source"] = "supplied certificate";
    } else {
        std::optional<std::size_t> count;
        if (sites_count > 0) count = static_cast<std::size_t>(sites_count);
        const auto sites = detect_extension_sites(v, count);
        Json sj = Json::array();
        for (auto s : sites) sj.push_back(s + 1);
        out_j["sites"] = sj;
        cert = reduce_extension(v, sites);
        out_j["source"] = "block reduction";
    }
    const SeifertMatrix result = replay(v, cert);
    out_j["certificate"] = json::from_certificate(cert);
    out_j["result"] = json::from_matrix(result);
    const bool invariants_equal = abelian_invariants(v) == abelian_invariants(result);
    out_j["invariants_preserved"] = invariants_equal;
    bool good = invariants_equal;
    if (j.contains("expect")) {
        const bool match = json::to_matrix(j["expect"], path + "/expect") == result;
        out_j["matches_expected"] = match;
        good = good && match;
    }
    emit(out_j, "reduce", ctx.opts, out);
    return good ? ok : verification_failed;
}

inline int cmd_bracket(Context& ctx, int n, const std::string& knot, const std::string& target,
                       const std::string& slope, std::ostream& out) {
    const auto slash = slope.find('/');
    if (slash == std::string::npos) throw input_error("--slope: expected a/b");
    const std::string m = parse_surgery_label(knot + "@" + slope).label();
    const std::string y = parse_surgery_label(target + "@" + slope).label();
    const CollapseResult c = collapse_adjacent(m, n, y);
    Json j{{"n", n},
           {"M", m},
           {"Y", y},
           {"bracket", to_string(c.sum)},
           {"coefficients", json::from_formal_sum(c.sum)},
           {"binomial_sum", json::from_integer(c.binomial_sum)},
           {"matches_expansion", c.matches_expansion},
           {"provenance", c.provenance}};
    emit(j, "bracket", ctx.opts, out);
    return c.matches_expansion ? ok : verification_failed;
}

inline int cmd_table(Context& ctx, const std::string& path, std::ostream& out) {
    const auto table = load_table(path);
    Json knots = Json::array();
    Json failures = Json::array();
    for (const auto& e : table) {
        try {
            const KnotReport r = report_from_braid(e.name, e.braid(), TableHints{e.fibered, e.genus}, ctx.opts.max_crossings);
            Json rj = json::from_report(r);
            rj["alpha"] = json::from_alpha(alpha_and_symplectic(r, {}));
            knots.push_back(rj);
            if (!ctx.opts.out_dir.empty()) {
                std::ostringstream sink;
                emit(rj, e.name, ctx.opts, sink);
            }
        } catch (const error& err) {
            failures.push_back(Json{{"name", e.name}, {"line", e.line}, {"error", err.what()}});
        }
    }
    Json j{{"knots", knots},
           {"summary",
            Json{{"count", table.size()},
                 {"oracles_agree", table.size() - failures.size()},
                 {"failures", failures}}}};
    emit(j, "table", ctx.opts, out);
    return failures.empty() ? ok : verification_failed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"knot invariants, adjacency certificates and fibering obstructions", "knotadj"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opts;
    app.add_option("--max-crossings", opts.max_crossings, "state-sum crossing cap")->capture_default_str();
    app.add_option("--out", opts.out_dir, "directory for persisted JSON");
    app.add_option("--table", opts.table_path, "knot table CSV")->capture_default_str();

    std::string input, name, path, q_text, knot = "K", target = "K'", slope = "0/1";
    int n = 0;
    int sites = 0;

    auto* inv = app.add_subcommand("invariants", "report for a braid, PD code, table knot or matrix file");
    inv->add_option("input", input, "braid text, PD text, table name, or file")->required();
    inv->add_option("--name", name, "report identifier");

    auto* ext = app.add_subcommand("extend", "block-extended family with certificates");
    ext->add_option("matrix", path, "Seifert matrix JSON")->required()->check(CLI::ExistingFile);
    ext->add_option("--n", n, "number of twist sites")->required()->check(CLI::PositiveNumber);
    ext->add_option("--q", q_text, "twist parameters q1,q2,... (default 2,...,2)");

    auto* ver = app.add_subcommand("verify", "check an adjacency presentation");
    ver->add_option("presentation", path, "presentation JSON")->required()->check(CLI::ExistingFile);

    auto* red = app.add_subcommand("reduce", "reduce a block extension or replay a certificate");
    red->add_option("matrix", path, "Seifert matrix JSON")->required()->check(CLI::ExistingFile);
    red->add_option("--sites", sites, "number of appended blocks to remove (default: all found)");

    auto* br = app.add_subcommand("bracket", "collapse identity for an n-component bracket");
    br->add_option("--n", n, "number of link components")->required()->check(CLI::PositiveNumber);
    br->add_option("--knot", knot, "knot label")->capture_default_str();
    br->add_option("--target", target, "target knot label")->capture_default_str();
    br->add_option("--slope", slope, "surgery slope a/b")->capture_default_str();

    auto* tab = app.add_subcommand("table", "batch reports and oracle cross-check");
    tab->add_option("csv", path, "knot table CSV")->required()->check(CLI::ExistingFile);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }

    detail::Context ctx(opts);
    try {
        if (*inv) return detail::cmd_invariants(ctx, input, name, out);
        if (*ext) return detail::cmd_extend(ctx, path, n, q_text, out);
        if (*ver) return detail::cmd_verify(ctx, path, out);
        if (*red) return detail::cmd_reduce(ctx, path, sites, out);
        if (*br) return detail::cmd_bracket(ctx, n, knot, target, slope, out);
        if (*tab) return detail::cmd_table(ctx, path, out);
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const invariant_violation& e) {
        err << "internal check failed: " << e.what() << "\n";
        return verification_failed;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
    return bad_input;
}

}  // namespace knotadj::cli
