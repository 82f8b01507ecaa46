#pragma once

// Knot table CSV: name,strands,word,fibered,genus

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "braid.hpp"

namespace knotadj {

struct TableEntry {
    std::string name;
    int strands = 1;
    std::string word;
    bool fibered = false;
    int genus = 0;
    std::size_t line = 0;

    std::string braid_text() const { return "braid " + std::to_string(strands) + ": " + word; }
    BraidWord braid() const { return parse_braid(braid_text()); }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline int parse_int_field(const std::string& s, const std::string& where, const char* what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw input_error(where + ": " + what + " '" + s + "' is not an integer");
    return v;
}

}  // namespace detail

inline std::vector<TableEntry> parse_table(std::istream& in, const std::string& source = "<table>") {
    std::vector<TableEntry> out;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = source + ":" + std::to_string(lineno);
        const std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> f;
        std::stringstream ss(t);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(detail::trim(cell));
        if (!t.empty() && t.back() == ',') f.emplace_back();
        if (!header) {
            if (f != std::vector<std::string>{"name", "strands", "word", "fibered", "genus"})
                throw input_error(where + ": expected header name,strands,word,fibered,genus");
            header = true;
            continue;
        }
        if (f.size() != 5) throw input_error(where + ": expected 5 fields, got " + std::to_string(f.size()));
        TableEntry e;
        e.name = f[0];
        if (e.name.empty()) throw input_error(where + ": empty name");
        e.strands = detail::parse_int_field(f[1], where, "strands");
        e.word = f[2];
        const int fib = detail::parse_int_field(f[3], where, "fibered");
        if (fib != 0 && fib != 1) throw input_error(where + ": fibered must be 0 or 1");
        e.fibered = fib == 1;
        e.genus = detail::parse_int_field(f[4], where, "genus");
        if (e.genus < 0) throw input_error(where + ": negative genus");
        e.line = lineno;
        try {
            (void)e.braid();
        } catch (const input_error& err) {
            throw input_error(where + ": " + err.what());
        }
        for (const auto& prev : out)
            if (prev.name == e.name) throw input_error(where + ": duplicate knot " + e.name);
        out.push_back(std::move(e));
    }
    if (!header) throw input_error(source + ": empty table");
    return out;
}

inline std::vector<TableEntry> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open table " + path);
    return parse_table(in, path);
}

inline std::optional<TableEntry> find_entry(const std::vector<TableEntry>& table, const std::string& name) {
    for (const auto& e : table)
        if (e.name == name) return e;
    return std::nullopt;
}

}  // namespace knotadj
