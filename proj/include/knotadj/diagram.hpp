#pragma once

// Planar diagrams in PD notation.
//
// A crossing X[a,b,c,d] lists its four arc labels counterclockwise, starting
// from the incoming under-strand; the under-strand runs a -> c. The direction
// of the over-strand is recovered by walking the knot. Twist sites mark ladders
// of crossings that can be changed together.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "laurent.hpp"
#include "matrix.hpp"

namespace knotadj {

struct Crossing {
    std::array<int, 4> arcs{};
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct TwistSite {
    std::vector<std::size_t> crossings;  // 0-based, in ladder order
    int q = 0;
    friend bool operator==(const TwistSite&, const TwistSite&) = default;
};

class PlanarDiagram {
   public:
    PlanarDiagram() = default;

    /// Validates structure and orientation; throws input_error naming the problem.
    explicit PlanarDiagram(std::vector<Crossing> crossings, std::vector<TwistSite> sites = {})
        : crossings_(std::move(crossings)), sites_(std::move(sites)) {
        analyze();
        for (std::size_t k = 0; k < sites_.size(); ++k) check_site(k);
    }

    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    const std::vector<TwistSite>& twist_sites() const noexcept { return sites_; }

    /// +1 when the over-strand runs from slot d to slot b, else -1.
    int sign(std::size_t x) const { return over_in_[x] == 3 ? 1 : -1; }
    int writhe() const {
        int w = 0;
        for (std::size_t x = 0; x < crossings_.size(); ++x) w += sign(x);
        return w;
    }
    /// True when the arc in slot s of crossing x leaves x.
    bool is_outgoing(std::size_t x, int s) const {
        if (s == 0) return false;
        if (s == 2) return true;
        return s != over_in_[x];
    }

    PlanarDiagram with_sites(std::vector<TwistSite> sites) const { return PlanarDiagram(crossings_, std::move(sites)); }

    /// Same diagram with arcs renumbered 1..2c along the orientation, starting
    /// from the arc with the smallest label.
    PlanarDiagram canonical() const {
        if (crossings_.empty()) return *this;
        std::map<int, int> relabel;
        int label = std::min_element(occurrences_.begin(), occurrences_.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; })
                        ->first;
        for (int next = 1; relabel.size() < occurrences_.size(); ++next) {
            relabel[label] = next;
            label = successor(label);
        }
        std::vector<Crossing> out = crossings_;
        for (auto& c : out)
            for (auto& a : c.arcs) a = relabel.at(a);
        return PlanarDiagram(std::move(out), sites_);
    }

    friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
        return a.crossings_ == b.crossings_ && a.sites_ == b.sites_;
    }

   private:
    struct Slot {
        std::size_t crossing;
        int slot;
    };

    /// The arc that follows `label` along the orientation.
    int successor(int label) const {
        const auto& occ = occurrences_.at(label);
        const Slot in = is_outgoing(occ[0].crossing, occ[0].slot) ? occ[1] : occ[0];
        const auto& arcs = crossings_[in.crossing].arcs;
        if (in.slot == 0) return arcs[2];
        return arcs[in.slot == 1 ? 3 : 1];
    }

    void analyze() {
        occurrences_.clear();
        for (std::size_t x = 0; x < crossings_.size(); ++x)
            for (int s = 0; s < 4; ++s) {
                const int a = crossings_[x].arcs[s];
                if (a <= 0) throw input_error("arc labels must be positive, got " + std::to_string(a));
                occurrences_[a].push_back({x, s});
            }
        for (const auto& [a, occ] : occurrences_)
            if (occ.size() != 2)
                throw input_error("arc " + std::to_string(a) + " occurs " + std::to_string(occ.size()) +
                                  " times, expected 2");
        over_in_.assign(crossings_.size(), 0);
        // Propagate in/out along arcs from the known under-strand slots.
        std::vector<std::size_t> work;
        for (std::size_t x = 0; x < crossings_.size(); ++x) work.push_back(x);
        auto slot_dir = [&](const Slot& sl) -> int {  // +1 out, -1 in, 0 unknown
            if (sl.slot == 0) return -1;
            if (sl.slot == 2) return 1;
            if (over_in_[sl.crossing] == 0) return 0;
            return sl.slot == over_in_[sl.crossing] ? -1 : 1;
        };
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [a, occ] : occurrences_) {
                const int d0 = slot_dir(occ[0]);
                const int d1 = slot_dir(occ[1]);
                if (d0 != 0 && d1 != 0) {
                    if (d0 == d1) throw input_error("inconsistent orientation at arc " + std::to_string(a));
                    continue;
                }
                if (d0 == 0 && d1 == 0) continue;
                const Slot& unknown = d0 == 0 ? occ[0] : occ[1];
                const int want = -(d0 == 0 ? d1 : d0);
                // want == -1: this slot is incoming over.
                over_in_[unknown.crossing] = want == -1 ? unknown.slot : (unknown.slot == 1 ? 3 : 1);
                changed = true;
            }
        }
        for (std::size_t x = 0; x < crossings_.size(); ++x)
            if (over_in_[x] == 0)
                throw input_error("diagram has more than one component (crossing " + std::to_string(x + 1) +
                                  " is not reached)");
        // One component: walking from any arc visits every arc.
        if (!crossings_.empty()) {
            const int start = occurrences_.begin()->first;
            std::size_t steps = 0;
            int cur = start;
            do {
                cur = successor(cur);
                ++steps;
            } while (cur != start && steps <= occurrences_.size());
            if (steps != occurrences_.size()) throw input_error("diagram has more than one component");
            if (face_count() != crossings_.size() + 2) throw input_error("diagram is not planar");
        }
    }

    std::size_t face_count() const;
    void check_site(std::size_t k) const;

    friend std::vector<std::size_t> face_of_corner(const PlanarDiagram& d);

    std::vector<Crossing> crossings_;
    std::vector<TwistSite> sites_;
    std::vector<int> over_in_;
    std::map<int, std::vector<Slot>> occurrences_;

    friend struct DiagramAccess;
};

struct DiagramAccess {
    static const auto& occurrences(const PlanarDiagram& d) { return d.occurrences_; }
};

/// Face index of each corner; corner (x, j) lies between slots j and j+1 of x.
/// Result is indexed 4*x + j.
inline std::vector<std::size_t> face_of_corner(const PlanarDiagram& d) {
    const std::size_t darts = 4 * d.crossings_.size();
    std::vector<std::size_t> other(darts);
    for (const auto& [a, occ] : d.occurrences_) {
        other[4 * occ[0].crossing + occ[0].slot] = 4 * occ[1].crossing + occ[1].slot;
        other[4 * occ[1].crossing + occ[1].slot] = 4 * occ[0].crossing + occ[0].slot;
    }
    auto rotate = [](std::size_t dart) { return dart - dart % 4 + (dart % 4 + 1) % 4; };
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> face_of_dart(darts, unset);
    std::size_t faces = 0;
    for (std::size_t start = 0; start < darts; ++start) {
        if (face_of_dart[start] != unset) continue;
        std::size_t cur = start;
        do {
            face_of_dart[cur] = faces;
            cur = rotate(other[cur]);
        } while (cur != start);
        ++faces;
    }
    std::vector<std::size_t> corner(darts);
    for (std::size_t dart = 0; dart < darts; ++dart) corner[dart] = face_of_dart[rotate(dart)];
    return corner;
}

inline std::size_t PlanarDiagram::face_count() const {
    const auto corners = face_of_corner(*this);
    return std::set<std::size_t>(corners.begin(), corners.end()).size();
}

inline void PlanarDiagram::check_site(std::size_t k) const {
    const TwistSite& site = sites_[k];
    auto fail = [&](const std::string& why) {
        throw input_error("malformed twist site " + std::to_string(k + 1) + ": " + why);
    };
    const std::size_t len = static_cast<std::size_t>(site.q < 0 ? -site.q : site.q);
    if (site.crossings.size() != len) fail("expected |q| = " + std::to_string(len) + " crossings");
    std::set<std::size_t> seen;
    for (std::size_t x : site.crossings) {
        if (x >= crossings_.size()) fail("crossing " + std::to_string(x + 1) + " does not exist");
        if (!seen.insert(x).second) fail("crossing " + std::to_string(x + 1) + " listed twice");
        if (sign(x) != (site.q > 0 ? 1 : -1)) fail("crossing " + std::to_string(x + 1) + " has the wrong sign");
    }
    for (std::size_t i = 0; i + 1 < site.crossings.size(); ++i) {
        const std::size_t x = site.crossings[i];
        const std::size_t y = site.crossings[i + 1];
        int forward = 0;
        int backward = 0;
        for (int s = 0; s < 4; ++s) {
            const int a = crossings_[x].arcs[s];
            const auto& occ = occurrences_.at(a);
            const Slot& far = (occ[0].crossing == x && occ[0].slot == s) ? occ[1] : occ[0];
            if (far.crossing != y || far.crossing == x) continue;
            (is_outgoing(x, s) ? forward : backward)++;
        }
        if (forward != 1 || backward != 1)
            fail("crossings " + std::to_string(x + 1) + " and " + std::to_string(y + 1) +
                 " are not joined by an antiparallel bigon");
    }
}

/// Parses "X[a,b,c,d] X[...] ..."; whitespace and commas between crossings are ignored.
inline PlanarDiagram parse_pd(std::string_view text, std::vector<TwistSite> sites = {}) {
    std::vector<Crossing> crossings;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    auto fail = [&](const std::string& msg) {
        throw input_error("PD parse error at offset " + std::to_string(pos) + ": " + msg);
    };
    skip();
    if (text.substr(pos, 3) == "PD[") {
        pos += 3;
        const auto close = text.rfind(']');
        if (close == std::string_view::npos || close < pos) fail("unterminated PD[");
        text = text.substr(0, close);
    }
    while (true) {
        skip();
        if (pos >= text.size()) break;
        if (text[pos] != 'X') fail("expected 'X['");
        ++pos;
        if (pos >= text.size() || text[pos] != '[') fail("expected '['");
        ++pos;
        Crossing c;
        for (int s = 0; s < 4; ++s) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            const std::size_t start = pos;
            if (pos < text.size() && text[pos] == '-') ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected an arc label");
            c.arcs[s] = std::stoi(std::string(text.substr(start, pos - start)));
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            const char want = s == 3 ? ']' : ',';
            if (pos >= text.size() || text[pos] != want) fail(std::string("expected '") + want + "'");
            ++pos;
        }
        crossings.push_back(c);
    }
    return PlanarDiagram(std::move(crossings), std::move(sites));
}

inline std::string to_pd_string(const PlanarDiagram& d) {
    std::string out;
    for (const auto& c : d.crossings()) {
        if (!out.empty()) out += ' ';
        out += "X[" + std::to_string(c.arcs[0]) + "," + std::to_string(c.arcs[1]) + "," + std::to_string(c.arcs[2]) +
               "," + std::to_string(c.arcs[3]) + "]";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kauffman bracket and Jones polynomial

struct JonesPoly {
    LaurentPoly poly;     // (-A^3)^(-writhe) <D>, variable A
    LaurentPoly bracket;  // raw <D> with <unknot> = 1
    int writhe = 0;
    friend bool operator==(const JonesPoly& a, const JonesPoly& b) { return a.poly == b.poly; }
};

/// State-sum cap used when callers do not pass one.
inline constexpr std::size_t default_max_crossings = 24;

/// Raw Kauffman bracket: sum over all 2^c smoothings of A^(#A - #B) d^(loops - 1),
/// with d = -A^2 - A^-2. The A-smoothing of X[a,b,c,d] joins (a,b) and (c,d).
inline LaurentPoly kauffman_bracket(const PlanarDiagram& d, std::size_t max_crossings = default_max_crossings) {
    const std::size_t c = d.crossing_count();
    if (c > max_crossings)
        throw input_error("diagram has " + std::to_string(c) + " crossings, above the state-sum cap of " +
                          std::to_string(max_crossings) + " (raise it with --max-crossings)");
    if (c == 0) return LaurentPoly(1);
    // Arc labels -> dense indices.
    std::map<int, int> index;
    for (const auto& x : d.crossings())
        for (int a : x.arcs) index.try_emplace(a, static_cast<int>(index.size()));
    const int arcs = static_cast<int>(index.size());
    std::vector<std::array<int, 4>> slots(c);
    for (std::size_t x = 0; x < c; ++x)
        for (int s = 0; s < 4; ++s) slots[x][s] = index.at(d.crossings()[x].arcs[s]);

    // counts[a * (c + 2) + loops]: number of states with `a` A-smoothings and `loops` loops.
    const std::size_t stride = c + 2;
    const std::uint64_t states = std::uint64_t{1} << c;
    const unsigned workers =
        static_cast<unsigned>(std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, states >> 10 | 1));
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>((c + 1) * stride, 0));
    auto run = [&](unsigned w) {
        std::vector<int> parent(arcs);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (std::uint64_t state = w; state < states; state += workers) {
            std::iota(parent.begin(), parent.end(), 0);
            int loops = arcs;
            auto join = [&](int u, int v) {
                u = find(u);
                v = find(v);
                if (u != v) {
                    parent[u] = v;
                    --loops;
                }
            };
            int a_count = 0;
            for (std::size_t x = 0; x < c; ++x) {
                const auto& s = slots[x];
                if (state >> x & 1) {
                    ++a_count;
                    join(s[0], s[1]);
                    join(s[2], s[3]);
                } else {
                    join(s[0], s[3]);
                    join(s[1], s[2]);
                }
            }
            ++partial[w][static_cast<std::size_t>(a_count) * stride + static_cast<std::size_t>(loops)];
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
        run(0);
    }
    const LaurentPoly loop = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    std::vector<LaurentPoly> loop_powers{LaurentPoly(1)};
    for (std::size_t k = 1; k < stride; ++k) loop_powers.push_back(loop_powers.back() * loop);
    LaurentPoly result;
    for (std::size_t a = 0; a <= c; ++a)
        for (std::size_t l = 1; l < stride; ++l) {
            std::uint64_t n = 0;
            for (const auto& p : partial) n += p[a * stride + l];
            if (n == 0) continue;
            const int exponent = static_cast<int>(a) - static_cast<int>(c - a);
            result += LaurentPoly::monomial(Integer(n), exponent) * loop_powers[l - 1];
        }
    return result;
}

inline JonesPoly kauffman_jones(const PlanarDiagram& d, std::size_t max_crossings = default_max_crossings) {
    JonesPoly j;
    j.bracket = kauffman_bracket(d, max_crossings);
    j.writhe = d.writhe();
    // (-A^3)^(-w) = (-1)^w A^(-3w)
    const Integer unit_sign = (j.writhe % 2 == 0) ? 1 : -1;
    j.poly = j.bracket * LaurentPoly::monomial(unit_sign, -3 * j.writhe);
    return j;
}

// ---------------------------------------------------------------------------
// Alexander polynomial by the region method

/// Crossing-by-region matrix with two adjacent region columns deleted.
///
/// Around each crossing the corners get, counterclockwise from the corner
/// between slots a and b: 1, -1, t, -t. The t entries sit left of the
/// under-strand.
inline LaurentPoly alexander_from_pd(const PlanarDiagram& d) {
    const std::size_t c = d.crossing_count();
    if (c == 0) return LaurentPoly(1);
    const auto corner = face_of_corner(d);
    const std::size_t faces = c + 2;
    const std::array<LaurentPoly, 4> weight{LaurentPoly(1), LaurentPoly(-1), LaurentPoly::monomial(1, 1),
                                            LaurentPoly::monomial(-1, 1)};
    LaurentMatrix full(c, faces);
    for (std::size_t x = 0; x < c; ++x)
        for (int j = 0; j < 4; ++j) full(x, corner[4 * x + j]) += weight[j];
    // The two regions on either side of the arc in slot a of crossing 1.
    const std::size_t drop1 = corner[3];
    const std::size_t drop2 = corner[0];
    if (drop1 == drop2) throw invariant_violation("region method: arc bounds a single region");
    LaurentMatrix square(c, c);
    for (std::size_t x = 0; x < c; ++x) {
        std::size_t col = 0;
        for (std::size_t f = 0; f < faces; ++f) {
            if (f == drop1 || f == drop2) continue;
            square(x, col++) = full(x, f);
        }
    }
    const LaurentPoly det = determinant(std::move(square));
    if (det.is_zero()) throw invariant_violation("region method: vanishing determinant");
    return normalize(det);
}

// ---------------------------------------------------------------------------
// Generalized crossing changes

/// Reverses a crossing in place: the over-strand becomes the under-strand.
inline Crossing reversed(const Crossing& c, int sign) {
    const auto& a = c.arcs;
    // Positive: over runs d -> b, so the new incoming under slot is d.
    if (sign > 0) return Crossing{{a[3], a[0], a[1], a[2]}};
    return Crossing{{a[1], a[2], a[3], a[0]}};
}

/// Changes every crossing of every selected site (0-based indices) at once.
/// The selected sites are dropped and the remaining ones keep their order.
inline PlanarDiagram apply_twist_subset(const PlanarDiagram& d, const std::set<std::size_t>& selected) {
    if (selected.empty()) throw input_error("apply_twist_subset: empty site subset");
    std::vector<Crossing> crossings = d.crossings();
    std::vector<TwistSite> remaining;
    for (std::size_t k = 0; k < d.twist_sites().size(); ++k) {
        const TwistSite& site = d.twist_sites()[k];
        if (!selected.count(k)) {
            remaining.push_back(site);
            continue;
        }
        for (std::size_t x : site.crossings) crossings[x] = reversed(crossings[x], d.sign(x));
    }
    for (std::size_t k : selected)
        if (k >= d.twist_sites().size()) throw input_error("apply_twist_subset: no twist site " + std::to_string(k + 1));
    return PlanarDiagram(std::move(crossings), std::move(remaining));
}

/// Appends a positive or negative curl on the arc with the given label.
inline PlanarDiagram add_kink(const PlanarDiagram& d, int arc, int sign) {
    const auto& occ = DiagramAccess::occurrences(d);
    auto it = occ.find(arc);
    if (it == occ.end()) throw input_error("add_kink: no arc " + std::to_string(arc));
    int fresh = occ.rbegin()->first;
    const int loop = ++fresh;
    const int tail = ++fresh;
    // The arc now ends at the curl; `tail` continues to the old endpoint.
    std::vector<Crossing> crossings = d.crossings();
    const auto& ends = it->second;
    const auto& end = d.is_outgoing(ends[0].crossing, ends[0].slot) ? ends[1] : ends[0];
    crossings[end.crossing].arcs[end.slot] = tail;
    // The curl crossing: the strand enters as `arc`, runs once around `loop`, leaves as `tail`.
    if (sign > 0)
        crossings.push_back(Crossing{{arc, tail, loop, loop}});
    else
        crossings.push_back(Crossing{{arc, loop, loop, tail}});
    return PlanarDiagram(std::move(crossings), d.twist_sites());
}

}  // namespace knotadj
