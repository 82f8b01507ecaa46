#pragma once

// Formal surgery brackets. Manifolds are labels only; the algebra is exact.

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adjacency.hpp"
#include "integer.hpp"

namespace knotadj {

/// s-surgery on a knot, s = a/b reduced with b > 0. Label "knot@a/b".
struct SurgeryDescriptor {
    std::string knot;
    long long a = 0;
    long long b = 1;

    SurgeryDescriptor() = default;
    SurgeryDescriptor(std::string k, long long num, long long den) : knot(std::move(k)) {
        if (knot.empty() || knot.find('@') != std::string::npos)
            throw input_error("surgery descriptor: bad knot name '" + knot + "'");
        if (den == 0) throw input_error("surgery descriptor: slope 1/0 gives back S^3 and is excluded");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num, den);
        a = num / g;
        b = den / g;
    }

    std::string label() const { return knot + "@" + std::to_string(a) + "/" + std::to_string(b); }
    friend bool operator==(const SurgeryDescriptor&, const SurgeryDescriptor&) = default;
};

inline SurgeryDescriptor parse_surgery_label(const std::string& label) {
    const auto at = label.rfind('@');
    const auto slash = label.find('/', at == std::string::npos ? 0 : at);
    if (at == std::string::npos || slash == std::string::npos)
        throw input_error("surgery label '" + label + "' is not of the form knot@a/b");
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string sa = label.substr(at + 1, slash - at - 1);
        const std::string sb = label.substr(slash + 1);
        const long long a = std::stoll(sa, &used_a);
        const long long b = std::stoll(sb, &used_b);
        if (used_a != sa.size() || used_b != sb.size()) throw std::invalid_argument("trailing text");
        return SurgeryDescriptor(label.substr(0, at), a, b);
    } catch (const std::logic_error&) {
        throw input_error("surgery label '" + label + "' has a malformed slope");
    }
}

/// Link in a 3-manifold with the data the bracket needs.
struct AdmissibleLinkModel {
    struct Component {
        int framing = 1;
        bool null_homologous = true;
    };
    std::vector<Component> components;
    std::vector<std::vector<int>> linking;  // symmetric; diagonal ignored

    static AdmissibleLinkModel unlinked(std::size_t n, int framing = -1) {
        AdmissibleLinkModel m;
        m.components.assign(n, Component{framing, true});
        m.linking.assign(n, std::vector<int>(n, 0));
        return m;
    }
    std::size_t size() const { return components.size(); }
};

inline void validate(const AdmissibleLinkModel& l) {
    const std::size_t n = l.size();
    if (l.linking.size() != n) throw input_error("link model: linking matrix has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = l.components[i];
        if (c.framing != 1 && c.framing != -1)
            throw input_error("link model: component " + std::to_string(i + 1) + " has framing " +
                              std::to_string(c.framing) + ", expected +1 or -1");
        if (!c.null_homologous)
            throw input_error("link model: component " + std::to_string(i + 1) + " is not null-homologous");
        if (l.linking[i].size() != n) throw input_error("link model: linking matrix has wrong size");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (l.linking[i][j] != l.linking[j][i]) throw input_error("link model: linking matrix is not symmetric");
            if (l.linking[i][j] != 0)
                throw input_error("link model: components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " have linking number " + std::to_string(l.linking[i][j]));
        }
    }
}

/// Integer combination of labels; no zero coefficients, label order is canonical.
class FormalSum {
   public:
    FormalSum() = default;
    static FormalSum of(const std::string& label, const Integer& c = 1) {
        FormalSum s;
        s.add(label, c);
        return s;
    }

    void add(const std::string& label, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(label, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    const std::map<std::string, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const std::string& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? Integer(0) : it->second;
    }
    Integer coefficient_sum() const {
        Integer s = 0;
        for (const auto& [l, c] : terms_) s += c;
        return s;
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [l, c] : o.terms_) add(l, c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) {
        for (const auto& [l, c] : b.terms_) a.add(l, -c);
        return a;
    }
    friend FormalSum operator*(const Integer& k, const FormalSum& s) {
        FormalSum r;
        for (const auto& [l, c] : s.terms_) r.add(l, k * c);
        return r;
    }
    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    /// Applies f linearly; f must be defined on every label present.
    template <class R, class F>
    R evaluate(F&& f) const {
        R total = R(0);
        for (const auto& [l, c] : terms_) total = total + static_cast<R>(c) * f(l);
        return total;
    }

   private:
    std::map<std::string, Integer> terms_;
};

/// "M - 2*Y" style rendering: positive terms first, each group in label order.
inline std::string to_string(const FormalSum& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& [l, c] : s.terms()) {
            if ((c > 0) != (pass == 0)) continue;
            const Integer mag = c < 0 ? Integer(-c) : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (mag != 1) os << mag << '*';
            os << l;
        }
    return os.str();
}

using Sublink = std::set<std::size_t>;  // 1-based component indices

inline std::string to_string(const Sublink& s) {
    std::string out = "{";
    bool first = true;
    for (auto i : s) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(i);
    }
    return out + "}";
}

/// Sum over sublinks L' of (-1)^#L' times the label of surgery on L'.
inline FormalSum bracket_expand(const std::string& m, const AdmissibleLinkModel& link,
                                const std::map<Sublink, std::string>& result_of) {
    validate(link);
    const std::size_t n = link.size();
    if (n >= 63) throw input_error("bracket_expand: link too large");
    if (auto it = result_of.find(Sublink{}); it != result_of.end() && it->second != m)
        throw input_error("bracket_expand: the empty sublink must give " + m + ", not " + it->second);
    FormalSum sum;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Sublink s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.insert(i + 1);
        std::string label = m;
        if (!s.empty()) {
            auto it = result_of.find(s);
            if (it == result_of.end()) throw input_error("bracket_expand: no surgery result for sublink " + to_string(s));
            label = it->second;
        }
        sum.add(label, s.size() % 2 == 0 ? 1 : -1);
    }
    return sum;
}

/// sum_{k=1}^{n} (-1)^k C(n,k)
inline Integer alternating_binomial_sum(int n) {
    Integer sum = 0;
    Integer binom = 1;
    for (int k = 1; k <= n; ++k) {
        binom = binom * (n - k + 1) / k;
        sum += (k % 2 == 0) ? binom : Integer(-binom);
    }
    return sum;
}

struct CollapseResult {
    FormalSum sum;
    Integer binomial_sum = 0;
    bool matches_expansion = false;
    std::string provenance;
};

/// When every nonempty sublink surgery gives Y, the bracket collapses to M - Y.
/// The geometric fact that it does is an input, optionally tied to an adjacency
/// certificate.
inline CollapseResult collapse_adjacent(const std::string& m, int n, const std::string& y,
                                        const AdjacencyCertificate* cert = nullptr) {
    if (n < 1) throw input_error("collapse_adjacent: n must be positive");
    if (n > 62) throw input_error("collapse_adjacent: n too large for the explicit expansion");
    CollapseResult r;
    r.sum = FormalSum::of(m) - FormalSum::of(y);
    r.binomial_sum = alternating_binomial_sum(n);
    if (r.binomial_sum != -1) throw invariant_violation("alternating binomial sum is not -1");
    std::map<Sublink, std::string> constant;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Sublink s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.insert(static_cast<std::size_t>(i) + 1);
        constant.emplace(std::move(s), y);
    }
    r.matches_expansion =
        bracket_expand(m, AdmissibleLinkModel::unlinked(static_cast<std::size_t>(n)), constant) == r.sum;
    if (!r.matches_expansion) throw invariant_violation("collapsed bracket differs from the full expansion");
    if (cert) {
        if (cert->verdict != Verdict::pass)
            throw input_error("collapse_adjacent: certificate " + cert->id() + " is not PASS");
        if (cert->n != n)
            throw input_error("collapse_adjacent: certificate has n = " + std::to_string(cert->n) + ", expected " +
                              std::to_string(n));
        r.provenance = "sublink surgeries identified with " + y + " by adjacency certificate " + cert->id();
    } else {
        r.provenance = "sublink surgeries identified with " + y + " by assertion";
    }
    return r;
}

/// Checks the step f([M, L]) = 0 => f(M) = f(Y) for an assignment f of ring
/// values to labels, under the hypothesis that f annihilates n-component brackets.
template <class R>
bool vanishing_check(const std::map<std::string, R>& f, const std::string& m, int n, const std::string& y) {
    auto value = [&](const std::string& label) -> const R& {
        auto it = f.find(label);
        if (it == f.end()) throw input_error("vanishing_check: f is not defined on " + label);
        return it->second;
    };
    const CollapseResult c = collapse_adjacent(m, n, y);
    const R bracket = c.sum.evaluate<R>(value);
    if (!(bracket == value(m) - value(y))) return false;
    return bracket == R(0);
}

}  // namespace knotadj
