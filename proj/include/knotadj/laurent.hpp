#pragma once

// Laurent polynomials in one variable with exact coefficients.
//
// Storage is a sparse exponent -> coefficient map. The zero polynomial is the
// empty map and no stored coefficient is ever zero, so structural equality is
// polynomial equality.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace knotadj {

template <class Coeff>
class BasicLaurent {
   public:
    using coefficient_type = Coeff;
    using term_map = std::map<int, Coeff>;

    BasicLaurent() = default;
    BasicLaurent(const Coeff& c) { add_term(0, c); }
    BasicLaurent(int c) : BasicLaurent(Coeff(c)) {}

    static BasicLaurent monomial(const Coeff& c, int exponent) {
        BasicLaurent p;
        p.add_term(exponent, c);
        return p;
    }

    /// Builds c[0] t^lowest + c[1] t^(lowest+1) + ...
    static BasicLaurent from_coefficients(const std::vector<Coeff>& c, int lowest = 0) {
        BasicLaurent p;
        for (std::size_t i = 0; i < c.size(); ++i) p.add_term(lowest + static_cast<int>(i), c[i]);
        return p;
    }

    static BasicLaurent variable() { return monomial(Coeff(1), 1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const term_map& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    int min_exponent() const {
        require_nonzero("min_exponent");
        return terms_.begin()->first;
    }
    int max_exponent() const {
        require_nonzero("max_exponent");
        return terms_.rbegin()->first;
    }
    Coeff lowest_coefficient() const {
        require_nonzero("lowest_coefficient");
        return terms_.begin()->second;
    }
    Coeff leading_coefficient() const {
        require_nonzero("leading_coefficient");
        return terms_.rbegin()->second;
    }

    Coeff coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add_term(int exponent, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Multiplication by t^k.
    BasicLaurent shifted(int k) const {
        BasicLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
        return r;
    }

    /// t -> t^-1
    BasicLaurent reflected() const {
        BasicLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    /// Substitutes t -> t^k for k != 0.
    BasicLaurent substitute_power(int k) const {
        BasicLaurent r;
        for (const auto& [e, c] : terms_) r.add_term(e * k, c);
        return r;
    }

    /// Evaluation at an integer point. Negative exponents are only allowed at x = +-1.
    Coeff evaluate(const Coeff& x) const {
        Coeff sum = 0;
        const bool unit = (x == 1 || x == -1);
        for (const auto& [e, c] : terms_) {
            if (e < 0 && !unit) throw input_error("evaluate: negative exponent at a non-unit point");
            Coeff power = 1;
            for (int i = 0; i < (e < 0 ? -e : e); ++i) power *= x;
            sum += c * power;
        }
        return sum;
    }

    BasicLaurent operator-() const {
        BasicLaurent r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    BasicLaurent& operator+=(const BasicLaurent& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    BasicLaurent& operator-=(const BasicLaurent& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }
    BasicLaurent& operator*=(const BasicLaurent& rhs) { return *this = *this * rhs; }

    friend BasicLaurent operator+(BasicLaurent lhs, const BasicLaurent& rhs) { return lhs += rhs; }
    friend BasicLaurent operator-(BasicLaurent lhs, const BasicLaurent& rhs) { return lhs -= rhs; }
    friend BasicLaurent operator*(const BasicLaurent& lhs, const BasicLaurent& rhs) {
        BasicLaurent r;
        for (const auto& [e1, c1] : lhs.terms_)
            for (const auto& [e2, c2] : rhs.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BasicLaurent& a, const BasicLaurent& b) { return !(a == b); }

    /// Exact quotient in the Laurent ring, or nullopt when divisor does not divide *this.
    std::optional<BasicLaurent> divide_exact(const BasicLaurent& divisor) const {
        if (divisor.is_zero()) return std::nullopt;
        if (is_zero()) return BasicLaurent{};
        // Shift both to lowest exponent 0. The divisor then has a nonzero constant
        // term, so the quotient is an ordinary polynomial.
        const int shift = min_exponent() - divisor.min_exponent();
        BasicLaurent rem = shifted(-min_exponent());
        const BasicLaurent d = divisor.shifted(-divisor.min_exponent());
        const int d_deg = d.max_exponent();
        const Coeff d_lead = d.leading_coefficient();
        BasicLaurent quotient;
        while (!rem.is_zero()) {
            const int deg = rem.max_exponent();
            if (deg < d_deg) return std::nullopt;
            const Coeff lead = rem.leading_coefficient();
            if (lead % d_lead != 0) return std::nullopt;
            const Coeff factor = lead / d_lead;
            const int e = deg - d_deg;
            quotient.add_term(e, factor);
            for (const auto& [de, dc] : d.terms_) rem.add_term(de + e, -factor * dc);
        }
        return quotient.shifted(shift);
    }

   private:
    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw input_error(std::string(what) + ": zero polynomial");
    }

    term_map terms_;
};

using LaurentPoly = BasicLaurent<Integer>;

/// Exact division in the Laurent ring; throws when the quotient is not exact.
inline LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw invariant_violation("inexact Laurent division");
    return *q;
}

inline Integer exact_quotient(const Integer& a, const Integer& b) {
    if (b == 0 || a % b != 0) throw invariant_violation("inexact integer division");
    return a / b;
}

/// Representative of p modulo units +-t^k: lowest exponent 0, positive constant term.
template <class Coeff>
BasicLaurent<Coeff> normalize(const BasicLaurent<Coeff>& p) {
    if (p.is_zero()) throw input_error("no unit normalization");
    BasicLaurent<Coeff> r = p.shifted(-p.min_exponent());
    if (r.lowest_coefficient() < 0) r = -r;
    return r;
}

struct SpanMonic {
    int degree = 0;
    bool monic = false;
    friend bool operator==(const SpanMonic&, const SpanMonic&) = default;
};

template <class Coeff>
SpanMonic span_monic(const BasicLaurent<Coeff>& p) {
    if (p.is_zero()) throw input_error("span_monic: zero polynomial");
    const auto n = normalize(p);
    const Coeff lead = n.leading_coefficient();
    return {p.max_exponent() - p.min_exponent(), lead == 1 || lead == -1};
}

/// Renders "c0 + c1*t + c2*t^2" in ascending exponent order.
template <class Coeff>
std::string to_string(const BasicLaurent<Coeff>& p, char var = 't') {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << var;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

namespace detail {

class PolyLexer {
   public:
    PolyLexer(std::string_view s, char var) : s_(s), var_(var) {}

    LaurentPoly parse() {
        LaurentPoly p;
        skip_ws();
        if (pos_ == s_.size()) throw input_error("polynomial text is empty");
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == s_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Integer coeff = 1;
            bool have_coeff = false;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = read_integer();
                have_coeff = true;
                skip_ws();
            }
            int exponent = 0;
            bool star = false;
            if (pos_ < s_.size() && peek() == '*') {
                get();
                skip_ws();
                star = true;
            }
            if (pos_ < s_.size() && peek() == var_) {
                get();
                exponent = 1;
                skip_ws();
                if (pos_ < s_.size() && peek() == '^') {
                    get();
                    skip_ws();
                    exponent = read_exponent();
                }
            } else if (star || !have_coeff) {
                fail(std::string("expected variable '") + var_ + "'");
            }
            p.add_term(exponent, sign * coeff);
        }
        return p;
    }

   private:
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
    }
    Integer read_integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }
    int read_exponent() {
        bool paren = false;
        if (pos_ < s_.size() && peek() == '(') {
            get();
            paren = true;
        }
        skip_ws();
        int sign = 1;
        if (pos_ < s_.size() && (peek() == '-' || peek() == '+')) sign = get() == '-' ? -1 : 1;
        Integer mag = read_integer();
        if (mag > 1000000) fail("exponent out of range");
        skip_ws();
        if (paren) {
            if (pos_ >= s_.size() || get() != ')') fail("expected ')'");
        }
        return sign * static_cast<int>(mag);
    }

    std::string_view s_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Inverse of to_string; also accepts "t^(-2)" and repeated exponents.
inline LaurentPoly parse_laurent(std::string_view text, char var = 't') {
    return detail::PolyLexer(text, var).parse();
}

}  // namespace knotadj
