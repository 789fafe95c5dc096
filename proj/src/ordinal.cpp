#include "arbor/ordinal.hpp"

#include "arbor/errors.hpp"

#include <cctype>

namespace arbor {

ordinal ordinal::finite(long long n) {
    if (n < 0) fail(errc::param_out_of_range, "finite ordinal must be >= 0");
    ordinal a;
    if (n > 0) a.terms_.push_back({ordinal(), n});
    return a;
}

ordinal ordinal::omega() { return omega_power(finite(1)); }

ordinal ordinal::from_terms(std::vector<term> terms) {
    ordinal out;
    for (auto& t : terms) {
        if (t.coefficient < 1)
            fail(errc::parse_error, "coefficient must be >= 1");
        if (!out.terms_.empty() &&
            ord_compare(out.terms_.back().exponent, t.exponent) != order::greater)
            fail(errc::parse_error, "exponents must be strictly decreasing");
        out.terms_.push_back(std::move(t));
    }
    return out;
}

ordinal ordinal::omega_power(const ordinal& exponent) {
    ordinal a;
    a.terms_.push_back({exponent, 1});
    return a;
}

bool ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

long long ordinal::finite_value() const {
    if (!is_finite()) fail(errc::invalid_argument, "ordinal is infinite");
    return terms_.empty() ? 0 : terms_[0].coefficient;
}

bool ordinal::operator==(const ordinal& o) const {
    return ord_compare(*this, o) == order::equal;
}

order ord_compare(const ordinal& a, const ordinal& b) {
    std::size_t i = 0;
    for (; i < a.terms_.size() && i < b.terms_.size(); ++i) {
        order e = ord_compare(a.terms_[i].exponent, b.terms_[i].exponent);
        if (e != order::equal) return e;
        if (a.terms_[i].coefficient != b.terms_[i].coefficient)
            return a.terms_[i].coefficient < b.terms_[i].coefficient ? order::less
                                                                     : order::greater;
    }
    if (i < b.terms_.size()) return order::less;
    if (i < a.terms_.size()) return order::greater;
    return order::equal;
}

ordinal ord_add(const ordinal& a, const ordinal& b) {
    if (b.terms_.empty()) return a;
    const ordinal& lead = b.terms_[0].exponent;
    ordinal out;
    // terms of a with exponent below b's leading exponent are absorbed
    std::size_t i = 0;
    while (i < a.terms_.size() &&
           ord_compare(a.terms_[i].exponent, lead) == order::greater) {
        out.terms_.push_back(a.terms_[i]);
        ++i;
    }
    std::size_t j = 0;
    if (i < a.terms_.size() &&
        ord_compare(a.terms_[i].exponent, lead) == order::equal) {
        out.terms_.push_back(
            {lead, a.terms_[i].coefficient + b.terms_[0].coefficient});
        j = 1;
    }
    for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
    return out;
}

bool is_indecomposable(const ordinal& a) {
    if (a.is_zero()) fail(errc::param_out_of_range, "is_indecomposable: a = 0");
    return a.terms().size() == 1 && a.terms()[0].coefficient == 1;
}

ordinal pigeonhole_goal(const ordinal& xi, long long m) {
    if (xi.is_zero())
        fail(errc::param_out_of_range, "pigeonhole_goal: xi must be >= 1");
    if (m < 1) fail(errc::param_out_of_range, "pigeonhole_goal: m must be >= 1");
    if (xi.is_finite()) return ordinal::finite((xi.finite_value() - 1) * m + 1);
    return ordinal::omega_power(xi);
}

bool verify_pigeonhole_finite(long long rho, long long xi, long long m) {
    return rho > (xi - 1) * m;
}

namespace {

struct parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(errc::parse_error, "expected integer in ordinal");
        return std::stoll(s.substr(start, pos - start));
    }

    // atom := "w" | int | "(" sum ")"
    ordinal atom() {
        if (eat('(')) {
            ordinal inner = sum();
            if (!eat(')')) fail(errc::parse_error, "missing ')' in ordinal");
            return inner;
        }
        if (peek() == 'w') {
            ++pos;
            return ordinal::omega();
        }
        return ordinal::finite(integer());
    }

    // term := "w" ["^" atom] ["*" int] | int
    ordinal::term term() {
        if (peek() == 'w') {
            ++pos;
            ordinal exponent = ordinal::finite(1);
            if (eat('^')) exponent = atom();
            long long coef = 1;
            if (eat('*')) coef = integer();
            if (coef < 1) fail(errc::parse_error, "coefficient must be >= 1");
            return {exponent, coef};
        }
        long long n = integer();
        return {ordinal::zero(), n};
    }

    ordinal sum() {
        std::vector<ordinal::term> terms;
        terms.push_back(term());
        while (eat('+')) terms.push_back(term());

        // "0" only as the whole ordinal
        if (terms.size() == 1 && terms[0].exponent.is_zero() &&
            terms[0].coefficient == 0)
            return ordinal::zero();

        return ordinal::from_terms(std::move(terms));
    }
};

// exponents print bare when unambiguous (a digit string or plain "w")
bool exponent_needs_parens(const ordinal& e) {
    if (e.is_finite()) return false;
    const auto& ts = e.terms();
    return !(ts.size() == 1 && ts[0].coefficient == 1 && ts[0].exponent == ordinal::finite(1));
}

} // namespace

ordinal parse_ordinal(const std::string& text) {
    parser p(text);
    ordinal out = p.sum();
    p.skip_ws();
    if (p.pos != text.size()) fail(errc::parse_error, "trailing characters in ordinal");
    return out;
}

std::string format_ordinal(const ordinal& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : a.terms()) {
        if (!first) out += " + ";
        first = false;
        if (t.exponent.is_zero()) {
            out += std::to_string(t.coefficient);
            continue;
        }
        out += "w";
        if (t.exponent != ordinal::finite(1)) {
            out += "^";
            if (exponent_needs_parens(t.exponent))
                out += "(" + format_ordinal(t.exponent) + ")";
            else
                out += format_ordinal(t.exponent);
        }
        if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
    }
    return out;
}

} // namespace arbor
