#include "akh/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace akh {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num, den);
}

LaurentPoly LaurentPoly::constant(Int c, int num_u) {
    LaurentPoly p(num_u);
    p.add_term(Mono(num_u + 1, 0), c);
    return p;
}

LaurentPoly LaurentPoly::q_power(int k, int num_u) {
    LaurentPoly p(num_u);
    Mono mono(num_u + 1, 0);
    mono[0] = k;
    p.add_term(mono, 1);
    return p;
}

LaurentPoly LaurentPoly::u_var(int i, int num_u) {
    if (i < 1 || i > num_u) throw std::invalid_argument("u index out of range");
    LaurentPoly p(num_u);
    Mono mono(num_u + 1, 0);
    mono[i] = 1;
    p.add_term(mono, 1);
    return p;
}

void LaurentPoly::add_term(const Mono& mono, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (num_u_ != o.num_u_)
        throw std::invalid_argument("LaurentPoly: mismatched number of u-variables");
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly out = a;
    for (const auto& [mono, c] : b.terms_) out.add_term(mono, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly out = a;
    for (const auto& [mono, c] : b.terms_) out.add_term(mono, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly out(a.num_u_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            LaurentPoly::Mono mono(ma.size());
            for (size_t i = 0; i < ma.size(); ++i) mono[i] = ma[i] + mb[i];
            out.add_term(mono, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(num_u_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly out = constant(1, num_u_);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

bool LaurentPoly::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const auto& [mono, c] = *terms_.begin();
    if (c != 1 && c != -1) return false;
    for (size_t i = 1; i < mono.size(); ++i)
        if (mono[i] != 0) return false;
    return true;
}

LaurentPoly LaurentPoly::div_unit(const LaurentPoly& unit) const {
    check_compatible(unit);
    if (!unit.is_unit_monomial())
        throw std::domain_error("LaurentPoly: divisor is not +/-q^k");
    const auto& [umono, uc] = *unit.terms_.begin();
    LaurentPoly out(num_u_);
    for (const auto& [mono, c] : terms_) {
        Mono m = mono;
        m[0] -= umono[0];
        out.terms_.emplace(m, uc == 1 ? c : -c);
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        Int coeff = c;
        if (first) {
            if (coeff < 0) { os << "-"; coeff = -coeff; }
        } else {
            if (coeff < 0) { os << " - "; coeff = -coeff; }
            else os << " + ";
        }
        bool any_var = mono[0] != 0;
        for (size_t i = 1; i < mono.size(); ++i) any_var = any_var || mono[i] != 0;
        bool printed = false;
        if (coeff != 1 || !any_var) {
            os << coeff.str();
            printed = true;
        }
        if (mono[0] != 0) {
            if (printed) os << "*";
            os << "q";
            if (mono[0] != 1) os << "^" << mono[0];
            printed = true;
        }
        for (size_t i = 1; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (printed) os << "*";
            os << "u" << i;
            if (mono[i] != 1) os << "^" << mono[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return s[pos]; }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    }

    Int parse_bigint() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }

    // factor := integer | q[^k] | uN[^k]
    void parse_factor(Int& coeff, LaurentPoly::Mono& mono, int num_u) {
        skip_ws();
        if (pos >= s.size()) fail("expected factor");
        char c = s[pos];
        if (c == 'q') {
            ++pos;
            int k = 1;
            if (pos < s.size() && s[pos] == '^') { ++pos; k = parse_int(); }
            mono[0] += k;
        } else if (c == 'u') {
            ++pos;
            int idx = parse_int();
            if (idx < 1 || idx > num_u) fail("u index out of range");
            int k = 1;
            if (pos < s.size() && s[pos] == '^') { ++pos; k = parse_int(); }
            if (k < 0) fail("negative u exponent");
            mono[idx] += k;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= parse_bigint();
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    LaurentPoly parse_poly(int num_u) {
        LaurentPoly out(num_u);
        while (!eof()) {
            Int sign = 1;
            skip_ws();
            if (s[pos] == '+') { ++pos; }
            else if (s[pos] == '-') { sign = -1; ++pos; }
            else if (!out.is_zero() || pos > 0) {
                // first term may omit the sign
                if (out.terms().empty() && pos == 0) { /* leading term */ }
            }
            Int coeff = sign;
            LaurentPoly::Mono mono(num_u + 1, 0);
            parse_factor(coeff, mono, num_u);
            while (!eof() && peek() == '*') {
                ++pos;
                parse_factor(coeff, mono, num_u);
            }
            out.add_term(mono, coeff);
            skip_ws();
            if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
                fail("expected '+' or '-' between terms");
        }
        return out;
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, int num_u) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("empty polynomial text");
    return p.parse_poly(num_u);
}

} // namespace akh
