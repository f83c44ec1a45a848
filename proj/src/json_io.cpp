#include "akh/json_io.hpp"

#include <stdexcept>

namespace akh {

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

} // namespace

SpecString parse_spec_string(const std::string& text) {
    std::string s = strip_ws(text);
    SpecString out;
    bool have_q = false, have_u = false;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s.compare(pos, 2, "q=") == 0) {
            size_t end = s.find(',', pos);
            if (end == std::string::npos) end = s.size();
            out.q = parse_rational(s.substr(pos + 2, end - pos - 2));
            have_q = true;
            pos = end + (end < s.size() ? 1 : 0);
        } else if (s.compare(pos, 3, "u=[") == 0) {
            size_t end = s.find(']', pos);
            if (end == std::string::npos)
                throw std::invalid_argument("spec string: unterminated u list");
            std::string body = s.substr(pos + 3, end - pos - 3);
            size_t p = 0;
            while (p < body.size()) {
                size_t c = body.find(',', p);
                if (c == std::string::npos) c = body.size();
                out.u.push_back(parse_rational(body.substr(p, c - p)));
                p = c + 1;
            }
            have_u = true;
            pos = end + 1;
            if (pos < s.size() && s[pos] == ',') ++pos;
        } else if (s.compare(pos, 9, "field=Fp:") == 0) {
            size_t end = s.find(',', pos);
            if (end == std::string::npos) end = s.size();
            out.is_fp = true;
            out.prime = std::stoll(s.substr(pos + 9, end - pos - 9));
            if (out.prime <= 1) throw std::invalid_argument("spec string: bad prime");
            pos = end + (end < s.size() ? 1 : 0);
        } else {
            throw std::invalid_argument("spec string: unrecognized clause at '" +
                                        s.substr(pos) + "'");
        }
    }
    if (!have_q || !have_u)
        throw std::invalid_argument("spec string: need q=<rat> and u=[...]");
    if (out.q == 0) throw std::invalid_argument("spec string: q must be nonzero");
    return out;
}

Fp rational_to_fp(const Rational& x, std::int64_t p) {
    Int num = boost::multiprecision::numerator(x) % p;
    Int den = boost::multiprecision::denominator(x) % p;
    Fp d(static_cast<std::int64_t>(den), p);
    if (d.value() == 0) throw std::invalid_argument("rational has no image in Fp");
    return Fp(static_cast<std::int64_t>(num), p) * d.inverse();
}

Specialization<Rational> to_rational_spec(const SpecString& s) {
    if (s.is_fp) throw std::invalid_argument("spec string selects a prime field");
    return Specialization<Rational>(s.q, s.u);
}

Specialization<Fp> to_fp_spec(const SpecString& s) {
    if (!s.is_fp) throw std::invalid_argument("spec string selects the rationals");
    std::vector<Fp> u;
    for (const auto& x : s.u) u.push_back(rational_to_fp(x, s.prime));
    return Specialization<Fp>(rational_to_fp(s.q, s.prime), std::move(u));
}

Fp parse_coeff(const std::string& text, const Fp& model) {
    return rational_to_fp(parse_rational(text), model.modulus());
}

} // namespace akh
