#ifndef AKH_JSON_IO_HPP
#define AKH_JSON_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "akh/algebra.hpp"
#include "akh/scalars.hpp"
#include "akh/specialization.hpp"

namespace akh {

/// Parsed form of the CLI specialization string
/// `q=<rat>,u=[<rat>,...]` with optional `,field=Fp:<prime>`.
struct SpecString {
    bool is_fp = false;
    std::int64_t prime = 0;
    Rational q = Rational(1);
    std::vector<Rational> u;
};

SpecString parse_spec_string(const std::string& text);

Fp rational_to_fp(const Rational& x, std::int64_t p);

Specialization<Rational> to_rational_spec(const SpecString& s);
Specialization<Fp> to_fp_spec(const SpecString& s);

// --- coefficient string round-trips per domain ---

inline LaurentPoly parse_coeff(const std::string& text, const LaurentPoly& model) {
    return LaurentPoly::parse(text, model.num_u());
}
inline Rational parse_coeff(const std::string& text, const Rational&) {
    return parse_rational(text);
}
Fp parse_coeff(const std::string& text, const Fp& model);

template <class C>
nlohmann::json element_to_json(const Element<C>& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coeff] : x.terms()) {
        nlohmann::json t;
        t["c"] = key.c;
        t["w"] = key.w.one_line();
        t["coeff"] = scalar_str(coeff);
        terms.push_back(std::move(t));
    }
    nlohmann::json out;
    out["m"] = x.ctx().m();
    out["r"] = x.ctx().r();
    out["terms"] = std::move(terms);
    return out;
}

template <class C>
Element<C> element_from_json(const Context<C>& ctx, const nlohmann::json& j) {
    if (j.at("m").get<int>() != ctx.m() || j.at("r").get<int>() != ctx.r())
        throw std::invalid_argument("element_from_json: (m, r) mismatch with context");
    Element<C> out(&ctx);
    for (const auto& t : j.at("terms")) {
        std::vector<int> c = t.at("c").get<std::vector<int>>();
        if (static_cast<int>(c.size()) != ctx.r())
            throw std::invalid_argument("element_from_json: exponent vector length");
        for (int e : c)
            if (e < 0 || e >= ctx.m())
                throw std::invalid_argument("element_from_json: exponent out of bounds");
        Permutation w(t.at("w").get<std::vector<int>>());
        if (w.degree() != ctx.r())
            throw std::invalid_argument("element_from_json: permutation degree");
        C coeff = parse_coeff(t.at("coeff").get<std::string>(), ctx.one());
        out.add_term(BasisKey{std::move(c), std::move(w)}, coeff);
    }
    return out;
}

} // namespace akh

#endif
