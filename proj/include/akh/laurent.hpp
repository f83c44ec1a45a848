#ifndef AKH_LAURENT_HPP
#define AKH_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "akh/scalars.hpp"

namespace akh {

/// Exact polynomial with integer coefficients in u_1..u_m, Laurent in q.
/// Held canonically: the term map stores no zero coefficients, so two values
/// are equal iff their maps are equal.
///
/// A monomial exponent is [e_q, e_{u_1}, ..., e_{u_m}] with e_q possibly
/// negative and the u-exponents non-negative (u-variables are never inverted).
class LaurentPoly {
public:
    using Mono = std::vector<int>;

    explicit LaurentPoly(int num_u = 0) : num_u_(num_u) {}

    static LaurentPoly zero(int num_u) { return LaurentPoly(num_u); }
    static LaurentPoly constant(Int c, int num_u);
    static LaurentPoly q_power(int k, int num_u);
    static LaurentPoly u_var(int i, int num_u);  // 1-based

    int num_u() const { return num_u_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Int>& terms() const { return terms_; }

    /// True iff the value is +/- q^k (a unit of the coefficient ring).
    bool is_unit_monomial() const;

    void add_term(const Mono& mono, const Int& coeff);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.num_u_ == b.num_u_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(unsigned k) const;

    /// Exact division by +/- q^k. Throws if the divisor is not such a unit.
    LaurentPoly div_unit(const LaurentPoly& unit) const;

    std::string str() const;

    /// Parses the text syntax used by the CLI and JSON payloads,
    /// e.g. "-3*q^-2*u1^2*u3 + 1".
    static LaurentPoly parse(const std::string& text, int num_u);

private:
    void check_compatible(const LaurentPoly& o) const;

    int num_u_;
    std::map<Mono, Int> terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline std::string scalar_str(const LaurentPoly& p) { return p.str(); }

} // namespace akh

#endif
