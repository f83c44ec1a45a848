#ifndef AKH_SPECIALIZATION_HPP
#define AKH_SPECIALIZATION_HPP

#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "akh/laurent.hpp"
#include "akh/scalars.hpp"

namespace akh {

/// A ring map sending q, u_1..u_m into an exact field F. The quantum
/// characteristic e (least l with 1+q+...+q^{l-1} = 0, or nullopt for
/// infinity) is always derived from q_val, never stored independently.
template <class F>
struct Specialization {
    F q_val;
    std::vector<F> u_vals;

    Specialization(F q, std::vector<F> u) : q_val(std::move(q)), u_vals(std::move(u)) {
        if (is_zero(q_val)) throw std::invalid_argument("specialization: q must be invertible");
    }

    int num_u() const { return static_cast<int>(u_vals.size()); }

    /// Search cap: beyond max_l the characteristic is reported as infinity.
    /// Every grid this artifact runs keeps r well below the default cap.
    std::optional<int> quantum_characteristic(int max_l = 256) const {
        F sum = q_val - q_val;  // zero of the right field
        F qpow = q_val - q_val;
        // sum_{k=0}^{l-1} q^k
        F one = field_inv(q_val) * q_val;
        qpow = one;
        for (int l = 1; l <= max_l; ++l) {
            sum += qpow;
            if (is_zero(sum)) return l;
            qpow *= q_val;
        }
        return std::nullopt;
    }
};

template <class F>
F int_to_field(const Int& n, const F& model);

template <>
inline Rational int_to_field<Rational>(const Int& n, const Rational&) {
    return Rational(n);
}

template <>
inline Fp int_to_field<Fp>(const Int& n, const Fp& model) {
    Int r = n % model.modulus();
    return Fp(static_cast<std::int64_t>(r), model.modulus());
}

/// Evaluation homomorphism: specialize(p*r) = specialize(p)*specialize(r).
template <class F>
F specialize(const LaurentPoly& p, const Specialization<F>& s) {
    if (p.num_u() != s.num_u())
        throw std::invalid_argument("specialize: mismatched number of u-variables");
    F result = s.q_val - s.q_val;
    F q_inv = field_inv(s.q_val);
    for (const auto& [mono, coeff] : p.terms()) {
        F term = int_to_field<F>(coeff, s.q_val);
        int eq = mono[0];
        const F& qbase = eq >= 0 ? s.q_val : q_inv;
        for (int k = 0; k < (eq >= 0 ? eq : -eq); ++k) term *= qbase;
        for (int i = 1; i < static_cast<int>(mono.size()); ++i)
            for (int k = 0; k < mono[i]; ++k) term *= s.u_vals[i - 1];
        result += term;
    }
    return result;
}

} // namespace akh

#endif
