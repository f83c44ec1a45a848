#ifndef AKH_SCALARS_HPP
#define AKH_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace akh {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Prime-field residue with runtime modulus. A default-constructed value is
/// the zero of an unspecified field and adopts the modulus of the other
/// operand on first use (this makes accumulation into containers safe).
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t v, std::int64_t p) : p_(p) {
        if (p <= 1) throw std::invalid_argument("Fp: modulus must be a prime > 1");
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::int64_t p = join(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::int64_t p = join(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ - b.v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::int64_t p = join(a, b);
        if (p == 0) return Fp();
        // widen: the product of two residues can exceed 2^63 for large p
        auto wide = static_cast<__int128>(a.v_) * static_cast<__int128>(b.v_);
        return Fp(static_cast<std::int64_t>(wide % p), p);
    }
    Fp operator-() const { return p_ == 0 ? Fp() : Fp(-v_, p_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        join(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t t = a / b;
            a -= t * b; std::swap(a, b);
            x0 -= t * x1; std::swap(x0, x1);
        }
        if (a != 1) throw std::domain_error("Fp: modulus not prime");
        return Fp(x0, p_);
    }

    std::string str() const { return std::to_string(v_); }

private:
    static std::int64_t join(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw std::invalid_argument("Fp: mixed moduli");
        return a.p_ != 0 ? a.p_ : b.p_;
    }
    std::int64_t v_;
    std::int64_t p_;
};

// Uniform field interface used by the templated engine.
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Fp& x) { return x.value() == 0; }

inline Rational field_inv(const Rational& x) {
    if (x == 0) throw std::domain_error("inverse of zero");
    return 1 / x;
}
inline Fp field_inv(const Fp& x) { return x.inverse(); }

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const Fp& x) { return x.str(); }

/// Parse "p" or "p/q" into an exact rational.
Rational parse_rational(const std::string& s);

} // namespace akh

#endif
