#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "akh/laurent.hpp"
#include "akh/specialization.hpp"

using namespace akh;

namespace {

LaurentPoly u(int i) { return LaurentPoly::u_var(i, 2); }
LaurentPoly qp(int k) { return LaurentPoly::q_power(k, 2); }
LaurentPoly c(int n) { return LaurentPoly::constant(n, 2); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4), eq(-2, 2), eu(0, 2), nterms(0, 4);
    LaurentPoly p(2);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t)
        p.add_term({eq(rng), eu(rng), eu(rng)}, coeff(rng));
    return p;
}

} // namespace

TEST_CASE("arithmetic in canonical form") {
    CHECK((u(1) - u(2)) * (u(1) + u(2)) == u(1) * u(1) - u(2) * u(2));
    CHECK((u(1) * qp(-1) + c(7)) * LaurentPoly::zero(2) == LaurentPoly::zero(2));
    CHECK(qp(-1) * qp(1) == c(1));
    CHECK(qp(3) * qp(-2) == qp(1));
}

TEST_CASE("is_zero detects exact cancellation") {
    CHECK(is_zero(u(1) - u(1)));
    CHECK_FALSE(is_zero(u(1) - u(2)));
    CHECK_FALSE(is_zero(qp(1) - c(1)));
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        LaurentPoly p = random_poly(rng);
        CHECK(is_zero(p - p));
    }
}

TEST_CASE("unit monomials and exact unit division") {
    CHECK(qp(5).is_unit_monomial());
    CHECK((-qp(-3)).is_unit_monomial());
    CHECK_FALSE(u(1).is_unit_monomial());
    CHECK_FALSE((qp(1) + c(1)).is_unit_monomial());
    LaurentPoly p = u(1) * qp(2) - u(2) * qp(1);
    CHECK(p.div_unit(qp(2)) == u(1) - u(2) * qp(-1));
    CHECK(p.div_unit(-qp(0)) == -p);
    CHECK_THROWS(p.div_unit(u(1)));
}

TEST_CASE("pow") {
    CHECK((u(1) + u(2)).pow(2) == u(1) * u(1) + c(2) * u(1) * u(2) + u(2) * u(2));
    CHECK(qp(-1).pow(3) == qp(-3));
    CHECK(u(1).pow(0) == c(1));
}

TEST_CASE("specialization values") {
    Specialization<Rational> s11(Rational(2), {Rational(1), Rational(3)});
    CHECK(specialize(u(1) - u(2), s11) == Rational(-2));
    CHECK(specialize(qp(-1), s11) == Rational(1, 2));

    // (u1 q^-1 - u2)(u1 - u2)(u1 q - u2) at q=1, u=(1,3)
    Specialization<Rational> s1(Rational(1), {Rational(1), Rational(3)});
    LaurentPoly f = (u(1) * qp(-1) - u(2)) * (u(1) - u(2)) * (u(1) * qp(1) - u(2));
    CHECK(specialize(f, s1) == Rational(-8));
}

TEST_CASE("specialize is a ring homomorphism") {
    std::mt19937 rng(11);
    std::vector<Specialization<Rational>> specs = {
        Specialization<Rational>(Rational(2), {Rational(1), Rational(3)}),
        Specialization<Rational>(Rational(-1), {Rational(2, 3), Rational(5)}),
        Specialization<Rational>(Rational(1, 2), {Rational(-4), Rational(7, 2)})};
    for (int t = 0; t < 60; ++t) {
        LaurentPoly p = random_poly(rng), r = random_poly(rng);
        for (const auto& s : specs) {
            CHECK(specialize(p + r, s) == specialize(p, s) + specialize(r, s));
            CHECK(specialize(p * r, s) == specialize(p, s) * specialize(r, s));
        }
    }
}

TEST_CASE("text round-trip") {
    LaurentPoly p(3);
    p.add_term({-2, 2, 0, 1}, -3);
    p.add_term({0, 0, 0, 0}, 1);
    CHECK(p.str() == "-3*q^-2*u1^2*u3 + 1");
    CHECK(LaurentPoly::parse(p.str(), 3) == p);
    CHECK(LaurentPoly::parse("0", 2) == LaurentPoly::zero(2));
    std::mt19937 rng(13);
    for (int t = 0; t < 50; ++t) {
        LaurentPoly r = random_poly(rng);
        CHECK(LaurentPoly::parse(r.str(), 2) == r);
    }
}

TEST_CASE("mismatched variable counts are rejected") {
    CHECK_THROWS(LaurentPoly::u_var(1, 2) + LaurentPoly::u_var(1, 3));
}

TEST_CASE("quantum characteristic") {
    Specialization<Rational> sq1(Rational(1), {Rational(1)});
    CHECK_FALSE(sq1.quantum_characteristic().has_value());
    Specialization<Rational> sqm1(Rational(-1), {Rational(1)});
    CHECK(sqm1.quantum_characteristic() == 2);
    // 1 + 2 + 4 = 7 = 0 in F_7
    Specialization<Fp> sf(Fp(2, 7), {Fp(1, 7)});
    CHECK(sf.quantum_characteristic() == 3);
}

TEST_CASE("prime field arithmetic") {
    Fp a(3, 7), b(5, 7);
    CHECK((a * b).value() == 1);
    CHECK((a + b).value() == 1);
    CHECK((-a).value() == 4);
    CHECK(a.inverse().value() == 5);
    CHECK((a * a.inverse()).value() == 1);
    CHECK_THROWS(Fp(0, 7).inverse());
    CHECK_THROWS(Fp(1, 7) + Fp(1, 5));
    // default-constructed zero adopts the other operand's modulus
    Fp z;
    CHECK((z + a).value() == 3);
    CHECK((z * a).value() == 0);
}
