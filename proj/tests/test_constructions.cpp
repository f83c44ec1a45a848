#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akh/constructions.hpp"
#include "akh/criteria.hpp"

using namespace akh;

namespace {

using SymEl = Element<LaurentPoly>;
using RatEl = Element<Rational>;

} // namespace

TEST_CASE("pi products") {
    auto cp = make_symbolic_context(2, 2);
    auto& ctx = *cp;
    SymEl one = SymEl::one(ctx);
    SymEl l1 = jucys_murphy(ctx, 1);

    CHECK(pi_of(ctx, CumComposition({0, 1, 2})) == l1 - one.scaled(ctx.u(2)));
    CHECK(pi_of(ctx, CumComposition({0, 0, 2})) == one);
    // pi_a = pi_{a-|} when a_{m-1} != r
    CumComposition a({0, 1, 2});
    auto cp3 = make_symbolic_context(2, 3);
    CHECK(pi_of(*cp3, CumComposition({0, 1, 3})) ==
          pi_of(*cp3, CumComposition({0, 1, 2})));
}

TEST_CASE("v_a hand oracles") {
    auto cp = make_symbolic_context(2, 1);
    auto& ctx = *cp;
    SymEl one = SymEl::one(ctx);
    SymEl l1 = jucys_murphy(ctx, 1);
    CHECK(v_elem(ctx, CumComposition({0, 1, 1})) == l1 - one.scaled(ctx.u(2)));
    CHECK(v_elem(ctx, CumComposition({0, 0, 1})) == l1 - one.scaled(ctx.u(1)));

    auto cp2 = make_symbolic_context(2, 2);
    auto& ctx2 = *cp2;
    SymEl one2 = SymEl::one(ctx2);
    SymEl p = jucys_murphy(ctx2, 1) - one2.scaled(ctx2.u(2));
    SymEl q = jucys_murphy(ctx2, 1) - one2.scaled(ctx2.u(1));
    CHECK(v_elem(ctx2, CumComposition({0, 1, 2})) ==
          mul(mul(p, generator(ctx2, 1)), q));
}

TEST_CASE("coordinates in the v_a T_w basis") {
    auto cp = make_symbolic_context(2, 2);
    auto& ctx = *cp;
    CumComposition a({0, 1, 2});
    SymEl va = v_elem(ctx, a);

    auto c0 = va_coordinates(ctx, a, va);
    REQUIRE(c0.in_span);
    REQUIRE(c0.coords.size() == 1);
    CHECK(c0.coords.begin()->first.is_identity());
    CHECK(c0.coords.begin()->second == LaurentPoly::constant(1, 2));

    for (const auto& w : all_permutations(2)) {
        SymEl x = mul(va, t_elem(ctx, w));
        auto co = va_coordinates(ctx, a, x, &va);
        REQUIRE(co.in_span);
        SymEl back(&ctx);
        for (const auto& [u, c] : co.coords) back += mul(va, t_elem(ctx, u)).scaled(c);
        CHECK(back == x);
    }

    auto bad = va_coordinates(ctx, a, generator(ctx, 0), &va);
    CHECK_FALSE(bad.in_span);
}

TEST_CASE("z pair oracles") {
    auto cp = make_symbolic_context(2, 1);
    auto& ctx = *cp;
    SymEl expect = SymEl::one(ctx).scaled(ctx.u(1) - ctx.u(2));
    auto zs = z_pair(ctx, CumComposition({0, 1, 1}));
    CHECK(zs.z_prime == expect);
    CHECK(zs.z == expect);
    CHECK(z_formula_ri(ctx, 1) == expect);

    auto cp2 = make_symbolic_context(2, 2);
    auto& ctx2 = *cp2;
    for (int i = 1; i <= 2; ++i) {
        auto ri = ri_comp(2, 2, i);
        CHECK(z_pair(ctx2, ri).z_prime == z_formula_ri(ctx2, i));
    }
}

TEST_CASE("centrality of the z pair") {
    auto cp = make_symbolic_context(2, 2);
    auto& ctx = *cp;
    for (const auto& a : enumerate_lambda(2, 2)) {
        auto zs = z_pair(ctx, a);
        CHECK(subalgebra_membership(zs.z_prime, a.prime()));
        CHECK(subalgebra_membership(zs.z, a));
        CHECK(commutes_with_subalgebra(zs.z_prime, a.prime()));
        CHECK(commutes_with_subalgebra(zs.z, a));
    }
}

TEST_CASE("inversion inside the parabolic subalgebra") {
    Specialization<Rational> spec(Rational(2), {Rational(1), Rational(3)});
    auto cp = make_specialized_context(2, 1, spec);
    auto& ctx = *cp;
    CumComposition a({0, 1, 1});
    RatEl z = RatEl::one(ctx).scaled(Rational(-2));  // u1 - u2 at (1,3)
    auto y = invert_in_subalgebra(ctx, z, a);
    REQUIRE(y.has_value());
    CHECK(*y == RatEl::one(ctx).scaled(Rational(-1, 2)));
    CHECK(*invert_in_subalgebra(ctx, RatEl::one(ctx), a) == RatEl::one(ctx));

    // u1 = q*u2 kills f_{2,2,1}: z_{r_1'} becomes singular
    Specialization<Rational> bad(Rational(2), {Rational(6), Rational(3)});
    auto cb = make_specialized_context(2, 2, bad);
    auto ri = ri_comp(2, 2, 1);
    auto zs = z_pair(*cb, ri);
    CHECK_FALSE(invert_in_subalgebra(*cb, zs.z_prime, ri.prime()).has_value());
    CHECK(specialize(f_poly(2, 2, 1), bad) == 0);
}

TEST_CASE("idempotents at m=2, r=1") {
    Specialization<Rational> spec(Rational(2), {Rational(1), Rational(3)});
    auto cp = make_specialized_context(2, 1, spec);
    auto& ctx = *cp;
    RatEl one = RatEl::one(ctx);
    RatEl l1 = jucys_murphy(ctx, 1);

    auto e1 = idempotent_e(ctx, CumComposition({0, 1, 1}));
    REQUIRE(e1.has_value());
    CHECK(*e1 == (l1 - one.scaled(Rational(3))).scaled(Rational(-1, 2)));
    CHECK(mul(*e1, *e1) == *e1);

    auto e2 = idempotent_e(ctx, CumComposition({0, 0, 1}));
    REQUIRE(e2.has_value());
    CHECK(*e1 + *e2 == one);
    CHECK(mul(*e1, *e2).is_zero());

    CHECK(epsilon(ctx) == one);
}

TEST_CASE("idempotents at the generic specialization") {
    auto cp = make_specialized_context(2, 2, generic_spec(2));
    auto& ctx = *cp;
    std::vector<RatEl> es;
    for (const auto& a : enumerate_lambda(2, 2)) {
        auto e = idempotent_e(ctx, a);
        REQUIRE(e.has_value());
        CHECK(mul(*e, *e) == *e);
        es.push_back(*e);
    }
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j)
            if (i != j) CHECK(mul(es[i], es[j]).is_zero());
    RatEl eps = epsilon(ctx);
    CHECK(mul(eps, eps) == eps);

    // m=1 degenerate: epsilon = 1
    auto c1 = make_specialized_context(1, 2, Specialization<Rational>(
        Rational(2), {Rational(3)}));
    CHECK(epsilon(*c1) == RatEl::one(*c1));
}

TEST_CASE("right ideal ranks") {
    auto cp = make_specialized_context(2, 2, generic_spec(2));
    auto& ctx = *cp;
    for (const auto& a : enumerate_lambda(2, 2))
        CHECK(right_ideal(ctx, v_elem(ctx, a)).rank == 2);
    CHECK(right_ideal(ctx, RatEl::one(ctx)).rank == 8);
    CHECK(right_ideal(ctx, RatEl(&ctx)).rank == 0);
}
