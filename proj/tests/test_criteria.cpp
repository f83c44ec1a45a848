#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "akh/criteria.hpp"

using namespace akh;

namespace {

LaurentPoly u(int i, int m) { return LaurentPoly::u_var(i, m); }
LaurentPoly qp(int k, int m) { return LaurentPoly::q_power(k, m); }

} // namespace

TEST_CASE("factor polynomials") {
    CHECK(f_poly(2, 1, 1) == u(1, 2) - u(2, 2));
    CHECK(f_poly(2, 1) == u(1, 2) - u(2, 2));
    CHECK(f_poly(2, 2) == (u(1, 2) * qp(-1, 2) - u(2, 2)) * (u(1, 2) - u(2, 2)) *
                              (u(1, 2) * qp(1, 2) - u(2, 2)));
    CHECK_THROWS(f_poly(2, 2, 3));

    // the k = -1 factor vanishes at u1 = q*u2
    Specialization<Rational> s(Rational(2), {Rational(6), Rational(3)});
    CHECK(specialize(f_poly(2, 2), s) == 0);
    CHECK(specialize(f_poly(3, 2), Specialization<Rational>(
        Rational(2), {Rational(6), Rational(3), Rational(7)})) == 0);
}

TEST_CASE("Poincare polynomial of the symmetric group") {
    CHECK(poincare_sym(1, 2) == LaurentPoly::constant(1, 2));
    CHECK(poincare_sym(2, 2) == LaurentPoly::constant(1, 2) + qp(1, 2));
    LaurentPoly r3 = LaurentPoly::constant(1, 2) + qp(1, 2) * LaurentPoly::constant(2, 2) +
                     qp(2, 2) * LaurentPoly::constant(2, 2) + qp(3, 2);
    CHECK(poincare_sym(3, 2) == r3);
    for (int r = 1; r <= 6; ++r)
        CHECK(poincare_sym(r, 2) == poincare_sym_product(r, 2));
}

TEST_CASE("the semisimplicity discriminant factors") {
    for (auto [m, r] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}})
        CHECK(d_w_poly(m, r) == f_poly(m, r) * poincare_sym(r, m));
}

TEST_CASE("Morita target dimensions") {
    CHECK(morita_target_dim(2, 2) == 5);    // 2! + 1!1! + 2!
    CHECK(morita_target_dim(2, 1) == 2);
    CHECK(morita_target_dim(1, 2) == 2);
    CHECK(morita_target_dim(2, 3) == 16);   // 3! + 2! + 2! + 3!
    CHECK(morita_target_dim(3, 2) == 9);    // 3*2! + 3*1
}

TEST_CASE("generic specialization keeps f nonzero") {
    for (int m = 1; m <= 3; ++m)
        for (int r = 1; r <= 3; ++r)
            CHECK(specialize(f_poly(m, r), generic_spec(m)) != 0);
}

TEST_CASE("the verification grid") {
    for (int m = 2; m <= 3; ++m) {
        auto grid = criteria_grid(m);
        CHECK(grid.size() >= 10);
        std::set<std::string> names;
        for (const auto& pt : grid) {
            CHECK(names.insert(pt.name).second);
            CHECK(pt.spec.num_u() == m);
            CHECK(pt.spec.q_val != 0);
        }
        // the grid mixes collision and root-of-unity points by construction
        bool has_collision = false, has_root = false;
        for (const auto& pt : grid) {
            if (specialize(f_poly(m, 2), pt.spec) == 0) has_collision = true;
            if (pt.spec.quantum_characteristic().has_value()) has_root = true;
        }
        CHECK(has_collision);
        CHECK(has_root);
    }
}

TEST_CASE("trace-form oracle on hand-checkable points") {
    auto run = [](Rational q, Rational u1, Rational u2) {
        Specialization<Rational> s(q, {u1, u2});
        auto ctx = make_specialized_context(2, 2, s);
        bool oracle = gram_nondegenerate(*ctx);
        bool criterion = specialize(d_w_poly(2, 2), s) != 0;
        CHECK(oracle == criterion);
        return oracle;
    };
    CHECK(run(1, 1, 3));          // group algebra, d_W = 2*(-2)^3 != 0
    CHECK_FALSE(run(-1, 1, 3));   // d_{S_2} = 0
    CHECK_FALSE(run(2, 1, 2));    // u2 = q*u1 makes f = 0
}
