#include "akh/criteria.hpp"

#include <stdexcept>

namespace akh {

namespace {

LaurentPoly f_factor_block(int m, int r, int i, int j) {
    // prod_{k=1-r}^{r-1} (u_i q^k - u_j)
    LaurentPoly out = LaurentPoly::constant(1, m);
    for (int k = 1 - r; k <= r - 1; ++k) {
        LaurentPoly f = LaurentPoly::u_var(i, m) * LaurentPoly::q_power(k, m)
                        - LaurentPoly::u_var(j, m);
        out = out * f;
    }
    return out;
}

} // namespace

LaurentPoly f_poly(int m, int r, int i) {
    if (i < 1 || i > m) throw std::invalid_argument("f_poly: index out of range");
    LaurentPoly out = LaurentPoly::constant(1, m);
    for (int j = 1; j <= m; ++j)
        if (j != i) out = out * f_factor_block(m, r, i, j);
    return out;
}

LaurentPoly f_poly(int m, int r) {
    LaurentPoly out = LaurentPoly::constant(1, m);
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j <= m; ++j) out = out * f_factor_block(m, r, i, j);
    return out;
}

LaurentPoly poincare_sym(int r, int num_u) {
    if (r < 1) throw std::invalid_argument("poincare_sym: r must be >= 1");
    LaurentPoly out = LaurentPoly::zero(num_u);
    for (const auto& w : all_permutations(r))
        out = out + LaurentPoly::q_power(w.length(), num_u);
    return out;
}

LaurentPoly poincare_sym_product(int r, int num_u) {
    LaurentPoly out = LaurentPoly::constant(1, num_u);
    for (int i = 1; i <= r; ++i) {
        LaurentPoly f = LaurentPoly::zero(num_u);
        for (int k = 0; k < i; ++k) f = f + LaurentPoly::q_power(k, num_u);
        out = out * f;
    }
    return out;
}

LaurentPoly d_w_poly(int m, int r) {
    return f_poly(m, r) * poincare_sym(r, m);
}

long morita_target_dim(int m, int r) {
    // iterate compositions of r into m parts via cumulative interior entries
    long total = 0;
    auto fact = [](int n) {
        long f = 1;
        for (int k = 2; k <= n; ++k) f *= k;
        return f;
    };
    std::vector<int> a(m - 1, 0);
    while (true) {
        bool mono = true;
        for (size_t i = 1; i < a.size(); ++i) mono = mono && a[i - 1] <= a[i];
        if (mono && (a.empty() || a.back() <= r)) {
            long prod = 1;
            int prev = 0;
            for (size_t i = 0; i < a.size(); ++i) {
                prod *= fact(a[i] - prev);
                prev = a[i];
            }
            prod *= fact(r - prev);
            total += prod;
        }
        int i = static_cast<int>(a.size()) - 1;
        while (i >= 0 && a[i] == r) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
    }
    return total;
}

Specialization<Rational> generic_spec(int m) {
    static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
    if (m > 8) throw std::invalid_argument("generic_spec: m too large");
    std::vector<Rational> u;
    for (int i = 0; i < m; ++i) u.emplace_back(primes[i]);
    return Specialization<Rational>(Rational(2), std::move(u));
}

std::vector<SpecPoint> criteria_grid(int m) {
    auto us = [m](std::initializer_list<Rational> head) {
        std::vector<Rational> u(head);
        static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
        for (int i = static_cast<int>(u.size()); i < m; ++i) u.emplace_back(primes[i]);
        u.resize(m);
        return u;
    };
    std::vector<SpecPoint> grid;
    grid.push_back({"generic-q2", generic_spec(m)});
    grid.push_back({"generic-q3", Specialization<Rational>(Rational(3), us({2, 5, 11}))});
    grid.push_back({"group-algebra-q1", Specialization<Rational>(Rational(1), us({1, 3, 9}))});
    grid.push_back({"root-of-unity-qm1", Specialization<Rational>(Rational(-1), us({1, 3, 9}))});
    grid.push_back({"root-of-unity-qm1-generic-u",
                    Specialization<Rational>(Rational(-1), us({2, 5, 7}))});
    grid.push_back({"collision-u1-qu2", Specialization<Rational>(Rational(2), us({6, 3, 7}))});
    grid.push_back({"collision-u2-qu1", Specialization<Rational>(Rational(2), us({1, 2, 9}))});
    grid.push_back({"collision-u2-q2u1", Specialization<Rational>(Rational(2), us({3, 12, 5}))});
    grid.push_back({"collision-equal-u", Specialization<Rational>(Rational(2), us({3, 3, 5}))});
    grid.push_back({"fractional-q-collision",
                    Specialization<Rational>(Rational(1, 2), us({1, Rational(1, 4), 5}))});
    grid.push_back({"root-of-unity-collision",
                    Specialization<Rational>(Rational(-1), us({2, -2, 5}))});
    return grid;
}

bool gram_nondegenerate(const Context<Rational>& ctx) {
    const auto& keys = ctx.basis();
    int n = static_cast<int>(keys.size());
    // left-regular matrices, column k of reg[j] = coordinates of b_j * b_k
    std::vector<std::vector<Rational>> reg(n, std::vector<Rational>(static_cast<size_t>(n) * n, Rational(0)));
    for (int j = 0; j < n; ++j) {
        Element<Rational> bj = Element<Rational>::of_key(ctx, keys[j]);
        for (int k = 0; k < n; ++k) {
            Element<Rational> p = mul(bj, Element<Rational>::of_key(ctx, keys[k]));
            for (const auto& [key, coeff] : p.terms())
                reg[j][static_cast<size_t>(ctx.basis_index(key)) * n + k] = coeff;
        }
    }
    ExactMatrix<Rational> gram(n, n, Rational(0));
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            Rational t(0);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    t += reg[x][static_cast<size_t>(i) * n + k] * reg[y][static_cast<size_t>(k) * n + i];
            gram.at(x, y) = t;
            gram.at(y, x) = t;
        }
    }
    return rank(gram) == n;
}

} // namespace akh
