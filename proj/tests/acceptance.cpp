// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure. Everything runs through the same library code as the CLI.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "akh/constructions.hpp"
#include "akh/criteria.hpp"
#include "akh/verify.hpp"

using namespace akh;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, double secs,
            const std::string& detail = "") {
    std::printf("criterion %2d: %s  %s (%.1fs)%s\n", idx, ok ? "PASS" : "FAIL",
                what.c_str(), secs, detail.empty() ? "" : ("  [" + detail + "]").c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double now() {
    using clock = std::chrono::steady_clock;
    static const auto start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

bool run_suites(const std::vector<std::string>& ids,
                const std::vector<std::pair<int, int>>& grid, std::string& detail) {
    bool ok = true;
    for (const auto& id : ids) {
        for (auto [m, r] : grid) {
            Report rep = run_verify(id, m, r, "");
            if (!rep.ok()) {
                ok = false;
                for (const auto& it : rep.items)
                    if (!it.ok && detail.empty())
                        detail = id + " (" + std::to_string(m) + "," + std::to_string(r) +
                                 "): " + it.name;
            }
        }
    }
    return ok;
}

// left-regular representation of x: column j holds coordinates of x * b_j
ExactMatrix<Rational> regular(const Context<Rational>& ctx, const Element<Rational>& x) {
    const auto& keys = ctx.basis();
    int n = static_cast<int>(keys.size());
    ExactMatrix<Rational> m(n, n, Rational(0));
    for (int j = 0; j < n; ++j) {
        Element<Rational> col = mul(x, Element<Rational>::of_key(ctx, keys[j]));
        for (const auto& [key, coeff] : col.terms())
            m.at(ctx.basis_index(key), j) = coeff;
    }
    return m;
}

ExactMatrix<Rational> mat_mul(const ExactMatrix<Rational>& a, const ExactMatrix<Rational>& b) {
    ExactMatrix<Rational> out(a.rows(), b.cols(), Rational(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return out;
}

bool engine_faithfulness(int m, int r, std::string& detail) {
    auto cp = make_specialized_context(m, r, generic_spec(m));
    auto& ctx = *cp;
    const auto& keys = ctx.basis();
    int n = static_cast<int>(keys.size());

    std::vector<ExactMatrix<Rational>> gen;
    for (int i = 0; i < r; ++i) gen.push_back(regular(ctx, generator(ctx, i)));
    ExactMatrix<Rational> id(n, n, Rational(0));
    for (int i = 0; i < n; ++i) id.at(i, i) = 1;
    auto scaled = [&](const ExactMatrix<Rational>& a, const Rational& s) {
        ExactMatrix<Rational> out = a;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.at(i, j) = out.at(i, j) * s;
        return out;
    };
    auto minus = [&](const ExactMatrix<Rational>& a, const ExactMatrix<Rational>& b) {
        ExactMatrix<Rational> out = a;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.at(i, j) = out.at(i, j) - b.at(i, j);
        return out;
    };
    auto is_zero_mat = [&](const ExactMatrix<Rational>& a) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!is_zero(a.at(i, j))) return false;
        return true;
    };

    // the defining relations, as matrix identities
    for (int i = 1; i < r; ++i) {
        if (!is_zero_mat(mat_mul(minus(gen[i], scaled(id, ctx.q())),
                                 minus(gen[i], scaled(id, Rational(-1)))))) {
            detail = "quadratic relation, matrix form";
            return false;
        }
    }
    ExactMatrix<Rational> cyc = id;
    for (int k = 1; k <= m; ++k) cyc = mat_mul(cyc, minus(gen[0], scaled(id, ctx.u(k))));
    if (!is_zero_mat(cyc)) {
        detail = "characteristic relation, matrix form";
        return false;
    }
    if (r >= 2) {
        auto lhs = mat_mul(mat_mul(mat_mul(gen[0], gen[1]), gen[0]), gen[1]);
        auto rhs = mat_mul(mat_mul(mat_mul(gen[1], gen[0]), gen[1]), gen[0]);
        if (!is_zero_mat(minus(lhs, rhs))) {
            detail = "mixed braid relation, matrix form";
            return false;
        }
    }
    for (int i = 1; i + 1 < r; ++i) {
        auto lhs = mat_mul(mat_mul(gen[i], gen[i + 1]), gen[i]);
        auto rhs = mat_mul(mat_mul(gen[i + 1], gen[i]), gen[i + 1]);
        if (!is_zero_mat(minus(lhs, rhs))) {
            detail = "braid relation, matrix form";
            return false;
        }
    }

    // 200 random triples: word reduction vs matrix multiplication
    std::mt19937 rng(20240u + static_cast<unsigned>(100 * m + r));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 200; ++t) {
        int xi = pick(rng), yi = pick(rng), zi = pick(rng);
        Element<Rational> p = mul(mul(Element<Rational>::of_key(ctx, keys[xi]),
                                      Element<Rational>::of_key(ctx, keys[yi])),
                                  Element<Rational>::of_key(ctx, keys[zi]));
        auto mx = regular(ctx, Element<Rational>::of_key(ctx, keys[xi]));
        auto my = regular(ctx, Element<Rational>::of_key(ctx, keys[yi]));
        std::vector<Rational> vz(n, Rational(0));
        vz[zi] = 1;
        std::vector<Rational> step(n, Rational(0));
        for (int i = 0; i < n; ++i) step[i] = my.at(i, zi);
        std::vector<Rational> res(n, Rational(0));
        for (int i = 0; i < n; ++i) {
            Rational acc(0);
            for (int k = 0; k < n; ++k) acc += mx.at(i, k) * step[k];
            res[i] = acc;
        }
        auto coords = p.coordinates();
        if (coords != res) {
            detail = "triple " + std::to_string(t) + " disagrees with the matrix oracle";
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    using Grid = std::vector<std::pair<int, int>>;
    std::string d;
    double t0, t1;

    t0 = now();
    d.clear();
    bool c1 = run_suites({"relations", "prop-2.5"},
                         Grid{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}, d);
    t1 = now();
    report(1, "defining relations and straightening identities, symbolic", c1, t1 - t0, d);

    t0 = now();
    d.clear();
    bool c2 = engine_faithfulness(2, 3, d) && engine_faithfulness(3, 2, d);
    t1 = now();
    report(2, "regular-representation oracle and 200 random triples", c2, t1 - t0, d);

    t0 = now();
    d.clear();
    Grid symgrid;
    for (int m = 1; m <= 3; ++m)
        for (int r = 1; r <= 4; ++r) symgrid.push_back({m, r});
    bool c3 = run_suites({"symcomb-1.x"}, symgrid, d);
    t1 = now();
    report(3, "coset combinatorics: factorizations, lengths, counts", c3, t1 - t0, d);

    t0 = now();
    d.clear();
    bool c4 = run_suites({"lemma-2.8"}, Grid{{2, 3}, {3, 3}, {2, 4}}, d);
    t1 = now();
    report(4, "triangular vanishing products, symbolic", c4, t1 - t0, d);

    t0 = now();
    d.clear();
    bool c5 = run_suites({"thm-3.4"}, Grid{{2, 2}, {2, 3}, {3, 2}, {3, 3}}, d);
    t1 = now();
    report(5, "freeness ranks and the projected unit shape", c5, t1 - t0, d);

    t0 = now();
    d.clear();
    Grid zgrid;
    for (int m = 1; m <= 3; ++m)
        for (int r = 1; r <= 3; ++r) zgrid.push_back({m, r});
    bool c6 = run_suites({"prop-3.6", "lemma-4.1"}, zgrid, d);
    t1 = now();
    report(6, "structure scalars: centrality, conjugation, closed formula", c6, t1 - t0, d);

    t0 = now();
    d.clear();
    bool c7 = run_suites({"prop-4.3"}, Grid{{2, 2}, {2, 3}, {3, 2}}, d);
    t1 = now();
    report(7, "invertibility criterion across the specialization grid", c7, t1 - t0, d);

    t0 = now();
    d.clear();
    bool c8 = run_suites({"prop-3.10", "cor-3.11"}, Grid{{2, 2}, {2, 3}, {3, 2}}, d);
    t1 = now();
    report(8, "orthogonal idempotents and the Morita corner rank", c8, t1 - t0, d);

    t0 = now();
    d.clear();
    bool c9 = run_suites({"dec-4.15"}, Grid{{2, 2}, {2, 3}, {3, 2}}, d);
    t1 = now();
    report(9, "filtration ranks and the direct-sum decomposition", c9, t1 - t0, d);

    t0 = now();
    d.clear();
    bool c10 = run_suites({"thm-5.2"}, Grid{{2, 2}, {2, 3}, {3, 2}}, d);
    t1 = now();
    report(10, "semisimplicity criterion vs trace-form oracle on the grid", c10, t1 - t0, d);

    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
