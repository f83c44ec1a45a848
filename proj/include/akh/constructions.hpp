#ifndef AKH_CONSTRUCTIONS_HPP
#define AKH_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "akh/algebra.hpp"
#include "akh/composition.hpp"
#include "akh/linalg.hpp"

namespace akh {

// Division of a coefficient by the unit gamma (a power of q up to sign in the
// symbolic domain, any nonzero scalar in a field).
inline LaurentPoly coeff_div_unit(const LaurentPoly& c, const LaurentPoly& gamma) {
    return c.div_unit(gamma);
}
template <class F>
F coeff_div_unit(const F& c, const F& gamma) {
    return c * field_inv(gamma);
}

template <class C>
Element<C> t_elem(const Context<C>& ctx, const Permutation& w) {
    return Element<C>::t_word(ctx, w);
}

/// T_{i,j} = T of the cycle s_{i,j}.
template <class C>
Element<C> t_cycle_elem(const Context<C>& ctx, int i, int j) {
    return t_elem(ctx, s_cycle(i, j, ctx.r()));
}

/// (T_w)^{-1}, using T_i^{-1} = q^{-1}(T_i - (q-1)).
template <class C>
Element<C> t_inv_elem(const Context<C>& ctx, const Permutation& w) {
    Element<C> out = Element<C>::one(ctx);
    auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        Element<C> ti = t_elem(ctx, Permutation::s(*it, ctx.r()))
                        - Element<C>::one(ctx).scaled(ctx.q_minus_one());
        out = mul(out, ti.scaled(ctx.q_inv()));
    }
    return out;
}

/// pi(a; x_1..x_{m-1}) = prod_i prod_{j<=a_i} (L_j - x_i).
template <class C>
Element<C> pi_general(const Context<C>& ctx, const CumComposition& a,
                      const std::vector<C>& xs) {
    if (static_cast<int>(xs.size()) != ctx.m() - 1)
        throw std::invalid_argument("pi_general: need m-1 parameters");
    Element<C> out = Element<C>::one(ctx);
    for (int i = 1; i <= ctx.m() - 1; ++i) {
        for (int j = 1; j <= a[i]; ++j) {
            std::vector<int> c(ctx.r(), 0);
            c[j - 1] = 1;
            Element<C> factor = Element<C>::l_monomial(ctx, c)
                                - Element<C>::one(ctx).scaled(xs[i - 1]);
            out = mul(out, factor);
        }
    }
    return out;
}

/// pi_a = pi(a; u_2..u_m).
template <class C>
Element<C> pi_of(const Context<C>& ctx, const CumComposition& a) {
    std::vector<C> xs;
    for (int i = 2; i <= ctx.m(); ++i) xs.push_back(ctx.u(i));
    return pi_general(ctx, a, xs);
}

/// pit_a = pi(a; u_{m-1}..u_1).
template <class C>
Element<C> pit_of(const Context<C>& ctx, const CumComposition& a) {
    std::vector<C> xs;
    for (int i = 1; i <= ctx.m() - 1; ++i) xs.push_back(ctx.u(ctx.m() - i));
    return pi_general(ctx, a, xs);
}

/// v_a = pi_a T_{w_a} pit_{a'}.
template <class C>
Element<C> v_elem(const Context<C>& ctx, const CumComposition& a) {
    return mul(mul(pi_of(ctx, a), t_elem(ctx, w_of(a))), pit_of(ctx, a.prime()));
}

template <class C>
struct VaCoordinates {
    bool in_span = false;
    std::map<Permutation, C> coords;  // x = sum coords[w] * v_a T_w when in_span
};

namespace detail {

// Drop the L-part of every key with exponent vector exactly h, discard others.
template <class C>
Element<C> strip_L(const Element<C>& x, const std::vector<int>& h) {
    Element<C> out(&x.ctx());
    for (const auto& [key, coeff] : x.terms())
        if (key.c == h) out.add_term(BasisKey{std::vector<int>(x.ctx().r(), 0), key.w}, coeff);
    return out;
}

} // namespace detail

/// Coordinates of x in the basis {v_a T_w}. The extraction uses the top
/// L-component of v_a: its T-part is a unit times (T_{w_{a'}})^{-1}, so
/// left-multiplying the stripped projection by T_{w_{a'}} and dividing by the
/// unit recovers the coefficients; the residual check certifies membership.
template <class C>
VaCoordinates<C> va_coordinates(const Context<C>& ctx, const CumComposition& a,
                                const Element<C>& x, const Element<C>* va_hint = nullptr) {
    std::vector<int> h(ctx.r(), ctx.m() - 1);
    Element<C> va = va_hint ? *va_hint : v_elem(ctx, a);
    Permutation wap = w_of(a.prime());

    Element<C> q0 = mul(t_elem(ctx, wap), detail::strip_L(pr(va, h), h));
    BasisKey idkey{std::vector<int>(ctx.r(), 0), Permutation::identity(ctx.r())};
    if (q0.terms().size() != 1 || !(q0.terms().begin()->first == idkey))
        throw std::logic_error("va_coordinates: top component of v_a has unexpected shape");
    C gamma = q0.terms().begin()->second;

    Element<C> q1 = mul(t_elem(ctx, wap), detail::strip_L(pr(x, h), h));
    VaCoordinates<C> out;
    Element<C> residual = x;
    for (const auto& [key, coeff] : q1.terms()) {
        for (int e : key.c)
            if (e != 0) throw std::logic_error("va_coordinates: extraction left an L-part");
        C cw = coeff_div_unit(coeff, gamma);
        out.coords.emplace(key.w, cw);
        residual -= mul(va, t_elem(ctx, key.w)).scaled(cw);
    }
    out.in_span = residual.is_zero();
    if (!out.in_span) out.coords.clear();
    return out;
}

template <class C>
struct ZPair {
    Element<C> z_prime;  // in H(S_{a'}), central there
    Element<C> z;        // in H(S_a), central there
};

/// z_{a'} and z_a of v_a T_{w_{a'}} v_a = v_a z_{a'} = z_a v_a; z_a recovered
/// by conjugating with T_{w_a}.
template <class C>
ZPair<C> z_pair(const Context<C>& ctx, const CumComposition& a) {
    Element<C> va = v_elem(ctx, a);
    Permutation wa = w_of(a);
    Element<C> x = mul(mul(va, t_elem(ctx, w_of(a.prime()))), va);
    auto co = va_coordinates(ctx, a, x, &va);
    if (!co.in_span) throw std::logic_error("z_pair: v_a h_{a'} v_a is not in v_a H");
    Element<C> zp(&ctx);
    for (const auto& [w, c] : co.coords)
        zp.add_term(BasisKey{std::vector<int>(ctx.r(), 0), w}, c);
    if (!subalgebra_membership(zp, a.prime()))
        throw std::logic_error("z_pair: z_{a'} has support outside H(S_{a'})");
    Element<C> z = mul(mul(t_elem(ctx, wa), zp), t_inv_elem(ctx, wa));
    if (!subalgebra_membership(z, a))
        throw std::logic_error("z_pair: conjugate is not in H(S_a)");
    return ZPair<C>{std::move(zp), std::move(z)};
}

/// Closed product formula for z at a = r_i = [0,..,0,r,..,r] (zero up to
/// position i-1): prod_{j != i} prod_{k=1}^r (u_i q^{1-k} T_{k,1}T_{1,k} - u_j).
template <class C>
Element<C> z_formula_ri(const Context<C>& ctx, int i) {
    if (i < 1 || i > ctx.m()) throw std::invalid_argument("z_formula_ri: index out of range");
    Element<C> out = Element<C>::one(ctx);
    for (int j = 1; j <= ctx.m(); ++j) {
        if (j == i) continue;
        for (int k = 1; k <= ctx.r(); ++k) {
            C coeff = ctx.u(i);
            for (int t = 0; t < k - 1; ++t) coeff = coeff * ctx.q_inv();
            Element<C> factor =
                mul(t_cycle_elem(ctx, k, 1), t_cycle_elem(ctx, 1, k)).scaled(coeff)
                - Element<C>::one(ctx).scaled(ctx.u(j));
            out = mul(out, factor);
        }
    }
    return out;
}

/// The cumulative composition r_i (all-zero prefix, then r).
inline CumComposition ri_comp(int m, int r, int i) {
    std::vector<int> e(m + 1, r);
    for (int k = 0; k < i; ++k) e[k] = 0;
    return CumComposition(std::move(e));
}

/// Inverse of z inside H(S_a) over a field, by solving the |S_a|-dimensional
/// right-multiplication system; nullopt when singular (z not invertible).
template <class F>
std::optional<Element<F>> invert_in_subalgebra(const Context<F>& ctx, const Element<F>& z,
                                               const CumComposition& a) {
    if (!subalgebra_membership(z, a))
        throw std::invalid_argument("invert_in_subalgebra: z is not in H(S_a)");
    auto sub = young_subgroup(a);
    int n = static_cast<int>(sub.size());
    std::map<Permutation, int> index;
    for (int j = 0; j < n; ++j) index.emplace(sub[j], j);
    ExactMatrix<F> mat(n, n, ctx.zero());
    std::vector<int> c0(ctx.r(), 0);
    for (int j = 0; j < n; ++j) {
        Element<F> col = mul(z, t_elem(ctx, sub[j]));
        for (const auto& [key, coeff] : col.terms()) {
            auto it = index.find(key.w);
            if (key.c != c0 || it == index.end())
                throw std::logic_error("invert_in_subalgebra: product left H(S_a)");
            mat.at(it->second, j) = coeff;
        }
    }
    std::vector<F> rhs(n, ctx.zero());
    rhs[index.at(Permutation::identity(ctx.r()))] = ctx.one();
    auto sol = solve(mat, rhs);
    if (!sol) return std::nullopt;
    Element<F> y(&ctx);
    for (int j = 0; j < n; ++j) y.add_term(BasisKey{c0, sub[j]}, (*sol)[j]);
    if (mul(z, y) != Element<F>::one(ctx) || mul(y, z) != Element<F>::one(ctx))
        throw std::logic_error("invert_in_subalgebra: verification failed");
    return y;
}

/// e_a = v_a T_{w_{a'}} z_a^{-1}; nullopt when z_a is not invertible.
template <class F>
std::optional<Element<F>> idempotent_e(const Context<F>& ctx, const CumComposition& a) {
    auto zs = z_pair(ctx, a);
    auto zinv = invert_in_subalgebra(ctx, zs.z, a);
    if (!zinv) return std::nullopt;
    return mul(mul(v_elem(ctx, a), t_elem(ctx, w_of(a.prime()))), *zinv);
}

/// epsilon = sum of e_a over Lambda[m,r]; reports the first failing a.
template <class F>
Element<F> epsilon(const Context<F>& ctx) {
    Element<F> out(&ctx);
    for (const auto& a : enumerate_lambda(ctx.m(), ctx.r())) {
        auto e = idempotent_e(ctx, a);
        if (!e)
            throw std::domain_error("epsilon: z_a not invertible at a = " + a.str());
        out += *e;
    }
    return out;
}

template <class F>
struct IdealBasis {
    Element<F> gen;
    ExactMatrix<F> coords;  // column j = coordinates of gen * basis_j
    int rank = 0;
};

/// Coordinates and rank of the right ideal x*H, columns indexed by the
/// canonical basis of the algebra.
template <class F>
IdealBasis<F> right_ideal(const Context<F>& ctx, const Element<F>& x) {
    const auto& keys = ctx.basis();
    int n = static_cast<int>(keys.size());
    ExactMatrix<F> mat(n, n, ctx.zero());
    for (int j = 0; j < n; ++j) {
        Element<F> prod = mul(x, Element<F>::of_key(ctx, keys[j]));
        for (const auto& [key, coeff] : prod.terms())
            mat.at(ctx.basis_index(key), j) = coeff;
    }
    int rk = rank(mat);
    return IdealBasis<F>{x, std::move(mat), rk};
}

} // namespace akh

#endif
