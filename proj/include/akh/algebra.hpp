#ifndef AKH_ALGEBRA_HPP
#define AKH_ALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "akh/composition.hpp"
#include "akh/laurent.hpp"
#include "akh/permutation.hpp"
#include "akh/specialization.hpp"

namespace akh {

/// Key of the normal-form basis: L_1^{c_1}...L_r^{c_r} T_w with
/// 0 <= c_i <= m-1. Ordered by (c lexicographic, then one-line form of w),
/// which fixes the serialization order everywhere.
struct BasisKey {
    std::vector<int> c;  // length r
    Permutation w;

    friend bool operator<(const BasisKey& a, const BasisKey& b) {
        if (a.c != b.c) return a.c < b.c;
        return a.w < b.w;
    }
    friend bool operator==(const BasisKey& a, const BasisKey& b) {
        return a.c == b.c && a.w == b.w;
    }
};

template <class C>
class Element;

/// Shared context of one algebra instance: parameters (m, r), the coefficient
/// values of q, q^{-1}, u_1..u_m in the chosen domain, and the reduction memo
/// tables. Elements hold a pointer to their context, so contexts are pinned.
template <class C>
class Context {
public:
    Context(int m, int r, C zero, C one, C q, C q_inv, std::vector<C> u)
        : m_(m), r_(r), zero_(std::move(zero)), one_(std::move(one)),
          q_(std::move(q)), q_inv_(std::move(q_inv)), u_(std::move(u)) {
        if (m_ < 1 || r_ < 1) throw std::invalid_argument("Context: need m >= 1, r >= 1");
        if (static_cast<int>(u_.size()) != m_)
            throw std::invalid_argument("Context: need m parameters u_1..u_m");
        // elementary symmetric polynomials e_1..e_m of the u's
        esym_.assign(m_ + 1, zero_);
        esym_[0] = one_;
        for (int i = 0; i < m_; ++i)
            for (int k = std::min(i + 1, m_); k >= 1; --k)
                esym_[k] = esym_[k] + u_[i] * esym_[k - 1];
    }

    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    int m() const { return m_; }
    int r() const { return r_; }
    const C& zero() const { return zero_; }
    const C& one() const { return one_; }
    const C& q() const { return q_; }
    const C& q_inv() const { return q_inv_; }
    const C& u(int i) const { return u_.at(i - 1); }       // 1-based
    const C& esym(int k) const { return esym_.at(k); }     // e_k(u_1..u_m)
    C q_minus_one() const { return q_ - one_; }

    long basis_size() const {
        long n = 1;
        for (int i = 0; i < r_; ++i) n *= m_;
        for (int i = 2; i <= r_; ++i) n *= i;
        return n;
    }

    /// All basis keys in canonical order. Built on first use.
    const std::vector<BasisKey>& basis() const {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (basis_.empty()) {
            auto perms = all_permutations(r_);
            std::vector<int> c(r_, 0);
            while (true) {
                for (const auto& w : perms) basis_.push_back(BasisKey{c, w});
                int i = r_ - 1;
                while (i >= 0 && c[i] == m_ - 1) c[i--] = 0;
                if (i < 0) break;
                ++c[i];
            }
        }
        return basis_;
    }

    int basis_index(const BasisKey& key) const {
        const auto& keys = basis();
        auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it == keys.end() || !(*it == key))
            throw std::logic_error("basis_index: key is not a basis key");
        return static_cast<int>(it - keys.begin());
    }

    // --- reduction memo tables (idempotent entries, guarded by one mutex) ---

    using PushResult = std::map<std::pair<int, Permutation>, C>;

    const PushResult* push_cache_find(const std::vector<int>& w, int k) const {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = push_cache_.find({w, k});
        return it == push_cache_.end() ? nullptr : &it->second;
    }
    const PushResult* push_cache_store(const std::vector<int>& w, int k, PushResult res) const {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return &push_cache_.emplace(std::make_pair(w, k), std::move(res)).first->second;
    }

    const Element<C>* mono_cache_find(const std::vector<int>& c) const {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = mono_cache_.find(c);
        return it == mono_cache_.end() ? nullptr : &it->second;
    }
    const Element<C>* mono_cache_store(const std::vector<int>& c, Element<C> e) const {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return &mono_cache_.emplace(c, std::move(e)).first->second;
    }

private:
    int m_, r_;
    C zero_, one_, q_, q_inv_;
    std::vector<C> u_;
    std::vector<C> esym_;
    mutable std::vector<BasisKey> basis_;
    mutable std::map<std::pair<std::vector<int>, int>, PushResult> push_cache_;
    mutable std::map<std::vector<int>, Element<C>> mono_cache_;
    mutable std::mutex cache_mutex_;
};

/// Algebra element held in normal form: a sparse association from basis keys
/// to nonzero coefficients. Equality of elements is equality of the maps.
template <class C>
class Element {
public:
    explicit Element(const Context<C>* ctx) : ctx_(ctx) {}

    static Element one(const Context<C>& ctx) {
        Element e(&ctx);
        e.add_term(BasisKey{std::vector<int>(ctx.r(), 0), Permutation::identity(ctx.r())},
                   ctx.one());
        return e;
    }
    static Element of_key(const Context<C>& ctx, BasisKey key) {
        Element e(&ctx);
        e.add_term(std::move(key), ctx.one());
        return e;
    }
    static Element t_word(const Context<C>& ctx, const Permutation& w) {
        return of_key(ctx, BasisKey{std::vector<int>(ctx.r(), 0), w});
    }
    static Element l_monomial(const Context<C>& ctx, std::vector<int> c) {
        return of_key(ctx, BasisKey{std::move(c), Permutation::identity(ctx.r())});
    }

    const Context<C>& ctx() const { return *ctx_; }
    const std::map<BasisKey, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(BasisKey key, const C& coeff) {
        if (akh::is_zero(coeff)) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
        } else {
            it->second += coeff;
            if (akh::is_zero(it->second)) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        check_ctx(o);
        for (const auto& [k, v] : o.terms_) add_term(k, v);
        return *this;
    }
    Element& operator-=(const Element& o) {
        check_ctx(o);
        for (const auto& [k, v] : o.terms_) add_term(k, -v);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    Element scaled(const C& s) const {
        Element out(ctx_);
        if (akh::is_zero(s)) return out;
        for (const auto& [k, v] : terms_) out.add_term(k, v * s);
        return out;
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    std::vector<C> coordinates() const {
        std::vector<C> out(ctx_->basis_size(), ctx_->zero());
        for (const auto& [k, v] : terms_) out[ctx_->basis_index(k)] = v;
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + scalar_str(v) + ")*";
            std::string mono;
            for (int i = 0; i < ctx_->r(); ++i) {
                if (k.c[i] == 0) continue;
                mono += "L" + std::to_string(i + 1);
                if (k.c[i] > 1) mono += "^" + std::to_string(k.c[i]);
                mono += "*";
            }
            out += mono + "T" + k.w.str();
        }
        return out;
    }

    void check_ctx(const Element& o) const {
        if (ctx_ != o.ctx_) throw std::invalid_argument("Element: context mismatch");
    }

private:
    const Context<C>* ctx_;
    std::map<BasisKey, C> terms_;
};

// ---------------------------------------------------------------------------
// Reduction engine.
//
// Right multiplication of a basis key by a generator is rewritten with:
//   (i)   T_w T_j -> T_{w s_j}, or q T_{w s_j} + (q-1) T_w when the length
//         drops (quadratic relation);
//   (ii)  T_w L_k -> sum of L_y T_z terms, by pushing the L factor leftward
//         through one letter at a time with the local commutation rules
//         T_i L_k = L_k T_i (k != i, i+1), T_i L_i = L_{i+1} T_i - (q-1)
//         L_{i+1}, T_i L_{i+1} = L_i T_i + (q-1) L_{i+1};
//   (iii) an exponent c_1 = m is reduced by the characteristic relation
//         L_1^m = sum_k (-1)^{k+1} e_k(u) L_1^{m-k};
//   (iv)  an exponent c_i >= m (i > 1) is reduced through
//         L_i^p = q^{-1} T_{i-1} L_{i-1}^p T_{i-1}
//                 + (1 - q^{-1}) sum_{t<p} L_i^t L_{i-1}^{p-t} T_{i-1},
//         whose terms either move the offending exponent to a lower index or
//         strictly lower it, so the rewriting terminates.
// ---------------------------------------------------------------------------

namespace engine {

/// Append coeff * L_y T_z T_j to out (rule (i)).
template <class C>
void append_key_rmul_T(const Context<C>& ctx, typename Context<C>::PushResult& out,
                       int y, const Permutation& z, const C& coeff, int j) {
    Permutation zs = z * Permutation::s(j, ctx.r());
    auto add = [&out](int yy, const Permutation& zz, const C& cc) {
        auto it = out.find({yy, zz});
        if (it == out.end()) out.emplace(std::make_pair(yy, zz), cc);
        else it->second += cc;
    };
    if (zs.length() > z.length()) {
        add(y, zs, coeff);
    } else {
        add(y, zs, coeff * ctx.q());
        add(y, z, coeff * ctx.q_minus_one());
    }
}

/// T_w L_k as a combination of L_y T_z (rule (ii)); memoized per context.
template <class C>
const typename Context<C>::PushResult& push_L(const Context<C>& ctx,
                                              const Permutation& w, int k) {
    if (const auto* hit = ctx.push_cache_find(w.one_line(), k)) return *hit;
    typename Context<C>::PushResult res;
    if (w.is_identity()) {
        res.emplace(std::make_pair(k, w), ctx.one());
        return *ctx.push_cache_store(w.one_line(), k, std::move(res));
    }
    // peel the smallest right descent: w = w' s_j with the length additive
    Permutation winv = w.inverse();
    int j = 0;
    for (int i = 1; i < ctx.r(); ++i)
        if (winv[i] > winv[i + 1]) { j = i; break; }
    Permutation wp = w * Permutation::s(j, ctx.r());
    if (k != j && k != j + 1) {
        for (const auto& [yz, a] : push_L(ctx, wp, k))
            append_key_rmul_T(ctx, res, yz.first, yz.second, a, j);
    } else if (k == j) {
        // T_j L_j = L_{j+1} T_j - (q-1) L_{j+1}
        auto up = push_L(ctx, wp, j + 1);
        for (const auto& [yz, a] : up)
            append_key_rmul_T(ctx, res, yz.first, yz.second, a, j);
        for (const auto& [yz, a] : up) {
            auto it = res.find(yz);
            C v = -(a * ctx.q_minus_one());
            if (it == res.end()) res.emplace(yz, v);
            else it->second += v;
        }
    } else {
        // T_j L_{j+1} = L_j T_j + (q-1) L_{j+1}
        for (const auto& [yz, a] : push_L(ctx, wp, j))
            append_key_rmul_T(ctx, res, yz.first, yz.second, a, j);
        for (const auto& [yz, a] : push_L(ctx, wp, j + 1)) {
            auto it = res.find(yz);
            C v = a * ctx.q_minus_one();
            if (it == res.end()) res.emplace(yz, v);
            else it->second += v;
        }
    }
    // drop exact cancellations
    for (auto it = res.begin(); it != res.end();) {
        if (akh::is_zero(it->second)) it = res.erase(it);
        else ++it;
    }
    return *ctx.push_cache_store(w.one_line(), k, std::move(res));
}

template <class C>
Element<C> nf_monomial(const Context<C>& ctx, const std::vector<int>& c);

/// Right multiplication by T_j, j >= 1 (rule (i) on every key).
template <class C>
Element<C> rmul_T(const Element<C>& x, int j) {
    const auto& ctx = x.ctx();
    if (j < 1 || j >= ctx.r()) throw std::invalid_argument("rmul_T: generator index out of range");
    Element<C> out(&ctx);
    Permutation sj = Permutation::s(j, ctx.r());
    for (const auto& [key, coeff] : x.terms()) {
        Permutation ws = key.w * sj;
        if (ws.length() > key.w.length()) {
            out.add_term(BasisKey{key.c, ws}, coeff);
        } else {
            out.add_term(BasisKey{key.c, ws}, coeff * ctx.q());
            out.add_term(key, coeff * ctx.q_minus_one());
        }
    }
    return out;
}

template <class C>
Element<C> rmul_Tw(const Element<C>& x, const Permutation& w) {
    Element<C> out = x;
    for (int j : w.reduced_word()) out = rmul_T(out, j);
    return out;
}

/// Right multiplication by L_k.
template <class C>
Element<C> rmul_L(const Element<C>& x, int k) {
    const auto& ctx = x.ctx();
    if (k < 1 || k > ctx.r()) throw std::invalid_argument("rmul_L: index out of range");
    Element<C> out(&ctx);
    for (const auto& [key, coeff] : x.terms()) {
        for (const auto& [yz, alpha] : push_L(ctx, key.w, k)) {
            std::vector<int> d = key.c;
            ++d[yz.first - 1];
            C beta = coeff * alpha;
            if (d[yz.first - 1] < ctx.m()) {
                out.add_term(BasisKey{std::move(d), yz.second}, beta);
            } else {
                out += rmul_Tw(nf_monomial(ctx, d), yz.second).scaled(beta);
            }
        }
    }
    return out;
}

/// T_j * x for x whose keys all have c_{j+1} = 0, via the closed form
/// T_j L_j^a = L_{j+1}^a T_j - (q-1) sum_{s=1}^{a} L_{j+1}^s L_j^{a-s}.
template <class C>
Element<C> lmul_T_low(const Element<C>& x, int j) {
    const auto& ctx = x.ctx();
    Element<C> out(&ctx);
    Permutation sj = Permutation::s(j, ctx.r());
    for (const auto& [key, coeff] : x.terms()) {
        if (key.c[j] != 0) throw std::logic_error("lmul_T_low: key has c_{j+1} != 0");
        int a = key.c[j - 1];
        std::vector<int> c0 = key.c;
        c0[j - 1] = 0;
        std::vector<int> cA = c0;
        cA[j] = a;
        Permutation sw = sj * key.w;
        if (sw.length() > key.w.length()) {
            out.add_term(BasisKey{cA, sw}, coeff);
        } else {
            out.add_term(BasisKey{cA, sw}, coeff * ctx.q());
            out.add_term(BasisKey{cA, key.w}, coeff * ctx.q_minus_one());
        }
        C neg = -(coeff * ctx.q_minus_one());
        for (int s = 1; s <= a; ++s) {
            std::vector<int> cB = c0;
            cB[j] = s;
            cB[j - 1] = a - s;
            out.add_term(BasisKey{std::move(cB), key.w}, neg);
        }
    }
    return out;
}

/// L^{c} * x for x in normal form (the L's commute past everything on the
/// left; only exponent overflow needs rewriting).
template <class C>
Element<C> lmul_monomial(const Context<C>& ctx, const std::vector<int>& c,
                         const Element<C>& x) {
    Element<C> out(&ctx);
    for (const auto& [key, coeff] : x.terms()) {
        std::vector<int> d(ctx.r());
        bool overflow = false;
        for (int i = 0; i < ctx.r(); ++i) {
            d[i] = c[i] + key.c[i];
            overflow = overflow || d[i] >= ctx.m();
        }
        if (!overflow) out.add_term(BasisKey{std::move(d), key.w}, coeff);
        else out += rmul_Tw(nf_monomial(ctx, d), key.w).scaled(coeff);
    }
    return out;
}

/// Normal form of L_1^{c_1}...L_r^{c_r} for arbitrary non-negative exponents
/// (rules (iii) and (iv)); memoized per context.
template <class C>
Element<C> nf_monomial(const Context<C>& ctx, const std::vector<int>& c) {
    if (const auto* hit = ctx.mono_cache_find(c)) return *hit;
    int i = 0;  // largest 1-based index with c_i >= m
    for (int k = ctx.r(); k >= 1; --k)
        if (c[k - 1] >= ctx.m()) { i = k; break; }
    Element<C> res(&ctx);
    if (i == 0) {
        res.add_term(BasisKey{c, Permutation::identity(ctx.r())}, ctx.one());
    } else if (i == 1) {
        // one application of the characteristic relation lowers c_1 by >= 1
        for (int k = 1; k <= ctx.m(); ++k) {
            std::vector<int> d = c;
            d[0] -= k;
            C sign_e = (k % 2 == 1) ? ctx.esym(k) : -ctx.esym(k);
            res += nf_monomial(ctx, d).scaled(sign_e);
        }
    } else {
        int p = c[i - 1];
        std::vector<int> rest = c;
        rest[i - 1] = 0;
        // main term: q^{-1} L^{rest} (T_{i-1} L_{i-1}^p T_{i-1})
        std::vector<int> pe(ctx.r(), 0);
        pe[i - 2] = p;
        Element<C> inner = rmul_T(lmul_T_low(nf_monomial(ctx, pe), i - 1), i - 1);
        res += lmul_monomial(ctx, rest, inner).scaled(ctx.q_inv());
        // overflow-lowering terms: (1 - q^{-1}) L^{rest} L_i^t L_{i-1}^{p-t} T_{i-1}
        C factor = ctx.one() - ctx.q_inv();
        for (int t = 1; t <= p - 1; ++t) {
            std::vector<int> d = rest;
            d[i - 1] = t;
            d[i - 2] += p - t;
            res += rmul_T(nf_monomial(ctx, d), i - 1).scaled(factor);
        }
    }
    return *ctx.mono_cache_store(c, std::move(res));
}

} // namespace engine

/// Normal-form product.
template <class C>
Element<C> mul(const Element<C>& x, const Element<C>& y) {
    x.check_ctx(y);
    const auto& ctx = x.ctx();
    Element<C> out(&ctx);
    for (const auto& [key, coeff] : y.terms()) {
        Element<C> t = x;
        for (int k = 1; k <= ctx.r(); ++k)
            for (int rep = 0; rep < key.c[k - 1]; ++rep) t = engine::rmul_L(t, k);
        t = engine::rmul_Tw(t, key.w);
        out += t.scaled(coeff);
    }
    return out;
}

/// Generators: T_0 = L_1 is the key (c = e_1, w = id); T_i (i >= 1) is
/// (c = 0, w = s_i).
template <class C>
Element<C> generator(const Context<C>& ctx, int i) {
    if (i < 0 || i >= ctx.r()) throw std::invalid_argument("generator: index out of range");
    if (i == 0) {
        std::vector<int> c(ctx.r(), 0);
        if (ctx.m() == 1) {
            // T_0 - u_1 = 0: the degenerate single-parameter case
            return Element<C>::one(ctx).scaled(ctx.u(1));
        }
        c[0] = 1;
        return Element<C>::of_key(ctx, BasisKey{std::move(c), Permutation::identity(ctx.r())});
    }
    return Element<C>::t_word(ctx, Permutation::s(i, ctx.r()));
}

/// L_i computed by reducing the defining word q^{-1} T_{i-1} L_{i-1} T_{i-1},
/// not by assuming its normal form.
template <class C>
Element<C> jucys_murphy(const Context<C>& ctx, int i) {
    if (i < 1 || i > ctx.r()) throw std::invalid_argument("jucys_murphy: index out of range");
    if (i == 1) return generator(ctx, 0);
    Element<C> prev = jucys_murphy(ctx, i - 1);
    Element<C> t = generator(ctx, i - 1);
    return mul(mul(t, prev), t).scaled(ctx.q_inv());
}

struct TokenT { int i; };       // generator T_i, 0 <= i <= r-1
struct TokenL { int i; };       // Jucys-Murphy element L_i, 1 <= i <= r
template <class C> using WordToken = std::variant<TokenT, TokenL, C>;

/// Left-to-right fold of mul over a generator word; [] gives the identity.
template <class C>
Element<C> from_word(const Context<C>& ctx, const std::vector<WordToken<C>>& word) {
    Element<C> out = Element<C>::one(ctx);
    for (const auto& tok : word) {
        if (std::holds_alternative<TokenT>(tok)) {
            out = mul(out, generator(ctx, std::get<TokenT>(tok).i));
        } else if (std::holds_alternative<TokenL>(tok)) {
            out = mul(out, jucys_murphy(ctx, std::get<TokenL>(tok).i));
        } else {
            out = out.scaled(std::get<C>(tok));
        }
    }
    return out;
}

/// The anti-automorphism fixing every T_i: L^c T_w -> T_{w^{-1}} L^c.
template <class C>
Element<C> iota(const Element<C>& x) {
    const auto& ctx = x.ctx();
    Element<C> out(&ctx);
    for (const auto& [key, coeff] : x.terms()) {
        Element<C> t = mul(Element<C>::t_word(ctx, key.w.inverse()),
                           Element<C>::l_monomial(ctx, key.c));
        out += t.scaled(coeff);
    }
    return out;
}

/// Projection onto the L^c-component: keep exactly the keys with that c.
template <class C>
Element<C> pr(const Element<C>& x, const std::vector<int>& c) {
    const auto& ctx = x.ctx();
    if (static_cast<int>(c.size()) != ctx.r())
        throw std::invalid_argument("pr: exponent vector has wrong length");
    for (int e : c)
        if (e < 0 || e >= ctx.m()) throw std::invalid_argument("pr: exponent out of bounds");
    Element<C> out(&ctx);
    for (const auto& [key, coeff] : x.terms())
        if (key.c == c) out.add_term(key, coeff);
    return out;
}

/// x in H(S_a): every key has c = 0 and w inside the Young subgroup.
template <class C>
bool subalgebra_membership(const Element<C>& x, const CumComposition& a) {
    if (a.r() != x.ctx().r()) throw std::invalid_argument("subalgebra_membership: wrong r");
    for (const auto& [key, coeff] : x.terms()) {
        (void)coeff;
        for (int e : key.c)
            if (e != 0) return false;
        if (!in_young_subgroup(key.w, a)) return false;
    }
    return true;
}

/// Does x commute with every generator T_j of H(S_a)?
template <class C>
bool commutes_with_subalgebra(const Element<C>& x, const CumComposition& a) {
    const auto& ctx = x.ctx();
    if (a.r() != ctx.r()) throw std::invalid_argument("commutes_with_subalgebra: wrong r");
    for (int j = 1; j < ctx.r(); ++j) {
        bool cut = false;
        for (int i = 1; i <= a.m(); ++i) cut = cut || a[i] == j;
        if (cut) continue;  // s_j is not a generator of S_a
        Element<C> tj = Element<C>::t_word(ctx, Permutation::s(j, ctx.r()));
        if (mul(x, tj) != mul(tj, x)) return false;
    }
    return true;
}

// --- context factories ---

inline std::unique_ptr<Context<LaurentPoly>> make_symbolic_context(int m, int r) {
    std::vector<LaurentPoly> u;
    for (int i = 1; i <= m; ++i) u.push_back(LaurentPoly::u_var(i, m));
    return std::make_unique<Context<LaurentPoly>>(
        m, r, LaurentPoly::zero(m), LaurentPoly::constant(1, m),
        LaurentPoly::q_power(1, m), LaurentPoly::q_power(-1, m), std::move(u));
}

template <class F>
std::unique_ptr<Context<F>> make_specialized_context(int m, int r, const Specialization<F>& s) {
    if (s.num_u() != m)
        throw std::invalid_argument("make_specialized_context: specialization has wrong m");
    F one = field_inv(s.q_val) * s.q_val;
    return std::make_unique<Context<F>>(m, r, s.q_val - s.q_val, one, s.q_val,
                                        field_inv(s.q_val), s.u_vals);
}

} // namespace akh

#endif
