#include "akh/composition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace akh {

CumComposition::CumComposition(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2 || entries_.front() != 0)
        throw std::invalid_argument("CumComposition: must start with a_0 = 0");
    for (size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i] < entries_[i - 1])
            throw std::invalid_argument("CumComposition: entries must be non-decreasing");
}

CumComposition CumComposition::from_composition(const std::vector<int>& lambda) {
    std::vector<int> cum(lambda.size() + 1, 0);
    for (size_t i = 0; i < lambda.size(); ++i) cum[i + 1] = cum[i] + lambda[i];
    return CumComposition(std::move(cum));
}

std::vector<int> CumComposition::to_composition() const {
    std::vector<int> lambda(m());
    for (int i = 1; i <= m(); ++i) lambda[i - 1] = entries_[i] - entries_[i - 1];
    return lambda;
}

CumComposition CumComposition::prime() const {
    std::vector<int> out(entries_.size());
    out[0] = 0;
    for (int i = 1; i <= m(); ++i) out[i] = r() - entries_[m() - i];
    return CumComposition(std::move(out));
}

CumComposition CumComposition::left_truncate() const {
    if (r() < 1) throw std::invalid_argument("left_truncate: r must be >= 1");
    int i = 1;
    while (entries_[i] == 0) ++i;
    std::vector<int> out(entries_.size(), 0);
    for (int j = i; j <= m(); ++j) out[j] = entries_[j] - 1;
    return CumComposition(std::move(out));
}

CumComposition CumComposition::right_truncate() const {
    if (r() < 1) throw std::invalid_argument("right_truncate: r must be >= 1");
    int j = 1;
    while (entries_[j] != r()) ++j;
    std::vector<int> out = entries_;
    for (int k = j; k <= m(); ++k) out[k] = r() - 1;
    return CumComposition(std::move(out));
}

std::vector<CumComposition> CumComposition::shifted_chain() const {
    CumComposition b = right_truncate();
    std::vector<CumComposition> chain;
    for (int i = 1; i <= m(); ++i) {
        std::vector<int> e = b.entries();
        for (int k = i; k <= m(); ++k) ++e[k];
        chain.emplace_back(std::move(e));
    }
    return chain;
}

std::string CumComposition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ",";
        os << entries_[i];
    }
    os << "]";
    return os.str();
}

namespace {

void enumerate_rec(int m, int r, std::vector<int>& prefix,
                   std::vector<CumComposition>& out) {
    if (static_cast<int>(prefix.size()) == m) {
        prefix.push_back(r);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = prefix.back(); v <= r; ++v) {
        prefix.push_back(v);
        enumerate_rec(m, r, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<CumComposition> enumerate_lambda(int m, int r) {
    if (m < 1 || r < 0) throw std::invalid_argument("enumerate_lambda: need m >= 1, r >= 0");
    std::vector<int> prefix{0};
    std::vector<CumComposition> out;
    enumerate_rec(m, r, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool poset_leq(const CumComposition& a, const CumComposition& b) {
    if (a.m() != b.m() || a.r() != b.r())
        throw std::invalid_argument("poset_leq: mismatched (m, r)");
    for (int i = 1; i <= a.m(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Permutation w_of(const CumComposition& a) {
    int r = a.r();
    std::vector<int> img(r);
    for (int i = 1; i <= a.m(); ++i) {
        for (int l = 1; l <= a[i] - a[i - 1]; ++l)
            img[a[i - 1] + l - 1] = r - a[i] + l;
    }
    return Permutation(std::move(img));
}

bool in_young_subgroup(const Permutation& w, const CumComposition& a) {
    if (w.degree() != a.r()) return false;
    for (int i = 1; i <= a.m(); ++i)
        for (int x = a[i - 1] + 1; x <= a[i]; ++x)
            if (w[x] <= a[i - 1] || w[x] > a[i]) return false;
    return true;
}

std::vector<Permutation> young_subgroup(const CumComposition& a) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(a.r()))
        if (in_young_subgroup(w, a)) out.push_back(w);
    return out;
}

namespace {

bool is_distinguished(const Permutation& w, const CumComposition& a) {
    std::set<int> cuts(a.entries().begin(), a.entries().end());
    for (int i = 1; i < a.r(); ++i)
        if (!cuts.count(i) && w[i] > w[i + 1]) return false;
    return true;
}

} // namespace

std::vector<Permutation> coset_reps(const CumComposition& a) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(a.r()))
        if (is_distinguished(w, a)) out.push_back(w);
    return out;
}

std::vector<Permutation> double_reps(const CumComposition& a, const CumComposition& b) {
    if (a.m() != b.m() || a.r() != b.r())
        throw std::invalid_argument("double_reps: mismatched (m, r)");
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(a.r()))
        if (is_distinguished(w, a) && is_distinguished(w.inverse(), b)) out.push_back(w);
    return out;
}

} // namespace akh
