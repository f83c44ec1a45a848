#include "akh/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace akh {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw std::invalid_argument("Permutation: not a bijection of {1..r}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int r) {
    std::vector<int> img(r);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::s(int i, int r) {
    if (i < 1 || i >= r) throw std::invalid_argument("s_i index out of range");
    Permutation w = identity(r);
    std::swap(w.img_[i - 1], w.img_[i]);
    return w;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= degree(); ++i) inv[img_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

int Permutation::length() const {
    int count = 0;
    for (int i = 1; i <= degree(); ++i)
        for (int j = i + 1; j <= degree(); ++j)
            if (img_[i - 1] > img_[j - 1]) ++count;
    return count;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree())
        throw std::invalid_argument("Permutation: mixed degrees");
    std::vector<int> img(u.degree());
    for (int i = 1; i <= u.degree(); ++i) img[i - 1] = v[u[i]];
    return Permutation(std::move(img));
}

std::vector<int> Permutation::reduced_word() const {
    // Greedy: always peel the smallest i with l(s_i * w) < l(w), which holds
    // iff (i)w > (i+1)w. Peeling left factors yields w = s_{i1}*...*s_{ik}
    // with the letters in output order, and the greedy choice makes the word
    // lexicographically least.
    std::vector<int> word;
    Permutation w = *this;
    int len = w.length();
    while (len > 0) {
        for (int i = 1; i < degree(); ++i) {
            if (w[i] > w[i + 1]) {
                word.push_back(i);
                w = s(i, degree()) * w;
                --len;
                break;
            }
        }
    }
    return word;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 1; i <= degree(); ++i) {
        if (i > 1) os << ",";
        os << img_[i - 1];
    }
    os << ")";
    return os.str();
}

Permutation s_cycle(int i, int j, int r) {
    if (i < 1 || j < 1 || i > r || j > r)
        throw std::invalid_argument("s_cycle: index out of range");
    Permutation w = Permutation::identity(r);
    if (i > j) {
        for (int k = i - 1; k >= j; --k) w = w * Permutation::s(k, r);
    } else {
        for (int k = i; k <= j - 1; ++k) w = w * Permutation::s(k, r);
    }
    return w;
}

Permutation w_shift(int i, int j, int k, int r) {
    if (i < 0 || j < 0 || k < 0 || k + i + j > r)
        throw std::invalid_argument("w_shift: indices out of range");
    std::vector<int> img(r);
    std::iota(img.begin(), img.end(), 1);
    if (i != 0 && j != 0) {
        for (int t = 1; t <= i; ++t) img[k + t - 1] = k + j + t;
        for (int t = 1; t <= j; ++t) img[k + i + t - 1] = k + t;
    }
    return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int r) {
    std::vector<int> img(r);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace akh
