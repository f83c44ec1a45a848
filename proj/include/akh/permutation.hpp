#ifndef AKH_PERMUTATION_HPP
#define AKH_PERMUTATION_HPP

#include <string>
#include <vector>

namespace akh {

/// Permutation of {1..r} in one-line notation, acting on the right: the image
/// of i under w is w[i], and (uv) means "apply u, then v".
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int r);
    /// Basic transposition s_i = (i, i+1), 1 <= i <= r-1.
    static Permutation s(int i, int r);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i - 1]; }  // image of i, 1-based
    const std::vector<int>& one_line() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    /// Length = inversion count.
    int length() const;
    /// Lexicographically least reduced word (indices of basic transpositions).
    std::vector<int> reduced_word() const;

    friend Permutation operator*(const Permutation& u, const Permutation& v);
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    std::string str() const;

private:
    std::vector<int> img_;
};

/// The cycle s_{i,j}: s_{i-1}...s_j for i > j, s_i...s_{j-1} for i < j,
/// identity for i = j.
Permutation s_cycle(int i, int j, int r);

/// The block swap moving {k+1..k+i} past {k+i+1..k+i+j}:
/// k+t -> k+j+t for t <= i, and k+i+t -> k+t for t <= j.
Permutation w_shift(int i, int j, int k, int r);

std::vector<Permutation> all_permutations(int r);

} // namespace akh

#endif
