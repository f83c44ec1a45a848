#ifndef AKH_COMPOSITION_HPP
#define AKH_COMPOSITION_HPP

#include <string>
#include <vector>

#include "akh/permutation.hpp"

namespace akh {

/// Cumulative form of an m-part composition of r: an integer list
/// [a_0,...,a_m] with 0 = a_0 <= a_1 <= ... <= a_m = r.
class CumComposition {
public:
    explicit CumComposition(std::vector<int> entries);

    /// Cumulative sums of a composition (lambda_1,...,lambda_m).
    static CumComposition from_composition(const std::vector<int>& lambda);

    int m() const { return static_cast<int>(entries_.size()) - 1; }
    int r() const { return entries_.back(); }
    int operator[](int i) const { return entries_[i]; }  // a_i, 0 <= i <= m
    const std::vector<int>& entries() const { return entries_; }

    /// Inverse of from_composition: the part sizes (a_1-a_0, ..., a_m-a_{m-1}).
    std::vector<int> to_composition() const;

    /// Reversal [0, r-a_{m-1}, ..., r-a_1, r].
    CumComposition prime() const;
    /// Decrement the first nonzero part (requires r >= 1).
    CumComposition left_truncate() const;
    /// Decrement the last nonzero part (requires r >= 1).
    CumComposition right_truncate() const;
    /// The chain a_1 > a_2 > ... > a_m with a_i = right_truncate() + 1_i
    /// (requires r >= 1).
    std::vector<CumComposition> shifted_chain() const;

    friend bool operator==(const CumComposition& a, const CumComposition& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const CumComposition& a, const CumComposition& b) {
        return a.entries_ != b.entries_;
    }
    friend bool operator<(const CumComposition& a, const CumComposition& b) {
        return a.entries_ < b.entries_;
    }

    std::string str() const;

private:
    std::vector<int> entries_;
};

/// All cumulative compositions for given (m, r), lexicographically sorted.
std::vector<CumComposition> enumerate_lambda(int m, int r);

/// Componentwise order a_i <= b_i (the dominance order in cumulative form).
bool poset_leq(const CumComposition& a, const CumComposition& b);

/// The minimal-length representative w_a of its double coset, defined by
/// (a_{i-1}+l) w_a = r - a_i + l on each nonempty block.
Permutation w_of(const CumComposition& a);

/// Is every block {a_{i-1}+1..a_i} mapped into itself by w (i.e. w in S_a)?
bool in_young_subgroup(const Permutation& w, const CumComposition& a);

/// Elements of the Young subgroup S_a.
std::vector<Permutation> young_subgroup(const CumComposition& a);

/// Distinguished right-coset representatives: w with (i)w < (i+1)w for every
/// i not in {a_1,...,a_m}.
std::vector<Permutation> coset_reps(const CumComposition& a);

/// Distinguished double-coset representatives D_a intersect D_b^{-1}.
std::vector<Permutation> double_reps(const CumComposition& a, const CumComposition& b);

} // namespace akh

#endif
