#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgr/errors.hpp"

namespace sgr {

inline constexpr std::size_t kDefaultGroupOrderBound = 256;

/// Finite group given by a Cayley table. The table is a Latin square and
/// identity/inverse/associativity laws are verified exhaustively at
/// construction for orders up to the bound.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table,
                std::size_t verify_bound = kDefaultGroupOrderBound);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int m);  // labels "1", "t", "t^2", ...
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    int order() const { return static_cast<int>(labels_.size()); }
    int identity() const { return identity_; }
    int mul(int i, int j) const { return table_[i][j]; }
    int inverse(int i) const { return inverse_[i]; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& label) const;

    int element_order(int i) const;
    /// False with a non-commuting witness pair when available.
    bool abelian(int* a = nullptr, int* b = nullptr) const;

    /// Subgroup generated by seed, as a sorted element index list.
    std::vector<int> closure(std::vector<int> seed) const;
    bool is_subgroup(const std::vector<int>& sorted_elems) const;
    bool is_normal(const std::vector<int>& sorted_elems) const;
    /// All subgroups, each a sorted element list; deterministic order
    /// (by size, then lexicographic).
    std::vector<std::vector<int>> all_subgroups() const;

    /// Product of a word of element indices with exponents; empty word = 1.
    int word(const std::vector<std::pair<int, int>>& letters) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

}  // namespace sgr
