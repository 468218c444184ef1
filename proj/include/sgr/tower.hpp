#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sgr/ground.hpp"
#include "sgr/group.hpp"
#include "sgr/skew.hpp"

namespace sgr {

inline constexpr int kDefaultDepthBound = 12;

/// Inverse system of finite levels X_1..X_D with surjective bonds
/// phi_n : X_n -> X_{n-1}. Clopen subsets of the limit are exactly level
/// subsets, so everything here stays finite.
class Tower {
public:
    /// labels[l-1] names the points of X_l; bonds[l-2][p-1] is phi_l(p).
    Tower(std::vector<std::vector<std::string>> labels, std::vector<std::vector<int>> bonds);

    int depth() const { return static_cast<int>(labels_.size()); }
    int level_size(int level) const;  // 1-based level
    const std::string& point_label(int level, int point) const;  // 1-based point

    /// phi_{from -> to} for to <= from, composite of the bonds.
    int project(int from_level, int point, int to_level) const;
    /// preimage of a point of X_coarse inside X_fine.
    std::vector<int> fiber(int coarse_level, int point, int fine_level) const;
    /// preimage of a subset (1-based points) of X_coarse inside X_fine.
    std::vector<int> lift_subset(int coarse_level, const std::vector<int>& subset,
                                 int fine_level) const;

private:
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::vector<int>> bonds_;  // bonds_[l-2]: X_l -> X_{l-1}
};

struct TowerGenerator {
    std::string name;
    int base_level = 1;
    /// perm_at[m - base_level] permutes X_m, for base_level <= m <= depth.
    std::vector<Permutation> perm_at;

    const Permutation& at(int level) const;
};

/// Generator system compatible with the bonds:
/// phi_n ∘ g@n = g@(n-1) ∘ phi_n for every base_level(g) < n <= depth
/// (verified exhaustively at construction).
class TowerAction {
public:
    TowerAction(const Tower& tower, std::vector<TowerGenerator> gens);

    const std::vector<TowerGenerator>& generators() const { return gens_; }
    const TowerGenerator* find(const std::string& name) const;
    /// generators with base_level <= level, in declaration order
    std::vector<const TowerGenerator*> visible_at(int level) const;

private:
    std::vector<TowerGenerator> gens_;
};

/// Word over the generator names with integer exponents.
using GeneratorWord = std::vector<std::pair<std::string, int>>;

std::string word_str(const GeneratorWord& w);

/// Least level at which every letter of the word acts.
int word_base_level(const TowerAction& act, const GeneratorWord& w);

/// The word's permutation of X_level.
Permutation word_perm(const Tower& tw, const TowerAction& act, const GeneratorWord& w, int level);

/// Function on the limit represented at a finite level.
struct LocallyConstantFn {
    int level;
    GroundElement values;  // length |X_level|
};

/// Pull back along the bonds to a finer level; ring operations commute
/// with refinement.
LocallyConstantFn refine(const Tower& tw, const LocallyConstantFn& f, int to_level);

/// (g f)(p) = f(g^{-1} p) at the representation level of f, which must be
/// at or above the base level of every letter.
LocallyConstantFn act_on_function(const Tower& tw, const TowerAction& act, const GeneratorWord& g,
                                  const LocallyConstantFn& f);

/// X_n = {1..2^n}, phi_n(i) = floor((i+1)/2); generator sigma_n at base
/// level n acts on X_m by x -> x + 2^{m-n} mod 2^m, and sigma_{n+1}^2 =
/// sigma_n on all shared levels (verified).
std::pair<Tower, TowerAction> build_prufer_tower(int depth, int depth_bound = kDefaultDepthBound);

/// X_n = {1..n, *}; the bond collapses n+1 into *; generator c_n cycles
/// {1..n} and fixes everything else.
std::pair<Tower, TowerAction> build_onepoint_tower(int depth, int depth_bound = kDefaultDepthBound);

/// Levels are the coset spaces G/H_i of a descending chain of normal
/// subgroups; every group element acts at every level by left translation.
std::pair<Tower, TowerAction> build_quotient_tower(const FiniteGroup& group,
                                                   const std::vector<std::vector<int>>& chain);

struct TestedClopen {
    int level;
    std::vector<int> subset;  // 1-based points
    std::string moving_generator;
    int moved_point;  // point of the lifted subset whose image leaves it
};

struct ClopenSearchResult {
    bool found = false;
    int searched_to_level = 0;
    std::vector<int> invariant_subset;  // when found
    int invariant_level = 0;
    std::vector<TestedClopen> tested;   // witnesses for every rejected subset
    bool exhaustive = true;  // false when only orbit unions were enumerated
};

/// Enumerates proper nonempty level subsets (exhaustively up to 2^16
/// subsets per level, orbit unions of the level-visible subgroup above
/// that) and checks invariance against every generator by lifting to the
/// generator's level.
ClopenSearchResult invariant_clopen_search(const Tower& tw, const TowerAction& act, int max_level);

struct FreenessResult {
    enum class Kind { FreeAtLevel, StableFixedClopen, Inconclusive };
    Kind kind;
    int level = 0;   // free level, or the level of the stable fixed point
    int point = 0;   // stable fixed point (1-based)
};

/// Fixed-point scan of a word down the tower. Emptiness of the fixed set is
/// final (fixed points at finer levels project to fixed points); a fiber
/// tree fixed pointwise through the depth is an identity-on-ideal witness.
FreenessResult eventual_freeness(const Tower& tw, const TowerAction& act, const GeneratorWord& w,
                                 int depth);

struct LevelTransitivity {
    int level;
    bool transitive;
    std::size_t orbit_count;
};

struct InvariantIdealWitness {
    std::vector<int> chain_points;  // fixed point at each level, 1-based
    std::vector<std::string> labels;
};

struct LimitSimplicityReport {
    std::vector<LevelTransitivity> transitivity;
    bool all_transitive = false;
    std::vector<std::pair<GeneratorWord, FreenessResult>> freeness;
    bool all_sampled_free = false;
    std::optional<InvariantIdealWitness> ideal_witness;
    std::string verdict;  // "simplicity evidence to depth D" | "not G-simple" | "inconclusive"
    std::vector<std::string> reasoning;
};

/// Depth-relative simplicity evidence: level transitivity of the visible
/// subgroups plus eventual freeness of the sampled words; a bond-compatible
/// chain of points fixed by every generator certifies a proper invariant
/// function ideal instead.
LimitSimplicityReport limit_simplicity_verdict(const Tower& tw, const TowerAction& act, int depth,
                                               const std::vector<GeneratorWord>& sample);

/// Default word sample: all generators and all products of two generators.
std::vector<GeneratorWord> default_word_sample(const TowerAction& act);

/// Ground ring k^{X_level} with the permutation group generated by the
/// visible generators. strict = error out when a generator lives above the
/// level instead of restricting to the visible ones.
ContextPtr level_ring(const Tower& tw, const TowerAction& act, int level, const Field& f,
                      bool strict = false,
                      std::size_t order_bound = kDefaultGroupOrderBound,
                      std::size_t dim_bound = kDefaultDimBound);

}  // namespace sgr
