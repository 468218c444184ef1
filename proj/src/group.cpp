#include "sgr/group.hpp"

#include <algorithm>
#include <set>

namespace sgr {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table,
                         std::size_t verify_bound)
    : labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw SchemaError("group must be nonempty");
    if (n > verify_bound)
        throw OrderBoundExceeded("group order " + std::to_string(n) + " exceeds bound " +
                                 std::to_string(verify_bound));
    if (table_.size() != n) throw SchemaError("Cayley table row count != order");
    for (const auto& row : table_) {
        if (row.size() != n) throw SchemaError("Cayley table column count != order");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw SchemaError("Cayley table entry out of range");
    }
    // Latin square
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> row_seen(n, false), col_seen(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            if (row_seen[table_[i][j]] || col_seen[table_[j][i]])
                throw SchemaError("Cayley table is not a Latin square");
            row_seen[table_[i][j]] = true;
            col_seen[table_[j][i]] = true;
        }
    }
    // identity
    int id = -1;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = table_[e][i] == static_cast<int>(i) && table_[i][e] == static_cast<int>(i);
        if (ok) {
            id = static_cast<int>(e);
            break;
        }
    }
    if (id < 0) throw SchemaError("Cayley table has no identity element");
    identity_ = id;
    // inverses
    inverse_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (table_[i][j] == identity_ && table_[j][i] == identity_) {
                inverse_[i] = static_cast<int>(j);
                break;
            }
        if (inverse_[i] < 0) throw SchemaError("Cayley table element without inverse");
    }
    // exhaustive associativity
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw SchemaError("Cayley table is not associative");
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"1"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(int m) {
    if (m < 1) throw SchemaError("cyclic group order must be positive");
    std::vector<std::string> labels;
    for (int k = 0; k < m; ++k)
        labels.push_back(k == 0 ? "1" : (k == 1 ? "t" : "t^" + std::to_string(k)));
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = (i + j) % m;
    return FiniteGroup(std::move(labels), std::move(table), std::max<std::size_t>(m, kDefaultGroupOrderBound));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order(), nb = b.order();
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    auto idx = [nb](int i, int j) { return i * nb + j; };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l)
                    table[idx(i, j)][idx(k, l)] = idx(a.mul(i, k), b.mul(j, l));
    return FiniteGroup(std::move(labels), std::move(table),
                       std::max<std::size_t>(na * nb, kDefaultGroupOrderBound));
}

std::optional<int> FiniteGroup::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

int FiniteGroup::element_order(int i) const {
    int ord = 1, x = i;
    while (x != identity_) {
        x = mul(x, i);
        ++ord;
    }
    return ord;
}

bool FiniteGroup::abelian(int* a, int* b) const {
    for (int i = 0; i < order(); ++i)
        for (int j = i + 1; j < order(); ++j)
            if (mul(i, j) != mul(j, i)) {
                if (a) *a = i;
                if (b) *b = j;
                return false;
            }
    return true;
}

std::vector<int> FiniteGroup::closure(std::vector<int> seed) const {
    std::set<int> elems{identity_};
    std::vector<int> work{identity_};
    for (int s : seed)
        if (elems.insert(s).second) work.push_back(s);
    for (std::size_t head = 0; head < work.size(); ++head)
        for (int s : seed) {
            int p = mul(work[head], s);
            if (elems.insert(p).second) work.push_back(p);
            p = mul(s, work[head]);
            if (elems.insert(p).second) work.push_back(p);
        }
    return {elems.begin(), elems.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& sorted_elems) const {
    if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), identity_)) return false;
    for (int a : sorted_elems)
        for (int b : sorted_elems)
            if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), mul(a, b)))
                return false;
    return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& sorted_elems) const {
    for (int g = 0; g < order(); ++g)
        for (int h : sorted_elems) {
            int conj = mul(mul(g, h), inverse_[g]);
            if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), conj)) return false;
        }
    return true;
}

std::vector<std::vector<int>> FiniteGroup::all_subgroups() const {
    std::set<std::vector<int>> found;
    found.insert(closure({}));
    // extend each known subgroup by one extra generator until stable
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(found.begin(), found.end());
        for (const auto& sub : snapshot)
            for (int g = 0; g < order(); ++g) {
                if (std::binary_search(sub.begin(), sub.end(), g)) continue;
                std::vector<int> seed = sub;
                seed.push_back(g);
                if (found.insert(closure(seed)).second) grew = true;
            }
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

int FiniteGroup::word(const std::vector<std::pair<int, int>>& letters) const {
    int acc = identity_;
    for (auto [g, exp] : letters) {
        int base = exp >= 0 ? g : inverse_[g];
        int reps = exp >= 0 ? exp : -exp;
        for (int k = 0; k < reps; ++k) acc = mul(acc, base);
    }
    return acc;
}

}  // namespace sgr
