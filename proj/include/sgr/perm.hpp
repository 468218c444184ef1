#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sgr/errors.hpp"

namespace sgr {

/// Permutation of {1..n} stored as a 1-indexed image list.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || static_cast<std::size_t>(v) > img_.size() || seen[v - 1])
                throw SchemaError("not a permutation: image list is not a bijection of 1..n");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x - 1]; }
    const std::vector<int>& images() const { return img_; }

    /// Composition acting left-to-right on points: (f.after(g))(x) = f(g(x)).
    Permutation after(const Permutation& g) const {
        if (degree() != g.degree()) throw DimensionMismatch("permutation degrees differ");
        std::vector<int> img(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) img[i] = img_[g.img_[i] - 1];
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i] - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(img));
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    std::vector<int> fixed_points() const {
        std::vector<int> fix;
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] == static_cast<int>(i) + 1) fix.push_back(static_cast<int>(i) + 1);
        return fix;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    std::string cycle_string() const {
        std::vector<bool> seen(img_.size(), false);
        std::ostringstream out;
        bool any = false;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i) + 1) continue;
            out << '(';
            int x = static_cast<int>(i) + 1;
            bool first = true;
            while (!seen[x - 1]) {
                seen[x - 1] = true;
                if (!first) out << ' ';
                out << x;
                first = false;
                x = img_[x - 1];
            }
            out << ')';
            any = true;
        }
        return any ? out.str() : "id";
    }

private:
    std::vector<int> img_;
};

}  // namespace sgr
