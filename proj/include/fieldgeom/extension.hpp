#ifndef FIELDGEOM_EXTENSION_HPP
#define FIELDGEOM_EXTENSION_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fieldgeom/ratfunc.hpp"

namespace fieldgeom {

// The ambient extension Q(S) = K inside L = Q(t1..tn). S is a subset of
// variable indices (zero-based); the remaining variables form a
// transcendence basis of L over K.
class ExtensionSpec {
public:
    explicit ExtensionSpec(int nvars, std::set<int> k_vars = {},
                           std::vector<std::string> labels = {})
        : nvars_(nvars), in_k_(nvars, false), labels_(std::move(labels)) {
        if (nvars < 0) throw std::invalid_argument("negative variable count");
        for (int v : k_vars) {
            if (v < 0 || v >= nvars) throw std::invalid_argument("K-variable index out of range");
            in_k_[v] = true;
        }
        for (int j = 0; j < nvars; ++j)
            if (!in_k_[j]) free_vars_.push_back(j);
        if (labels_.empty())
            for (int j = 0; j < nvars; ++j) labels_.push_back("t" + std::to_string(j + 1));
    }

    int nvars() const { return nvars_; }
    bool in_k(int var) const { return in_k_[var]; }
    const std::vector<int>& free_vars() const { return free_vars_; }
    int trdeg_ambient() const { return static_cast<int>(free_vars_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<int> k_vars() const {
        std::vector<int> ks;
        for (int j = 0; j < nvars_; ++j)
            if (in_k_[j]) ks.push_back(j);
        return ks;
    }

    bool operator==(const ExtensionSpec& o) const {
        return nvars_ == o.nvars_ && in_k_ == o.in_k_;
    }
    bool operator!=(const ExtensionSpec& o) const { return !(*this == o); }

private:
    int nvars_;
    std::vector<bool> in_k_;
    std::vector<int> free_vars_;
    std::vector<std::string> labels_;
};

using ElementSet = std::vector<RatFunc>;

} // namespace fieldgeom

#endif
