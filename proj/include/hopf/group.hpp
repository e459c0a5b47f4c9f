#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace hopf {

class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {})
        : table_(std::move(table)), labels_(std::move(labels)) {
        int n = order();
        if (n == 0) throw precondition_failed("group table is empty");
        for (auto& row : table_) {
            if (int(row.size()) != n) throw precondition_failed("group table is not square");
            for (int x : row)
                if (x < 0 || x >= n) throw precondition_failed("group table entry out of range");
        }
        identity_ = -1;
        for (int e = 0; e < n && identity_ < 0; ++e) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
            if (ok) identity_ = e;
        }
        if (identity_ < 0) throw precondition_failed("group table has no identity");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw precondition_failed("group table is not associative");
        inverse_.assign(n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b)
                if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
            if (inverse_[a] < 0) throw precondition_failed("group element without inverse");
        }
        if (labels_.empty())
            for (int a = 0; a < n; ++a) labels_.push_back("g" + std::to_string(a));
        if (int(labels_.size()) != n) throw precondition_failed("label count differs from group order");
    }

    int order() const { return int(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return identity_; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }

    int element_order(int a) const {
        int k = 1;
        for (int x = a; x != identity_; x = mul(x, a)) ++k;
        return k;
    }

    bool is_abelian() const {
        for (int a = 0; a < order(); ++a)
            for (int b = 0; b < order(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    // Greedy generating set: smallest index not yet in the generated subgroup.
    std::vector<int> generators() const {
        std::vector<int> gens;
        std::vector<bool> in(order(), false);
        in[identity_] = true;
        for (int a = 0; a < order(); ++a) {
            if (in[a]) continue;
            gens.push_back(a);
            std::vector<int> frontier;
            for (int x = 0; x < order(); ++x)
                if (in[x]) frontier.push_back(x);
            while (!frontier.empty()) {
                int x = frontier.back();
                frontier.pop_back();
                for (int g : gens) {
                    int y = mul(g, x);
                    if (!in[y]) {
                        in[y] = true;
                        frontier.push_back(y);
                    }
                }
            }
        }
        return gens;
    }

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
    std::vector<std::vector<int>> table_;
    std::vector<std::string> labels_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

inline FiniteGroup cyclic_group(int n, const std::string& gen = "c") {
    if (n < 1) throw precondition_failed("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        labels.push_back(i == 0 ? "1" : i == 1 ? gen : gen + "^" + std::to_string(i));
    }
    return FiniteGroup(t, labels);
}

// Elements (a, b) indexed a * |K| + b.
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& K) {
    int n = G.order(), m = K.order();
    std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) {
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < m; ++d) t[a * m + b][c * m + d] = G.mul(a, c) * m + K.mul(b, d);
            const auto& la = G.labels()[a];
            const auto& lb = K.labels()[b];
            labels.push_back(la == "1" ? lb : lb == "1" ? la : la + lb);
        }
    return FiniteGroup(t, labels);
}

// C2 x C2 = {1, a, b, ab}; the index bits are the exponents of a and b.
inline FiniteGroup klein_group() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return FiniteGroup(t, {"1", "a", "b", "ab"});
}

// Symmetric group on n points, permutations in lexicographic order; product is
// composition (s*t)(i) = s(t(i)).
inline FiniteGroup symmetric_group(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    int N = int(perms.size());
    auto index = [&](const std::vector<int>& q) {
        return int(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    std::vector<std::string> labels;
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index(c);
        }
        std::string s = "[";
        for (int i = 0; i < n; ++i) s += std::to_string(perms[a][i] + 1);
        labels.push_back(s + "]");
    }
    labels[0] = "1";
    return FiniteGroup(t, labels);
}

} // namespace hopf
