#pragma once

// Structured enumeration of unitary coalgebra maps and Hopf maps out of a
// Hopf algebra whose basis consists of grouplikes and skew-primitives, the
// exhaustive oracle, and CoZ^1(H, A).

#include <algorithm>
#include <functional>
#include <map>

#include "linmap.hpp"

namespace hopf {

// { base + sum_k t_k directions[k] : t in F^K }
template <class F>
struct AffineMapFamily {
    using scalar = typename F::scalar;
    HopfPtr<F> dom, cod;
    Matrix<scalar> base;
    std::vector<Matrix<scalar>> directions;

    int dimension() const { return int(directions.size()); }

    LinMap<F> at(const std::vector<scalar>& t) const {
        Matrix<scalar> m = base;
        for (size_t k = 0; k < directions.size(); ++k) {
            if (t[k].is_zero()) continue;
            const auto& D = directions[k];
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    if (!D(i, j).is_zero()) m(i, j) += t[k] * D(i, j);
        }
        return LinMap<F>(dom, cod, m);
    }

    std::uint64_t size_bound() const {
        const auto& f = dom->field();
        if (directions.empty()) return 1;
        if (!f.finite()) return ~0ull;
        long double n = 1;
        for (size_t k = 0; k < directions.size(); ++k) n *= f.order();
        return n > 1e18L ? ~0ull : std::uint64_t(n);
    }

    // Calls fn on every member; infinite fields allow only 0-dimensional families.
    template <class Fn>
    void for_each(Fn&& fn) const {
        const auto& f = dom->field();
        if (directions.empty()) {
            fn(at({}));
            return;
        }
        if (!f.finite()) throw precondition_failed("positive-dimensional map family over an infinite field");
        for_each_vector(f, dimension(), [&](const std::vector<scalar>& t) {
            fn(at(t));
            return true;
        });
    }

    // Imposes L(map) = 0 for a linear L given as a function of the matrix.
    std::optional<AffineMapFamily> restrict(const std::function<std::vector<scalar>(const Matrix<scalar>&)>& L) const {
        const auto& f = dom->field();
        auto l0 = L(base);
        int K = dimension();
        Matrix<scalar> M(int(l0.size()), K, f.zero());
        for (int k = 0; k < K; ++k) {
            auto lk = L(directions[k]);
            M.set_column(k, lk);
        }
        std::vector<scalar> rhs;
        for (auto& x : l0) rhs.push_back(-x);
        auto t0 = solve(f, M, rhs);
        if (!t0) return std::nullopt;
        AffineMapFamily out{dom, cod, at(*t0).m, {}};
        for (const auto& kv : kernel(f, M)) {
            Matrix<scalar> D(base.rows(), base.cols(), f.zero());
            for (int k = 0; k < K; ++k) {
                if (kv[k].is_zero()) continue;
                for (int i = 0; i < D.rows(); ++i)
                    for (int j = 0; j < D.cols(); ++j)
                        if (!directions[k](i, j).is_zero()) D(i, j) += kv[k] * directions[k](i, j);
            }
            out.directions.push_back(std::move(D));
        }
        return out;
    }
};

namespace detail {

template <class F>
struct StrataInfo {
    Strata dom_strata;
    std::vector<typename HopfAlgebra<F>::vec> cod_grouplikes;
};

template <class F>
StrataInfo<F> strata_info(const HopfPtr<F>& dom, const HopfPtr<F>& cod) {
    StrataInfo<F> s{stratify(*dom), grouplikes(*cod)};
    if (!s.dom_strata.complete) throw precondition_failed("strata unavailable: domain basis is not grouplikes and skew-primitives");
    if (dom->unit_index() < 0) throw precondition_failed("strata unavailable: unit is not a basis vector");
    return s;
}

template <class F>
class SkewCache {
public:
    SkewCache(HopfPtr<F> cod, const std::vector<typename HopfAlgebra<F>::vec>& G) : cod_(std::move(cod)), G_(G) {}
    const std::vector<typename HopfAlgebra<F>::vec>& get(int a, int b) {
        auto key = std::make_pair(a, b);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, skew_primitives(*cod_, G_[a], G_[b])).first;
        return it->second;
    }

private:
    HopfPtr<F> cod_;
    const std::vector<typename HopfAlgebra<F>::vec>& G_;
    std::map<std::pair<int, int>, std::vector<typename HopfAlgebra<F>::vec>> cache_;
};

} // namespace detail

// All unitary coalgebra maps dom -> cod as affine families, one per choice of
// images of the grouplike basis vectors (1 fixed).  A skew basis vector in
// P_{g,h} may go anywhere in P_{f(g),f(h)}(cod); every such choice is a
// coalgebra map.  Sound in general, complete for stratified domains.
template <class F>
std::vector<AffineMapFamily<F>> unitary_coalgebra_families(const HopfPtr<F>& dom, const HopfPtr<F>& cod,
                                                          bool bijective_on_grouplikes = false) {
    auto info = detail::strata_info(dom, cod);
    const auto& f = dom->field();
    const auto& G = info.cod_grouplikes;
    int unit_g = -1;
    for (size_t a = 0; a < G.size(); ++a)
        if (G[a] == cod->one()) unit_g = int(a);
    std::vector<int> free_gl;
    for (int i : info.dom_strata.grouplike)
        if (i != dom->unit_index()) free_gl.push_back(i);
    detail::SkewCache<F> skew(cod, G);

    std::vector<AffineMapFamily<F>> out;
    std::vector<int> choice(free_gl.size(), 0);
    std::vector<int> img(dom->dim(), -1);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == free_gl.size()) {
            if (bijective_on_grouplikes) {
                std::vector<int> used;
                for (int i : info.dom_strata.grouplike) used.push_back(img[i]);
                std::sort(used.begin(), used.end());
                if (std::adjacent_find(used.begin(), used.end()) != used.end() || used.size() != G.size()) return;
            }
            AffineMapFamily<F> fam{dom, cod, Matrix<typename F::scalar>(cod->dim(), dom->dim(), f.zero()), {}};
            for (int i : info.dom_strata.grouplike) fam.base.set_column(i, G[img[i]]);
            for (const auto& s : info.dom_strata.skew)
                for (const auto& v : skew.get(img[s.g], img[s.h])) {
                    Matrix<typename F::scalar> D(cod->dim(), dom->dim(), f.zero());
                    D.set_column(s.index, v);
                    fam.directions.push_back(std::move(D));
                }
            out.push_back(std::move(fam));
            return;
        }
        for (size_t a = 0; a < G.size(); ++a) {
            img[free_gl[k]] = int(a);
            rec(k + 1);
        }
    };
    img[dom->unit_index()] = unit_g;
    if (unit_g < 0) throw error("codomain unit is not grouplike");
    rec(0);
    return out;
}

// Linear constraint for cocentrality: r(h_(1)) (x) h_(2) - r(h_(2)) (x) h_(1).
template <class F>
std::function<std::vector<typename F::scalar>(const Matrix<typename F::scalar>&)> cocentral_constraint(const HopfPtr<F>& H,
                                                                                                 int cod_dim) {
    return [H, cod_dim](const Matrix<typename F::scalar>& m) {
        int dh = H->dim();
        const auto& f = H->field();
        std::vector<typename F::scalar> out(size_t(dh) * cod_dim * dh, f.zero());
        for (int i = 0; i < dh; ++i)
            for (const auto& t : H->coproduct(i))
                for (int a = 0; a < cod_dim; ++a) {
                    if (!m(a, t.i).is_zero()) out[(size_t(i) * cod_dim + a) * dh + t.j] += t.c * m(a, t.i);
                    if (!m(a, t.j).is_zero()) out[(size_t(i) * cod_dim + a) * dh + t.i] -= t.c * m(a, t.j);
                }
        return out;
    };
}

template <class F>
std::vector<LinMap<F>> sorted_unique(std::vector<LinMap<F>> maps) {
    std::sort(maps.begin(), maps.end(), [](const LinMap<F>& a, const LinMap<F>& b) { return a.m < b.m; });
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    return maps;
}

template <class F>
std::vector<LinMap<F>> unitary_coalgebra_maps(const HopfPtr<F>& dom, const HopfPtr<F>& cod, bool cocentral_only = false,
                                              bool bijective = false) {
    std::vector<LinMap<F>> out;
    std::uint64_t budget = search_budget(), used = 0;
    for (const auto& fam0 : unitary_coalgebra_families(dom, cod, bijective)) {
        std::optional<AffineMapFamily<F>> fam = fam0;
        if (cocentral_only) fam = fam0.restrict(cocentral_constraint(dom, cod->dim()));
        if (!fam) continue;
        used += fam->size_bound();
        if (used > budget) throw budget_exceeded("unitary coalgebra map family exceeds the search budget");
        fam->for_each([&](LinMap<F> m) {
            if (!bijective || is_bijective(m)) out.push_back(std::move(m));
        });
    }
    return sorted_unique(std::move(out));
}

// Independent oracle: backtracking over all matrices column by column, each
// column ranging over F_p^dim; the coalgebra condition of a column is checked
// as soon as every column it mentions is assigned.  No strata are used.
template <class F>
std::vector<LinMap<F>> exhaustive_unitary_coalgebra_maps(const HopfPtr<F>& dom, const HopfPtr<F>& cod) {
    const auto& f = dom->field();
    if (!f.finite() || f.order() > 5 || dom->dim() * cod->dim() > 16)
        throw precondition_failed("exhaustive oracle needs p <= 5 and dom.dim * cod.dim <= 16");
    int dd = dom->dim();
    std::vector<int> last_needed(dd);
    for (int j = 0; j < dd; ++j) {
        int mx = j;
        for (const auto& t : dom->coproduct(j)) mx = std::max({mx, t.i, t.j});
        last_needed[j] = mx;
    }
    std::vector<LinMap<F>> out;
    LinMap<F> cur(dom, cod);
    std::uint64_t budget = search_budget(), used = 0;
    std::function<void(int)> rec = [&](int col) {
        for (int j = 0; j < col; ++j)
            if (last_needed[j] == col - 1 && !is_comultiplicative(cur, j)) return;
        if (col == dd) {
            if (is_unitary(cur) && is_counitary(cur)) out.push_back(cur);
            return;
        }
        for_each_vector(f, cod->dim(), [&](const std::vector<typename F::scalar>& v) {
            if (++used > budget) throw budget_exceeded("exhaustive oracle exceeded the search budget");
            if (!(cod->eps(v) == dom->counit()[col])) return true;
            if (col == dom->unit_index() && v != cod->one()) return true;
            cur.m.set_column(col, v);
            rec(col + 1);
            return true;
        });
    };
    rec(0);
    return sorted_unique(std::move(out));
}

// ------------------------------------------------------------ Hopf maps from generators

// Algebra generators chosen greedily (grouplikes first) and a basis of words
// in them.  basis_in_words(k, i) is the coefficient of word k in b_i.
template <class F>
struct GeneratorData {
    using scalar = typename F::scalar;
    std::vector<int> gens;
    std::vector<std::vector<int>> words; // positions into gens
    Matrix<scalar> basis_in_words;
    std::vector<std::vector<int>> group_word; // grouplike basis index -> word in grouplike gens
};

template <class F>
GeneratorData<F> generator_data(const HopfAlgebra<F>& A) {
    using vec = typename HopfAlgebra<F>::vec;
    const auto& f = A.field();
    auto strata = stratify(A);
    if (!strata.complete || A.unit_index() < 0) throw precondition_failed("strata unavailable: generators need a stratified basis");
    int d = A.dim();

    auto closure = [&](const std::vector<int>& gens, std::vector<std::vector<int>>* words_out) {
        std::vector<vec> span{A.one()};
        std::vector<std::vector<int>> words{{}};
        for (size_t q = 0; q < span.size(); ++q)
            for (size_t g = 0; g < gens.size(); ++g) {
                vec v = A.mul(span[q], A.basis(gens[g]));
                Matrix<scalar_t<F>> M(d, int(span.size()), f.zero());
                for (size_t k = 0; k < span.size(); ++k) M.set_column(int(k), span[k]);
                if (solve(f, M, v)) continue;
                span.push_back(v);
                auto w = words[q];
                w.push_back(int(g));
                words.push_back(w);
            }
        if (words_out) *words_out = words;
        return span;
    };

    GeneratorData<F> gd;
    std::vector<int> order = strata.grouplike;
    for (const auto& s : strata.skew) order.push_back(s.index);
    std::vector<vec> span = {A.one()};
    for (int i : order) {
        Matrix<scalar_t<F>> M(d, int(span.size()), f.zero());
        for (size_t k = 0; k < span.size(); ++k) M.set_column(int(k), span[k]);
        if (solve(f, M, A.basis(i))) continue;
        gd.gens.push_back(i);
        span = closure(gd.gens, nullptr);
    }
    span = closure(gd.gens, &gd.words);
    if (int(span.size()) != d) throw error("generator closure does not span the algebra");
    Matrix<scalar_t<F>> W(d, d, f.zero());
    for (int k = 0; k < d; ++k) W.set_column(k, span[k]);
    auto Winv = inverse(f, W);
    gd.basis_in_words = *Winv;

    // words for grouplike basis vectors, through the grouplike generators only
    gd.group_word.assign(d, {});
    std::vector<bool> seen(d, false);
    std::vector<int> queue{A.unit_index()};
    seen[A.unit_index()] = true;
    for (size_t q = 0; q < queue.size(); ++q)
        for (size_t g = 0; g < gd.gens.size(); ++g) {
            int gi = gd.gens[g];
            if (std::find(strata.grouplike.begin(), strata.grouplike.end(), gi) == strata.grouplike.end()) continue;
            const auto& p = A.product(queue[q], gi);
            if (p.size() != 1 || !p[0].c.is_one()) throw error("grouplike product is not a basis grouplike");
            int r = p[0].i;
            if (seen[r]) continue;
            seen[r] = true;
            gd.group_word[r] = gd.group_word[queue[q]];
            gd.group_word[r].push_back(int(g));
            queue.push_back(r);
        }
    return gd;
}

template <class F>
LinMap<F> map_from_generator_images(const HopfPtr<F>& dom, const HopfPtr<F>& cod, const GeneratorData<F>& gd,
                                    const std::vector<typename HopfAlgebra<F>::vec>& images) {
    const auto& f = dom->field();
    std::vector<typename HopfAlgebra<F>::vec> wimg;
    for (const auto& w : gd.words) {
        auto v = cod->one();
        for (int g : w) v = cod->mul(v, images[g]);
        wimg.push_back(std::move(v));
    }
    LinMap<F> out(dom, cod);
    for (int i = 0; i < dom->dim(); ++i) {
        auto col = cod->zero();
        for (size_t k = 0; k < wimg.size(); ++k) {
            const auto& c = gd.basis_in_words(int(k), i);
            if (c.is_zero()) continue;
            for (int a = 0; a < cod->dim(); ++a) col[a] += c * wimg[k][a];
        }
        out.m.set_column(i, col);
    }
    (void)f;
    return out;
}

// Every Hopf map dom -> cod.  A Hopf map sends grouplikes to G(cod) and
// P_{g,h} into P_{f(g),f(h)}(cod), so ranging the generator images over these
// strata and keeping the verified algebra + coalgebra maps is complete.
template <class F>
std::vector<LinMap<F>> hopf_maps(const HopfPtr<F>& dom, const HopfPtr<F>& cod) {
    using vec = typename HopfAlgebra<F>::vec;
    auto gd = generator_data(*dom);
    auto strata = stratify(*dom);
    auto G = grouplikes(*cod);
    detail::SkewCache<F> skew(cod, G);
    const auto& f = dom->field();
    std::uint64_t budget = search_budget(), used = 0;

    std::vector<int> kind(gd.gens.size(), -1); // -1 grouplike, else position in strata.skew
    for (size_t g = 0; g < gd.gens.size(); ++g)
        for (size_t s = 0; s < strata.skew.size(); ++s)
            if (strata.skew[s].index == gd.gens[g]) kind[g] = int(s);

    std::vector<LinMap<F>> out;
    std::vector<vec> images(gd.gens.size());
    std::vector<int> gimg(gd.gens.size(), -1);

    auto group_image = [&](int basis_index) -> int {
        vec v = cod->one();
        for (int g : gd.group_word[basis_index]) v = cod->mul(v, images[g]);
        for (size_t a = 0; a < G.size(); ++a)
            if (G[a] == v) return int(a);
        return -1;
    };

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == gd.gens.size()) {
            if (++used > budget) throw budget_exceeded("Hopf map search exceeded the search budget");
            auto m = map_from_generator_images(dom, cod, gd, images);
            if (is_hopf_map(m)) out.push_back(std::move(m));
            return;
        }
        if (kind[k] < 0) {
            for (size_t a = 0; a < G.size(); ++a) {
                images[k] = G[a];
                gimg[k] = int(a);
                rec(k + 1);
            }
            return;
        }
        const auto& s = strata.skew[kind[k]];
        int a = group_image(s.g), b = group_image(s.h);
        if (a < 0 || b < 0) return;
        const auto& P = skew.get(a, b);
        if (P.empty()) {
            images[k] = cod->zero();
            rec(k + 1);
            return;
        }
        if (!f.finite()) throw precondition_failed("Hopf map search over an infinite field with a nonzero skew-primitive space");
        for_each_vector(f, int(P.size()), [&](const std::vector<typename F::scalar>& t) {
            vec v = cod->zero();
            for (size_t q = 0; q < P.size(); ++q)
                if (!t[q].is_zero())
                    for (int i = 0; i < cod->dim(); ++i) v[i] += t[q] * P[q][i];
            images[k] = v;
            rec(k + 1);
            return true;
        });
    };
    rec(0);
    return sorted_unique(std::move(out));
}

// ------------------------------------------------------------ CoZ^1

template <class F>
struct ConvolutionGroupTable {
    std::vector<LinMap<F>> elements;
    std::vector<std::vector<int>> table;
    int identity = 0;
    std::vector<int> inverse;
    int order() const { return int(elements.size()); }
};

// Filters the candidates by cocentrality, closes the convolution table and
// checks the group axioms and S^2 o r = r.
template <class F>
ConvolutionGroupTable<F> coz1_group(const HopfPtr<F>& H, const HopfPtr<F>& A, std::vector<LinMap<F>> candidates) {
    ConvolutionGroupTable<F> T;
    for (auto& c : candidates)
        if (is_unitary(c) && is_coalgebra_map(c) && is_cocentral(c)) T.elements.push_back(std::move(c));
    T.elements = sorted_unique(std::move(T.elements));
    int n = T.order();
    auto index_of = [&](const LinMap<F>& m) {
        auto it = std::lower_bound(T.elements.begin(), T.elements.end(), m,
                                   [](const LinMap<F>& a, const LinMap<F>& b) { return a.m < b.m; });
        if (it == T.elements.end() || !(*it == m)) throw error("CoZ1 candidate set is not closed under convolution");
        return int(it - T.elements.begin());
    };
    T.identity = index_of(trivial_map(H, A));
    T.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) T.table[a][b] = index_of(convolve(T.elements[a], T.elements[b]));
    T.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (T.table[a][b] == T.identity && T.table[b][a] == T.identity) T.inverse[a] = b;
        if (T.inverse[a] < 0) throw error("CoZ1 element without convolution inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (T.table[T.table[a][b]][c] != T.table[a][T.table[b][c]]) throw error("CoZ1 table not associative");
    auto S2 = compose(antipode_map(A), antipode_map(A));
    for (const auto& r : T.elements)
        if (!(compose(S2, r) == r)) throw error("CoZ1 element with S^2 o r != r");
    return T;
}

template <class F>
ConvolutionGroupTable<F> coz1_group(const HopfPtr<F>& H, const HopfPtr<F>& A) {
    return coz1_group(H, A, unitary_coalgebra_maps(H, A, true));
}

} // namespace hopf
