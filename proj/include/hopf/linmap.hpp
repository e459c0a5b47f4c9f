#pragma once

// Linear maps between based Hopf algebras, the convolution product and the
// map predicates used by the morphism machinery.

#include <cstdlib>
#include <string>

#include "hopf_algebra.hpp"

namespace hopf {

inline std::uint64_t search_budget() {
    if (const char* s = std::getenv("HOPF_SEARCH_BUDGET")) {
        char* end = nullptr;
        auto v = std::strtoull(s, &end, 10);
        if (end != s && v > 0) return v;
    }
    return 100000000ull;
}

template <class F>
struct LinMap {
    using scalar = typename F::scalar;
    using vec = std::vector<scalar>;

    HopfPtr<F> dom, cod;
    Matrix<scalar> m; // cod.dim x dom.dim, column j is the image of b_j

    LinMap(HopfPtr<F> d, HopfPtr<F> c, Matrix<scalar> mat) : dom(std::move(d)), cod(std::move(c)), m(std::move(mat)) {
        if (m.rows() != cod->dim() || m.cols() != dom->dim()) throw dimension_mismatch("LinMap: matrix shape");
        if (!(dom->field().spec() == cod->field().spec())) throw field_mismatch("LinMap: domain and codomain fields differ");
    }
    LinMap(HopfPtr<F> d, HopfPtr<F> c) : LinMap(d, c, Matrix<scalar>(c->dim(), d->dim(), c->field().zero())) {}

    const F& field() const { return cod->field(); }
    vec operator()(const vec& x) const { return matvec(field(), m, x); }
    vec image(int j) const { return m.column(j); }

    friend bool operator==(const LinMap& a, const LinMap& b) { return a.m == b.m; }
};

template <class F>
LinMap<F> identity_map(const HopfPtr<F>& H) {
    return LinMap<F>(H, H, identity_matrix(H->field(), H->dim()));
}

// unit o counit
template <class F>
LinMap<F> trivial_map(const HopfPtr<F>& dom, const HopfPtr<F>& cod) {
    LinMap<F> t(dom, cod);
    for (int j = 0; j < dom->dim(); ++j)
        for (int i = 0; i < cod->dim(); ++i) t.m(i, j) = cod->one()[i] * dom->counit()[j];
    return t;
}

template <class F>
LinMap<F> compose(const LinMap<F>& g, const LinMap<F>& f) {
    if (g.dom->dim() != f.cod->dim()) throw dimension_mismatch("compose: codomain/domain mismatch");
    return LinMap<F>(f.dom, g.cod, matmul(f.field(), g.m, f.m));
}

template <class F>
LinMap<F> antipode_map(const HopfPtr<F>& H) {
    return LinMap<F>(H, H, H->antipode());
}

// (f * g)(c) = f(c_(1)) g(c_(2))
template <class F>
LinMap<F> convolve(const LinMap<F>& f, const LinMap<F>& g) {
    if (f.dom->dim() != g.dom->dim() || f.cod->dim() != g.cod->dim()) throw dimension_mismatch("convolve: shapes differ");
    const auto& C = *f.dom;
    const auto& A = *f.cod;
    LinMap<F> out(f.dom, f.cod);
    for (int i = 0; i < C.dim(); ++i) {
        auto col = A.zero();
        for (const auto& t : C.coproduct(i))
            for (int a = 0; a < A.dim(); ++a) {
                if (f.m(a, t.i).is_zero()) continue;
                for (int b = 0; b < A.dim(); ++b)
                    if (!g.m(b, t.j).is_zero()) A.add_product(col, a, b, t.c * f.m(a, t.i) * g.m(b, t.j));
            }
        out.m.set_column(i, col);
    }
    return out;
}

struct MapFlags {
    bool is_coalgebra_map = false, is_algebra_map = false, is_unitary = false, is_counitary = false;
    bool hopf() const { return is_coalgebra_map && is_algebra_map && is_unitary && is_counitary; }
};

template <class F>
bool is_unitary(const LinMap<F>& f) {
    return f(f.dom->one()) == f.cod->one();
}

template <class F>
bool is_counitary(const LinMap<F>& f) {
    for (int j = 0; j < f.dom->dim(); ++j)
        if (!(f.cod->eps(f.image(j)) == f.dom->counit()[j])) return false;
    return true;
}

// Delta f(b_j) = (f (x) f) Delta(b_j) for every j (counit included).
template <class F>
bool is_comultiplicative(const LinMap<F>& f, int j) {
    const auto& D = *f.cod;
    int d = D.dim();
    auto lhs = D.delta(f.image(j));
    std::vector<typename F::scalar> rhs(size_t(d) * d, f.field().zero());
    for (const auto& t : f.dom->coproduct(j))
        for (int a = 0; a < d; ++a) {
            if (f.m(a, t.i).is_zero()) continue;
            for (int b = 0; b < d; ++b)
                if (!f.m(b, t.j).is_zero()) rhs[size_t(a) * d + b] += t.c * f.m(a, t.i) * f.m(b, t.j);
        }
    return lhs == rhs;
}

template <class F>
bool is_coalgebra_map(const LinMap<F>& f) {
    if (!is_counitary(f)) return false;
    for (int j = 0; j < f.dom->dim(); ++j)
        if (!is_comultiplicative(f, j)) return false;
    return true;
}

template <class F>
bool is_multiplicative(const LinMap<F>& f) {
    const auto& C = *f.dom;
    const auto& D = *f.cod;
    std::vector<typename LinMap<F>::vec> im;
    for (int j = 0; j < C.dim(); ++j) im.push_back(f.image(j));
    for (int i = 0; i < C.dim(); ++i)
        for (int j = 0; j < C.dim(); ++j) {
            auto lhs = D.zero();
            for (const auto& t : C.product(i, j))
                for (int a = 0; a < D.dim(); ++a)
                    if (!f.m(a, t.i).is_zero()) lhs[a] += t.c * f.m(a, t.i);
            if (lhs != D.mul(im[i], im[j])) return false;
        }
    return true;
}

template <class F>
MapFlags map_predicates(const LinMap<F>& f) {
    MapFlags fl;
    fl.is_unitary = is_unitary(f);
    fl.is_counitary = is_counitary(f);
    fl.is_coalgebra_map = is_coalgebra_map(f);
    fl.is_algebra_map = fl.is_unitary && is_multiplicative(f);
    return fl;
}

template <class F>
bool is_hopf_map(const LinMap<F>& f) {
    return map_predicates(f).hopf();
}

template <class F>
bool is_bijective(const LinMap<F>& f) {
    return f.m.rows() == f.m.cols() && rank(f.field(), f.m) == f.m.rows();
}

template <class F>
std::optional<LinMap<F>> inverse_map(const LinMap<F>& f) {
    auto inv = inverse(f.field(), f.m);
    if (!inv) return std::nullopt;
    return LinMap<F>(f.cod, f.dom, *inv);
}

// r(h_(1)) (x) h_(2) = r(h_(2)) (x) h_(1) in A (x) H.
template <class F>
bool is_cocentral(const LinMap<F>& r) {
    const auto& H = *r.dom;
    int da = r.cod->dim(), dh = H.dim();
    for (int i = 0; i < dh; ++i) {
        std::vector<typename F::scalar> l(size_t(da) * dh, r.field().zero()), rr = l;
        for (const auto& t : H.coproduct(i))
            for (int a = 0; a < da; ++a) {
                if (!r.m(a, t.i).is_zero()) l[size_t(a) * dh + t.j] += t.c * r.m(a, t.i);
                if (!r.m(a, t.j).is_zero()) rr[size_t(a) * dh + t.i] += t.c * r.m(a, t.j);
            }
        if (l != rr) return false;
    }
    return true;
}

template <class F>
bool is_cocentral_checked(const LinMap<F>& r) {
    if (!is_coalgebra_map(r)) throw precondition_failed("is_cocentral: not a coalgebra map");
    return is_cocentral(r);
}

// ------------------------------------------------------------ grouplikes and skew-primitives

template <class F>
bool is_grouplike(const HopfAlgebra<F>& H, const typename HopfAlgebra<F>::vec& x) {
    if (!(H.eps(x) == H.field().one())) return false;
    auto dx = H.delta(x);
    int d = H.dim();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (!(dx[size_t(a) * d + b] == x[a] * x[b])) return false;
    return true;
}

// Basis stratification: indices of grouplike basis vectors and of basis vectors
// x with Delta x = x (x) b_g + b_h (x) x for grouplike basis vectors b_g, b_h.
struct Strata {
    struct Skew {
        int index, g, h; // x in P_{g,h}
    };
    std::vector<int> grouplike;
    std::vector<Skew> skew;
    bool complete = false; // every basis vector is classified
};

template <class F>
Strata stratify(const HopfAlgebra<F>& H) {
    Strata s;
    int d = H.dim();
    std::vector<bool> gl(d, false);
    for (int i = 0; i < d; ++i) {
        const auto& c = H.coproduct(i);
        if (c.size() == 1 && c[0].i == i && c[0].j == i && c[0].c.is_one() && H.counit()[i].is_one()) {
            gl[i] = true;
            s.grouplike.push_back(i);
        }
    }
    for (int i = 0; i < d; ++i) {
        if (gl[i]) continue;
        const auto& c = H.coproduct(i);
        if (c.size() != 2) continue;
        int g = -1, h = -1;
        for (const auto& t : c) {
            if (!t.c.is_one()) continue;
            if (t.i == i && t.j != i && gl[t.j]) g = t.j;
            else if (t.j == i && t.i != i && gl[t.i]) h = t.i;
        }
        if (g >= 0 && h >= 0) s.skew.push_back({i, g, h});
    }
    s.complete = int(s.grouplike.size() + s.skew.size()) == d;
    return s;
}

// Enumerates every vector of F^n with a callback; returns false when stopped.
template <class F, class Fn>
bool for_each_vector(const F& f, int n, Fn&& fn) {
    auto els = f.elements();
    std::vector<int> idx(n, 0);
    std::vector<typename F::scalar> v(n, els[0]);
    while (true) {
        if (!fn(v)) return false;
        int k = n - 1;
        while (k >= 0 && idx[k] + 1 == int(els.size())) {
            idx[k] = 0;
            v[k] = els[0];
            --k;
        }
        if (k < 0) return true;
        v[k] = els[++idx[k]];
    }
}

// G(H). For a stratified basis the grouplikes are exactly the grouplike basis
// vectors (a grouplike has no component on a skew-primitive basis vector, since
// the x (x) x coefficient of Delta vanishes).  Otherwise the hint is verified, or
// F_p^dim is searched exhaustively within the budget.
template <class F>
std::vector<typename HopfAlgebra<F>::vec> grouplikes(const HopfAlgebra<F>& H,
                                                      const std::vector<typename HopfAlgebra<F>::vec>* hint = nullptr) {
    using vec = typename HopfAlgebra<F>::vec;
    std::vector<vec> out;
    if (hint) {
        for (const auto& x : *hint) {
            if (!is_grouplike(H, x)) throw precondition_failed("grouplikes: hinted vector is not grouplike");
            out.push_back(x);
        }
        return out;
    }
    auto s = stratify(H);
    if (s.complete) {
        for (int i : s.grouplike) out.push_back(H.basis(i));
        return out;
    }
    return grouplikes_exhaustive(H);
}

template <class F>
std::vector<typename HopfAlgebra<F>::vec> grouplikes_exhaustive(const HopfAlgebra<F>& H) {
    using vec = typename HopfAlgebra<F>::vec;
    const auto& f = H.field();
    if (!f.finite()) throw budget_exceeded("grouplikes: infinite field needs a hint");
    long double n = 1;
    for (int i = 0; i < H.dim(); ++i) n *= f.order();
    if (n > (long double)search_budget()) throw budget_exceeded("grouplikes: p^dim exceeds the search budget; give a hint");
    std::vector<vec> out;
    for_each_vector(f, H.dim(), [&](const vec& x) {
        if (is_grouplike(H, x)) out.push_back(x);
        return true;
    });
    return out;
}

// Basis of P_{g,h}(H) = ker(x -> Delta x - x (x) g - h (x) x).
template <class F>
std::vector<typename HopfAlgebra<F>::vec> skew_primitives(const HopfAlgebra<F>& H, const typename HopfAlgebra<F>::vec& g,
                                                          const typename HopfAlgebra<F>::vec& h) {
    if (!is_grouplike(H, g) || !is_grouplike(H, h)) throw precondition_failed("skew_primitives: g or h not grouplike");
    int d = H.dim();
    const auto& f = H.field();
    Matrix<typename F::scalar> M(d * d, d, f.zero());
    for (int j = 0; j < d; ++j) {
        auto col = H.delta(H.basis(j));
        for (int a = 0; a < d; ++a) {
            col[size_t(j) * d + a] -= g[a];
            col[size_t(a) * d + j] -= h[a];
        }
        M.set_column(j, col);
    }
    return kernel(f, M);
}

} // namespace hopf
