#pragma once

// The quantum groups H_{4n,w} = H4 # k[C_n], a structured search for matched
// pairs (A, k[G]) with A pointed, and the exponent arithmetic deciding
// isomorphism classes and automorphism groups of the family.

#include <algorithm>
#include <numeric>

#include "arith.hpp"
#include "morphisms.hpp"

namespace hopf {

template <class F>
struct H4nSpec {
    using scalar = typename F::scalar;
    int n;
    long long t; // exponent of xi
    F field;
    scalar xi;
    long long nu;

    scalar omega() const { return power(xi, t, field.one()); }
};

template <class F>
H4nSpec<F> make_h4n_spec(int n, long long t, const F& f) {
    if (n < 1) throw precondition_failed("n must be positive");
    auto no = nu_order(f, n);
    if (t < 0 || t >= no.nu) throw precondition_failed("t must satisfy 0 <= t < nu(n)");
    return H4nSpec<F>{n, t, f, no.xi, no.nu};
}

namespace detail {

template <class F>
void require_odd_characteristic(const F& f) {
    if (f.from_int(2).is_zero()) throw precondition_failed("characteristic 2 is excluded");
}

inline std::vector<std::string> h4n_labels(int n) {
    auto C = cyclic_group(n);
    const std::string h4[4] = {"1", "g", "x", "gx"};
    std::vector<std::string> out;
    for (const auto& a : h4)
        for (int i = 0; i < n; ++i) out.push_back(pair_label(a, C.labels()[i]));
    return out;
}

} // namespace detail

// Generated by g, x, c with g^2 = c^n = 1, x^2 = 0, xg = -gx, cg = gc and
// cx = w xc.  Basis g^a x^e c^i at index (a + 2e) n + i, matching H4 # k[C_n].
template <class F>
HopfAlgebra<F> build_h4n(int n, const typename F::scalar& omega, const F& f) {
    if (n < 1) throw precondition_failed("n must be positive");
    detail::require_odd_characteristic(f);
    if (!(power(omega, n, f.one()) == f.one())) throw precondition_failed("omega^n != 1");
    std::vector<typename F::scalar> w(n, f.one());
    for (int i = 1; i < n; ++i) w[i] = w[i - 1] * omega;
    auto idx = [n](int a, int e, long long i) { return int(((a & 1) + 2 * e) * n + arith::mod(i, n)); };
    auto one = f.one();
    TensorBuilder<F> b(f, 4 * n);
    for (int a = 0; a < 2; ++a)
        for (int e = 0; e < 2; ++e)
            for (int i = 0; i < n; ++i) {
                int src = idx(a, e, i);
                for (int a2 = 0; a2 < 2; ++a2)
                    for (int e2 = 0; e2 < 2; ++e2) {
                        if (e + e2 > 1) continue;
                        for (int j = 0; j < n; ++j) {
                            // c^i g^a2 x^e2 = w^{i e2} g^a2 x^e2 c^i and x g = -g x
                            auto c = w[(i * e2) % n];
                            if (e && a2) c = -c;
                            b.m(src, idx(a2, e2, j), idx(a + a2, e + e2, i + j)) = c;
                        }
                    }
                if (e == 0) {
                    b.c(src, src, src) = one;
                    b.counit[src] = one;
                    b.antipode(idx(a, 0, -i), src) = one;
                } else {
                    b.c(src, src, idx(a, 0, i)) = one;
                    b.c(src, idx(a + 1, 0, i), src) = one;
                    // S(g^a x c^i) = -(-1)^a w^{-i} g^{a+1} x c^{-i}
                    auto c = -w[arith::mod(-i, n)];
                    if (a) c = -c;
                    b.antipode(idx(a + 1, 1, -i), src) = c;
                }
            }
    b.unit[idx(0, 0, 0)] = one;
    return b.build(detail::h4n_labels(n));
}

template <class F>
HopfAlgebra<F> build_h4n(const H4nSpec<F>& spec) {
    return build_h4n(spec.n, spec.omega(), spec.field);
}

// Trivial right action; c^i |> g^a x^e = w^{ie} g^a x^e.
template <class F>
MatchedPair<F> h4_cn_pair(int n, const typename F::scalar& omega, const F& f) {
    detail::require_odd_characteristic(f);
    if (!(power(omega, n, f.one()) == f.one())) throw precondition_failed("omega^n != 1");
    auto A = share(sweedler_h4(f));
    auto H = share(group_algebra(cyclic_group(n), f));
    std::vector<std::vector<typename F::scalar>> table;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < 4; ++a) {
            auto v = A->basis(a);
            if (a >= 2) v[a] = power(omega, i, f.one());
            table.push_back(std::move(v));
        }
    return smash_pair(A, H, std::move(table), smash_side::left);
}

template <class F>
Bicrossed<F> h4n_bicrossed(const H4nSpec<F>& spec) {
    return make_bicrossed(h4_cn_pair(spec.n, spec.omega(), spec.field));
}

// ------------------------------------------------------------ matched pair search

// Over a finite field every coordinate is tried.  An infinite field has no
// finite coordinate range, so free coordinates are probed over the roots of
// unity of order dividing the generator order together with 0, +-1, +-2; every
// returned pair is still fully verified.
template <class F>
std::vector<typename F::scalar> coordinate_values(const F& f, int order) {
    using S = typename F::scalar;
    if (f.finite()) return f.elements();
    std::vector<S> out{f.zero()};
    auto add = [&](const S& x) {
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    };
    for (const auto& w : roots_of_unity(f, order)) add(w);
    for (long long k : {1, -1, 2, -2}) add(f.from_int(k));
    return out;
}

template <class F>
struct GeneratorAction {
    using scalar = typename F::scalar;
    Matrix<scalar> T;                // s |> on A
    std::vector<std::vector<scalar>> R; // s <| b_a in k[G]
};

template <class F>
struct MatchedPairSearch {
    std::vector<MatchedPair<F>> pairs;
    std::vector<int> generators;
    std::vector<size_t> candidates_per_generator;
    std::size_t combinations = 0;
};

namespace detail {

template <class S, class Fn>
void for_each_tuple(const std::vector<S>& values, int m, Fn&& fn) {
    std::vector<int> idx(m, 0);
    std::vector<S> v(m, values[0]);
    while (true) {
        fn(v);
        int k = m - 1;
        while (k >= 0 && idx[k] + 1 == int(values.size())) {
            idx[k] = 0;
            v[k] = values[0];
            --k;
        }
        if (k < 0) return;
        v[k] = values[++idx[k]];
    }
}

template <class S>
std::vector<S> combination(const std::vector<std::vector<S>>& basis, const std::vector<S>& t, std::vector<S> base) {
    for (size_t k = 0; k < basis.size(); ++k)
        if (!t[k].is_zero()) axpy(base, t[k], basis[k]);
    return base;
}

// Candidates for s |> as a bijective unitary coalgebra endomorphism T of A with
// T^order = id.  T permutes the grouplike basis and sends x in P_{g,h} into
// P_{T g, T h}.
template <class F>
std::vector<Matrix<typename F::scalar>> generator_automorphisms(const HopfAlgebra<F>& A, const Strata& st, int order,
                                                                const std::vector<typename F::scalar>& values) {
    using S = typename F::scalar;
    using vec = std::vector<S>;
    const auto& f = A.field();
    int d = A.dim();
    int u = A.unit_index();
    std::vector<Matrix<S>> out;
    auto idm = identity_matrix(f, d);
    std::vector<int> gl;
    for (int g : st.grouplike)
        if (g != u) gl.push_back(g);
    std::vector<int> img(gl.size(), 0);
    std::uint64_t examined = 0, budget = search_budget();
    while (true) {
        std::vector<int> tg(d, -1);
        tg[u] = u;
        for (size_t k = 0; k < gl.size(); ++k) tg[gl[k]] = st.grouplike[img[k]];
        std::vector<std::vector<vec>> opts;
        bool empty = false;
        for (const auto& sk : st.skew) {
            auto P = skew_primitives(A, A.basis(tg[sk.g]), A.basis(tg[sk.h]));
            std::vector<vec> o;
            if (P.empty()) o.push_back(A.zero());
            else for_each_tuple(values, int(P.size()), [&](const vec& t) { o.push_back(combination(P, t, A.zero())); });
            if (o.empty()) empty = true;
            opts.push_back(std::move(o));
        }
        if (!empty) {
            std::vector<int> pick(opts.size(), 0);
            while (true) {
                if (++examined > budget) throw budget_exceeded("matched-pair search exceeds the search budget");
                Matrix<S> T(d, d, f.zero());
                for (int g : st.grouplike) T(tg[g], g) = f.one();
                for (size_t k = 0; k < opts.size(); ++k) T.set_column(st.skew[k].index, opts[k][pick[k]]);
                if (rank(f, T) == d) {
                    auto P = T;
                    for (int k = 1; k < order; ++k) P = matmul(f, T, P);
                    if (P == idm) out.push_back(T);
                }
                int k = int(opts.size()) - 1;
                while (k >= 0 && pick[k] + 1 == int(opts[k].size())) pick[k--] = 0;
                if (k < 0) break;
                ++pick[k];
            }
        }
        int k = int(gl.size()) - 1;
        while (k >= 0 && img[k] + 1 == int(st.grouplike.size())) img[k--] = 0;
        if (k < 0) break;
        ++img[k];
    }
    return out;
}

// Applies the known part of an action (identity element and s) to an element
// y of k[G]; returns false when y has support elsewhere.
template <class S, class Fn>
bool known_support(const std::vector<S>& y, int e, int s, Fn&& fn) {
    for (size_t w = 0; w < y.size(); ++w)
        if (!y[w].is_zero() && int(w) != e && int(w) != s) return false;
    fn();
    return true;
}

// Axioms evaluable from s |> and s <| alone.
template <class F>
bool generator_prefilter(const HopfAlgebra<F>& A, const HopfAlgebra<F>& KG, int e, int s, const GeneratorAction<F>& c) {
    using S = typename F::scalar;
    using vec = std::vector<S>;
    const auto& f = A.field();
    int dA = A.dim(), dG = KG.dim();
    auto Rvec = [&](const vec& a) {
        vec out = KG.zero();
        for (int k = 0; k < dA; ++k)
            if (!a[k].is_zero()) axpy(out, a[k], c.R[k]);
        return out;
    };
    auto right_of = [&](int w, const vec& b) { // w <| b for w in {e, s}
        if (w == s) return Rvec(b);
        vec out = KG.zero();
        out[e] = A.eps(b);
        return out;
    };
    auto left_of = [&](int w, const vec& b) { return w == s ? matvec(f, c.T, b) : b; };
    for (int a = 0; a < dA; ++a) {
        const auto& ya = c.R[a];
        bool known = true;
        for (int w = 0; w < dG; ++w)
            if (!ya[w].is_zero() && w != e && w != s) known = false;
        for (int b = 0; b < dA; ++b) {
            auto ab = A.mul(A.basis(a), A.basis(b));
            if (known) {
                vec rhs = KG.zero();
                for (int w = 0; w < dG; ++w)
                    if (!ya[w].is_zero()) axpy(rhs, ya[w], right_of(w, A.basis(b)));
                if (Rvec(ab) != rhs) return false;
            }
            // s |> (ab) = (s |> a1)((s <| a2) |> b)
            vec rhs = A.zero();
            bool ok = true;
            for (const auto& t : A.coproduct(a)) {
                const auto& y = c.R[t.j];
                vec yb = A.zero();
                for (int w = 0; w < dG && ok; ++w) {
                    if (y[w].is_zero()) continue;
                    if (w != e && w != s) ok = false;
                    else axpy(yb, y[w], left_of(w, A.basis(b)));
                }
                if (!ok) break;
                axpy(rhs, t.c, A.mul(c.T.column(t.i), yb));
            }
            if (ok && matvec(f, c.T, ab) != rhs) return false;
        }
    }
    return true;
}

// For a fixed s |> = T, the right actions s <| compatible with the symmetry
// axiom: grouplikes go to group elements, skew-primitives of A into the
// matching skew-primitives of k[G], and the symmetry axiom is linear in the
// skew coordinates.
template <class F>
void right_candidates(const HopfAlgebra<F>& A, const HopfAlgebra<F>& KG, const Strata& st, int s, const Matrix<typename F::scalar>& T,
                      const std::vector<typename F::scalar>& values, std::vector<GeneratorAction<F>>& out) {
    using S = typename F::scalar;
    using vec = std::vector<S>;
    const auto& f = A.field();
    int dA = A.dim(), dG = KG.dim();
    int u = A.unit_index();
    int e = KG.unit_index();
    std::vector<int> gl;
    for (int g : st.grouplike)
        if (g != u) gl.push_back(g);
    std::vector<int> img(gl.size(), 0);
    while (true) {
        std::vector<int> rg(dA, -1);
        rg[u] = s;
        for (size_t k = 0; k < gl.size(); ++k) rg[gl[k]] = img[k];
        // unknown z: coordinates of s <| x in P_{s<|g, s<|h}(k[G])
        std::vector<std::vector<vec>> P;
        std::vector<int> offset;
        int K = 0;
        for (const auto& sk : st.skew) {
            offset.push_back(K);
            P.push_back(skew_primitives(KG, KG.basis(rg[sk.g]), KG.basis(rg[sk.h])));
            K += int(P.back().size());
        }
        auto table = [&](const vec& z) {
            std::vector<vec> R(dA, KG.zero());
            for (int g : st.grouplike) R[g] = KG.basis(rg[g]);
            for (size_t k = 0; k < st.skew.size(); ++k)
                for (size_t j = 0; j < P[k].size(); ++j)
                    if (!z[offset[k] + j].is_zero()) axpy(R[st.skew[k].index], z[offset[k] + j], P[k][j]);
            return R;
        };
        auto residual = [&](const std::vector<vec>& R) {
            vec out(size_t(dA) * dG * dA, f.zero());
            for (int a = 0; a < dA; ++a) {
                vec part(size_t(dG) * dA, f.zero());
                for (const auto& t : A.coproduct(a)) {
                    add_outer(part, t.c, R[t.i], T.column(t.j));
                    add_outer(part, -t.c, R[t.j], T.column(t.i));
                }
                std::copy(part.begin(), part.end(), out.begin() + size_t(a) * dG * dA);
            }
            return out;
        };
        vec zero(K, f.zero());
        auto r0 = residual(table(zero));
        Matrix<S> M(int(r0.size()), K, f.zero());
        for (int k = 0; k < K; ++k) {
            auto z = zero;
            z[k] = f.one();
            auto rk = residual(table(z));
            for (size_t i = 0; i < rk.size(); ++i) rk[i] -= r0[i];
            M.set_column(k, rk);
        }
        vec rhs;
        for (auto& x : r0) rhs.push_back(-x);
        auto z0 = solve(f, M, rhs);
        if (z0) {
            auto ker = kernel(f, M);
            auto emit = [&](const vec& t) {
                auto z = *z0;
                for (size_t k = 0; k < ker.size(); ++k)
                    if (!t[k].is_zero()) axpy(z, t[k], ker[k]);
                GeneratorAction<F> c{T, table(z)};
                if (generator_prefilter(A, KG, e, s, c)) out.push_back(std::move(c));
            };
            if (ker.empty()) emit({});
            else for_each_tuple(values, int(ker.size()), emit);
        }
        int k = int(gl.size()) - 1;
        while (k >= 0 && img[k] + 1 == dG) img[k--] = 0;
        if (k < 0) break;
        ++img[k];
    }
}

// Extends generator data to all of G through (s w) |> a = s |> (w |> a) and
// (s w) <| a = (s <| (w1 |> a1))(w <| a2), w grouplike.
template <class F>
MatchedPair<F> extend_to_group(const HopfPtr<F>& A, const HopfPtr<F>& KG, const FiniteGroup& G, const std::vector<int>& gens,
                               const std::vector<const GeneratorAction<F>*>& acts) {
    using S = typename F::scalar;
    using vec = std::vector<S>;
    const auto& f = A->field();
    int dA = A->dim(), n = G.order();
    std::vector<Matrix<S>> L(n);
    std::vector<std::vector<vec>> R(n);
    std::vector<bool> done(n, false);
    int e = G.identity();
    L[e] = identity_matrix(f, dA);
    R[e].assign(dA, KG->zero());
    for (int a = 0; a < dA; ++a) R[e][a][e] = A->counit()[a];
    done[e] = true;
    std::vector<int> queue{e};
    for (size_t q = 0; q < queue.size(); ++q) {
        int w = queue[q];
        for (size_t k = 0; k < gens.size(); ++k) {
            int sw = G.mul(gens[k], w);
            if (done[sw]) continue;
            const auto& c = *acts[k];
            L[sw] = matmul(f, c.T, L[w]);
            R[sw].assign(dA, KG->zero());
            for (int a = 0; a < dA; ++a)
                for (const auto& t : A->coproduct(a)) {
                    auto wa = L[w].column(t.i);
                    vec y = KG->zero();
                    for (int b = 0; b < dA; ++b)
                        if (!wa[b].is_zero()) axpy(y, wa[b], c.R[b]);
                    axpy(R[sw][a], t.c, KG->mul(y, R[w][t.j]));
                }
            done[sw] = true;
            queue.push_back(sw);
        }
    }
    MatchedPair<F> mp{A, KG, {}, {}};
    for (int h = 0; h < n; ++h)
        for (int a = 0; a < dA; ++a) {
            mp.right.push_back(R[h][a]);
            mp.left.push_back(L[h].column(a));
        }
    return mp;
}

} // namespace detail

// All matched pairs (A, k[G]) for A with a basis of grouplikes and
// skew-primitives.  Each generator s of G acts on the left by a bijective
// unitary coalgebra endomorphism of A of order dividing ord(s) and on the right
// through the strata of k[G]; survivors of the per-generator axioms are
// combined, extended to G and verified in full.
template <class F>
MatchedPairSearch<F> enumerate_group_matched_pairs(const HopfPtr<F>& A, const FiniteGroup& G) {
    const auto& f = A->field();
    detail::require_odd_characteristic(f);
    auto st = stratify(*A);
    if (!st.complete) throw precondition_failed("matched-pair search needs a basis of grouplikes and skew-primitives");
    auto KG = share(group_algebra(G, f));
    MatchedPairSearch<F> res;
    res.generators = G.generators();
    std::vector<std::vector<GeneratorAction<F>>> cands;
    for (int s : res.generators) {
        int ord = G.element_order(s);
        auto values = coordinate_values(f, ord);
        std::vector<GeneratorAction<F>> cs;
        for (const auto& T : detail::generator_automorphisms(*A, st, ord, values))
            detail::right_candidates(*A, *KG, st, s, T, values, cs);
        res.candidates_per_generator.push_back(cs.size());
        cands.push_back(std::move(cs));
    }
    for (const auto& c : cands)
        if (c.empty()) return res;
    std::vector<size_t> pick(cands.size(), 0);
    while (true) {
        std::vector<const GeneratorAction<F>*> acts;
        for (size_t k = 0; k < cands.size(); ++k) acts.push_back(&cands[k][pick[k]]);
        ++res.combinations;
        auto mp = detail::extend_to_group(A, KG, G, res.generators, acts);
        if (verify_matched_pair(mp).ok() && std::find(res.pairs.begin(), res.pairs.end(), mp) == res.pairs.end())
            res.pairs.push_back(std::move(mp));
        int k = int(cands.size()) - 1;
        while (k >= 0 && pick[k] + 1 == cands[k].size()) pick[k--] = 0;
        if (k < 0) break;
        ++pick[k];
    }
    return res;
}

// h |> b_a = lambda b_a, if it is a multiple of b_a
template <class F>
std::optional<typename F::scalar> diagonal_coefficient(const MatchedPair<F>& mp, int h, int a) {
    const auto& v = mp.lt(h, a);
    for (int k = 0; k < mp.dA(); ++k)
        if (k != a && !v[k].is_zero()) return std::nullopt;
    return v[a];
}

// Pairs in the order of the roots of unity w with c |> x = w x.
template <class F>
std::vector<MatchedPair<F>> enumerate_matched_pairs_h4_cn(int n, const F& f) {
    auto A = share(sweedler_h4(f));
    auto pairs = enumerate_group_matched_pairs(A, cyclic_group(n)).pairs;
    auto roots = roots_of_unity(f, n);
    auto key = [&](const MatchedPair<F>& mp) {
        if (n == 1) return size_t(0);
        auto w = diagonal_coefficient(mp, 1, 2);
        if (!w) return roots.size();
        return size_t(std::find(roots.begin(), roots.end(), *w) - roots.begin());
    };
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return pairs;
}

// ------------------------------------------------------------ exponent arithmetic

struct IsoVerdict {
    bool isomorphic = false;
    std::optional<long long> witness_s;
    bool odd_multiple = false; // witness satisfies 2(l - ts) = nu q with q odd
};

// H_{4n, xi^l} versus H_{4n, xi^t}: smallest unit s with nu | l - ts, or, when
// n and nu are both even, 2(l - ts) = nu q for an odd q.
inline IsoVerdict iso_criterion(long long l, long long t, long long n, long long nu) {
    if (n < 1 || nu < 1 || n % nu != 0) throw precondition_failed("nu must divide n");
    if (l < 0 || t < 0 || l >= nu || t >= nu) throw precondition_failed("exponents must lie in [0, nu)");
    bool both_even = n % 2 == 0 && nu % 2 == 0;
    for (long long s : arith::units(n)) {
        long long diff = l - t * s;
        if (arith::mod(diff, nu) == 0) return {true, s, false};
        if (both_even && arith::mod(2 * diff, nu) == 0 && arith::mod(2 * diff / nu, 2) == 1) return {true, s, true};
    }
    return {};
}

template <class F>
    requires(!std::is_arithmetic_v<F>)
IsoVerdict iso_criterion(long long l, long long t, long long n, const F& f) {
    return iso_criterion(l, t, n, nu_order(f, n).nu);
}

inline long long canonical_exponent(long long t, long long nu) {
    long long g = std::gcd(t, nu);
    return g == nu ? 0 : g;
}

// (a1 + 1) ... (ar + 1) for odd nu, a1 (a2 + 1) ... (ar + 1) for even nu with a1
// the exponent of 2.
inline long long predicted_class_count(long long nu) {
    long long c = 1;
    for (auto [p, a] : arith::factorize(nu)) c *= p == 2 ? a : a + 1;
    return c;
}

struct IsoClasses {
    long long n = 1, nu = 1;
    int count = 0;
    std::vector<long long> representatives;   // exponents; 0 stands for w = 1
    std::vector<long long> class_of;          // t -> representative exponent
    std::vector<std::vector<bool>> partition; // [l][t] isomorphic
};

// Classes of the relation given by iso_criterion; the representative of a class
// is 0 when it contains w = 1 and its smallest exponent otherwise.
inline IsoClasses iso_classes(long long n, long long nu) {
    IsoClasses out;
    out.n = n;
    out.nu = nu;
    out.partition.assign(nu, std::vector<bool>(nu, false));
    std::vector<long long> parent(nu);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long long(long long)> find = [&](long long x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (long long l = 0; l < nu; ++l)
        for (long long t = 0; t < nu; ++t)
            if ((out.partition[l][t] = iso_criterion(l, t, n, nu).isomorphic)) parent[find(l)] = find(t);
    std::map<long long, long long> rep; // root -> smallest member
    for (long long t = nu - 1; t >= 0; --t) rep[find(t)] = t;
    out.class_of.resize(nu);
    for (long long t = 0; t < nu; ++t) out.class_of[t] = rep[find(t)];
    for (auto& [r, m] : rep) out.representatives.push_back(m);
    std::sort(out.representatives.begin(), out.representatives.end());
    out.count = int(out.representatives.size());
    return out;
}

template <class F>
    requires(!std::is_arithmetic_v<F>)
IsoClasses iso_classes(long long n, const F& f) {
    return iso_classes(n, nu_order(f, n).nu);
}

inline std::string xi_power_label(long long t) {
    if (t == 0) return "1";
    if (t == 1) return "xi";
    return "xi^" + std::to_string(t);
}

struct ArithmeticProfile {
    long long n = 1, t = 0, nu = 1;
    std::vector<std::pair<long long, int>> nu_factorization;
    std::vector<long long> U_t, V_t, Ut_tilde;
    bool both_even = false;
    Check u_subgroup{"U_t is a subgroup of U(Z_n)"};
    Check ut_subgroup{"U~_t is a subgroup of U(Z_n)"};
    Check disjoint{"U_t and V_t are disjoint"};

    const std::vector<long long>& selected() const { return both_even ? Ut_tilde : U_t; }
    std::string structure() const {
        return std::string("k* x ") + (both_even ? "U~_" : "U_") + std::to_string(t) + "(Z_" + std::to_string(n) + ")";
    }
    bool ok() const { return u_subgroup.pass && ut_subgroup.pass && disjoint.pass; }
};

namespace detail {

inline bool is_unit_subgroup(const std::vector<long long>& s, long long n) {
    if (std::find(s.begin(), s.end(), 1 % n) == s.end()) return false;
    for (long long a : s)
        for (long long b : s)
            if (std::find(s.begin(), s.end(), a * b % n) == s.end()) return false;
    return true;
}

} // namespace detail

inline ArithmeticProfile arithmetic_profile(long long n, long long t, long long nu) {
    if (n < 1 || nu < 1 || n % nu != 0) throw precondition_failed("nu must divide n");
    if (t < 0 || t >= nu) throw precondition_failed("t must satisfy 0 <= t < nu(n)");
    ArithmeticProfile p;
    p.n = n;
    p.t = t;
    p.nu = nu;
    p.nu_factorization = arith::factorize(nu);
    p.both_even = n % 2 == 0 && nu % 2 == 0;
    for (long long s : arith::units(n)) {
        long long m = t * (s - 1);
        if (arith::mod(m, nu) == 0) p.U_t.push_back(s);
        if (arith::mod(2 * m, nu) == 0 && arith::mod(2 * m / nu, 2) == 1) p.V_t.push_back(s);
    }
    p.Ut_tilde = p.U_t;
    p.Ut_tilde.insert(p.Ut_tilde.end(), p.V_t.begin(), p.V_t.end());
    std::sort(p.Ut_tilde.begin(), p.Ut_tilde.end());
    if (!detail::is_unit_subgroup(p.U_t, n)) p.u_subgroup.fail({int(t)}, "U_t not closed or missing 1");
    if (!detail::is_unit_subgroup(p.Ut_tilde, n)) p.ut_subgroup.fail({int(t)}, "U~_t not closed or missing 1");
    for (long long s : p.V_t)
        if (std::find(p.U_t.begin(), p.U_t.end(), s) != p.U_t.end()) p.disjoint.fail({int(s)}, "common element");
    return p;
}

struct AutProfile {
    ArithmeticProfile profile;
    std::optional<long long> order; // over a finite field
};

template <class F>
AutProfile aut_group_profile(long long n, long long t, const F& f) {
    AutProfile a{arithmetic_profile(n, t, nu_order(f, n).nu), std::nullopt};
    if (f.finite()) a.order = (long long)(f.order() - 1) * (long long)a.profile.selected().size();
    return a;
}

// Automorphisms found by exhaustive search over the structured family.
template <class F>
std::vector<Morphism<F>> automorphisms(const Bicrossed<F>& X) {
    return enumerate_morphisms(X, X, false, true);
}

// ------------------------------------------------------------ Klein survey

template <class F>
struct KleinSurvey {
    std::vector<MatchedPair<F>> pairs;
    std::vector<std::optional<LinMap<F>>> isomorphisms; // to H4 (x) k[C2 x C2]
    bool all_products_trivial = false;
};

template <class F>
KleinSurvey<F> klein_survey(const F& f) {
    KleinSurvey<F> out;
    auto A = share(sweedler_h4(f));
    out.pairs = enumerate_group_matched_pairs(A, klein_group()).pairs;
    // the trivial pair first, then by the signs of a |> x, b |> x
    auto key = [&](const MatchedPair<F>& mp) {
        int k = 0;
        for (int h : {1, 2}) {
            auto w = diagonal_coefficient(mp, h, 2);
            k = 2 * k + (w && *w == f.one() ? 0 : 1);
        }
        return k;
    };
    std::stable_sort(out.pairs.begin(), out.pairs.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    auto T = make_bicrossed(trivial_pair(A, out.pairs.empty() ? share(group_algebra(klein_group(), f)) : out.pairs[0].H));
    out.all_products_trivial = !out.pairs.empty();
    for (const auto& mp : out.pairs) {
        auto X = make_bicrossed(mp);
        auto w = check_cohomologous(X, T);
        if (w.witness) out.isomorphisms.push_back(w.witness->psi);
        else out.isomorphisms.push_back(std::nullopt);
        if (!out.isomorphisms.back()) out.all_products_trivial = false;
    }
    return out;
}

} // namespace hopf
