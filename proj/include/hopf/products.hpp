#pragma once

// Matched pairs (A, H, right action of A on H, left action of H on A) and the
// product constructions built from them.

#include "fixtures.hpp"
#include "linmap.hpp"

namespace hopf {

template <class F>
struct MatchedPair {
    using scalar = typename F::scalar;
    using vec = std::vector<scalar>;

    HopfPtr<F> A, H;
    std::vector<vec> right; // [h * dim A + a] = h <| a, a vector in H
    std::vector<vec> left;  // [h * dim A + a] = h |> a, a vector in A

    int dA() const { return A->dim(); }
    int dH() const { return H->dim(); }
    const F& field() const { return A->field(); }
    const vec& rt(int h, int a) const { return right[size_t(h) * dA() + a]; }
    const vec& lt(int h, int a) const { return left[size_t(h) * dA() + a]; }

    vec act_right(const vec& h, const vec& a) const {
        vec out = H->zero();
        for (int i = 0; i < dH(); ++i) {
            if (h[i].is_zero()) continue;
            for (int j = 0; j < dA(); ++j) {
                if (a[j].is_zero()) continue;
                auto c = h[i] * a[j];
                const auto& v = rt(i, j);
                for (int k = 0; k < dH(); ++k)
                    if (!v[k].is_zero()) out[k] += c * v[k];
            }
        }
        return out;
    }
    vec act_left(const vec& h, const vec& a) const {
        vec out = A->zero();
        for (int i = 0; i < dH(); ++i) {
            if (h[i].is_zero()) continue;
            for (int j = 0; j < dA(); ++j) {
                if (a[j].is_zero()) continue;
                auto c = h[i] * a[j];
                const auto& v = lt(i, j);
                for (int k = 0; k < dA(); ++k)
                    if (!v[k].is_zero()) out[k] += c * v[k];
            }
        }
        return out;
    }

    bool right_trivial() const {
        for (int h = 0; h < dH(); ++h)
            for (int a = 0; a < dA(); ++a) {
                auto e = H->zero();
                e[h] = A->counit()[a];
                if (rt(h, a) != e) return false;
            }
        return true;
    }
    bool left_trivial() const {
        for (int h = 0; h < dH(); ++h)
            for (int a = 0; a < dA(); ++a) {
                auto e = A->zero();
                e[a] = H->counit()[h];
                if (lt(h, a) != e) return false;
            }
        return true;
    }

    bool operator==(const MatchedPair& o) const { return right == o.right && left == o.left; }
};

template <class F>
std::vector<typename F::scalar> trivial_right_table(const HopfPtr<F>& A, const HopfPtr<F>& H, int h, int a) {
    auto v = H->zero();
    v[h] = A->counit()[a];
    return v;
}

template <class F>
std::vector<typename F::scalar> trivial_left_table(const HopfPtr<F>& A, const HopfPtr<F>& H, int h, int a) {
    auto v = A->zero();
    v[a] = H->counit()[h];
    return v;
}

template <class F>
MatchedPair<F> trivial_pair(const HopfPtr<F>& A, const HopfPtr<F>& H) {
    if (!(A->field().spec() == H->field().spec())) throw field_mismatch("matched pair over different fields");
    MatchedPair<F> mp{A, H, {}, {}};
    for (int h = 0; h < H->dim(); ++h)
        for (int a = 0; a < A->dim(); ++a) {
            mp.right.push_back(trivial_right_table(A, H, h, a));
            mp.left.push_back(trivial_left_table(A, H, h, a));
        }
    return mp;
}

template <class F>
void check_shape(const MatchedPair<F>& mp) {
    size_t n = size_t(mp.dA()) * mp.dH();
    if (mp.right.size() != n || mp.left.size() != n) throw dimension_mismatch("matched pair: action table size");
    for (const auto& v : mp.right)
        if (int(v.size()) != mp.dH()) throw dimension_mismatch("matched pair: right action vector length");
    for (const auto& v : mp.left)
        if (int(v.size()) != mp.dA()) throw dimension_mismatch("matched pair: left action vector length");
    if (!(mp.A->field().spec() == mp.H->field().spec())) throw field_mismatch("matched pair over different fields");
}

// ------------------------------------------------------------ verification

struct MatchedPairReport {
    Check right_coalgebra{"right action is a coalgebra map"};
    Check left_coalgebra{"left action is a coalgebra map"};
    Check right_module{"right module"};
    Check left_module{"left module"};
    Check normalization{"normalization"};
    Check left_product{"left action on products"};
    Check right_product{"right action on products"};
    Check symmetry{"symmetry"};

    std::vector<const Check*> all() const {
        return {&right_coalgebra, &left_coalgebra, &right_module,  &left_module,
                &normalization,   &left_product,   &right_product, &symmetry};
    }
    bool ok() const {
        for (auto* c : all())
            if (!c->pass) return false;
        return true;
    }
    const Check* first_failure() const {
        for (auto* c : all())
            if (!c->pass) return c;
        return nullptr;
    }
    std::string str() const {
        std::string s;
        for (auto* c : all()) s += (s.empty() ? "" : "\n") + c->str();
        return s;
    }
};

namespace detail {

// sum_k c_k x_k (x) y_k accumulated into a flat dx * dy vector
template <class S>
void add_outer(std::vector<S>& out, const S& c, const std::vector<S>& x, const std::vector<S>& y) {
    int dy = int(y.size());
    for (size_t p = 0; p < x.size(); ++p) {
        if (x[p].is_zero()) continue;
        auto cp = c * x[p];
        for (int q = 0; q < dy; ++q)
            if (!y[q].is_zero()) out[p * dy + q] += cp * y[q];
    }
}

} // namespace detail

// Checks only the axioms that involve a fixed element h of the basis of H;
// used by searches that fill in tables one generator at a time.
template <class F>
bool coalgebra_conditions_hold(const MatchedPair<F>& mp, int h, int a) {
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    const auto& f = mp.field();
    int dA = mp.dA(), dH = mp.dH();
    auto e = A.counit()[a] * H.counit()[h];
    if (!(H.eps(mp.rt(h, a)) == e) || !(A.eps(mp.lt(h, a)) == e)) return false;
    std::vector<typename F::scalar> rr(size_t(dH) * dH, f.zero()), ll(size_t(dA) * dA, f.zero());
    for (const auto& s : H.coproduct(h))
        for (const auto& t : A.coproduct(a)) {
            detail::add_outer(rr, s.c * t.c, mp.rt(s.i, t.i), mp.rt(s.j, t.j));
            detail::add_outer(ll, s.c * t.c, mp.lt(s.i, t.i), mp.lt(s.j, t.j));
        }
    return H.delta(mp.rt(h, a)) == rr && A.delta(mp.lt(h, a)) == ll;
}

template <class F>
MatchedPairReport verify_matched_pair(const MatchedPair<F>& mp) {
    check_shape(mp);
    using vec = typename MatchedPair<F>::vec;
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    const auto& f = mp.field();
    int dA = mp.dA(), dH = mp.dH();
    MatchedPairReport rep;

    for (int h = 0; h < dH; ++h)
        for (int a = 0; a < dA; ++a) {
            auto e = A.counit()[a] * H.counit()[h];
            const auto& r = mp.rt(h, a);
            const auto& l = mp.lt(h, a);
            vec rr(size_t(dH) * dH, f.zero()), ll(size_t(dA) * dA, f.zero());
            for (const auto& s : H.coproduct(h))
                for (const auto& t : A.coproduct(a)) {
                    detail::add_outer(rr, s.c * t.c, mp.rt(s.i, t.i), mp.rt(s.j, t.j));
                    detail::add_outer(ll, s.c * t.c, mp.lt(s.i, t.i), mp.lt(s.j, t.j));
                }
            if (!(H.eps(r) == e) || H.delta(r) != rr) rep.right_coalgebra.fail({h, a}, "Delta(h <| a)");
            if (!(A.eps(l) == e) || A.delta(l) != ll) rep.left_coalgebra.fail({h, a}, "Delta(h |> a)");
        }

    for (int a = 0; a < dA; ++a) {
        if (mp.act_left(H.one(), A.basis(a)) != A.basis(a)) rep.left_module.fail({a}, "1 |> a != a");
        auto e = H.one();
        for (auto& x : e) x *= A.counit()[a];
        if (mp.act_right(H.one(), A.basis(a)) != e) rep.normalization.fail({a}, "1 <| a != eps(a) 1");
    }
    for (int h = 0; h < dH; ++h) {
        if (mp.act_right(H.basis(h), A.one()) != H.basis(h)) rep.right_module.fail({h}, "h <| 1 != h");
        auto e = A.one();
        for (auto& x : e) x *= H.counit()[h];
        if (mp.act_left(H.basis(h), A.one()) != e) rep.normalization.fail({h}, "h |> 1 != eps(h) 1");
    }
    for (int g = 0; g < dH && rep.left_module.pass; ++g)
        for (int h = 0; h < dH && rep.left_module.pass; ++h) {
            auto gh = H.mul(H.basis(g), H.basis(h));
            for (int a = 0; a < dA; ++a)
                if (mp.act_left(gh, A.basis(a)) != mp.act_left(H.basis(g), mp.lt(h, a))) {
                    rep.left_module.fail({g, h, a}, "(gh) |> a != g |> (h |> a)");
                    break;
                }
        }
    for (int h = 0; h < dH && rep.right_module.pass; ++h)
        for (int a = 0; a < dA && rep.right_module.pass; ++a)
            for (int b = 0; b < dA; ++b) {
                auto ab = A.mul(A.basis(a), A.basis(b));
                if (mp.act_right(H.basis(h), ab) != mp.act_right(mp.rt(h, a), A.basis(b))) {
                    rep.right_module.fail({h, a, b}, "h <| (ab) != (h <| a) <| b");
                    break;
                }
            }

    // g |> (ab) = (g1 |> a1) ((g2 <| a2) |> b)
    for (int g = 0; g < dH && rep.left_product.pass; ++g)
        for (int a = 0; a < dA && rep.left_product.pass; ++a)
            for (int b = 0; b < dA; ++b) {
                auto lhs = mp.act_left(H.basis(g), A.mul(A.basis(a), A.basis(b)));
                auto rhs = A.zero();
                for (const auto& s : H.coproduct(g))
                    for (const auto& t : A.coproduct(a)) {
                        auto p = A.mul(mp.lt(s.i, t.i), mp.act_left(mp.rt(s.j, t.j), A.basis(b)));
                        auto c = s.c * t.c;
                        for (int k = 0; k < dA; ++k)
                            if (!p[k].is_zero()) rhs[k] += c * p[k];
                    }
                if (lhs != rhs) {
                    rep.left_product.fail({g, a, b}, "g |> (ab)");
                    break;
                }
            }
    // (gh) <| a = (g <| (h1 |> a1)) (h2 <| a2)
    for (int g = 0; g < dH && rep.right_product.pass; ++g)
        for (int h = 0; h < dH && rep.right_product.pass; ++h)
            for (int a = 0; a < dA; ++a) {
                auto lhs = mp.act_right(H.mul(H.basis(g), H.basis(h)), A.basis(a));
                auto rhs = H.zero();
                for (const auto& s : H.coproduct(h))
                    for (const auto& t : A.coproduct(a)) {
                        auto p = H.mul(mp.act_right(H.basis(g), mp.lt(s.i, t.i)), mp.rt(s.j, t.j));
                        auto c = s.c * t.c;
                        for (int k = 0; k < dH; ++k)
                            if (!p[k].is_zero()) rhs[k] += c * p[k];
                    }
                if (lhs != rhs) {
                    rep.right_product.fail({g, h, a}, "(gh) <| a");
                    break;
                }
            }
    // g1 <| a1 (x) g2 |> a2 = g2 <| a2 (x) g1 |> a1
    for (int g = 0; g < dH && rep.symmetry.pass; ++g)
        for (int a = 0; a < dA; ++a) {
            vec l(size_t(dH) * dA, f.zero()), r(size_t(dH) * dA, f.zero());
            for (const auto& s : H.coproduct(g))
                for (const auto& t : A.coproduct(a)) {
                    detail::add_outer(l, s.c * t.c, mp.rt(s.i, t.i), mp.lt(s.j, t.j));
                    detail::add_outer(r, s.c * t.c, mp.rt(s.j, t.j), mp.lt(s.i, t.i));
                }
            if (l != r) {
                rep.symmetry.fail({g, a}, "g1 <| a1 (x) g2 |> a2");
                break;
            }
        }
    return rep;
}

// ------------------------------------------------------------ bicrossed product

// Basis a_i |><| h_j at index i * dim H + j.
template <class F>
HopfAlgebra<F> bicrossed_product(const MatchedPair<F>& mp, bool check = true) {
    check_shape(mp);
    if (check) {
        auto rep = verify_matched_pair(mp);
        if (!rep.ok()) throw precondition_failed("not a matched pair: " + rep.first_failure()->str());
    }
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    const auto& f = mp.field();
    int dA = mp.dA(), dH = mp.dH(), d = dA * dH;
    // cross[h][c] = (1 |><| h)(c |><| 1) = (h1 |> c1) (x) (h2 <| c2)
    std::vector<std::vector<typename F::scalar>> cross(size_t(dH) * dA);
    for (int h = 0; h < dH; ++h)
        for (int c = 0; c < dA; ++c) {
            std::vector<typename F::scalar> t(size_t(d), f.zero());
            for (const auto& s : H.coproduct(h))
                for (const auto& u : A.coproduct(c)) detail::add_outer(t, s.c * u.c, mp.lt(s.i, u.i), mp.rt(s.j, u.j));
            cross[size_t(h) * dA + c] = std::move(t);
        }
    TensorBuilder<F> b(f, d);
    std::vector<std::string> labels;
    for (int a = 0; a < dA; ++a)
        for (int h = 0; h < dH; ++h) {
            int i = a * dH + h;
            labels.push_back(pair_label(A.label(a), H.label(h)));
            b.unit[i] = A.unit()[a] * H.unit()[h];
            b.counit[i] = A.counit()[a] * H.counit()[h];
            for (int c = 0; c < dA; ++c) {
                const auto& t = cross[size_t(h) * dA + c];
                for (int p = 0; p < dA; ++p)
                    for (int q = 0; q < dH; ++q) {
                        const auto& tc = t[size_t(p) * dH + q];
                        if (tc.is_zero()) continue;
                        for (int g = 0; g < dH; ++g)
                            for (const auto& x : A.product(a, p))
                                for (const auto& y : H.product(q, g)) b.m(i, c * dH + g, x.i * dH + y.i) += tc * x.c * y.c;
                    }
            }
            for (const auto& s : A.coproduct(a))
                for (const auto& t : H.coproduct(h)) b.c(i, s.i * dH + t.i, s.j * dH + t.j) += s.c * t.c;
            // S(a |><| h) = S(h2) |> S(a2) |><| S(h1) <| S(a1)
            std::vector<typename F::scalar> sv(size_t(d), f.zero());
            for (const auto& s : H.coproduct(h))
                for (const auto& t : A.coproduct(a)) {
                    auto l = mp.act_left(H.S(H.basis(s.j)), A.S(A.basis(t.j)));
                    auto r = mp.act_right(H.S(H.basis(s.i)), A.S(A.basis(t.i)));
                    detail::add_outer(sv, s.c * t.c, l, r);
                }
            for (int k = 0; k < d; ++k) b.antipode(k, i) = sv[k];
        }
    return b.build(labels);
}

template <class F>
LinMap<F> inclusion_a(const MatchedPair<F>& mp, const HopfPtr<F>& E) {
    LinMap<F> m(mp.A, E);
    for (int a = 0; a < mp.dA(); ++a)
        for (int h = 0; h < mp.dH(); ++h) m.m(a * mp.dH() + h, a) = mp.H->one()[h];
    return m;
}

template <class F>
LinMap<F> inclusion_h(const MatchedPair<F>& mp, const HopfPtr<F>& E) {
    LinMap<F> m(mp.H, E);
    for (int a = 0; a < mp.dA(); ++a)
        for (int h = 0; h < mp.dH(); ++h) m.m(a * mp.dH() + h, h) = mp.A->one()[a];
    return m;
}

// (Id (x) eps) and (eps (x) Id) out of a bicrossed product
template <class F>
LinMap<F> projection_a(const MatchedPair<F>& mp, const HopfPtr<F>& E) {
    LinMap<F> m(E, mp.A);
    for (int a = 0; a < mp.dA(); ++a)
        for (int h = 0; h < mp.dH(); ++h) m.m(a, a * mp.dH() + h) = mp.H->counit()[h];
    return m;
}

template <class F>
LinMap<F> projection_h(const MatchedPair<F>& mp, const HopfPtr<F>& E) {
    LinMap<F> m(E, mp.H);
    for (int a = 0; a < mp.dA(); ++a)
        for (int h = 0; h < mp.dH(); ++h) m.m(h, a * mp.dH() + h) = mp.A->counit()[a];
    return m;
}

// ------------------------------------------------------------ smash products

enum class smash_side { left, right };

struct SmashReport {
    Check module_algebra{"module algebra"};
    Check compatibility{"compatibility"};
    MatchedPairReport pair;
    bool ok() const { return module_algebra.pass && compatibility.pass && pair.ok(); }
};

// Pair with the given action table and the other action trivial.  For the
// left side the table is h |> a in A; for the right side it is h <| a in H.
template <class F>
MatchedPair<F> smash_pair(const HopfPtr<F>& A, const HopfPtr<F>& H, std::vector<std::vector<typename F::scalar>> table,
                          smash_side side) {
    auto mp = trivial_pair(A, H);
    if (side == smash_side::left) mp.left = std::move(table);
    else mp.right = std::move(table);
    check_shape(mp);
    return mp;
}

template <class F>
SmashReport verify_smash(const MatchedPair<F>& mp, smash_side side) {
    using vec = typename MatchedPair<F>::vec;
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    const auto& f = mp.field();
    int dA = mp.dA(), dH = mp.dH();
    SmashReport rep;
    rep.pair = verify_matched_pair(mp);
    if (side == smash_side::left) {
        for (int h = 0; h < dH && rep.module_algebra.pass; ++h)
            for (int a = 0; a < dA && rep.module_algebra.pass; ++a)
                for (int b = 0; b < dA; ++b) {
                    auto lhs = mp.act_left(H.basis(h), A.mul(A.basis(a), A.basis(b)));
                    auto rhs = A.zero();
                    for (const auto& s : H.coproduct(h)) {
                        auto p = A.mul(mp.lt(s.i, a), mp.lt(s.j, b));
                        for (int k = 0; k < dA; ++k) rhs[k] += s.c * p[k];
                    }
                    if (lhs != rhs) {
                        rep.module_algebra.fail({h, a, b}, "h |> (ab) != (h1 |> a)(h2 |> b)");
                        break;
                    }
                }
        // g1 (x) g2 |> a = g2 (x) g1 |> a
        for (int g = 0; g < dH && rep.compatibility.pass; ++g)
            for (int a = 0; a < dA; ++a) {
                vec l(size_t(dH) * dA, f.zero()), r(size_t(dH) * dA, f.zero());
                for (const auto& s : H.coproduct(g)) {
                    detail::add_outer(l, s.c, H.basis(s.i), mp.lt(s.j, a));
                    detail::add_outer(r, s.c, H.basis(s.j), mp.lt(s.i, a));
                }
                if (l != r) {
                    rep.compatibility.fail({g, a}, "g1 (x) g2 |> a");
                    break;
                }
            }
    } else {
        for (int h = 0; h < dH && rep.module_algebra.pass; ++h)
            for (int g = 0; g < dH && rep.module_algebra.pass; ++g)
                for (int a = 0; a < dA; ++a) {
                    auto lhs = mp.act_right(H.mul(H.basis(h), H.basis(g)), A.basis(a));
                    auto rhs = H.zero();
                    for (const auto& t : A.coproduct(a)) {
                        auto p = H.mul(mp.rt(h, t.i), mp.rt(g, t.j));
                        for (int k = 0; k < dH; ++k) rhs[k] += t.c * p[k];
                    }
                    if (lhs != rhs) {
                        rep.module_algebra.fail({h, g, a}, "(hg) <| a != (h <| a1)(g <| a2)");
                        break;
                    }
                }
        // g <| a1 (x) a2 = g <| a2 (x) a1
        for (int g = 0; g < dH && rep.compatibility.pass; ++g)
            for (int a = 0; a < dA; ++a) {
                vec l(size_t(dH) * dA, f.zero()), r(size_t(dH) * dA, f.zero());
                for (const auto& t : A.coproduct(a)) {
                    detail::add_outer(l, t.c, mp.rt(g, t.i), A.basis(t.j));
                    detail::add_outer(r, t.c, mp.rt(g, t.j), A.basis(t.i));
                }
                if (l != r) {
                    rep.compatibility.fail({g, a}, "g <| a1 (x) a2");
                    break;
                }
            }
    }
    return rep;
}

// Left: (a # h)(c # g) = a (h1 |> c) # h2 g.  Right: (a # h)(c # g) = a c1 # (h <| c2) g.
template <class F>
HopfAlgebra<F> smash_product(const MatchedPair<F>& mp, smash_side side) {
    auto rep = verify_smash(mp, side);
    if (!rep.module_algebra.pass) throw precondition_failed("smash product: " + rep.module_algebra.str());
    if (!rep.compatibility.pass) throw precondition_failed("smash product: " + rep.compatibility.str());
    if (!rep.pair.ok()) throw precondition_failed("smash product: " + rep.pair.first_failure()->str());
    if (side == smash_side::left ? !mp.right_trivial() : !mp.left_trivial())
        throw precondition_failed("smash product: the other action must be trivial");
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    const auto& f = mp.field();
    int dA = mp.dA(), dH = mp.dH(), d = dA * dH;
    TensorBuilder<F> b(f, d);
    std::vector<std::string> labels;
    for (int a = 0; a < dA; ++a)
        for (int h = 0; h < dH; ++h) {
            int i = a * dH + h;
            labels.push_back(pair_label(A.label(a), H.label(h)));
            b.unit[i] = A.unit()[a] * H.unit()[h];
            b.counit[i] = A.counit()[a] * H.counit()[h];
            for (int c = 0; c < dA; ++c)
                for (int g = 0; g < dH; ++g) {
                    std::vector<typename F::scalar> out(size_t(d), f.zero());
                    if (side == smash_side::left) {
                        for (const auto& s : H.coproduct(h))
                            detail::add_outer(out, s.c, A.mul(A.basis(a), mp.lt(s.i, c)), H.mul(H.basis(s.j), H.basis(g)));
                    } else {
                        for (const auto& t : A.coproduct(c))
                            detail::add_outer(out, t.c, A.mul(A.basis(a), A.basis(t.i)), H.mul(mp.rt(h, t.j), H.basis(g)));
                    }
                    for (int k = 0; k < d; ++k) b.m(i, c * dH + g, k) = out[k];
                }
            for (const auto& s : A.coproduct(a))
                for (const auto& t : H.coproduct(h)) b.c(i, s.i * dH + t.i, s.j * dH + t.j) += s.c * t.c;
            std::vector<typename F::scalar> sv(size_t(d), f.zero());
            if (side == smash_side::left) {
                // S(a # h) = S(h2) |> S(a) # S(h1)
                for (const auto& s : H.coproduct(h))
                    detail::add_outer(sv, s.c, mp.act_left(H.S(H.basis(s.j)), A.S(A.basis(a))), H.S(H.basis(s.i)));
            } else {
                // S(a # h) = S(a2) # S(h) <| S(a1)
                for (const auto& t : A.coproduct(a))
                    detail::add_outer(sv, t.c, A.S(A.basis(t.j)), mp.act_right(H.S(H.basis(h)), A.S(A.basis(t.i))));
            }
            for (int k = 0; k < d; ++k) b.antipode(k, i) = sv[k];
        }
    return b.build(labels);
}

// ------------------------------------------------------------ Drinfel'd double

// A = (H*)^cop on the dual basis;
//   h <| f = <f, S^-1(h3) h1> h2,   (h |> f)(z) = f(S^-1(h2) z h1).
template <class F>
MatchedPair<F> double_pair(const HopfPtr<F>& H) {
    if (!H->antipode_invertible()) throw precondition_failed("Drinfel'd double needs an invertible antipode");
    auto A = share(op_cop(dual_hopf(*H), false, true));
    const auto& f = H->field();
    int d = H->dim();
    MatchedPair<F> mp{A, H, {}, {}};
    mp.right.assign(size_t(d) * d, H->zero());
    mp.left.assign(size_t(d) * d, A->zero());
    for (int h = 0; h < d; ++h) {
        for (const auto& t : H->coproduct2(h)) {
            auto w = H->mul(H->Sinv(H->basis(t.k)), H->basis(t.i));
            for (int k = 0; k < d; ++k)
                if (!w[k].is_zero()) mp.right[size_t(h) * d + k][t.j] += t.c * w[k];
        }
        for (const auto& s : H->coproduct(h)) {
            auto sl = H->Sinv(H->basis(s.j));
            for (int z = 0; z < d; ++z) {
                auto w = H->mul(H->mul(sl, H->basis(z)), H->basis(s.i));
                for (int k = 0; k < d; ++k)
                    if (!w[k].is_zero()) mp.left[size_t(h) * d + k][z] += s.c * w[k];
            }
        }
    }
    (void)f;
    return mp;
}

template <class F>
std::pair<MatchedPair<F>, HopfAlgebra<F>> drinfeld_double(const HopfPtr<F>& H) {
    auto mp = double_pair(H);
    auto D = bicrossed_product(mp);
    return {std::move(mp), std::move(D)};
}

// D(k[G]) straight from the conjugation action g |> e_h = e_{g h g^-1}.
template <class F>
MatchedPair<F> group_double_pair(const FiniteGroup& G, const F& f) {
    auto H = share(group_algebra(G, f));
    auto A = share(dual_group_algebra(G, f, true));
    auto mp = trivial_pair(A, H);
    int n = G.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            auto v = A->zero();
            v[G.mul(G.mul(g, h), G.inv(g))] = f.one();
            mp.left[size_t(g) * n + h] = v;
        }
    return mp;
}

// ------------------------------------------------------------ skew pairings

template <class F>
struct SkewPairing {
    using scalar = typename F::scalar;
    HopfPtr<F> A, H;
    Matrix<scalar> lambda;     // dim H x dim A
    Matrix<scalar> lambda_inv; // convolution inverse on the coalgebra H (x) A
};

struct SkewPairingReport {
    Check invertible{"convolution invertible"};
    Check multiplicative_h{"lambda(hg, a) = lambda(h, a1) lambda(g, a2)"};
    Check multiplicative_a{"lambda(h, ab) = lambda(h2, a) lambda(h1, b)"};
    Check normalized{"lambda(1, a) = eps(a), lambda(h, 1) = eps(h)"};
    bool ok() const { return invertible.pass && multiplicative_h.pass && multiplicative_a.pass && normalized.pass; }
    std::string str() const {
        return invertible.str() + ", " + multiplicative_h.str() + ", " + multiplicative_a.str() + ", " + normalized.str();
    }
};

template <class F>
std::optional<Matrix<typename F::scalar>> convolution_inverse(const HopfPtr<F>& A, const HopfPtr<F>& H,
                                                             const Matrix<typename F::scalar>& lambda) {
    const auto& f = A->field();
    int dA = A->dim(), dH = H->dim(), n = dA * dH;
    // unknown mu(h', a') at position h' * dA + a'; equation for (h, a):
    //   sum lambda(h1, a1) mu(h2, a2) = eps(h) eps(a)
    Matrix<typename F::scalar> M(n, n, f.zero());
    std::vector<typename F::scalar> rhs(n, f.zero());
    for (int h = 0; h < dH; ++h)
        for (int a = 0; a < dA; ++a) {
            int row = h * dA + a;
            rhs[row] = H->counit()[h] * A->counit()[a];
            for (const auto& s : H->coproduct(h))
                for (const auto& t : A->coproduct(a)) M(row, s.j * dA + t.j) += s.c * t.c * lambda(s.i, t.i);
        }
    auto mu = solve(f, M, rhs);
    if (!mu) return std::nullopt;
    Matrix<typename F::scalar> out(dH, dA, f.zero());
    for (int h = 0; h < dH; ++h)
        for (int a = 0; a < dA; ++a) out(h, a) = (*mu)[h * dA + a];
    // a one-sided inverse in finite dimensions is two-sided, but check anyway
    for (int h = 0; h < dH; ++h)
        for (int a = 0; a < dA; ++a) {
            auto acc = f.zero();
            for (const auto& s : H->coproduct(h))
                for (const auto& t : A->coproduct(a)) acc += s.c * t.c * out(s.i, t.i) * lambda(s.j, t.j);
            if (!(acc == H->counit()[h] * A->counit()[a])) return std::nullopt;
        }
    return out;
}

template <class F>
SkewPairing<F> make_skew_pairing(const HopfPtr<F>& A, const HopfPtr<F>& H, Matrix<typename F::scalar> lambda) {
    if (lambda.rows() != H->dim() || lambda.cols() != A->dim()) throw dimension_mismatch("skew pairing matrix shape");
    auto inv = convolution_inverse(A, H, lambda);
    if (!inv) throw precondition_failed("skew pairing is not convolution invertible");
    return {A, H, std::move(lambda), std::move(*inv)};
}

template <class F>
SkewPairingReport verify_skew_pairing(const SkewPairing<F>& sp) {
    const auto& A = *sp.A;
    const auto& H = *sp.H;
    const auto& f = A.field();
    int dA = A.dim(), dH = H.dim();
    SkewPairingReport rep;
    auto lam = [&](const std::vector<typename F::scalar>& h, const std::vector<typename F::scalar>& a) {
        auto acc = f.zero();
        for (int i = 0; i < dH; ++i)
            if (!h[i].is_zero())
                for (int j = 0; j < dA; ++j)
                    if (!a[j].is_zero()) acc += h[i] * a[j] * sp.lambda(i, j);
        return acc;
    };
    if (!convolution_inverse(sp.A, sp.H, sp.lambda)) rep.invertible.fail({}, "no inverse");
    for (int h = 0; h < dH; ++h)
        for (int g = 0; g < dH; ++g)
            for (int a = 0; a < dA; ++a) {
                auto rhs = f.zero();
                for (const auto& t : A.coproduct(a)) rhs += t.c * sp.lambda(h, t.i) * sp.lambda(g, t.j);
                if (!(lam(H.mul(H.basis(h), H.basis(g)), A.basis(a)) == rhs)) rep.multiplicative_h.fail({h, g, a}, "");
            }
    for (int h = 0; h < dH; ++h)
        for (int a = 0; a < dA; ++a)
            for (int b = 0; b < dA; ++b) {
                auto rhs = f.zero();
                for (const auto& s : H.coproduct(h)) rhs += s.c * sp.lambda(s.j, a) * sp.lambda(s.i, b);
                if (!(lam(H.basis(h), A.mul(A.basis(a), A.basis(b))) == rhs)) rep.multiplicative_a.fail({h, a, b}, "");
            }
    for (int a = 0; a < dA; ++a)
        if (!(lam(H.one(), A.basis(a)) == A.counit()[a])) rep.normalized.fail({a}, "lambda(1, a)");
    for (int h = 0; h < dH; ++h)
        if (!(lam(H.basis(h), A.one()) == H.counit()[h])) rep.normalized.fail({h}, "lambda(h, 1)");
    return rep;
}

// h <| a = h2 lambda^-1(h1, a1) lambda(h3, a2)
// h |> a = a2 lambda^-1(h1, a1) lambda(h2, a3)
template <class F>
MatchedPair<F> skew_pairing_pair(const SkewPairing<F>& sp) {
    const auto& A = *sp.A;
    const auto& H = *sp.H;
    int dA = A.dim();
    auto mp = trivial_pair(sp.A, sp.H);
    for (int h = 0; h < H.dim(); ++h)
        for (int a = 0; a < dA; ++a) {
            auto r = H.zero();
            for (const auto& s : H.coproduct2(h))
                for (const auto& t : A.coproduct(a)) r[s.j] += s.c * t.c * sp.lambda_inv(s.i, t.i) * sp.lambda(s.k, t.j);
            auto l = A.zero();
            for (const auto& s : H.coproduct(h))
                for (const auto& t : A.coproduct2(a)) l[t.j] += s.c * t.c * sp.lambda_inv(s.i, t.i) * sp.lambda(s.j, t.k);
            mp.right[size_t(h) * dA + a] = r;
            mp.left[size_t(h) * dA + a] = l;
        }
    return mp;
}

template <class F>
std::pair<MatchedPair<F>, HopfAlgebra<F>> double_from_skew_pairing(const SkewPairing<F>& sp) {
    auto mp = skew_pairing_pair(sp);
    auto rep = verify_matched_pair(mp);
    if (!rep.ok()) throw precondition_failed("skew pairing gives no matched pair: " + rep.first_failure()->str());
    auto D = bicrossed_product(mp, false);
    return {std::move(mp), std::move(D)};
}

// lambda(h, f) = <f, S^-1(h)> on H and A = (H*)^cop with the dual basis; for
// H = k[G] this is lambda(g, e_x) = delta_{x, g^-1}.
template <class F>
SkewPairing<F> evaluation_pairing(const HopfPtr<F>& H, const HopfPtr<F>& A) {
    const auto& f = H->field();
    int d = H->dim();
    if (!H->antipode_invertible()) throw precondition_failed("evaluation pairing needs an invertible antipode");
    if (A->dim() != d) throw dimension_mismatch("evaluation pairing needs dim A = dim H");
    Matrix<typename F::scalar> lam(d, d, f.zero());
    for (int h = 0; h < d; ++h) {
        auto s = H->Sinv(H->basis(h));
        for (int k = 0; k < d; ++k) lam(h, k) = s[k];
    }
    return make_skew_pairing(A, H, std::move(lam));
}

template <class F>
SkewPairing<F> trivial_pairing(const HopfPtr<F>& A, const HopfPtr<F>& H) {
    const auto& f = H->field();
    Matrix<typename F::scalar> lam(H->dim(), A->dim(), f.zero());
    for (int h = 0; h < H->dim(); ++h)
        for (int a = 0; a < A->dim(); ++a) lam(h, a) = H->counit()[h] * A->counit()[a];
    return make_skew_pairing(A, H, std::move(lam));
}

// ------------------------------------------------------------ mirror pair

// (H, A, |>', <|') with a |>' h = S_H(S_H^-1(h) <| S_A^-1(a)) and
// a <|' h = S_A(S_H^-1(h) |> S_A^-1(a)); these are read off from the cross
// relation of A |><| H after applying the antipode.
template <class F>
MatchedPair<F> mirror_actions(const MatchedPair<F>& mp) {
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    if (!A.antipode_invertible() || !H.antipode_invertible()) throw precondition_failed("mirror pair needs invertible antipodes");
    int dA = mp.dA(), dH = mp.dH();
    MatchedPair<F> out{mp.H, mp.A, {}, {}};
    out.right.assign(size_t(dA) * dH, A.zero());
    out.left.assign(size_t(dA) * dH, H.zero());
    for (int a = 0; a < dA; ++a) {
        auto sa = A.Sinv(A.basis(a));
        for (int h = 0; h < dH; ++h) {
            auto sh = H.Sinv(H.basis(h));
            out.left[size_t(a) * dH + h] = H.S(mp.act_right(sh, sa));
            out.right[size_t(a) * dH + h] = A.S(mp.act_left(sh, sa));
        }
    }
    return out;
}

// The same two actions written with a second layer of actions, as
//   a |>' h = S_H(S^-1 h1 <| S^-1 a1) <| S_A(S^-1 h2 |> S^-1 a2),
//   a <|' h = S_H(S^-1 h1 <| S^-1 a1) |> S_A(S^-1 h2 |> S^-1 a2).
template <class F>
MatchedPair<F> mirror_actions_nested(const MatchedPair<F>& mp) {
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    int dA = mp.dA(), dH = mp.dH();
    MatchedPair<F> out{mp.H, mp.A, {}, {}};
    out.right.assign(size_t(dA) * dH, A.zero());
    out.left.assign(size_t(dA) * dH, H.zero());
    for (int a = 0; a < dA; ++a)
        for (int h = 0; h < dH; ++h) {
            auto& L = out.left[size_t(a) * dH + h];
            auto& R = out.right[size_t(a) * dH + h];
            for (const auto& s : H.coproduct(h))
                for (const auto& t : A.coproduct(a)) {
                    auto x = H.S(mp.act_right(H.Sinv(H.basis(s.i)), A.Sinv(A.basis(t.i))));
                    auto y = A.S(mp.act_left(H.Sinv(H.basis(s.j)), A.Sinv(A.basis(t.j))));
                    auto c = s.c * t.c;
                    auto l = mp.act_right(x, y);
                    auto r = mp.act_left(x, y);
                    for (int k = 0; k < dH; ++k) L[k] += c * l[k];
                    for (int k = 0; k < dA; ++k) R[k] += c * r[k];
                }
        }
    return out;
}

template <class F>
struct MirrorResult {
    MatchedPair<F> pair;
    HopfPtr<F> source, target; // A |><| H and H |><|' A
    LinMap<F> iso;
};

// psi = phi o S_{A |><| H} with phi(a (x) h) = S_H(h) (x) S_A(a).
template <class F>
MirrorResult<F> mirror_pair(const MatchedPair<F>& mp) {
    auto mirrored = mirror_actions(mp);
    auto rep = verify_matched_pair(mirrored);
    if (!rep.ok()) throw error("mirror actions fail: " + rep.first_failure()->str());
    auto E = share(bicrossed_product(mp));
    auto T = share(bicrossed_product(mirrored, false));
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    int dA = mp.dA(), dH = mp.dH();
    LinMap<F> phi(E, T);
    for (int a = 0; a < dA; ++a)
        for (int h = 0; h < dH; ++h) {
            auto sh = H.S(H.basis(h));
            auto sa = A.S(A.basis(a));
            std::vector<typename F::scalar> col(size_t(dA) * dH, mp.field().zero());
            detail::add_outer(col, mp.field().one(), sh, sa);
            phi.m.set_column(a * dH + h, col);
        }
    auto psi = compose(phi, antipode_map(E));
    return {std::move(mirrored), E, T, std::move(psi)};
}

// ------------------------------------------------------------ factorization

template <class F>
struct Factorization {
    MatchedPair<F> pair;
    LinMap<F> iso; // A |><| H -> E, a |><| h -> i(a) j(h)
};

template <class F>
Factorization<F> factorize(const HopfPtr<F>& E, const LinMap<F>& i, const LinMap<F>& j) {
    const auto& f = E->field();
    if (i.cod.get() != E.get() && !i.cod->same_structure(*E)) throw precondition_failed("factorize: i does not land in E");
    if (j.cod.get() != E.get() && !j.cod->same_structure(*E)) throw precondition_failed("factorize: j does not land in E");
    if (!is_hopf_map(i) || !is_hopf_map(j)) throw precondition_failed("factorize: i and j must be Hopf algebra maps");
    if (rank(f, i.m) != i.dom->dim() || rank(f, j.m) != j.dom->dim()) throw precondition_failed("factorize: i and j must be injective");
    auto A = i.dom, H = j.dom;
    int dA = A->dim(), dH = H->dim(), d = E->dim();
    if (dA * dH != d) throw precondition_failed("factorize: dim A * dim H != dim E");
    Matrix<typename F::scalar> M(d, d, f.zero());
    for (int a = 0; a < dA; ++a)
        for (int h = 0; h < dH; ++h) M.set_column(a * dH + h, E->mul(i.image(a), j.image(h)));
    auto Minv = inverse(f, M);
    if (!Minv) throw precondition_failed("factorize: a (x) h -> i(a) j(h) is not bijective");
    MatchedPair<F> mp{A, H, {}, {}};
    mp.right.assign(size_t(dA) * dH, H->zero());
    mp.left.assign(size_t(dA) * dH, A->zero());
    for (int h = 0; h < dH; ++h)
        for (int a = 0; a < dA; ++a) {
            auto t = matvec(f, *Minv, E->mul(j.image(h), i.image(a)));
            auto& r = mp.right[size_t(h) * dA + a];
            auto& l = mp.left[size_t(h) * dA + a];
            for (int p = 0; p < dA; ++p)
                for (int q = 0; q < dH; ++q) {
                    const auto& c = t[size_t(p) * dH + q];
                    if (c.is_zero()) continue;
                    r[q] += c * A->counit()[p];
                    l[p] += c * H->counit()[q];
                }
        }
    auto rep = verify_matched_pair(mp);
    if (!rep.ok()) throw error("factorize: extracted actions fail: " + rep.first_failure()->str());
    auto P = share(bicrossed_product(mp, false));
    LinMap<F> iso(P, E, M);
    if (!is_hopf_map(iso)) throw error("factorize: multiplication map is not a Hopf map");
    return {std::move(mp), std::move(iso)};
}

} // namespace hopf
