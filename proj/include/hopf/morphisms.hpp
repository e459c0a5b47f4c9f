#pragma once

// Hopf algebra maps between bicrossed products described by four coalgebra
// maps (u, p, r, v), maps that fix the left factor, cohomologous matched
// pairs and the special case of Drinfel'd doubles of group algebras.

#include "enumerate.hpp"
#include "products.hpp"

namespace hopf {

// A matched pair together with its bicrossed product.
template <class F>
struct Bicrossed {
    MatchedPair<F> pair;
    HopfPtr<F> E;
};

template <class F>
Bicrossed<F> make_bicrossed(MatchedPair<F> mp) {
    auto E = share(bicrossed_product(mp));
    return {std::move(mp), std::move(E)};
}

// u: A -> A', p: A -> H', r: H -> A', v: H -> H'
template <class F>
struct Quadruple {
    LinMap<F> u, p, r, v;
    bool operator==(const Quadruple& o) const { return u == o.u && p == o.p && r == o.r && v == o.v; }
};

struct QuadrupleReport {
    Check components{"components are unitary coalgebra maps"};
    Check up_cocommute{"u and p cocommute"};
    Check rv_cocommute{"r and v cocommute"};
    Check u_products{"u on products"};
    Check p_products{"p on products"};
    Check r_products{"r on products"};
    Check v_products{"v on products"};
    Check left_exchange{"exchange with the left action"};
    Check right_exchange{"exchange with the right action"};

    std::vector<const Check*> all() const {
        return {&components, &up_cocommute, &rv_cocommute, &u_products,    &p_products,
                &r_products, &v_products,   &left_exchange, &right_exchange};
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

template <class F>
void check_quadruple_shape(const Quadruple<F>& q, const MatchedPair<F>& mp, const MatchedPair<F>& mq) {
    auto fits = [](const LinMap<F>& m, int d, int c) { return m.dom->dim() == d && m.cod->dim() == c; };
    if (!fits(q.u, mp.dA(), mq.dA()) || !fits(q.p, mp.dA(), mq.dH()) || !fits(q.r, mp.dH(), mq.dA()) ||
        !fits(q.v, mp.dH(), mq.dH()))
        throw dimension_mismatch("quadruple does not match the matched pairs");
}

template <class F>
std::vector<std::vector<typename F::scalar>> images(const LinMap<F>& m) {
    std::vector<std::vector<typename F::scalar>> out;
    for (int j = 0; j < m.dom->dim(); ++j) out.push_back(m.image(j));
    return out;
}

template <class S>
void axpy(std::vector<S>& y, const S& c, const std::vector<S>& x) {
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

// sum over the coproduct of b_i of c * x[i1] (x) y[i2], flat
template <class F, class V>
std::vector<typename F::scalar> sweedler_outer(const HopfAlgebra<F>& H, int i, const V& x, const V& y, bool flip) {
    const auto& f = H.field();
    std::vector<typename F::scalar> out(x[0].size() * y[0].size(), f.zero());
    for (const auto& t : H.coproduct(i)) add_outer(out, t.c, x[flip ? t.j : t.i], y[flip ? t.i : t.j]);
    return out;
}

} // namespace detail

template <class F>
QuadrupleReport verify_quadruple(const Quadruple<F>& q, const MatchedPair<F>& mp, const MatchedPair<F>& mq) {
    using vec = typename MatchedPair<F>::vec;
    detail::check_quadruple_shape(q, mp, mq);
    QuadrupleReport rep;
    const LinMap<F>* parts[] = {&q.u, &q.p, &q.r, &q.v};
    for (int k = 0; k < 4; ++k)
        if (!is_unitary(*parts[k]) || !is_coalgebra_map(*parts[k])) {
            const char* names[] = {"u", "p", "r", "v"};
            rep.components.fail({k}, std::string(names[k]) + " is not a unitary coalgebra map");
            return rep;
        }
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    const auto& A2 = *mq.A;
    const auto& H2 = *mq.H;
    const auto& f = mp.field();
    int dA = mp.dA(), dH = mp.dH();
    auto U = detail::images(q.u), P = detail::images(q.p), R = detail::images(q.r), V = detail::images(q.v);

    for (int a = 0; a < dA; ++a)
        if (detail::sweedler_outer(A, a, U, P, false) != detail::sweedler_outer(A, a, U, P, true)) {
            rep.up_cocommute.fail({a}, "u(a1) (x) p(a2) != u(a2) (x) p(a1)");
            break;
        }
    for (int h = 0; h < dH; ++h)
        if (detail::sweedler_outer(H, h, R, V, false) != detail::sweedler_outer(H, h, R, V, true)) {
            rep.rv_cocommute.fail({h}, "r(h1) (x) v(h2) != r(h2) (x) v(h1)");
            break;
        }

    for (int a = 0; a < dA; ++a)
        for (int b = 0; b < dA; ++b) {
            auto ab = A.mul(A.basis(a), A.basis(b));
            vec lhs = q.u(ab), rhs = A2.zero();
            for (const auto& t : A.coproduct(a)) detail::axpy(rhs, t.c, A2.mul(U[t.i], mq.act_left(P[t.j], U[b])));
            if (lhs != rhs) rep.u_products.fail({a, b}, "u(ab) != u(a1)(p(a2) |> u(b))");
            vec lp = q.p(ab), rp = H2.zero();
            for (const auto& t : A.coproduct(b)) detail::axpy(rp, t.c, H2.mul(mq.act_right(P[a], U[t.i]), P[t.j]));
            if (lp != rp) rep.p_products.fail({a, b}, "p(ab) != (p(a) <| u(b1)) p(b2)");
        }
    for (int h = 0; h < dH; ++h)
        for (int g = 0; g < dH; ++g) {
            auto hg = H.mul(H.basis(h), H.basis(g));
            vec lhs = q.r(hg), rhs = A2.zero();
            for (const auto& t : H.coproduct(h)) detail::axpy(rhs, t.c, A2.mul(R[t.i], mq.act_left(V[t.j], R[g])));
            if (lhs != rhs) rep.r_products.fail({h, g}, "r(hg) != r(h1)(v(h2) |> r(g))");
            vec lv = q.v(hg), rv = H2.zero();
            for (const auto& t : H.coproduct(g)) detail::axpy(rv, t.c, H2.mul(mq.act_right(V[h], R[t.i]), V[t.j]));
            if (lv != rv) rep.v_products.fail({h, g}, "v(hg) != (v(h) <| r(g1)) v(g2)");
        }
    for (int h = 0; h < dH; ++h)
        for (int b = 0; b < dA; ++b) {
            vec l7 = A2.zero(), r7 = A2.zero();
            for (const auto& t : H.coproduct(h)) detail::axpy(l7, t.c, A2.mul(R[t.i], mq.act_left(V[t.j], U[b])));
            vec l8 = H2.zero(), r8 = H2.zero();
            for (const auto& t : A.coproduct(b)) detail::axpy(l8, t.c, H2.mul(mq.act_right(V[h], U[t.i]), P[t.j]));
            for (const auto& s : H.coproduct2(h))
                for (const auto& t : A.coproduct2(b)) {
                    auto c = s.c * t.c;
                    auto x1 = mp.lt(s.i, t.i), x2 = mp.lt(s.j, t.j);
                    auto y3 = mp.rt(s.k, t.k);
                    detail::axpy(r7, c, A2.mul(q.u(x1), mq.act_left(q.p(x2), q.r(y3))));
                    auto y2 = mp.rt(s.j, t.j);
                    detail::axpy(r8, c, H2.mul(mq.act_right(q.p(x1), q.r(y2)), q.v(y3)));
                }
            if (l7 != r7) rep.left_exchange.fail({h, b}, "r(h1)(v(h2) |> u(b)) differs");
            if (l8 != r8) rep.right_exchange.fail({h, b}, "(v(h) <| u(b1)) p(b2) differs");
        }
    (void)f;
    return rep;
}

// psi(a |><| h) = alpha(a) beta(h) with alpha(a) = u(a1) |><| p(a2), beta(h) = r(h1) |><| v(h2)
template <class F>
LinMap<F> assemble_psi(const Quadruple<F>& q, const Bicrossed<F>& X, const Bicrossed<F>& Y, bool check = true) {
    if (check) {
        auto rep = verify_quadruple(q, X.pair, Y.pair);
        if (!rep.ok()) throw precondition_failed("invalid quadruple: " + rep.first_failure()->str());
    } else {
        detail::check_quadruple_shape(q, X.pair, Y.pair);
    }
    const auto& A = *X.pair.A;
    const auto& H = *X.pair.H;
    const auto& E2 = *Y.E;
    int dA = X.pair.dA(), dH = X.pair.dH();
    auto U = detail::images(q.u), P = detail::images(q.p), R = detail::images(q.r), V = detail::images(q.v);
    std::vector<std::vector<typename F::scalar>> alpha, beta;
    for (int a = 0; a < dA; ++a) alpha.push_back(detail::sweedler_outer(A, a, U, P, false));
    for (int h = 0; h < dH; ++h) beta.push_back(detail::sweedler_outer(H, h, R, V, false));
    LinMap<F> psi(X.E, Y.E);
    for (int a = 0; a < dA; ++a)
        for (int h = 0; h < dH; ++h) psi.m.set_column(a * dH + h, E2.mul(alpha[a], beta[h]));
    return psi;
}

// u = (Id (x) eps) psi i_A, p = (eps (x) Id) psi i_A, r = (Id (x) eps) psi i_H, v = (eps (x) Id) psi i_H
template <class F>
Quadruple<F> decompose_psi(const LinMap<F>& psi, const Bicrossed<F>& X, const Bicrossed<F>& Y, bool check = true) {
    if (psi.dom->dim() != X.E->dim() || psi.cod->dim() != Y.E->dim()) throw dimension_mismatch("decompose_psi: shape");
    if (check && !is_hopf_map(psi)) throw precondition_failed("decompose_psi: not a Hopf algebra map");
    auto iA = inclusion_a(X.pair, X.E), iH = inclusion_h(X.pair, X.E);
    auto pA = projection_a(Y.pair, Y.E), pH = projection_h(Y.pair, Y.E);
    auto a = compose(psi, iA), h = compose(psi, iH);
    return {compose(pA, a), compose(pH, a), compose(pA, h), compose(pH, h)};
}

template <class F>
Quadruple<F> identity_quadruple(const Bicrossed<F>& X) {
    return {identity_map(X.pair.A), trivial_map(X.pair.A, X.pair.H), trivial_map(X.pair.H, X.pair.A),
            identity_map(X.pair.H)};
}

// ------------------------------------------------------------ enumeration

template <class F>
struct Morphism {
    Quadruple<F> q;
    LinMap<F> psi;
};

template <class F>
struct MorphismSearchSpace {
    std::vector<LinMap<F>> alphas; // A -> E'
    std::vector<LinMap<F>> betas;  // H -> E'
};

// Every Hopf map psi: E -> E' restricts to Hopf maps psi i_A: A -> E' and
// psi i_H: H -> E' and equals their product, so ranging over pairs of Hopf
// maps out of the factors and keeping the valid quadruples is complete.  With
// stabilize_a the first restriction is fixed to the inclusion of A.
template <class F>
MorphismSearchSpace<F> morphism_search_space(const Bicrossed<F>& X, const Bicrossed<F>& Y, bool stabilize_a = false) {
    MorphismSearchSpace<F> sp;
    if (stabilize_a) {
        if (!X.pair.A->same_structure(*Y.pair.A)) throw precondition_failed("stabilizing maps need the same left factor");
        sp.alphas.push_back(LinMap<F>(X.pair.A, Y.E, inclusion_a(Y.pair, Y.E).m));
    } else {
        sp.alphas = hopf_maps(X.pair.A, Y.E);
    }
    sp.betas = hopf_maps(X.pair.H, Y.E);
    return sp;
}

template <class F>
std::vector<Morphism<F>> enumerate_morphisms(const Bicrossed<F>& X, const Bicrossed<F>& Y, const MorphismSearchSpace<F>& sp,
                                             bool isomorphisms_only = false) {
    auto pA = projection_a(Y.pair, Y.E), pH = projection_h(Y.pair, Y.E);
    std::vector<Morphism<F>> out;
    for (const auto& al : sp.alphas) {
        if (isomorphisms_only && rank(al.field(), al.m) < al.dom->dim()) continue;
        auto u = compose(pA, al), p = compose(pH, al);
        for (const auto& be : sp.betas) {
            Quadruple<F> q{u, p, compose(pA, be), compose(pH, be)};
            if (!verify_quadruple(q, X.pair, Y.pair).ok()) continue;
            auto psi = assemble_psi(q, X, Y, false);
            if (isomorphisms_only && !is_bijective(psi)) continue;
            if (!is_hopf_map(psi)) throw error("valid quadruple assembled to a map that is not a Hopf map");
            out.push_back({std::move(q), std::move(psi)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Morphism<F>& a, const Morphism<F>& b) { return a.psi.m < b.psi.m; });
    out.erase(std::unique(out.begin(), out.end(), [](const Morphism<F>& a, const Morphism<F>& b) { return a.psi == b.psi; }),
              out.end());
    return out;
}

template <class F>
std::vector<Morphism<F>> enumerate_morphisms(const Bicrossed<F>& X, const Bicrossed<F>& Y, bool stabilize_a = false,
                                             bool isomorphisms_only = false) {
    return enumerate_morphisms(X, Y, morphism_search_space(X, Y, stabilize_a), isomorphisms_only);
}

// ------------------------------------------------------------ maps fixing A

template <class F>
struct StabilizingPair {
    LinMap<F> r; // H -> A
    LinMap<F> v; // H -> H'
};

template <class F>
struct StabilizingReport {
    Check cocommute{"r and v cocommute"};
    Check r_products{"r on products"};
    Check v_products{"v on products"};
    Check left_action{"left action transported"};
    Check right_linear{"v is right A-linear"};
    Check hopf_map{"assembled map is a Hopf map"};
    Check cocentral{"r is cocentral"};
    Check inverse{"explicit inverse"};
    bool is_morphism = false;
    bool is_isomorphism = false;
    std::optional<LinMap<F>> psi, psi_inverse;

    std::vector<const Check*> conditions() const { return {&cocommute, &r_products, &v_products, &left_action, &right_linear}; }
    std::string str() const {
        std::string s;
        for (auto* c : conditions()) s += (s.empty() ? "" : "\n") + c->str();
        for (auto* c : {&hopf_map, &cocentral, &inverse}) s += "\n" + c->str();
        return s;
    }
};

namespace detail {

// psi(a |><| h) = a r(h1) |><|' v(h2)
template <class F>
LinMap<F> stabilizing_map(const LinMap<F>& r, const LinMap<F>& v, const Bicrossed<F>& X, const Bicrossed<F>& Y) {
    const auto& A = *X.pair.A;
    const auto& H = *X.pair.H;
    int dA = X.pair.dA(), dH = X.pair.dH();
    auto R = images(r), V = images(v);
    LinMap<F> psi(X.E, Y.E);
    for (int a = 0; a < dA; ++a) {
        std::vector<std::vector<typename F::scalar>> aR;
        for (int h = 0; h < dH; ++h) aR.push_back(A.mul(A.basis(a), R[h]));
        for (int h = 0; h < dH; ++h) psi.m.set_column(a * dH + h, sweedler_outer(H, h, aR, V, false));
    }
    return psi;
}

} // namespace detail

template <class F>
StabilizingReport<F> verify_stabilizing_pair(const StabilizingPair<F>& sp, const Bicrossed<F>& X, const Bicrossed<F>& Y) {
    using vec = typename MatchedPair<F>::vec;
    const auto& mp = X.pair;
    const auto& mq = Y.pair;
    if (!mp.A->same_structure(*mq.A)) throw precondition_failed("stabilizing pair: left factors differ");
    if (sp.r.dom->dim() != mp.dH() || sp.r.cod->dim() != mp.dA() || sp.v.dom->dim() != mp.dH() ||
        sp.v.cod->dim() != mq.dH())
        throw dimension_mismatch("stabilizing pair does not match the matched pairs");
    if (!is_unitary(sp.r) || !is_coalgebra_map(sp.r) || !is_unitary(sp.v) || !is_coalgebra_map(sp.v))
        throw precondition_failed("stabilizing pair: r and v must be unitary coalgebra maps");
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    const auto& H2 = *mq.H;
    int dA = mp.dA(), dH = mp.dH();
    auto R = detail::images(sp.r), V = detail::images(sp.v);
    StabilizingReport<F> rep;

    for (int h = 0; h < dH; ++h)
        if (detail::sweedler_outer(H, h, R, V, false) != detail::sweedler_outer(H, h, R, V, true)) {
            rep.cocommute.fail({h}, "r(h1) (x) v(h2) != r(h2) (x) v(h1)");
            break;
        }
    for (int h = 0; h < dH; ++h)
        for (int g = 0; g < dH; ++g) {
            auto hg = H.mul(H.basis(h), H.basis(g));
            vec rhs = A.zero();
            for (const auto& t : H.coproduct(h)) detail::axpy(rhs, t.c, A.mul(R[t.i], mq.act_left(V[t.j], R[g])));
            if (sp.r(hg) != rhs) rep.r_products.fail({h, g}, "r(hg) != r(h1)(v(h2) |>' r(g))");
            vec rv = H2.zero();
            for (const auto& t : H.coproduct(g)) detail::axpy(rv, t.c, H2.mul(mq.act_right(V[h], R[t.i]), V[t.j]));
            if (sp.v(hg) != rv) rep.v_products.fail({h, g}, "v(hg) != (v(h) <|' r(g1)) v(g2)");
        }
    for (int h = 0; h < dH; ++h)
        for (int a = 0; a < dA; ++a) {
            // h |> a = r(h1) (v(h2) |>' a1) S(r(h3 <| a2))
            vec rhs = A.zero();
            for (const auto& s : H.coproduct2(h))
                for (const auto& t : A.coproduct(a)) {
                    auto w = A.mul(A.mul(R[s.i], mq.act_left(V[s.j], A.basis(t.i))), A.S(sp.r(mp.rt(s.k, t.j))));
                    detail::axpy(rhs, s.c * t.c, w);
                }
            if (mp.lt(h, a) != rhs) rep.left_action.fail({h, a}, "h |> a differs from its transport");
            if (sp.v(mp.rt(h, a)) != mq.act_right(V[h], A.basis(a))) rep.right_linear.fail({h, a}, "v(h <| a) != v(h) <|' a");
        }
    rep.is_morphism = true;
    for (auto* c : rep.conditions()) rep.is_morphism = rep.is_morphism && c->pass;
    if (!rep.is_morphism) return rep;

    rep.psi = detail::stabilizing_map(sp.r, sp.v, X, Y);
    if (!is_hopf_map(*rep.psi)) rep.hopf_map.fail({}, "psi is not a Hopf algebra map");
    auto vinv = inverse_map(sp.v);
    if (!vinv) return rep;
    if (!is_cocentral(sp.r)) rep.cocentral.fail({}, "r with bijective v is not cocentral");
    // psi^-1(a |><|' h') = a (S r v^-1)(h'1) |><| v^-1(h'2)
    auto q = compose(antipode_map(mp.A), compose(sp.r, *vinv));
    LinMap<F> back(Y.E, X.E);
    auto Q = detail::images(q), W = detail::images(*vinv);
    for (int a = 0; a < dA; ++a) {
        std::vector<vec> aQ;
        for (int h = 0; h < mq.dH(); ++h) aQ.push_back(A.mul(A.basis(a), Q[h]));
        for (int h = 0; h < mq.dH(); ++h) back.m.set_column(a * mq.dH() + h, detail::sweedler_outer(H2, h, aQ, W, false));
    }
    if (!(compose(back, *rep.psi) == identity_map(X.E)) || !(compose(*rep.psi, back) == identity_map(Y.E)))
        rep.inverse.fail({}, "the explicit inverse does not invert psi");
    rep.psi_inverse = std::move(back);
    rep.is_isomorphism = rep.hopf_map.pass && rep.cocentral.pass && rep.inverse.pass;
    return rep;
}

// ------------------------------------------------------------ cohomologous pairs

template <class F>
struct Witness {
    LinMap<F> r, v, psi;
};

template <class F>
struct WitnessSearch {
    std::optional<Witness<F>> witness;
    std::size_t examined = 0; // candidates tried; on a negative answer, the whole family
};

// The actions of X are implemented from those of Y through (r, v):
//   h <| a = v^-1(v(h) <|' a),
//   h |> a = r(h1) (v(h2) |>' a1) (S r v^-1)(v(h3) <|' a2),
// and r, v satisfy the product rules for r and v.
template <class F>
bool implements_actions(const LinMap<F>& r, const LinMap<F>& v, const LinMap<F>& vinv, const MatchedPair<F>& mp,
                        const MatchedPair<F>& mq) {
    using vec = typename MatchedPair<F>::vec;
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    int dA = mp.dA(), dH = mp.dH();
    auto R = detail::images(r), V = detail::images(v);
    for (int h = 0; h < dH; ++h)
        for (int a = 0; a < dA; ++a)
            if (mp.rt(h, a) != vinv(mq.act_right(V[h], A.basis(a)))) return false;
    auto srv = compose(antipode_map(mp.A), compose(r, vinv));
    for (int h = 0; h < dH; ++h)
        for (int a = 0; a < dA; ++a) {
            vec rhs = A.zero();
            for (const auto& s : H.coproduct2(h))
                for (const auto& t : A.coproduct(a)) {
                    auto w = A.mul(A.mul(R[s.i], mq.act_left(V[s.j], A.basis(t.i))),
                                   srv(mq.act_right(V[s.k], A.basis(t.j))));
                    detail::axpy(rhs, s.c * t.c, w);
                }
            if (mp.lt(h, a) != rhs) return false;
        }
    for (int h = 0; h < dH; ++h)
        for (int g = 0; g < dH; ++g) {
            auto hg = H.mul(H.basis(h), H.basis(g));
            vec rr = A.zero(), vv = mq.H->zero();
            for (const auto& t : H.coproduct(h)) detail::axpy(rr, t.c, A.mul(R[t.i], mq.act_left(V[t.j], R[g])));
            for (const auto& t : H.coproduct(g)) detail::axpy(vv, t.c, mq.H->mul(mq.act_right(V[h], R[t.i]), V[t.j]));
            if (r(hg) != rr || v(hg) != vv) return false;
        }
    return true;
}

// Searches r over unitary cocentral maps H -> A and v over unitary coalgebra
// automorphisms of H, both in canonical matrix order.
template <class F>
WitnessSearch<F> check_cohomologous(const Bicrossed<F>& X, const Bicrossed<F>& Y) {
    if (!X.pair.A->same_structure(*Y.pair.A) || !X.pair.H->same_structure(*Y.pair.H))
        throw precondition_failed("cohomologous pairs need the same A and H");
    WitnessSearch<F> out;
    auto rs = unitary_coalgebra_maps(X.pair.H, X.pair.A, true);
    auto vs = unitary_coalgebra_maps(X.pair.H, X.pair.H, false, true);
    for (const auto& v : vs) {
        auto vinv = inverse_map(v);
        if (!vinv) continue;
        for (const auto& r : rs) {
            ++out.examined;
            if (!implements_actions(r, v, *vinv, X.pair, Y.pair)) continue;
            auto rep = verify_stabilizing_pair(StabilizingPair<F>{r, v}, X, Y);
            if (!rep.is_isomorphism) throw error("cohomology witness fails as a stabilizing isomorphism:\n" + rep.str());
            out.witness = Witness<F>{r, v, *rep.psi};
            return out;
        }
    }
    return out;
}

template <class F>
WitnessSearch<F> check_coboundary(const Bicrossed<F>& X) {
    return check_cohomologous(X, make_bicrossed(trivial_pair(X.pair.A, X.pair.H)));
}

// A |><| H against a smash product A #' H' (right action of Y trivial).
template <class F>
WitnessSearch<F> check_schur_zassenhaus(const Bicrossed<F>& X, const Bicrossed<F>& Y) {
    using vec = typename MatchedPair<F>::vec;
    if (!Y.pair.right_trivial()) throw precondition_failed("the target must be a smash product with trivial right action");
    if (!X.pair.A->same_structure(*Y.pair.A)) throw precondition_failed("smash comparison needs the same A");
    WitnessSearch<F> out;
    if (!X.pair.right_trivial()) return out;
    const auto& mp = X.pair;
    const auto& A = *mp.A;
    const auto& H = *mp.H;
    int dA = mp.dA(), dH = mp.dH();
    auto rs = unitary_coalgebra_maps(mp.H, mp.A, true);
    auto vs = hopf_maps(mp.H, Y.pair.H);
    for (const auto& v : vs) {
        if (!is_bijective(v)) continue;
        auto V = detail::images(v);
        for (const auto& r : rs) {
            ++out.examined;
            auto R = detail::images(r);
            bool ok = true;
            // h |> a = r(h1) (v(h2) |>' a) S(r(h3))
            for (int h = 0; h < dH && ok; ++h)
                for (int a = 0; a < dA && ok; ++a) {
                    vec rhs = A.zero();
                    for (const auto& s : H.coproduct2(h))
                        detail::axpy(rhs, s.c, A.mul(A.mul(R[s.i], Y.pair.act_left(V[s.j], A.basis(a))), A.S(R[s.k])));
                    ok = mp.lt(h, a) == rhs;
                }
            // r(hg) = r(h1) (v(h2) |>' r(g))
            for (int h = 0; h < dH && ok; ++h)
                for (int g = 0; g < dH && ok; ++g) {
                    vec rhs = A.zero();
                    for (const auto& t : H.coproduct(h)) detail::axpy(rhs, t.c, A.mul(R[t.i], Y.pair.act_left(V[t.j], R[g])));
                    ok = r(H.mul(H.basis(h), H.basis(g))) == rhs;
                }
            if (!ok) continue;
            auto rep = verify_stabilizing_pair(StabilizingPair<F>{r, v}, X, Y);
            if (!rep.is_isomorphism) throw error("smash witness fails as a stabilizing isomorphism:\n" + rep.str());
            out.witness = Witness<F>{r, v, *rep.psi};
            return out;
        }
    }
    return out;
}

// Left A-linear Hopf isomorphisms A (x) H -> A (x) H', psi(a (x) h) = a r(h1) (x) v(h2)
// with v a Hopf isomorphism and r a cocentral Hopf map into the center of A.
template <class F>
WitnessSearch<F> check_tensor_decomposition(const HopfPtr<F>& A, const HopfPtr<F>& H, const HopfPtr<F>& H2) {
    WitnessSearch<F> out;
    if (H->dim() != H2->dim()) return out;
    auto X = make_bicrossed(trivial_pair(A, H));
    auto Y = make_bicrossed(trivial_pair(A, H2));
    auto central = [&](const LinMap<F>& r) {
        for (int h = 0; h < H->dim(); ++h) {
            auto x = r.image(h);
            for (int a = 0; a < A->dim(); ++a)
                if (A->mul(x, A->basis(a)) != A->mul(A->basis(a), x)) return false;
        }
        return true;
    };
    auto rs = hopf_maps(H, A);
    auto vs = hopf_maps(H, H2);
    for (const auto& v : vs) {
        if (!is_bijective(v)) continue;
        for (const auto& r : rs) {
            ++out.examined;
            if (!is_cocentral(r) || !central(r)) continue;
            auto rep = verify_stabilizing_pair(StabilizingPair<F>{r, v}, X, Y);
            if (!rep.is_isomorphism) throw error("tensor witness fails as a stabilizing isomorphism:\n" + rep.str());
            out.witness = Witness<F>{r, v, *rep.psi};
            return out;
        }
    }
    return out;
}

// ------------------------------------------------------------ doubles of group algebras

// psi: D(k[G]) -> D(k[H]) through
//   u(e_g)(h) = theta(h, g),  p(e_g) = sum_y lambda(g, y) y,
//   r(g) = sum_y omega(g, y) e_y,  v a group map G -> H.
template <class F>
struct DoubleMorphismData {
    using scalar = typename F::scalar;
    std::vector<std::vector<scalar>> lambda; // [g][y]
    std::vector<std::vector<scalar>> omega;  // [g][y]
    std::vector<std::vector<scalar>> theta;  // [h][g]
    std::vector<int> v;
    bool operator==(const DoubleMorphismData&) const = default;
};

struct DoubleMorphismReport {
    Check theta_unit{"theta at the identity"};
    Check theta_rows{"theta sums to one"};
    Check theta_products{"theta on products"};
    Check omega_unit{"omega at the identity"};
    Check omega_products{"omega multiplicative"};
    Check lambda_counit{"lambda sums over H"};
    Check lambda_unit{"lambda sums over G"};
    Check lambda_products{"lambda on products in H"};
    Check lambda_coproducts{"lambda on products in G"};
    Check theta_lambda_twist{"theta and lambda commute"};
    Check theta_lambda_theta{"theta lambda theta"};
    Check omega_twist{"omega twisted by v"};
    Check omega_theta_lambda{"omega theta lambda"};
    Check lambda_invariance{"lambda invariance"};

    std::vector<const Check*> all() const {
        return {&theta_unit,      &theta_rows,         &theta_products,     &omega_unit,     &omega_products,
                &lambda_counit,   &lambda_unit,        &lambda_products,    &lambda_coproducts,
                &theta_lambda_twist, &theta_lambda_theta, &omega_twist,     &omega_theta_lambda, &lambda_invariance};
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

template <class F>
struct DoubleMorphismResult {
    DoubleMorphismReport report;
    std::optional<LinMap<F>> psi;
    bool valid() const { return report.ok(); }
};

inline bool is_group_map(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& v) {
    if (int(v.size()) != G.order()) return false;
    for (int x : v)
        if (x < 0 || x >= H.order()) return false;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (v[G.mul(a, b)] != H.mul(v[a], v[b])) return false;
    return true;
}

template <class F>
DoubleMorphismReport check_double_conditions(const DoubleMorphismData<F>& d, const FiniteGroup& G, const FiniteGroup& H,
                                             const F& f) {
    using S = typename F::scalar;
    int n = G.order(), m = H.order();
    int eG = G.identity(), eH = H.identity();
    auto delta = [&](bool b) { return b ? f.one() : f.zero(); };
    const auto& L = d.lambda;
    const auto& W = d.omega;
    const auto& T = d.theta;
    DoubleMorphismReport rep;

    for (int g = 0; g < n; ++g)
        if (T[eH][g] != delta(g == eG)) rep.theta_unit.fail({g}, "theta(1, g) != delta(g, 1)");
    for (int h = 0; h < m; ++h) {
        S s = f.zero();
        for (int x = 0; x < n; ++x) s += T[h][x];
        if (s != f.one()) rep.theta_rows.fail({h}, "sum_x theta(h, x) != 1");
    }
    for (int h = 0; h < m; ++h)
        for (int h2 = 0; h2 < m; ++h2)
            for (int g = 0; g < n; ++g) {
                S s = f.zero();
                for (int x = 0; x < n; ++x) s += T[h][x] * T[h2][G.mul(G.inv(x), g)];
                if (T[H.mul(h, h2)][g] != s) rep.theta_products.fail({h, h2, g}, "theta(hh', g) differs");
            }
    for (int y = 0; y < m; ++y)
        if (W[eG][y] != f.one()) rep.omega_unit.fail({y}, "omega(1, y) != 1");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < m; ++h)
            for (int h2 = 0; h2 < m; ++h2)
                if (W[g][H.mul(h, h2)] != W[g][h] * W[g][h2]) rep.omega_products.fail({g, h, h2}, "omega(g, hh') differs");
    for (int g = 0; g < n; ++g) {
        S s = f.zero();
        for (int y = 0; y < m; ++y) s += L[g][y];
        if (s != delta(g == eG)) rep.lambda_counit.fail({g}, "sum_y lambda(g, y) != delta(g, 1)");
    }
    for (int h = 0; h < m; ++h) {
        S s = f.zero();
        for (int x = 0; x < n; ++x) s += L[x][h];
        if (s != delta(h == eH)) rep.lambda_unit.fail({h}, "sum_x lambda(x, h) != delta(1, h)");
    }
    for (int g = 0; g < n; ++g)
        for (int g2 = 0; g2 < n; ++g2)
            for (int h = 0; h < m; ++h) {
                S s = f.zero();
                for (int y = 0; y < m; ++y) s += L[g][y] * L[g2][H.mul(H.inv(y), h)];
                if (s != delta(g == g2) * L[g][h]) rep.lambda_products.fail({g, g2, h}, "lambda convolution over H differs");
            }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < m; ++h)
            for (int h2 = 0; h2 < m; ++h2) {
                S s = f.zero();
                for (int x = 0; x < n; ++x) s += L[x][h] * L[G.mul(g, G.inv(x))][h2];
                if (s != delta(h == h2) * L[g][h]) rep.lambda_coproducts.fail({g, h, h2}, "lambda convolution over G differs");
            }
    for (int h = 0; h < m; ++h)
        for (int g = 0; g < n; ++g)
            for (int h2 = 0; h2 < m; ++h2) {
                S a = f.zero(), b = f.zero();
                for (int x = 0; x < n; ++x) {
                    a += T[h][x] * L[G.mul(g, G.inv(x))][h2];
                    b += T[h][x] * L[G.mul(G.inv(x), g)][h2];
                }
                if (a != b) rep.theta_lambda_twist.fail({h, g, h2}, "sum theta lambda differs between sides");
            }
    for (int h = 0; h < m; ++h)
        for (int g = 0; g < n; ++g)
            for (int g2 = 0; g2 < n; ++g2) {
                S s = f.zero();
                for (int x = 0; x < n; ++x) {
                    if (T[h][x].is_zero()) continue;
                    for (int y = 0; y < m; ++y)
                        s += L[G.mul(g, G.inv(x))][y] * T[h][x] * T[H.mul(H.mul(H.inv(y), h), y)][g2];
                }
                if (s != delta(g == g2) * T[h][g]) rep.theta_lambda_theta.fail({h, g, g2}, "sum lambda theta theta differs");
            }
    for (int g = 0; g < n; ++g)
        for (int g2 = 0; g2 < n; ++g2)
            for (int h = 0; h < m; ++h) {
                int conj = H.mul(H.mul(H.inv(d.v[g]), h), d.v[g]);
                if (W[g][h] * W[g2][conj] != W[G.mul(g, g2)][h]) rep.omega_twist.fail({g, g2, h}, "omega(g, h) omega(g', ..) differs");
            }
    for (int g = 0; g < n; ++g)
        for (int g2 = 0; g2 < n; ++g2)
            for (int h = 0; h < m; ++h) {
                S s = f.zero();
                for (int x = 0; x < n; ++x) {
                    const auto& t = T[h][G.mul(x, G.inv(g))];
                    if (t.is_zero()) continue;
                    for (int y = 0; y < m; ++y)
                        s += t * W[g][H.mul(H.mul(H.inv(y), h), y)] * L[G.mul(G.mul(g, g2), G.inv(x))][y];
                }
                int conj = H.mul(H.mul(H.inv(d.v[g]), h), d.v[g]);
                // r(g) (v(g) |>' u(e_g')) at e_h
                if (s != W[g][h] * T[conj][g2]) rep.omega_theta_lambda.fail({g, g2, h}, "sum theta omega lambda differs");
            }
    for (int g = 0; g < n; ++g)
        for (int g2 = 0; g2 < n; ++g2)
            for (int h = 0; h < m; ++h) {
                int cg = G.mul(G.mul(g, g2), G.inv(g));
                int ch = H.mul(H.mul(d.v[g], h), H.inv(d.v[g]));
                if (L[cg][ch] != L[g2][h]) rep.lambda_invariance.fail({g, g2, h}, "lambda not invariant under conjugation");
            }
    return rep;
}

// psi(e_g # g') = sum_{x in G, y, z in H} lambda(g x^-1, z) omega(g', y) theta(z y z^-1, x) e_{z y z^-1} # z v(g')
// on the basis e_g # g' at g * |G| + g' of the double built by group_double_pair.
template <class F>
LinMap<F> double_morphism_map(const DoubleMorphismData<F>& d, const FiniteGroup& G, const FiniteGroup& H,
                              const HopfPtr<F>& DG, const HopfPtr<F>& DH) {
    int n = G.order(), m = H.order();
    LinMap<F> psi(DG, DH);
    for (int g = 0; g < n; ++g)
        for (int g2 = 0; g2 < n; ++g2)
            for (int x = 0; x < n; ++x)
                for (int z = 0; z < m; ++z) {
                    const auto& l = d.lambda[G.mul(g, G.inv(x))][z];
                    if (l.is_zero()) continue;
                    for (int y = 0; y < m; ++y) {
                        int w = H.mul(H.mul(z, y), H.inv(z));
                        auto c = l * d.omega[g2][y] * d.theta[w][x];
                        if (!c.is_zero()) psi.m(w * m + H.mul(z, d.v[g2]), g * n + g2) += c;
                    }
                }
    return psi;
}

template <class F>
DoubleMorphismResult<F> check_double_morphism_data(const DoubleMorphismData<F>& d, const FiniteGroup& G, const FiniteGroup& H,
                                                   const F& f) {
    int n = G.order(), m = H.order();
    auto shape = [](const auto& t, int rows, int cols) {
        if (int(t.size()) != rows) return false;
        for (const auto& row : t)
            if (int(row.size()) != cols) return false;
        return true;
    };
    if (!shape(d.lambda, n, m) || !shape(d.omega, n, m) || !shape(d.theta, m, n))
        throw dimension_mismatch("double morphism data: table shapes");
    if (!is_group_map(G, H, d.v)) throw precondition_failed("double morphism data: v is not a group homomorphism");
    DoubleMorphismResult<F> res{check_double_conditions(d, G, H, f), std::nullopt};
    if (!res.valid()) return res;
    auto DG = make_bicrossed(group_double_pair(G, f));
    auto DH = make_bicrossed(group_double_pair(H, f));
    auto psi = double_morphism_map(d, G, H, DG.E, DH.E);
    if (!is_hopf_map(psi)) throw error("double morphism data satisfy every condition but psi is not a Hopf map");
    res.psi = std::move(psi);
    return res;
}

template <class F>
Quadruple<F> quadruple_from_double_data(const DoubleMorphismData<F>& d, const Bicrossed<F>& DG, const Bicrossed<F>& DH) {
    int n = DG.pair.dH(), m = DH.pair.dH();
    Quadruple<F> q{LinMap<F>(DG.pair.A, DH.pair.A), LinMap<F>(DG.pair.A, DH.pair.H), LinMap<F>(DG.pair.H, DH.pair.A),
                   LinMap<F>(DG.pair.H, DH.pair.H)};
    const auto& f = DG.pair.field();
    for (int g = 0; g < n; ++g) {
        for (int y = 0; y < m; ++y) {
            q.u.m(y, g) = d.theta[y][g];
            q.p.m(y, g) = d.lambda[g][y];
            q.r.m(y, g) = d.omega[g][y];
        }
        q.v.m(d.v[g], g) = f.one();
    }
    return q;
}

template <class F>
DoubleMorphismData<F> double_data_from_quadruple(const Quadruple<F>& q) {
    int n = q.u.dom->dim(), m = q.u.cod->dim();
    DoubleMorphismData<F> d;
    const auto& f = q.u.field();
    d.lambda.assign(n, std::vector<typename F::scalar>(m, f.zero()));
    d.omega = d.lambda;
    d.theta.assign(m, std::vector<typename F::scalar>(n, f.zero()));
    d.v.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int y = 0; y < m; ++y) {
            d.theta[y][g] = q.u.m(y, g);
            d.lambda[g][y] = q.p.m(y, g);
            d.omega[g][y] = q.r.m(y, g);
            if (q.v.m(y, g).is_one()) d.v[g] = y;
        }
        auto col = q.v.image(g);
        if (d.v[g] < 0 || col != q.v.cod->basis(d.v[g])) throw precondition_failed("v does not send group elements to group elements");
    }
    return d;
}

} // namespace hopf
