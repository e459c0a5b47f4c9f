#pragma once

// Standard Hopf algebras and the constructions tensor, dual and op/cop.

#include "group.hpp"
#include "hopf_algebra.hpp"

namespace hopf {

template <class F>
struct TensorBuilder {
    using scalar = typename F::scalar;
    F f;
    int d;
    std::vector<scalar> mult, unit, comult, counit;
    Matrix<scalar> antipode;

    TensorBuilder(const F& f_, int d_)
        : f(f_), d(d_), mult(size_t(d_) * d_ * d_, f_.zero()), unit(d_, f_.zero()), comult(mult), counit(d_, f_.zero()),
          antipode(d_, d_, f_.zero()) {}

    scalar& m(int i, int j, int k) { return mult[(size_t(i) * d + j) * d + k]; }
    scalar& c(int i, int j, int k) { return comult[(size_t(i) * d + j) * d + k]; }

    HopfAlgebra<F> build(std::vector<std::string> labels) {
        return HopfAlgebra<F>(f, std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                              std::move(counit), std::move(antipode));
    }
};

template <class F>
HopfAlgebra<F> one_dimensional(const F& f) {
    TensorBuilder<F> b(f, 1);
    b.m(0, 0, 0) = f.one();
    b.c(0, 0, 0) = f.one();
    b.unit[0] = b.counit[0] = f.one();
    b.antipode(0, 0) = f.one();
    return b.build({"1"});
}

template <class F>
HopfAlgebra<F> group_algebra(const FiniteGroup& G, const F& f) {
    int n = G.order();
    TensorBuilder<F> b(f, n);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) b.m(g, h, G.mul(g, h)) = f.one();
        b.c(g, g, g) = f.one();
        b.counit[g] = f.one();
        b.antipode(G.inv(g), g) = f.one();
    }
    b.unit[G.identity()] = f.one();
    return b.build(G.labels());
}

// Dual basis {e_g}. co_opposite = true gives Delta(e_g) = sum_x e_x (x) e_{g x^-1},
// the comultiplication of (k[G]*)^cop; false gives the dual coproduct
// Delta(e_g) = sum_x e_x (x) e_{x^-1 g}.
template <class F>
HopfAlgebra<F> dual_group_algebra(const FiniteGroup& G, const F& f, bool co_opposite) {
    int n = G.order();
    TensorBuilder<F> b(f, n);
    std::vector<std::string> labels;
    for (int g = 0; g < n; ++g) {
        b.m(g, g, g) = f.one();
        b.unit[g] = f.one();
        for (int x = 0; x < n; ++x) {
            int y = co_opposite ? G.mul(g, G.inv(x)) : G.mul(G.inv(x), g);
            b.c(g, x, y) += f.one();
        }
        b.antipode(G.inv(g), g) = f.one();
        labels.push_back("e_" + G.labels()[g]);
    }
    b.counit[G.identity()] = f.one();
    return b.build(labels);
}

// Sweedler's algebra on the basis {1, g, x, gx}.
template <class F>
HopfAlgebra<F> sweedler_h4(const F& f) {
    TensorBuilder<F> b(f, 4);
    auto one = f.one(), neg = f.from_int(-1);
    // monomials g^a x^e have index a + 2e
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int a1 = i & 1, e1 = i >> 1, a2 = j & 1, e2 = j >> 1;
            if (e1 + e2 > 1) continue;
            // x^e1 g^a2 = (-1)^{e1 a2} g^a2 x^e1
            auto s = (e1 && a2) ? neg : one;
            b.m(i, j, ((a1 + a2) & 1) + 2 * (e1 + e2)) = s;
        }
    b.unit[0] = one;
    b.counit[0] = b.counit[1] = one;
    b.c(0, 0, 0) = one;
    b.c(1, 1, 1) = one;
    b.c(2, 2, 0) = one; // x (x) 1
    b.c(2, 1, 2) = one; // g (x) x
    b.c(3, 3, 1) = one; // gx (x) g
    b.c(3, 0, 3) = one; // 1 (x) gx
    b.antipode(0, 0) = one;
    b.antipode(1, 1) = one;
    b.antipode(3, 2) = neg; // S(x) = -gx
    b.antipode(2, 3) = one; // S(gx) = x
    return b.build({"1", "g", "x", "gx"});
}

inline std::string pair_label(const std::string& a, const std::string& h) {
    if (a == "1") return h;
    if (h == "1") return a;
    return a + h;
}

// Basis (a_i, h_j) at index i * dim H + j.
template <class F>
HopfAlgebra<F> tensor_hopf(const HopfAlgebra<F>& A, const HopfAlgebra<F>& H) {
    if (!(A.field().spec() == H.field().spec())) throw field_mismatch("tensor_hopf: different fields");
    const auto& f = A.field();
    int da = A.dim(), dh = H.dim(), d = da * dh;
    TensorBuilder<F> b(f, d);
    std::vector<std::string> labels;
    for (int a = 0; a < da; ++a)
        for (int h = 0; h < dh; ++h) {
            int i = a * dh + h;
            labels.push_back(pair_label(A.label(a), H.label(h)));
            b.unit[i] = A.unit()[a] * H.unit()[h];
            b.counit[i] = A.counit()[a] * H.counit()[h];
            for (int c = 0; c < da; ++c)
                for (int g = 0; g < dh; ++g)
                    for (const auto& s : A.product(a, c))
                        for (const auto& t : H.product(h, g)) b.m(i, c * dh + g, s.i * dh + t.i) += s.c * t.c;
            for (const auto& s : A.coproduct(a))
                for (const auto& t : H.coproduct(h)) b.c(i, s.i * dh + t.i, s.j * dh + t.j) += s.c * t.c;
            for (const auto& s : A.antipode_of(a))
                for (const auto& t : H.antipode_of(h)) b.antipode(s.i * dh + t.i, i) += s.c * t.c;
        }
    return b.build(labels);
}

// Dual basis b^i: multiplication is the transpose of Delta, comultiplication
// the transpose of m, antipode the transpose of S.
template <class F>
HopfAlgebra<F> dual_hopf(const HopfAlgebra<F>& H) {
    const auto& f = H.field();
    int d = H.dim();
    TensorBuilder<F> b(f, d);
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                b.m(i, j, k) = H.comult(k, i, j);
                b.c(k, i, j) = H.mult(i, j, k);
            }
    for (int k = 0; k < d; ++k) {
        b.unit[k] = H.counit()[k];
        b.counit[k] = H.unit()[k];
        for (int i = 0; i < d; ++i) b.antipode(i, k) = H.antipode()(k, i);
        labels.push_back(H.label(k) + "*");
    }
    return b.build(labels);
}

template <class F>
HopfAlgebra<F> op_cop(const HopfAlgebra<F>& H, bool flip_mult, bool flip_comult) {
    const auto& f = H.field();
    int d = H.dim();
    TensorBuilder<F> b(f, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                b.m(i, j, k) = flip_mult ? H.mult(j, i, k) : H.mult(i, j, k);
                b.c(i, j, k) = flip_comult ? H.comult(i, k, j) : H.comult(i, j, k);
            }
    b.unit = H.unit();
    b.counit = H.counit();
    if (flip_mult != flip_comult) {
        if (!H.antipode_inverse()) throw precondition_failed("op_cop: one-sided flip needs an invertible antipode");
        b.antipode = *H.antipode_inverse();
    } else {
        b.antipode = H.antipode();
    }
    return b.build(H.labels());
}

} // namespace hopf
