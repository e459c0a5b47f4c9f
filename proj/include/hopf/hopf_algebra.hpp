#pragma once

// A finite-dimensional Hopf algebra given by structure constants on a fixed
// basis b_0..b_{d-1}.  Conventions:
//   mult[(i*d + j)*d + k]   coefficient of b_k in b_i b_j
//   comult[(i*d + j)*d + k] coefficient of b_j (x) b_k in Delta(b_i)
//   antipode(i, j)          coefficient of b_i in S(b_j)  (column j is S(b_j))
// Elements of H (x) H are flat vectors indexed i*d + j.

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "linalg.hpp"

namespace hopf {

template <class F>
class HopfAlgebra {
public:
    using field_type = F;
    using scalar = typename F::scalar;
    using vec = std::vector<scalar>;

    struct term1 {
        int i;
        scalar c;
    };
    struct term2 {
        int i, j;
        scalar c;
    };
    struct term3 {
        int i, j, k;
        scalar c;
    };

    HopfAlgebra(F f, std::vector<std::string> labels, vec mult, vec unit, vec comult, vec counit, Matrix<scalar> antipode)
        : f_(std::move(f)), labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)),
          comult_(std::move(comult)), counit_(std::move(counit)), antipode_(std::move(antipode)) {
        d_ = int(unit_.size());
        size_t d3 = size_t(d_) * d_ * d_;
        if (d_ == 0) throw dimension_mismatch("Hopf algebra must have positive dimension");
        if (mult_.size() != d3 || comult_.size() != d3 || int(counit_.size()) != d_ || antipode_.rows() != d_ ||
            antipode_.cols() != d_ || int(labels_.size()) != d_)
            throw dimension_mismatch("structure tensors do not match dimension " + std::to_string(d_));
        auto own = [&](const scalar& s) {
            if (!f_.owns(s)) throw field_mismatch("structure constant outside " + f_.spec().name());
        };
        for (auto& s : mult_) own(s);
        for (auto& s : comult_) own(s);
        for (auto& s : unit_) own(s);
        for (auto& s : counit_) own(s);
        for (auto& s : antipode_.data()) own(s);
        build_caches();
    }

    const F& field() const { return f_; }
    int dim() const { return d_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }

    const scalar& mult(int i, int j, int k) const { return mult_[(size_t(i) * d_ + j) * d_ + k]; }
    const scalar& comult(int i, int j, int k) const { return comult_[(size_t(i) * d_ + j) * d_ + k]; }
    const vec& mult_tensor() const { return mult_; }
    const vec& comult_tensor() const { return comult_; }
    const vec& unit() const { return unit_; }
    const vec& counit() const { return counit_; }
    const Matrix<scalar>& antipode() const { return antipode_; }
    const std::optional<Matrix<scalar>>& antipode_inverse() const { return antipode_inv_; }

    // Sparse views of the structure constants.
    const std::vector<term1>& product(int i, int j) const { return prod_[size_t(i) * d_ + j]; }
    const std::vector<term2>& coproduct(int i) const { return cop_[i]; }
    const std::vector<term3>& coproduct2(int i) const { return cop2_[i]; }
    const std::vector<term1>& antipode_of(int j) const { return anti_[j]; }

    vec zero() const { return vec(d_, f_.zero()); }
    vec basis(int i) const {
        vec v = zero();
        v[i] = f_.one();
        return v;
    }
    const vec& one() const { return unit_; }
    int unit_index() const { return unit_index_; } // -1 when 1 is not a basis vector

    void add_product(vec& out, int i, int j, const scalar& c) const {
        for (const auto& t : product(i, j)) out[t.i] += c * t.c;
    }
    vec mul(const vec& a, const vec& b) const {
        vec out = zero();
        for (int i = 0; i < d_; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < d_; ++j)
                if (!b[j].is_zero()) add_product(out, i, j, a[i] * b[j]);
        }
        return out;
    }
    scalar eps(const vec& a) const {
        scalar s = f_.zero();
        for (int i = 0; i < d_; ++i)
            if (!a[i].is_zero()) s += counit_[i] * a[i];
        return s;
    }
    vec S(const vec& a) const { return apply_sparse(anti_, a); }
    vec Sinv(const vec& a) const {
        if (!antipode_inv_) throw precondition_failed("antipode is not invertible");
        return apply_sparse(anti_inv_, a);
    }
    bool antipode_invertible() const { return antipode_inv_.has_value(); }

    // Delta(a) as a flat d*d vector.
    vec delta(const vec& a) const {
        vec out(size_t(d_) * d_, f_.zero());
        for (int i = 0; i < d_; ++i) {
            if (a[i].is_zero()) continue;
            for (const auto& t : cop_[i]) out[size_t(t.i) * d_ + t.j] += a[i] * t.c;
        }
        return out;
    }

    // Product in H (x) H, both operands flat d*d vectors.
    vec mul2(const vec& x, const vec& y) const {
        vec out(size_t(d_) * d_, f_.zero());
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b) {
                const scalar& xab = x[size_t(a) * d_ + b];
                if (xab.is_zero()) continue;
                for (int c = 0; c < d_; ++c)
                    for (int e = 0; e < d_; ++e) {
                        const scalar& yce = y[size_t(c) * d_ + e];
                        if (yce.is_zero()) continue;
                        scalar k = xab * yce;
                        for (const auto& s : product(a, c))
                            for (const auto& t : product(b, e)) out[size_t(s.i) * d_ + t.i] += k * s.c * t.c;
                    }
            }
        return out;
    }

    bool is_commutative() const {
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < i; ++j)
                for (int k = 0; k < d_; ++k)
                    if (!(mult(i, j, k) == mult(j, i, k))) return false;
        return true;
    }
    bool is_cocommutative() const {
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j)
                for (int k = 0; k < j; ++k)
                    if (!(comult(i, j, k) == comult(i, k, j))) return false;
        return true;
    }

    // Structural equality of all tensors (labels ignored).
    bool same_structure(const HopfAlgebra& o) const {
        return d_ == o.d_ && mult_ == o.mult_ && unit_ == o.unit_ && comult_ == o.comult_ && counit_ == o.counit_ &&
               antipode_ == o.antipode_;
    }

private:
    vec apply_sparse(const std::vector<std::vector<term1>>& cols, const vec& a) const {
        vec out = zero();
        for (int j = 0; j < d_; ++j) {
            if (a[j].is_zero()) continue;
            for (const auto& t : cols[j]) out[t.i] += a[j] * t.c;
        }
        return out;
    }

    void build_caches() {
        prod_.assign(size_t(d_) * d_, {});
        cop_.assign(d_, {});
        cop2_.assign(d_, {});
        anti_.assign(d_, {});
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j)
                for (int k = 0; k < d_; ++k) {
                    if (!mult(i, j, k).is_zero()) prod_[size_t(i) * d_ + j].push_back({k, mult(i, j, k)});
                    if (!comult(i, j, k).is_zero()) cop_[i].push_back({j, k, comult(i, j, k)});
                }
        // (Delta (x) id) Delta
        for (int i = 0; i < d_; ++i) {
            vec acc(size_t(d_) * d_ * d_, f_.zero());
            for (const auto& t : cop_[i])
                for (const auto& u : cop_[t.i]) acc[(size_t(u.i) * d_ + u.j) * d_ + t.j] += t.c * u.c;
            for (int a = 0; a < d_; ++a)
                for (int b = 0; b < d_; ++b)
                    for (int c = 0; c < d_; ++c) {
                        const auto& s = acc[(size_t(a) * d_ + b) * d_ + c];
                        if (!s.is_zero()) cop2_[i].push_back({a, b, c, s});
                    }
        }
        anti_ = sparse_columns(antipode_);
        antipode_inv_ = inverse(f_, antipode_);
        if (antipode_inv_) anti_inv_ = sparse_columns(*antipode_inv_);
        unit_index_ = -1;
        for (int i = 0; i < d_; ++i)
            if (unit_ == basis(i)) unit_index_ = i;
    }

    std::vector<std::vector<term1>> sparse_columns(const Matrix<scalar>& m) const {
        std::vector<std::vector<term1>> cols(d_);
        for (int j = 0; j < d_; ++j)
            for (int i = 0; i < d_; ++i)
                if (!m(i, j).is_zero()) cols[j].push_back({i, m(i, j)});
        return cols;
    }

    F f_;
    int d_ = 0;
    std::vector<std::string> labels_;
    vec mult_, unit_, comult_, counit_;
    Matrix<scalar> antipode_;
    std::optional<Matrix<scalar>> antipode_inv_;
    std::vector<std::vector<term1>> prod_;
    std::vector<std::vector<term2>> cop_;
    std::vector<std::vector<term3>> cop2_;
    std::vector<std::vector<term1>> anti_, anti_inv_;
    int unit_index_ = -1;
};

template <class F>
using HopfPtr = std::shared_ptr<const HopfAlgebra<F>>;

template <class F>
HopfPtr<F> share(HopfAlgebra<F> h) {
    return std::make_shared<const HopfAlgebra<F>>(std::move(h));
}

// ------------------------------------------------------------ verification

struct Check {
    Check(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    bool pass = true;
    std::vector<int> index;
    std::string detail;

    void fail(std::vector<int> idx, std::string what) {
        if (!pass) return;
        pass = false;
        index = std::move(idx);
        detail = std::move(what);
    }
    std::string str() const {
        if (pass) return name + ": ok";
        std::ostringstream os;
        os << name << ": FAIL at (";
        for (size_t i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
        os << ") " << detail;
        return os.str();
    }
};

struct HopfReport {
    Check algebra{"algebra"}, coalgebra{"coalgebra"}, bialgebra{"bialgebra"}, antipode{"antipode"};

    bool ok() const { return algebra.pass && coalgebra.pass && bialgebra.pass && antipode.pass; }
    std::string str() const {
        return algebra.str() + ", " + coalgebra.str() + ", " + bialgebra.str() + ", " + antipode.str();
    }
};

template <class F>
HopfReport verify_hopf_axioms(const HopfAlgebra<F>& H) {
    using vec = typename HopfAlgebra<F>::vec;
    const int d = H.dim();
    const auto& f = H.field();
    HopfReport rep;

    // algebra: associativity, then unit laws
    for (int i = 0; i < d && rep.algebra.pass; ++i)
        for (int j = 0; j < d && rep.algebra.pass; ++j)
            for (int k = 0; k < d; ++k) {
                vec l = H.zero(), r = H.zero();
                for (const auto& t : H.product(i, j)) H.add_product(l, t.i, k, t.c);
                for (const auto& t : H.product(j, k)) H.add_product(r, i, t.i, t.c);
                if (l != r) {
                    rep.algebra.fail({i, j, k}, "(b_i b_j) b_k != b_i (b_j b_k)");
                    break;
                }
            }
    for (int i = 0; i < d && rep.algebra.pass; ++i) {
        auto b = H.basis(i);
        if (H.mul(H.one(), b) != b || H.mul(b, H.one()) != b) rep.algebra.fail({i}, "unit law");
    }

    // coalgebra: coassociativity, counit laws
    for (int i = 0; i < d && rep.coalgebra.pass; ++i) {
        vec l(size_t(d) * d * d, f.zero()), r = l;
        for (const auto& t : H.coproduct(i)) {
            for (const auto& u : H.coproduct(t.i)) l[(size_t(u.i) * d + u.j) * d + t.j] += t.c * u.c;
            for (const auto& u : H.coproduct(t.j)) r[(size_t(t.i) * d + u.i) * d + u.j] += t.c * u.c;
        }
        if (l != r) {
            rep.coalgebra.fail({i}, "(Delta x id) Delta != (id x Delta) Delta");
            break;
        }
        vec el = H.zero(), er = H.zero();
        for (const auto& t : H.coproduct(i)) {
            el[t.j] += H.counit()[t.i] * t.c;
            er[t.i] += H.counit()[t.j] * t.c;
        }
        if (el != H.basis(i) || er != H.basis(i)) rep.coalgebra.fail({i}, "counit law");
    }

    // bialgebra: Delta and eps multiplicative and unital
    if (H.delta(H.one()) != [&] {
            vec v(size_t(d) * d, f.zero());
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) v[size_t(a) * d + b] = H.one()[a] * H.one()[b];
            return v;
        }())
        rep.bialgebra.fail({}, "Delta(1) != 1 x 1");
    if (!(H.eps(H.one()) == f.one())) rep.bialgebra.fail({}, "eps(1) != 1");
    for (int i = 0; i < d && rep.bialgebra.pass; ++i)
        for (int j = 0; j < d; ++j) {
            vec prod = H.zero();
            H.add_product(prod, i, j, f.one());
            if (!(H.eps(prod) == H.counit()[i] * H.counit()[j])) {
                rep.bialgebra.fail({i, j}, "eps(b_i b_j) != eps(b_i) eps(b_j)");
                break;
            }
            vec lhs = H.delta(prod);
            vec rhs(size_t(d) * d, f.zero());
            for (const auto& s : H.coproduct(i))
                for (const auto& t : H.coproduct(j)) {
                    auto k = s.c * t.c;
                    for (const auto& x : H.product(s.i, t.i))
                        for (const auto& y : H.product(s.j, t.j)) rhs[size_t(x.i) * d + y.i] += k * x.c * y.c;
                }
            if (lhs != rhs) {
                rep.bialgebra.fail({i, j}, "Delta(b_i b_j) != Delta(b_i) Delta(b_j)");
                break;
            }
        }

    // antipode: S * id = id * S = unit o counit
    for (int i = 0; i < d; ++i) {
        vec l = H.zero(), r = H.zero();
        for (const auto& t : H.coproduct(i)) {
            for (const auto& s : H.antipode_of(t.i)) H.add_product(l, s.i, t.j, t.c * s.c);
            for (const auto& s : H.antipode_of(t.j)) H.add_product(r, t.i, s.i, t.c * s.c);
        }
        vec e = H.one();
        for (auto& x : e) x = x * H.counit()[i];
        if (l != e) {
            rep.antipode.fail({i}, "S(b_(1)) b_(2) != eps(b) 1");
            break;
        }
        if (r != e) {
            rep.antipode.fail({i}, "b_(1) S(b_(2)) != eps(b) 1");
            break;
        }
    }
    return rep;
}

} // namespace hopf
