#pragma once

// Exact scalars: prime fields F_p (p odd), the rationals, and cyclotomic
// fields Q(z) with z a primitive m-th root of unity, stored in the power
// basis modulo the m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace hopf {

enum class field_kind { prime, rationals, cyclotomic };

struct FieldSpec {
    field_kind kind = field_kind::rationals;
    std::uint32_t p = 0; // prime fields
    std::uint32_t m = 1; // cyclotomic conductor

    static FieldSpec prime(std::uint32_t p) {
        if (p == 2) throw precondition_failed("characteristic 2 is not supported");
        if (!arith::is_prime(p)) throw precondition_failed("F_p needs p prime, got " + std::to_string(p));
        return {field_kind::prime, p, 1};
    }
    static FieldSpec rationals() { return {field_kind::rationals, 0, 1}; }
    // Q(z_1) and Q(z_2) are Q itself.
    static FieldSpec cyclotomic(std::uint32_t m) {
        if (m == 0) throw precondition_failed("cyclotomic conductor must be positive");
        if (m <= 2) return rationals();
        return {field_kind::cyclotomic, 0, m};
    }

    bool operator==(const FieldSpec&) const = default;

    std::string name() const {
        switch (kind) {
        case field_kind::prime: return "F_" + std::to_string(p);
        case field_kind::rationals: return "Q";
        default: return "Q(zeta_" + std::to_string(m) + ")";
        }
    }
};

// ---------------------------------------------------------------- F_p

class Fp {
public:
    Fp() = default;
    Fp(long long v, std::uint32_t p) : v_(static_cast<std::uint32_t>(arith::mod(v, p))), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Fp operator+(Fp a, Fp b) {
        check(a, b);
        std::uint32_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return raw(s, a.p_);
    }
    friend Fp operator-(Fp a, Fp b) {
        check(a, b);
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(Fp a, Fp b) {
        check(a, b);
        return raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return raw(v_ ? p_ - v_ : 0, p_); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    Fp inverse() const {
        if (v_ == 0) throw division_by_zero();
        return raw(static_cast<std::uint32_t>(arith::powmod(v_, p_ - 2, p_)), p_);
    }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator<(Fp a, Fp b) { return a.p_ != b.p_ ? a.p_ < b.p_ : a.v_ < b.v_; }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp raw(std::uint32_t v, std::uint32_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    static void check(Fp a, Fp b) {
        if (a.p_ != b.p_) throw field_mismatch("F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

// ---------------------------------------------------------------- Q

class Rational {
public:
    Rational() = default;
    Rational(long long v) : q_(static_cast<long>(v)) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    Rational(long long num, long long den) {
        if (den == 0) throw division_by_zero();
        q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        q_.canonicalize();
    }

    const mpq_class& get() const { return q_; }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw division_by_zero();
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
    Rational inverse() const { return Rational(1) / *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

// ---------------------------------------------------------------- Q(z)

namespace detail {

using zpoly = std::vector<mpz_class>;

inline void trim(zpoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact quotient of a by the monic polynomial b.
inline zpoly divide_monic(zpoly a, const zpoly& b) {
    int db = int(b.size()) - 1;
    if (int(a.size()) - 1 < db) return {};
    zpoly q(a.size() - b.size() + 1, 0);
    for (int i = int(a.size()) - 1; i >= db; --i) {
        mpz_class c = a[i];
        q[i - db] = c;
        if (c != 0)
            for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    if (!a.empty()) throw error("cyclotomic division left a remainder");
    return q;
}

inline zpoly cyclotomic_polynomial(std::uint32_t m) {
    zpoly f(m + 1, 0);
    f[0] = -1;
    f[m] = 1;
    for (std::uint32_t d = 1; d < m; ++d)
        if (m % d == 0) f = divide_monic(f, cyclotomic_polynomial(d));
    return f;
}

struct cyclo_ctx {
    std::uint32_t m;
    int deg;
    zpoly phi; // monic, size deg + 1
};

inline std::shared_ptr<const cyclo_ctx> make_cyclo_ctx(std::uint32_t m) {
    auto c = std::make_shared<cyclo_ctx>();
    c->m = m;
    c->phi = cyclotomic_polynomial(m);
    c->deg = int(c->phi.size()) - 1;
    return c;
}

} // namespace detail

class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(std::shared_ptr<const detail::cyclo_ctx> ctx, std::vector<mpq_class> c) : ctx_(std::move(ctx)), c_(std::move(c)) {
        reduce();
    }

    std::uint32_t conductor() const { return ctx_ ? ctx_->m : 0; }
    const std::vector<mpq_class>& coefficients() const { return c_; }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return sgn(q) == 0; });
    }
    bool is_one() const {
        if (c_.empty() || c_[0] != 1) return false;
        return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& q) { return sgn(q) == 0; });
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        check(a, b);
        Cyclotomic r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        check(a, b);
        Cyclotomic r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        check(a, b);
        int d = a.ctx_->deg;
        std::vector<mpq_class> prod(2 * d, 0);
        for (int i = 0; i < d; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (int j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return Cyclotomic(a.ctx_, std::move(prod));
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    // Solves a*y = 1 through the matrix of multiplication by a.
    Cyclotomic inverse() const {
        if (is_zero()) throw division_by_zero();
        int d = ctx_->deg;
        std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d + 1, 0));
        Cyclotomic xj = basis(ctx_, 0);
        Cyclotomic x = basis(ctx_, d > 1 ? 1 : 0);
        for (int j = 0; j < d; ++j) {
            Cyclotomic col = *this * xj;
            for (int i = 0; i < d; ++i) M[i][j] = col.c_[i];
            if (d > 1) xj = xj * x;
        }
        M[0][d] = 1;
        for (int col = 0, row = 0; col < d; ++col, ++row) {
            int piv = row;
            while (sgn(M[piv][col]) == 0) ++piv;
            std::swap(M[piv], M[row]);
            mpq_class inv = 1 / M[row][col];
            for (int k = col; k <= d; ++k) M[row][k] *= inv;
            for (int i = 0; i < d; ++i) {
                if (i == row || sgn(M[i][col]) == 0) continue;
                mpq_class f = M[i][col];
                for (int k = col; k <= d; ++k) M[i][k] -= f * M[row][k];
            }
        }
        std::vector<mpq_class> y(d);
        for (int i = 0; i < d; ++i) y[i] = M[i][d];
        return Cyclotomic(ctx_, std::move(y));
    }

    static Cyclotomic basis(std::shared_ptr<const detail::cyclo_ctx> ctx, int k) {
        std::vector<mpq_class> c(std::max(ctx->deg, k + 1), 0);
        c[k] = 1;
        return Cyclotomic(std::move(ctx), std::move(c));
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.conductor() == b.conductor() && a.c_ == b.c_;
    }
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
        return a.c_ < b.c_;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (sgn(c_[i]) == 0) continue;
            mpq_class q = c_[i];
            if (!first) os << (sgn(q) < 0 ? " - " : " + ");
            else if (sgn(q) < 0) os << "-";
            q = abs(q);
            first = false;
            if (i == 0) os << q.get_str();
            else {
                if (q != 1) os << q.get_str() << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        return first ? "0" : os.str();
    }

private:
    void reduce() {
        const auto& phi = ctx_->phi;
        int d = ctx_->deg;
        for (int i = int(c_.size()) - 1; i >= d; --i) {
            if (sgn(c_[i]) == 0) continue;
            mpq_class c = c_[i];
            for (int j = 0; j <= d; ++j) c_[i - d + j] -= c * phi[j];
        }
        c_.resize(d, 0);
    }
    static void check(const Cyclotomic& a, const Cyclotomic& b) {
        if (!a.ctx_ || !b.ctx_ || a.ctx_->m != b.ctx_->m) throw field_mismatch("cyclotomic conductors differ");
    }

    std::shared_ptr<const detail::cyclo_ctx> ctx_;
    std::vector<mpq_class> c_;
};

// ---------------------------------------------------------------- fields

inline std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.str(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }
inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.str(); }

template <class F>
using scalar_t = typename F::scalar;

template <class S>
S power(S base, long long e, S one) {
    S r = one;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

struct PrimeField {
    using scalar = Fp;
    std::uint32_t p;

    explicit PrimeField(std::uint32_t p_) : p(FieldSpec::prime(p_).p) {}

    FieldSpec spec() const { return FieldSpec::prime(p); }
    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_int(long long v) const { return Fp(v, p); }
    bool finite() const { return true; }
    std::uint64_t order() const { return p; }
    std::vector<Fp> elements() const {
        std::vector<Fp> out;
        for (std::uint32_t v = 0; v < p; ++v) out.emplace_back(v, p);
        return out;
    }
    bool owns(const Fp& a) const { return a.modulus() == p; }
};

struct RationalField {
    using scalar = Rational;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long long v) const { return Rational(v); }
    bool finite() const { return false; }
    std::uint64_t order() const { return 0; }
    std::vector<Rational> elements() const { throw precondition_failed("Q is infinite"); }
    bool owns(const Rational&) const { return true; }
};

struct CyclotomicField {
    using scalar = Cyclotomic;
    std::shared_ptr<const detail::cyclo_ctx> ctx;

    explicit CyclotomicField(std::uint32_t m) {
        auto s = FieldSpec::cyclotomic(m);
        if (s.kind != field_kind::cyclotomic) throw precondition_failed("use RationalField for m <= 2");
        ctx = detail::make_cyclo_ctx(m);
    }

    FieldSpec spec() const { return FieldSpec::cyclotomic(ctx->m); }
    int degree() const { return ctx->deg; }
    Cyclotomic zero() const { return Cyclotomic(ctx, std::vector<mpq_class>(ctx->deg, 0)); }
    Cyclotomic one() const { return from_int(1); }
    Cyclotomic from_int(long long v) const {
        std::vector<mpq_class> c(ctx->deg, 0);
        c[0] = static_cast<long>(v);
        return Cyclotomic(ctx, std::move(c));
    }
    Cyclotomic from_rational(const Rational& q) const {
        std::vector<mpq_class> c(ctx->deg, 0);
        c[0] = q.get();
        return Cyclotomic(ctx, std::move(c));
    }
    Cyclotomic zeta() const { return Cyclotomic::basis(ctx, 1); }
    bool finite() const { return false; }
    std::uint64_t order() const { return 0; }
    std::vector<Cyclotomic> elements() const { throw precondition_failed("cyclotomic fields are infinite"); }
    bool owns(const Cyclotomic& a) const { return a.conductor() == ctx->m; }
};

// ---------------------------------------------------------------- roots of unity

namespace detail {

// Roots of unity of Q(z_m) are the powers of a primitive M-th root, M = lcm(2, m).
template <class F>
std::vector<typename F::scalar> zeta_powers(const F& f, std::uint32_t m) {
    using S = typename F::scalar;
    std::uint32_t M = m % 2 ? 2 * m : m;
    S z = f.from_int(-1);
    if constexpr (std::is_same_v<F, CyclotomicField>) {
        z = m % 2 ? -power(f.zeta(), (m + 1) / 2, f.one()) : f.zeta();
    }
    std::vector<S> out;
    S cur = f.one();
    for (std::uint32_t k = 0; k < M; ++k) {
        out.push_back(cur);
        cur = cur * z;
    }
    return out;
}

} // namespace detail

// All w with w^n = 1. Prime fields list residues in increasing order; Q and
// Q(z_m) list z_M^k by increasing exponent k, so 1 comes first.
inline std::vector<Fp> roots_of_unity(const PrimeField& f, long long n) {
    if (n < 1) throw precondition_failed("roots_of_unity: n must be positive");
    std::uint64_t nu = std::gcd<std::uint64_t>(n, f.p - 1);
    std::uint64_t g = arith::powmod(arith::primitive_root(f.p), (f.p - 1) / nu, f.p);
    std::vector<Fp> out;
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k < nu; ++k) {
        out.emplace_back(cur, f.p);
        cur = cur * g % f.p;
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
std::vector<typename F::scalar> roots_of_unity(const F& f, long long n) {
    if (n < 1) throw precondition_failed("roots_of_unity: n must be positive");
    std::uint32_t m = 2;
    if constexpr (std::is_same_v<F, CyclotomicField>) m = f.ctx->m;
    std::uint32_t M = m % 2 ? 2 * m : m;
    auto all = detail::zeta_powers(f, m);
    std::vector<typename F::scalar> out;
    for (std::uint32_t k = 0; k < M; ++k)
        if ((std::uint64_t(k) * n) % M == 0) out.push_back(all[k]);
    return out;
}

template <class S>
long long multiplicative_order(const S& a, const S& one, long long bound) {
    S cur = a;
    for (long long k = 1; k <= bound; ++k) {
        if (cur == one) return k;
        cur = cur * a;
    }
    return 0;
}

template <class F>
struct NuOrder {
    long long nu;
    typename F::scalar xi;
};

// nu = |U_n(k)|; xi is the first element of maximal order in the canonical list.
template <class F>
NuOrder<F> nu_order(const F& f, long long n) {
    auto roots = roots_of_unity(f, n);
    long long nu = static_cast<long long>(roots.size());
    for (const auto& w : roots)
        if (multiplicative_order(w, f.one(), nu) == nu) return {nu, w};
    throw error("roots of unity do not form a cyclic group");
}

using AnyField = std::variant<PrimeField, RationalField, CyclotomicField>;

inline AnyField make_field(const FieldSpec& s) {
    switch (s.kind) {
    case field_kind::prime: return PrimeField(s.p);
    case field_kind::rationals: return RationalField{};
    default: return CyclotomicField(s.m);
    }
}

inline std::string to_string(const Fp& a) { return a.str(); }
inline std::string to_string(const Rational& a) { return a.str(); }
inline std::string to_string(const Cyclotomic& a) { return a.str(); }

} // namespace hopf
