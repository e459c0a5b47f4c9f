#pragma once

// JSON serialization (schema "hopf-v1") for fields, scalars, Hopf algebras,
// matched pairs, linear maps, group tables and double morphism data.

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "h4n.hpp"

namespace hopf::io {

using json = nlohmann::ordered_json;

// Input that parses as JSON but does not describe the expected object.
struct format_error : error {
    using error::error;
};

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        // e.byte is the offset of the offending character
        throw format_error(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw format_error("cannot write " + path);
    out << j.dump() << "\n";
}

namespace detail {

inline const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw format_error(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw format_error(where + ": missing \"" + key + "\"");
    return *it;
}

inline const json& array_of(const json& j, size_t n, const std::string& where) {
    if (!j.is_array()) throw format_error(where + ": expected an array");
    if (j.size() != n)
        throw format_error(where + ": expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
    return j;
}

inline long long integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw format_error(where + ": expected an integer");
    return j.get<long long>();
}

inline mpq_class rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) throw format_error(where + ": expected an integer or a \"num/den\" string");
    auto s = j.get<std::string>();
    auto slash = s.find('/');
    mpz_class num, den = 1;
    try {
        num = mpz_class(s.substr(0, slash));
        if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1));
    } catch (const std::invalid_argument&) {
        throw format_error(where + ": \"" + s + "\" is not a rational number");
    }
    if (den == 0) throw format_error(where + ": zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline json rational_json(const mpq_class& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
    return json(q.get_str());
}

} // namespace detail

// ------------------------------------------------------------ fields and scalars

inline json to_json(const FieldSpec& s) {
    switch (s.kind) {
    case field_kind::prime: return json{{"kind", "prime"}, {"p", s.p}};
    case field_kind::rationals: return json{{"kind", "rationals"}};
    default: return json{{"kind", "cyclotomic"}, {"m", s.m}};
    }
}

inline FieldSpec field_from_json(const json& j, const std::string& where = "field") {
    auto kind = detail::member(j, "kind", where);
    if (!kind.is_string()) throw format_error(where + ".kind: expected a string");
    auto k = kind.get<std::string>();
    auto positive = [&](const char* key) {
        auto v = detail::integer(detail::member(j, key, where), where + "." + key);
        if (v <= 0 || v > 0xffffffffLL) throw format_error(where + "." + key + ": out of range");
        return std::uint32_t(v);
    };
    try {
        if (k == "prime") return FieldSpec::prime(positive("p"));
        if (k == "rationals") return FieldSpec::rationals();
        if (k == "cyclotomic") return FieldSpec::cyclotomic(positive("m"));
    } catch (const precondition_failed& e) {
        throw format_error(where + ": " + e.what());
    }
    throw format_error(where + ": unknown field kind \"" + k + "\"");
}

inline json scalar_json(const Fp& a) { return json(a.value()); }
inline json scalar_json(const Rational& a) { return detail::rational_json(a.get()); }
inline json scalar_json(const Cyclotomic& a) {
    json out = json::array();
    for (const auto& q : a.coefficients()) out.push_back(detail::rational_json(q));
    return out;
}

inline Fp scalar_from_json(const PrimeField& f, const json& j, const std::string& where) {
    auto q = detail::rational(j, where);
    mpz_class p = f.p;
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    if (den == 0) throw format_error(where + ": denominator vanishes in " + f.spec().name());
    auto n = Fp(static_cast<long long>(num.get_si()), f.p);
    return n / Fp(static_cast<long long>(den.get_si()), f.p);
}

inline Rational scalar_from_json(const RationalField&, const json& j, const std::string& where) {
    return Rational(detail::rational(j, where));
}

inline Cyclotomic scalar_from_json(const CyclotomicField& f, const json& j, const std::string& where) {
    if (!j.is_array()) return f.from_rational(Rational(detail::rational(j, where)));
    std::vector<mpq_class> c;
    for (size_t i = 0; i < j.size(); ++i) c.push_back(detail::rational(j[i], where + "[" + std::to_string(i) + "]"));
    c.resize(std::max<size_t>(c.size(), size_t(f.degree())), 0);
    return Cyclotomic(f.ctx, std::move(c));
}

template <class F>
json vector_json(const std::vector<typename F::scalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_json(s));
    return out;
}

template <class F>
std::vector<typename F::scalar> vector_from_json(const F& f, const json& j, size_t n, const std::string& where) {
    detail::array_of(j, n, where);
    std::vector<typename F::scalar> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(scalar_from_json(f, j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

template <class F>
json matrix_json(const Matrix<typename F::scalar>& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

template <class F>
Matrix<typename F::scalar> matrix_from_json(const F& f, const json& j, int rows, int cols, const std::string& where) {
    detail::array_of(j, size_t(rows), where);
    Matrix<typename F::scalar> m(rows, cols, f.zero());
    for (int i = 0; i < rows; ++i) {
        auto w = where + "[" + std::to_string(i) + "]";
        auto row = vector_from_json(f, j[i], size_t(cols), w);
        for (int k = 0; k < cols; ++k) m(i, k) = std::move(row[k]);
    }
    return m;
}

// ------------------------------------------------------------ Hopf algebras

// mult[i][j][k]: coefficient of b_k in b_i b_j
// comult[i][j][k]: coefficient of b_j (x) b_k in Delta(b_i)
// antipode[i][j]: coefficient of b_j in S(b_i)
template <class F>
json to_json(const HopfAlgebra<F>& H) {
    int d = H.dim();
    auto cube = [&](auto&& at) {
        json out = json::array();
        for (int i = 0; i < d; ++i) {
            json plane = json::array();
            for (int j = 0; j < d; ++j) {
                json row = json::array();
                for (int k = 0; k < d; ++k) row.push_back(scalar_json(at(i, j, k)));
                plane.push_back(std::move(row));
            }
            out.push_back(std::move(plane));
        }
        return out;
    };
    json anti = json::array();
    for (int i = 0; i < d; ++i) {
        json row = json::array();
        for (int j = 0; j < d; ++j) row.push_back(scalar_json(H.antipode()(j, i)));
        anti.push_back(std::move(row));
    }
    json out;
    out["format"] = "hopf-v1";
    out["dim"] = d;
    out["labels"] = H.labels();
    out["field"] = to_json(H.field().spec());
    out["mult"] = cube([&](int i, int j, int k) { return H.mult(i, j, k); });
    out["unit"] = vector_json<F>(H.unit());
    out["comult"] = cube([&](int i, int j, int k) { return H.comult(i, j, k); });
    out["counit"] = vector_json<F>(H.counit());
    out["antipode"] = std::move(anti);
    return out;
}

template <class F>
HopfAlgebra<F> hopf_from_json(const F& f, const json& j, const std::string& where = "algebra") {
    using detail::member;
    if (j.contains("format") && j["format"] != "hopf-v1") throw format_error(where + ": unsupported format");
    auto spec = field_from_json(member(j, "field", where), where + ".field");
    if (!(spec == f.spec())) throw field_mismatch(where + " is over " + spec.name() + ", expected " + f.spec().name());
    auto d = detail::integer(member(j, "dim", where), where + ".dim");
    if (d <= 0 || d > 4096) throw format_error(where + ".dim: out of range");
    size_t n = size_t(d);
    std::vector<std::string> labels;
    const auto& lj = detail::array_of(member(j, "labels", where), n, where + ".labels");
    for (const auto& l : lj) {
        if (!l.is_string()) throw format_error(where + ".labels: expected strings");
        labels.push_back(l.get<std::string>());
    }
    auto cube = [&](const char* key) {
        auto w = where + "." + key;
        const auto& c = detail::array_of(member(j, key, where), n, w);
        std::vector<typename F::scalar> out;
        out.reserve(n * n * n);
        for (size_t i = 0; i < n; ++i) {
            auto wi = w + "[" + std::to_string(i) + "]";
            const auto& plane = detail::array_of(c[i], n, wi);
            for (size_t k = 0; k < n; ++k) {
                auto row = vector_from_json(f, plane[k], n, wi + "[" + std::to_string(k) + "]");
                for (auto& s : row) out.push_back(std::move(s));
            }
        }
        return out;
    };
    auto mult = cube("mult");
    auto comult = cube("comult");
    auto unit = vector_from_json(f, member(j, "unit", where), n, where + ".unit");
    auto counit = vector_from_json(f, member(j, "counit", where), n, where + ".counit");
    auto rows = matrix_from_json(f, member(j, "antipode", where), int(d), int(d), where + ".antipode");
    Matrix<typename F::scalar> S{int(d), int(d), f.zero()};
    for (int i = 0; i < int(d); ++i)
        for (int k = 0; k < int(d); ++k) S(k, i) = rows(i, k);
    return HopfAlgebra<F>(f, std::move(labels), std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                          std::move(S));
}

// 64-bit FNV-1a over the structure tensors, as 16 hex digits.  Labels do not
// enter, matching same_structure.
template <class F>
std::string structure_hash(const HopfAlgebra<F>& H) {
    auto j = to_json(H);
    j.erase("labels");
    auto bytes = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ------------------------------------------------------------ matched pairs

// left_action[h][a]: h |> a in A, right_action[h][a]: h <| a in H
template <class F>
json to_json(const MatchedPair<F>& mp) {
    json left = json::array(), right = json::array();
    for (int h = 0; h < mp.dH(); ++h) {
        json lrow = json::array(), rrow = json::array();
        for (int a = 0; a < mp.dA(); ++a) {
            lrow.push_back(vector_json<F>(mp.lt(h, a)));
            rrow.push_back(vector_json<F>(mp.rt(h, a)));
        }
        left.push_back(std::move(lrow));
        right.push_back(std::move(rrow));
    }
    json out;
    out["format"] = "matched-pair-v1";
    out["A"] = to_json(*mp.A);
    out["H"] = to_json(*mp.H);
    out["left_action"] = std::move(left);
    out["right_action"] = std::move(right);
    return out;
}

inline bool is_matched_pair_json(const json& j) { return j.is_object() && j.contains("left_action"); }

// The field of a hopf-v1 or matched-pair file.
inline FieldSpec file_field(const json& j, const std::string& where) {
    if (is_matched_pair_json(j)) return field_from_json(detail::member(detail::member(j, "A", where), "field", where + ".A"),
                                                        where + ".A.field");
    return field_from_json(detail::member(j, "field", where), where + ".field");
}

template <class F>
MatchedPair<F> matched_pair_from_json(const F& f, const json& j, const std::string& where = "pair") {
    using detail::member;
    auto A = share(hopf_from_json(f, member(j, "A", where), where + ".A"));
    auto H = share(hopf_from_json(f, member(j, "H", where), where + ".H"));
    MatchedPair<F> mp{A, H, {}, {}};
    auto table = [&](const char* key, int len, std::vector<std::vector<typename F::scalar>>& out) {
        auto w = where + "." + key;
        const auto& t = detail::array_of(member(j, key, where), size_t(mp.dH()), w);
        for (int h = 0; h < mp.dH(); ++h) {
            auto wh = w + "[" + std::to_string(h) + "]";
            const auto& row = detail::array_of(t[h], size_t(mp.dA()), wh);
            for (int a = 0; a < mp.dA(); ++a)
                out.push_back(vector_from_json(f, row[a], size_t(len), wh + "[" + std::to_string(a) + "]"));
        }
    };
    table("left_action", mp.dA(), mp.left);
    table("right_action", mp.dH(), mp.right);
    return mp;
}

// ------------------------------------------------------------ maps

// matrix[i][j]: coefficient of c_i in the image of b_j
template <class F>
json to_json(const LinMap<F>& m) {
    json out;
    out["dom_hash"] = structure_hash(*m.dom);
    out["cod_hash"] = structure_hash(*m.cod);
    out["matrix"] = matrix_json<F>(m.m);
    return out;
}

template <class F>
LinMap<F> linmap_from_json(const json& j, const HopfPtr<F>& dom, const HopfPtr<F>& cod, const std::string& where = "map") {
    using detail::member;
    auto check = [&](const char* key, const HopfPtr<F>& H) {
        const auto& h = member(j, key, where);
        if (!h.is_string()) throw format_error(where + "." + key + ": expected a string");
        if (h.get<std::string>() != structure_hash(*H))
            throw format_error(where + "." + key + " does not match the algebra it is applied to");
    };
    check("dom_hash", dom);
    check("cod_hash", cod);
    return LinMap<F>(dom, cod, matrix_from_json(dom->field(), member(j, "matrix", where), cod->dim(), dom->dim(), where + ".matrix"));
}

template <class F>
json to_json(const Quadruple<F>& q) {
    return json{{"u", to_json(q.u)}, {"p", to_json(q.p)}, {"r", to_json(q.r)}, {"v", to_json(q.v)}};
}

template <class F>
json to_json(const Morphism<F>& m) {
    auto out = to_json(m.q);
    out["psi"] = to_json(m.psi);
    return out;
}

// ------------------------------------------------------------ groups

inline json to_json(const FiniteGroup& G) {
    return json{{"order", G.order()}, {"table", G.table()}, {"labels", G.labels()}};
}

inline FiniteGroup group_from_json(const json& j, const std::string& where = "group") {
    using detail::member;
    auto n = detail::integer(member(j, "order", where), where + ".order");
    if (n <= 0 || n > 4096) throw format_error(where + ".order: out of range");
    const auto& t = detail::array_of(member(j, "table", where), size_t(n), where + ".table");
    std::vector<std::vector<int>> table;
    for (long long i = 0; i < n; ++i) {
        auto w = where + ".table[" + std::to_string(i) + "]";
        const auto& row = detail::array_of(t[size_t(i)], size_t(n), w);
        std::vector<int> r;
        for (const auto& x : row) r.push_back(int(detail::integer(x, w)));
        table.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const auto& l : detail::array_of(j["labels"], size_t(n), where + ".labels")) {
            if (!l.is_string()) throw format_error(where + ".labels: expected strings");
            labels.push_back(l.get<std::string>());
        }
    }
    try {
        return FiniteGroup(std::move(table), std::move(labels));
    } catch (const precondition_failed& e) {
        throw format_error(where + ": " + e.what());
    }
}

// ------------------------------------------------------------ double morphism data

template <class F>
json to_json(const DoubleMorphismData<F>& d) {
    auto table = [](const std::vector<std::vector<typename F::scalar>>& t) {
        json out = json::array();
        for (const auto& row : t) out.push_back(vector_json<F>(row));
        return out;
    };
    return json{{"lambda", table(d.lambda)}, {"omega", table(d.omega)}, {"theta", table(d.theta)}, {"v", d.v}};
}

// lambda and omega are |G| x |H|, theta is |H| x |G|, v lists the image of each g.
template <class F>
DoubleMorphismData<F> double_data_from_json(const F& f, const json& j, int n, int m, const std::string& where = "data") {
    using detail::member;
    auto table = [&](const char* key, int rows, int cols) {
        auto w = where + "." + key;
        const auto& t = detail::array_of(member(j, key, where), size_t(rows), w);
        std::vector<std::vector<typename F::scalar>> out;
        for (int i = 0; i < rows; ++i) out.push_back(vector_from_json(f, t[i], size_t(cols), w + "[" + std::to_string(i) + "]"));
        return out;
    };
    DoubleMorphismData<F> d;
    d.lambda = table("lambda", n, m);
    d.omega = table("omega", n, m);
    d.theta = table("theta", m, n);
    for (const auto& x : detail::array_of(member(j, "v", where), size_t(n), where + ".v"))
        d.v.push_back(int(detail::integer(x, where + ".v")));
    return d;
}

} // namespace hopf::io
