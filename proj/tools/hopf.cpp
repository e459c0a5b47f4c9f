// hopf: batch front end for the Hopf algebra toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <atomic>
#include <filesystem>
#include <iostream>
#include <regex>
#include <thread>

#include <CLI11.hpp>

#include "hopf/io.hpp"

namespace {

using namespace hopf;
using io::json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Collects a report in both renderings; only one is printed.
struct Report {
    bool json_mode = false;
    json doc = json::object();
    std::vector<std::string> lines;

    void line(std::string s) { lines.push_back(std::move(s)); }
    void print() const {
        if (json_mode) std::cout << doc.dump(2) << "\n";
        else
            for (const auto& l : lines) std::cout << l << "\n";
    }
};

FieldSpec parse_field(const std::string& s) {
    std::smatch m;
    if (s == "Q" || s == "rationals") return FieldSpec::rationals();
    if (std::regex_match(s, m, std::regex(R"((?:F_)?(\d{1,9}))"))) return FieldSpec::prime(std::uint32_t(std::stoul(m[1])));
    if (std::regex_match(s, m, std::regex(R"((?:Q\(zeta_(\d{1,6})\))|(?:cyclotomic:(\d{1,6})))")))
        return FieldSpec::cyclotomic(std::uint32_t(std::stoul(m[1].matched ? m[1].str() : m[2].str())));
    throw usage_error("unrecognized field \"" + s + "\" (use p, Q, or Q(zeta_m))");
}

template <class Fn>
int with_field(const FieldSpec& s, Fn&& fn) {
    return std::visit([&](const auto& f) { return fn(f); }, make_field(s));
}

json check_json(const Check& c) {
    json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) {
        j["index"] = c.index;
        j["detail"] = c.detail;
    }
    return j;
}

template <class R>
json checks_json(const R& rep) {
    json out = json::array();
    for (const auto* c : rep.all()) out.push_back(check_json(*c));
    return out;
}

json hopf_report_json(const HopfReport& r) {
    return json::array({check_json(r.algebra), check_json(r.coalgebra), check_json(r.bialgebra), check_json(r.antipode)});
}

const Check* first_failure(const HopfReport& r) {
    for (const Check* c : {&r.algebra, &r.coalgebra, &r.bialgebra, &r.antipode})
        if (!c->pass) return c;
    return nullptr;
}

// Adds the axiom report of H and returns the exit code.
template <class F>
int report_hopf(Report& out, const HopfAlgebra<F>& H, const std::string& key = "axioms") {
    auto rep = verify_hopf_axioms(H);
    out.doc[key] = hopf_report_json(rep);
    out.doc["ok"] = rep.ok();
    out.line(rep.str());
    if (auto* c = first_failure(rep)) {
        out.line("first failing axiom: " + c->name);
        return 1;
    }
    return 0;
}

template <class R>
int report_checks(Report& out, const R& rep, const std::string& key, const std::string& title) {
    out.doc[key] = checks_json(rep);
    if (auto* c = rep.first_failure()) {
        out.line(title + ": FAIL");
        out.line(rep.str());
        out.line("first failing axiom: " + c->name);
        out.doc["ok"] = false;
        return 1;
    }
    out.line(title + ": ok");
    return 0;
}

template <class F>
std::string matrix_text(const Matrix<typename F::scalar>& m) {
    return io::matrix_json<F>(m).dump();
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::string exponent_list(const std::vector<long long>& xs) {
    std::vector<std::string> s;
    for (auto x : xs) s.push_back(std::to_string(x));
    return "{" + join(s, ", ") + "}";
}

FiniteGroup group_by_name(const std::string& name) {
    std::smatch m;
    if (std::regex_match(name, m, std::regex(R"(C(\d{1,3}))"))) {
        int n = std::stoi(m[1]);
        if (n < 1) throw usage_error("cyclic group order must be positive");
        return cyclic_group(n);
    }
    if (name == "K4" || name == "C2xC2") return klein_group();
    if (name == "S3") return symmetric_group(3);
    if (std::filesystem::exists(name)) return io::group_from_json(io::read_json_file(name), name);
    throw usage_error("unknown group \"" + name + "\" (use Cn, K4, S3 or a table file)");
}

// ------------------------------------------------------------ verbs

template <class F>
int run_verify(const F& f, const json& j, const std::string& path, Report& out) {
    out.doc["file"] = path;
    if (io::is_matched_pair_json(j)) {
        auto mp = io::matched_pair_from_json(f, j, path);
        if (int rc = report_checks(out, verify_matched_pair(mp), "matched_pair", "matched pair")) return rc;
        auto E = bicrossed_product(mp, false);
        out.doc["dim"] = E.dim();
        return report_hopf(out, E);
    }
    auto H = io::hopf_from_json(f, j, path);
    out.doc["dim"] = H.dim();
    return report_hopf(out, H);
}

template <class F>
int run_bicrossed(const F& f, const json& j, const std::string& path, const std::string& out_path,
                  const std::string& factors_dir, Report& out) {
    auto mp = io::matched_pair_from_json(f, j, path);
    if (int rc = report_checks(out, verify_matched_pair(mp), "matched_pair", "matched pair")) return rc;
    auto E = share(bicrossed_product(mp, false));
    out.doc["dim"] = E->dim();
    out.doc["hash"] = io::structure_hash(*E);
    out.line("bicrossed product: dim = " + std::to_string(E->dim()) + ", hash = " + io::structure_hash(*E));
    int rc = report_hopf(out, *E);
    if (!out_path.empty()) io::write_json_file(out_path, io::to_json(*E));
    if (!factors_dir.empty()) {
        std::filesystem::path d(factors_dir);
        std::filesystem::create_directories(d);
        io::write_json_file((d / "A.json").string(), io::to_json(*mp.A));
        io::write_json_file((d / "H.json").string(), io::to_json(*mp.H));
        io::write_json_file((d / "i.json").string(), io::to_json(inclusion_a(mp, E)));
        io::write_json_file((d / "j.json").string(), io::to_json(inclusion_h(mp, E)));
    }
    return rc;
}

template <class F>
int run_double_group(const F& f, const FiniteGroup& G, const std::string& out_path, bool pair_only, Report& out) {
    auto mp = group_double_pair(G, f);
    if (pair_only) {
        if (out_path.empty()) throw usage_error("--pair needs --out");
        io::write_json_file(out_path, io::to_json(mp));
        out.line("wrote " + out_path + ": matched pair for D(k[G]), |G| = " + std::to_string(G.order()));
        out.doc["file"] = out_path;
        return 0;
    }
    auto D = bicrossed_product(mp);
    out.doc["dim"] = D.dim();
    out.line("D(k[G]): |G| = " + std::to_string(G.order()) + ", dim = " + std::to_string(D.dim()) + ", field = " +
             f.spec().name());
    int rc = report_hopf(out, D);
    if (!out_path.empty()) io::write_json_file(out_path, io::to_json(D));
    return rc;
}

template <class F>
int run_factorize(const F& f, const std::string& e_path, const std::string& a_path, const std::string& i_path,
                  const std::string& h_path, const std::string& j_path, const std::string& out_path, Report& out) {
    auto E = share(io::hopf_from_json(f, io::read_json_file(e_path), e_path));
    auto A = share(io::hopf_from_json(f, io::read_json_file(a_path), a_path));
    auto H = share(io::hopf_from_json(f, io::read_json_file(h_path), h_path));
    auto i = io::linmap_from_json(io::read_json_file(i_path), A, E, i_path);
    auto j = io::linmap_from_json(io::read_json_file(j_path), H, E, j_path);
    auto fac = factorize(E, i, j);
    out.doc["dim_A"] = A->dim();
    out.doc["dim_H"] = H->dim();
    out.line("factorization: dim A = " + std::to_string(A->dim()) + ", dim H = " + std::to_string(H->dim()));
    out.line(std::string("right action trivial: ") + (fac.pair.right_trivial() ? "yes" : "no") +
             ", left action trivial: " + (fac.pair.left_trivial() ? "yes" : "no"));
    int rc = report_checks(out, verify_matched_pair(fac.pair), "matched_pair", "matched pair");
    out.doc["pair"] = io::to_json(fac.pair);
    if (!out_path.empty()) io::write_json_file(out_path, out.doc["pair"]);
    return rc;
}

template <class F>
int run_morphisms(const F& f, const std::string& e_path, const std::string& f_path, bool stabilize, bool isos_only,
                  const std::string& out_path, Report& out) {
    auto X = make_bicrossed(io::matched_pair_from_json(f, io::read_json_file(e_path), e_path));
    auto Y = make_bicrossed(io::matched_pair_from_json(f, io::read_json_file(f_path), f_path));
    auto ms = enumerate_morphisms(X, Y, stabilize, isos_only);
    int isos = 0;
    json list = json::array();
    std::vector<std::string> rows;
    for (size_t k = 0; k < ms.size(); ++k) {
        bool bij = is_bijective(ms[k].psi);
        isos += bij;
        auto w = io::to_json(ms[k]);
        w["bijective"] = bij;
        list.push_back(std::move(w));
        rows.push_back("[" + std::to_string(k) + "] " + (bij ? "iso " : "map ") + matrix_text<F>(ms[k].psi.m));
    }
    out.doc["morphisms"] = ms.size();
    out.doc["isomorphisms"] = isos;
    out.doc["witnesses"] = list;
    out.line("morphisms = " + std::to_string(ms.size()) + ", isomorphisms = " + std::to_string(isos));
    for (auto& r : rows) out.line(r);
    if (!out_path.empty()) io::write_json_file(out_path, list);
    return 0;
}

template <class F>
int run_coz1(const F& f, const std::string& h_path, const std::string& a_path, Report& out) {
    auto H = share(io::hopf_from_json(f, io::read_json_file(h_path), h_path));
    auto A = share(io::hopf_from_json(f, io::read_json_file(a_path), a_path));
    auto T = coz1_group(H, A);
    out.doc["order"] = T.order();
    out.doc["identity"] = T.identity;
    out.doc["table"] = T.table;
    json elems = json::array();
    for (const auto& r : T.elements) elems.push_back(io::to_json(r));
    out.doc["elements"] = elems;
    out.line("order = " + std::to_string(T.order()));
    for (int a = 0; a < T.order(); ++a) {
        std::vector<std::string> row;
        for (int b : T.table[a]) row.push_back(std::to_string(b));
        out.line(join(row, " "));
    }
    return 0;
}

// Brute-force verdicts for every (l, t), spread over a worker pool.  Results
// land in a slot per pair so the output order does not depend on scheduling.
template <class F>
std::vector<std::vector<bool>> brute_force_partition(int n, const F& f, long long nu, unsigned threads) {
    std::vector<Bicrossed<F>> X;
    for (long long t = 0; t < nu; ++t) X.push_back(h4n_bicrossed(make_h4n_spec(n, t, f)));
    std::vector<std::vector<char>> found(nu, std::vector<char>(nu, 0));
    std::atomic<long long> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (long long k; (k = next++) < nu * nu;) {
            try {
                found[k / nu][k % nu] = !enumerate_morphisms(X[k / nu], X[k % nu], false, true).empty();
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::max(1u, threads); ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    std::vector<std::vector<bool>> out(nu, std::vector<bool>(nu));
    for (long long l = 0; l < nu; ++l)
        for (long long t = 0; t < nu; ++t) out[l][t] = found[l][t];
    return out;
}

template <class F>
int run_classify(const F& f, int n, bool certify, unsigned threads, Report& out) {
    if (n < 1) throw usage_error("--n must be positive");
    auto c = iso_classes(n, f);
    std::vector<std::string> reps;
    for (auto r : c.representatives) reps.push_back(xi_power_label(r));
    out.doc["n"] = n;
    out.doc["field"] = io::to_json(f.spec());
    out.doc["nu"] = c.nu;
    out.doc["classes"] = c.count;
    out.doc["representatives"] = reps;
    out.doc["class_of"] = c.class_of;
    out.doc["partition"] = c.partition;
    out.line("nu=" + std::to_string(c.nu) + ", classes=" + std::to_string(c.count) + ", representatives=[" + join(reps, ", ") +
             "]");
    std::vector<std::string> cls;
    for (auto r : c.class_of) cls.push_back(xi_power_label(r));
    out.line("class of xi^t for t = 0.." + std::to_string(c.nu - 1) + ": " + join(cls, " "));
    out.line("partition (row l, column t):");
    for (long long l = 0; l < c.nu; ++l) {
        std::string row;
        for (long long t = 0; t < c.nu; ++t) row += std::string(t ? " " : "") + (c.partition[l][t] ? "1" : "0");
        out.line("  " + row);
    }
    if (c.count != predicted_class_count(c.nu)) {
        out.line("class count disagrees with the divisor formula: " + std::to_string(predicted_class_count(c.nu)));
        return 1;
    }
    if (!certify) return 0;
    auto brute = brute_force_partition(n, f, c.nu, threads);
    long long agree = 0;
    for (long long l = 0; l < c.nu; ++l)
        for (long long t = 0; t < c.nu; ++t) agree += brute[l][t] == c.partition[l][t];
    out.doc["certified"] = agree == c.nu * c.nu;
    out.line("brute force agrees on " + std::to_string(agree) + "/" + std::to_string(c.nu * c.nu) + " pairs");
    return agree == c.nu * c.nu ? 0 : 1;
}

template <class F>
int run_aut(const F& f, int n, long long t, bool brute, Report& out) {
    auto spec = make_h4n_spec(n, t, f);
    auto a = aut_group_profile(n, t, f);
    const auto& p = a.profile;
    std::string order = a.order ? std::to_string(*a.order) : "infinite";
    out.doc["structure"] = p.structure();
    out.doc["order"] = a.order ? json(*a.order) : json("infinite");
    out.doc["U_t"] = p.U_t;
    out.doc["V_t"] = p.V_t;
    out.doc["U~_t"] = p.Ut_tilde;
    out.doc["checks"] = json::array({check_json(p.u_subgroup), check_json(p.ut_subgroup), check_json(p.disjoint)});
    out.line("structure = " + p.structure() + ", order = " + order);
    out.line("U_t = " + exponent_list(p.U_t) + ", V_t = " + exponent_list(p.V_t) + ", U~_t = " + exponent_list(p.Ut_tilde));
    for (const Check* c : {&p.u_subgroup, &p.ut_subgroup, &p.disjoint}) out.line(c->str());
    int rc = p.ok() ? 0 : 1;
    if (brute) {
        if (!a.order) throw usage_error("--brute-force needs a finite field");
        auto count = (long long)automorphisms(h4n_bicrossed(spec)).size();
        out.doc["brute_force"] = count;
        out.line("brute force: " + std::to_string(count) + " automorphisms" + (count == *a.order ? "" : " (MISMATCH)"));
        if (count != *a.order) rc = 1;
    }
    return rc;
}

template <class F>
int run_klein(const F& f, Report& out) {
    auto ks = klein_survey(f);
    out.doc["pairs"] = ks.pairs.size();
    out.doc["all_isomorphic_to_tensor_product"] = ks.all_products_trivial;
    out.line("pairs = " + std::to_string(ks.pairs.size()) + ", all products isomorphic to H4 (x) k[C2 x C2]: " +
             (ks.all_products_trivial ? "yes" : "no"));
    auto sign = [&](const MatchedPair<F>& mp, int h) {
        auto w = diagonal_coefficient(mp, h, 2);
        if (!w) return std::string("?");
        return *w == f.one() ? std::string("+") : std::string("-");
    };
    json rows = json::array();
    for (size_t k = 0; k < ks.pairs.size(); ++k) {
        const auto& mp = ks.pairs[k];
        bool ok = ks.isomorphisms[k] && is_bijective(*ks.isomorphisms[k]) && is_hopf_map(*ks.isomorphisms[k]);
        std::string s = "pair " + std::to_string(k) + ": a|>x = " + sign(mp, 1) + "x, b|>x = " + sign(mp, 2) +
                        "x, ab|>x = " + sign(mp, 3) + "x, witness " + (ok ? "verified" : "missing");
        out.line(s);
        json r{{"signs", {sign(mp, 1), sign(mp, 2), sign(mp, 3)}}, {"witness_verified", ok}};
        if (ks.isomorphisms[k]) r["witness"] = io::to_json(*ks.isomorphisms[k]);
        rows.push_back(std::move(r));
    }
    out.doc["survey"] = rows;
    return ks.all_products_trivial ? 0 : 1;
}

template <class F>
int run_double_hom(const F& f, const FiniteGroup& G, const FiniteGroup& H, const json& data, const std::string& path,
                   Report& out) {
    auto d = io::double_data_from_json(f, data, G.order(), H.order(), path);
    auto res = check_double_morphism_data(d, G, H, f);
    int rc = report_checks(out, res.report, "conditions", "double morphism data");
    if (res.psi) {
        out.doc["psi"] = io::to_json(*res.psi);
        out.line(std::string("psi: Hopf map, ") + (is_bijective(*res.psi) ? "bijective" : "not bijective"));
    }
    return rc;
}

template <class F>
int run_export(const F& f, const std::string& name, int n, long long t, const std::string& group, int index, bool pair_only,
               const std::string& out_path, Report& out) {
    std::optional<MatchedPair<F>> mp;
    std::optional<HopfAlgebra<F>> H;
    if (name == "h4") {
        H = sweedler_h4(f);
    } else if (name == "h4n") {
        auto spec = make_h4n_spec(n, t, f);
        if (pair_only) mp = h4_cn_pair(n, spec.omega(), f);
        else H = build_h4n(spec);
    } else if (name == "double-group") {
        auto p = group_double_pair(group_by_name(group), f);
        if (pair_only) mp = std::move(p);
        else H = bicrossed_product(p);
    } else if (name == "klein") {
        auto sorted = klein_survey(f).pairs;
        if (index < 0 || index >= int(sorted.size())) throw usage_error("--index must lie in [0, " + std::to_string(sorted.size()) + ")");
        if (pair_only) mp = sorted[index];
        else H = bicrossed_product(sorted[index]);
    } else {
        throw usage_error("unknown fixture \"" + name + "\" (use h4, h4n, double-group, klein)");
    }
    io::write_json_file(out_path, mp ? io::to_json(*mp) : io::to_json(*H));
    // re-ingest what was written
    auto j = io::read_json_file(out_path);
    out.doc["file"] = out_path;
    if (mp) {
        auto back = io::matched_pair_from_json(f, j, out_path);
        bool same = back == *mp && back.A->same_structure(*mp->A) && back.H->same_structure(*mp->H);
        out.line("wrote " + out_path + ": matched pair, dim A = " + std::to_string(back.dA()) + ", dim H = " +
                 std::to_string(back.dH()) + (same ? ", round trip ok" : ", round trip FAILED"));
        if (!same) return 1;
        return report_checks(out, verify_matched_pair(back), "matched_pair", "matched pair");
    }
    auto back = io::hopf_from_json(f, j, out_path);
    bool same = back.same_structure(*H) && back.labels() == H->labels();
    out.doc["dim"] = back.dim();
    out.line("wrote " + out_path + ": dim = " + std::to_string(back.dim()) + (same ? ", round trip ok" : ", round trip FAILED"));
    if (!same) return 1;
    return report_hopf(out, back);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computations with finite dimensional Hopf algebras and bicrossed products", "hopf"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable report");

    std::string file1, file2, out_path, field = "3", data_path, group_path, factors_dir;
    std::string a_path, i_path, h_path, j_path, fixture;
    int n = 1, index = 1;
    long long t = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool stabilize = false, isos_only = false, certify = false, brute = false, pair_only = false;

    auto* verify = app.add_subcommand("verify", "verify the Hopf axioms of a hopf-v1 or matched pair file");
    verify->add_option("file", file1)->required()->check(CLI::ExistingFile);

    auto* build = app.add_subcommand("build", "build a fixture algebra");
    build->require_subcommand(1);
    auto* build_h4n_cmd = build->add_subcommand("h4n", "H_{4n, xi^t}");
    build_h4n_cmd->add_option("--n", n)->required();
    build_h4n_cmd->add_option("--t", t)->required();
    build_h4n_cmd->add_option("--field", field)->required();
    build_h4n_cmd->add_option("--out", out_path);
    build_h4n_cmd->add_flag("--pair", pair_only, "write the matched pair (H4, k[C_n]) instead");

    auto* bicrossed = app.add_subcommand("bicrossed", "bicrossed product of a matched pair file");
    bicrossed->add_option("pair", file1)->required()->check(CLI::ExistingFile);
    bicrossed->add_option("--out", out_path);
    bicrossed->add_option("--factors", factors_dir, "write A, H and the two inclusions to this directory");

    auto* dbl = app.add_subcommand("double", "Drinfel'd doubles");
    dbl->require_subcommand(1);
    auto* dbl_group = dbl->add_subcommand("group", "D(k[G]) from a group table");
    dbl_group->add_option("table", group_path)->required();
    dbl_group->add_option("--field", field);
    dbl_group->add_option("--out", out_path);
    dbl_group->add_flag("--pair", pair_only, "write the matched pair instead");

    auto* fact = app.add_subcommand("factorize", "matched pair from an exact factorization E = AH");
    fact->add_option("E", file1)->required()->check(CLI::ExistingFile);
    fact->add_option("--a-factor", a_path)->required()->check(CLI::ExistingFile);
    fact->add_option("--a-image", i_path)->required()->check(CLI::ExistingFile);
    fact->add_option("--h-factor", h_path)->required()->check(CLI::ExistingFile);
    fact->add_option("--h-image", j_path)->required()->check(CLI::ExistingFile);
    fact->add_option("--out", out_path);

    auto* morph = app.add_subcommand("morphisms", "Hopf maps between two bicrossed products");
    morph->add_option("E", file1)->required()->check(CLI::ExistingFile);
    morph->add_option("F", file2)->required()->check(CLI::ExistingFile);
    morph->add_flag("--stabilize-a", stabilize, "only maps restricting to the identity on A");
    morph->add_flag("--isomorphisms", isos_only, "only bijective maps");
    morph->add_option("--out", out_path, "write the witnesses");

    auto* coz = app.add_subcommand("coz1", "convolution group of unitary cocentral maps H -> A");
    coz->add_option("H", file1)->required()->check(CLI::ExistingFile);
    coz->add_option("A", file2)->required()->check(CLI::ExistingFile);

    auto* classify = app.add_subcommand("classify", "isomorphism classes");
    classify->require_subcommand(1);
    auto* classify_h4n = classify->add_subcommand("h4n", "classes of H_{4n, w}");
    classify_h4n->add_option("--n", n)->required();
    classify_h4n->add_option("--field", field)->required();
    classify_h4n->add_flag("--certify", certify, "confirm every verdict by morphism search");
    classify_h4n->add_option("--threads", threads, "workers for --certify")->check(CLI::PositiveNumber);

    auto* aut = app.add_subcommand("aut", "Hopf automorphism groups");
    aut->require_subcommand(1);
    auto* aut_h4n = aut->add_subcommand("h4n", "Aut of H_{4n, xi^t}");
    aut_h4n->add_option("--n", n)->required();
    aut_h4n->add_option("--t", t)->required();
    aut_h4n->add_option("--field", field)->required();
    aut_h4n->add_flag("--brute-force", brute, "count automorphisms by search");

    auto* klein = app.add_subcommand("klein", "matched pairs (H4, k[C2 x C2])");
    klein->add_option("--field", field);

    auto* dhom = app.add_subcommand("double-hom", "check morphism data between D(k[G]) and D(k[H])");
    dhom->add_option("G", file1)->required();
    dhom->add_option("H", file2)->required();
    dhom->add_option("--data", data_path)->required()->check(CLI::ExistingFile);
    dhom->add_option("--field", field);

    auto* exp = app.add_subcommand("export", "write a fixture as JSON and re-verify it");
    exp->add_option("name", fixture, "h4, h4n, double-group or klein")->required();
    exp->add_option("--field", field);
    exp->add_option("--n", n);
    exp->add_option("--t", t);
    exp->add_option("--group", group_path, "Cn, K4, S3 or a table file");
    exp->add_option("--index", index, "which Klein pair, 0 is the trivial one");
    exp->add_flag("--pair", pair_only, "write the matched pair instead of the product");
    exp->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Report out;
    out.json_mode = json_mode;
    int rc = 0;
    if (*verify) {
        auto j = io::read_json_file(file1);
        rc = with_field(io::file_field(j, file1), [&](const auto& f) { return run_verify(f, j, file1, out); });
    } else if (*build_h4n_cmd) {
        rc = with_field(parse_field(field), [&](const auto& f) {
            auto spec = make_h4n_spec(n, t, f);
            json doc = pair_only ? io::to_json(h4_cn_pair(n, spec.omega(), f)) : io::to_json(build_h4n(spec));
            if (out_path.empty()) {
                std::cout << doc.dump() << "\n";
                return -1;
            }
            io::write_json_file(out_path, doc);
            out.doc["file"] = out_path;
            out.doc["dim"] = 4 * n;
            out.line("wrote " + out_path + ": H_{" + std::to_string(4 * n) + ", " + xi_power_label(t) + "}, dim = " +
                     std::to_string(4 * n) + ", field = " + f.spec().name() + ", w = " + to_string(spec.omega()));
            return 0;
        });
    } else if (*bicrossed) {
        auto j = io::read_json_file(file1);
        rc = with_field(io::file_field(j, file1),
                        [&](const auto& f) { return run_bicrossed(f, j, file1, out_path, factors_dir, out); });
    } else if (*dbl_group) {
        auto G = group_by_name(group_path);
        rc = with_field(parse_field(field), [&](const auto& f) { return run_double_group(f, G, out_path, pair_only, out); });
    } else if (*fact) {
        auto j = io::read_json_file(file1);
        rc = with_field(io::file_field(j, file1),
                        [&](const auto& f) { return run_factorize(f, file1, a_path, i_path, h_path, j_path, out_path, out); });
    } else if (*morph) {
        auto j = io::read_json_file(file1);
        rc = with_field(io::file_field(j, file1), [&](const auto& f) {
            return run_morphisms(f, file1, file2, stabilize, isos_only, out_path, out);
        });
    } else if (*coz) {
        auto j = io::read_json_file(file1);
        rc = with_field(io::file_field(j, file1), [&](const auto& f) { return run_coz1(f, file1, file2, out); });
    } else if (*classify_h4n) {
        rc = with_field(parse_field(field), [&](const auto& f) { return run_classify(f, n, certify, threads, out); });
    } else if (*aut_h4n) {
        rc = with_field(parse_field(field), [&](const auto& f) { return run_aut(f, n, t, brute, out); });
    } else if (*klein) {
        rc = with_field(parse_field(field), [&](const auto& f) { return run_klein(f, out); });
    } else if (*dhom) {
        auto G = group_by_name(file1), H = group_by_name(file2);
        auto data = io::read_json_file(data_path);
        auto spec = data.contains("field") ? io::field_from_json(data["field"], data_path + ".field") : parse_field(field);
        rc = with_field(spec, [&](const auto& f) { return run_double_hom(f, G, H, data, data_path, out); });
    } else if (*exp) {
        rc = with_field(parse_field(field), [&](const auto& f) {
            return run_export(f, fixture, n, t, group_path, index, pair_only, out_path, out);
        });
    }
    if (rc < 0) return 0; // the command already wrote its payload
    out.print();
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hopf::io::format_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hopf::field_mismatch& e) {
        std::cerr << "field mismatch: " << e.what() << "\n";
        return 2;
    } catch (const hopf::dimension_mismatch& e) {
        std::cerr << "dimension mismatch: " << e.what() << "\n";
        return 2;
    } catch (const hopf::precondition_failed& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const hopf::budget_exceeded& e) {
        std::cerr << "search budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const hopf::error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
