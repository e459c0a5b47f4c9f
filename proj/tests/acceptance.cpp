// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>

#include "hopf/h4n.hpp"

using namespace hopf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (problems.size() < 5) problems.push_back(what);
    }
};

long long millis_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::uint32_t prime_realizing(int n) {
    for (std::uint32_t p = 3;; p += 2)
        if (arith::is_prime(p) && (p - 1) % n == 0) return p;
}

std::string str(long long x) { return std::to_string(x); }

struct Fixture {
    std::string name;
    MatchedPair<PrimeField> pair;
};

std::vector<Fixture> base_fixtures() {
    std::vector<Fixture> out;
    for (int n = 1; n <= 6; ++n) {
        PrimeField f(prime_realizing(n));
        auto A = share(sweedler_h4(f));
        out.push_back({"H4 (x) k[C" + str(n) + "] over " + f.spec().name(), trivial_pair(A, share(group_algebra(cyclic_group(n), f)))});
        auto roots = roots_of_unity(f, n);
        for (size_t k = 0; k < roots.size(); ++k)
            out.push_back({"H_{" + str(4 * n) + ",w=" + roots[k].str() + "} over " + f.spec().name(), h4_cn_pair(n, roots[k], f)});
    }
    PrimeField f7(7);
    out.push_back({"D(k[C2])", group_double_pair(cyclic_group(2), f7)});
    out.push_back({"D(k[C3])", group_double_pair(cyclic_group(3), f7)});
    out.push_back({"D(k[S3])", group_double_pair(symmetric_group(3), f7)});
    out.push_back({"D(H4)", double_pair(share(sweedler_h4(f7)))});
    return out;
}

// ------------------------------------------------------------ 1

Outcome axiom_closure() {
    Outcome o;
    long long slowest = 0;
    std::string slowest_name;
    int count = 0;
    for (const auto& fx : base_fixtures()) {
        auto t0 = Clock::now();
        auto rep = verify_matched_pair(fx.pair);
        o.require(rep.ok(), fx.name + ": matched pair " + (rep.ok() ? "" : rep.first_failure()->str()));
        auto E = bicrossed_product(fx.pair);
        auto hr = verify_hopf_axioms(E);
        o.require(hr.ok(), fx.name + ": " + hr.str());
        auto ms = millis_since(t0);
        ++count;
        if (ms > slowest) slowest = ms, slowest_name = fx.name;
        o.require(ms < 5000, fx.name + " took " + str(ms) + " ms");

        t0 = Clock::now();
        auto mirror = mirror_pair(fx.pair);
        auto mhr = verify_hopf_axioms(*mirror.target);
        o.require(mhr.ok(), "mirror of " + fx.name + ": " + mhr.str());
        o.require(is_hopf_map(mirror.iso) && is_bijective(mirror.iso), "mirror of " + fx.name + ": no verified isomorphism");
        ms = millis_since(t0);
        ++count;
        if (ms > slowest) slowest = ms, slowest_name = "mirror of " + fx.name;
        o.require(ms < 5000, "mirror of " + fx.name + " took " + str(ms) + " ms");
    }
    o.detail = str(count) + " products verified, slowest " + slowest_name + " at " + str(slowest) + " ms";
    return o;
}

// ------------------------------------------------------------ 2

Outcome census() {
    Outcome o;
    int cases = 0;
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
        for (int n = 1; n <= 8; ++n) {
            PrimeField f(p);
            auto pairs = enumerate_matched_pairs_h4_cn(n, f);
            auto expect = std::gcd<long long>(n, p - 1);
            std::string tag = "n=" + str(n) + " p=" + str(p);
            o.require((long long)pairs.size() == expect, tag + ": " + str(pairs.size()) + " pairs, expected " + str(expect));
            std::vector<Fp> omegas;
            for (const auto& mp : pairs) {
                o.require(verify_matched_pair(mp).ok(), tag + ": a returned pair fails the axioms");
                o.require(mp.right_trivial(), tag + ": right action not trivial");
                // c |> g = g, c |> x = w x, c |> gx = w gx
                auto w = diagonal_coefficient(mp, n > 1 ? 1 : 0, 2);
                bool diag = w && diagonal_coefficient(mp, n > 1 ? 1 : 0, 1) == f.one() &&
                            diagonal_coefficient(mp, n > 1 ? 1 : 0, 3) == w && power(*w, n, f.one()) == f.one();
                o.require(diag, tag + ": action is not diagonal by an n-th root of unity");
                if (w) omegas.push_back(*w);
            }
            std::sort(omegas.begin(), omegas.end());
            o.require(std::adjacent_find(omegas.begin(), omegas.end()) == omegas.end(), tag + ": repeated w");
            ++cases;
        }
    o.detail = str(cases) + " (n, p) cases, counts equal gcd(n, p-1)";
    return o;
}

// ------------------------------------------------------------ 3

long long divisor_formula(long long nu) {
    // the exponent of 2 counts without the +1
    long long c = 1;
    for (auto [q, a] : arith::factorize(nu)) c *= q == 2 ? a : a + 1;
    return c;
}

Outcome class_counts() {
    Outcome o;
    std::string counts;
    for (int n = 1; n <= 12; ++n) {
        PrimeField f(prime_realizing(n));
        auto c = iso_classes(n, f);
        o.require(c.nu == n, "nu(" + str(n) + ") = " + str(c.nu) + " over " + f.spec().name());
        o.require(c.count == divisor_formula(n), "n=" + str(n) + ": " + str(c.count) + " classes, formula " + str(divisor_formula(n)));
        counts += (counts.empty() ? "" : " ") + str(c.count);
    }
    std::vector<std::pair<long long, int>> spots{{2, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 2}, {8, 3}, {9, 3}};
    for (auto [nu, k] : spots) o.require(iso_classes(nu, nu).count == k, "spot value nu=" + str(nu));
    o.detail = "classes for n=1..12: " + counts;
    return o;
}

// ------------------------------------------------------------ 4

Outcome dual_certification() {
    Outcome o;
    int agree = 0, total = 0, positive = 0;
    std::size_t exhausted = 0;
    for (int n = 1; n <= 6; ++n)
        for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
            if ((p - 1) % n != 0) continue;
            PrimeField f(p);
            std::vector<Bicrossed<PrimeField>> X;
            for (long long t = 0; t < n; ++t) X.push_back(h4n_bicrossed(make_h4n_spec(n, t, f)));
            for (int l = 0; l < n; ++l)
                for (int t = 0; t < n; ++t) {
                    auto sp = morphism_search_space(X[l], X[t]);
                    auto isos = enumerate_morphisms(X[l], X[t], sp, true);
                    bool verdict = iso_criterion(l, t, n, f).isomorphic;
                    std::string tag = "n=" + str(n) + " p=" + str(p) + " (l,t)=(" + str(l) + "," + str(t) + ")";
                    ++total;
                    if (verdict == !isos.empty()) ++agree;
                    else o.require(false, tag + ": criterion " + (verdict ? "yes" : "no") + ", search " + (isos.empty() ? "no" : "yes"));
                    if (!isos.empty()) {
                        ++positive;
                        const auto& psi = isos.front().psi;
                        o.require(is_hopf_map(psi) && is_bijective(psi), tag + ": witness does not verify");
                    } else {
                        exhausted += sp.alphas.size() * sp.betas.size();
                    }
                }
        }
    o.detail = str(agree) + "/" + str(total) + " verdicts agree; " + str(positive) + " verified isomorphisms, " + str(exhausted) +
               " candidate pairs exhausted for the negative cases";
    return o;
}

// ------------------------------------------------------------ 5

Outcome automorphism_groups() {
    Outcome o;
    int cases = 0;
    for (int n = 1; n <= 6; ++n)
        for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
            PrimeField f(p);
            long long nu = nu_order(f, n).nu;
            for (long long t = 0; t < nu; ++t) {
                auto a = aut_group_profile(n, t, f);
                std::string tag = "n=" + str(n) + " t=" + str(t) + " p=" + str(p);
                o.require(a.profile.ok(), tag + ": " + a.profile.u_subgroup.str() + "; " + a.profile.ut_subgroup.str() + "; " +
                                              a.profile.disjoint.str());
                // the selected subgroup follows the parity of n and nu
                bool both_even = n % 2 == 0 && nu % 2 == 0;
                o.require(a.profile.both_even == both_even, tag + ": parity rule");
                auto brute = (long long)automorphisms(h4n_bicrossed(make_h4n_spec(n, t, f))).size();
                o.require(brute == *a.order, tag + ": brute force " + str(brute) + ", formula " + str(*a.order));
                ++cases;
            }
        }
    // the full arithmetic check also over the ideal case nu = n beyond the field grid
    for (int n = 1; n <= 12; ++n)
        for (long long t = 0; t < n; ++t) o.require(arithmetic_profile(n, t, n).ok(), "profile n=" + str(n) + " t=" + str(t));
    o.detail = str(cases) + " (n, t, p) cases match (p-1)|U_t| or (p-1)|U~_t|";
    return o;
}

// ------------------------------------------------------------ 6

Outcome coz1_sizes() {
    Outcome o;
    std::string sizes;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        PrimeField f(p);
        auto H4 = share(sweedler_h4(f));
        auto check_members = [&](const ConvolutionGroupTable<PrimeField>& T, const std::string& tag) {
            for (const auto& r : T.elements) {
                auto S2 = compose(antipode_map(r.cod), antipode_map(r.cod));
                o.require(compose(S2, r) == r, tag + ": S^2 o r != r");
                o.require(is_cocentral(r) && is_unitary(r) && is_coalgebra_map(r), tag + ": member is not a unitary cocentral coalgebra map");
            }
        };
        for (int n = 1; n <= 5; ++n) {
            auto K = share(group_algebra(cyclic_group(n), f));
            auto T = coz1_group(K, H4);
            std::string tag = "CoZ1(k[C" + str(n) + "], H4) over F_" + str(p);
            o.require(T.order() == (1 << (n - 1)), tag + " = " + str(T.order()));
            check_members(T, tag);
            if (p == 3) sizes += (sizes.empty() ? "" : " ") + str(T.order());
            auto U = coz1_group(H4, K);
            o.require(U.order() == 1, "CoZ1(H4, k[C" + str(n) + "]) = " + str(U.order()));
            check_members(U, "CoZ1(H4, k[C" + str(n) + "])");
        }
        auto V = coz1_group(H4, H4);
        o.require(V.order() == 1, "CoZ1(H4, H4) = " + str(V.order()) + " over F_" + str(p));
        check_members(V, "CoZ1(H4, H4)");
    }
    o.detail = "|CoZ1(k[C_n], H4)| for n=1..5: " + sizes + "; CoZ1(H4, H4) and CoZ1(H4, k[C_n]) trivial";
    return o;
}

// ------------------------------------------------------------ 7

// Hopf maps out of k[C2]* = span(e_1, e_c): chi = e_1 - e_c is grouplike with
// chi^2 = 1, and a map is fixed by the grouplike image of chi.
std::vector<LinMap<PrimeField>> maps_from_dual_c2(const HopfPtr<PrimeField>& A, const HopfPtr<PrimeField>& E) {
    const auto& f = A->field();
    auto half = f.from_int(2).inverse();
    std::vector<LinMap<PrimeField>> out;
    for (const auto& y : grouplikes_exhaustive(*E)) {
        if (E->mul(y, y) != E->one()) continue;
        LinMap<PrimeField> m(A, E);
        for (int k = 0; k < E->dim(); ++k) {
            m.m(k, 0) = half * (E->one()[k] + y[k]);
            m.m(k, 1) = half * (E->one()[k] - y[k]);
        }
        if (is_hopf_map(m)) out.push_back(m);
    }
    return out;
}

Outcome morphism_round_trips() {
    Outcome o;
    std::vector<std::pair<Bicrossed<PrimeField>, Bicrossed<PrimeField>>> cases;
    for (int n = 1; n <= 3; ++n) {
        PrimeField f(7);
        for (long long l = 0; l < n; ++l)
            for (long long t = 0; t < n; ++t)
                cases.emplace_back(h4n_bicrossed(make_h4n_spec(n, l, f)), h4n_bicrossed(make_h4n_spec(n, t, f)));
    }
    PrimeField f3(3), f5(5);
    auto A = share(sweedler_h4(f5));
    auto K2 = share(group_algebra(cyclic_group(2), f5));
    cases.emplace_back(make_bicrossed(trivial_pair(A, K2)), h4n_bicrossed(make_h4n_spec(2, 1, f5)));
    cases.emplace_back(h4n_bicrossed(make_h4n_spec(2, 1, f5)), make_bicrossed(trivial_pair(A, K2)));
    auto klein = klein_survey(f3).pairs;
    for (size_t k = 1; k < klein.size(); ++k) cases.emplace_back(make_bicrossed(klein[0]), make_bicrossed(klein[k]));
    auto DC2 = make_bicrossed(group_double_pair(cyclic_group(2), f5));
    MorphismSearchSpace<PrimeField> dsp{maps_from_dual_c2(DC2.pair.A, DC2.E), hopf_maps(DC2.pair.H, DC2.E)};
    int maps = 0;
    for (size_t c = 0; c <= cases.size(); ++c) {
        bool dbl = c == cases.size();
        const auto& X = dbl ? DC2 : cases[c].first;
        const auto& Y = dbl ? DC2 : cases[c].second;
        for (const auto& m : dbl ? enumerate_morphisms(X, Y, dsp) : enumerate_morphisms(X, Y)) {
            ++maps;
            o.require(is_hopf_map(m.psi), "enumerated psi is not a Hopf map");
            auto q = decompose_psi(m.psi, X, Y);
            o.require(q == m.q, "decompose o assemble is not the identity");
            o.require(assemble_psi(q, X, Y) == m.psi, "assemble o decompose is not the identity");
            o.require(verify_quadruple(q, X.pair, Y.pair).ok(), "decomposed quadruple fails its conditions");
        }
    }
    o.detail = str(maps) + " Hopf maps across " + str(cases.size() + 1) + " fixture pairs";
    return o;
}

// ------------------------------------------------------------ 8

Outcome double_mutations() {
    Outcome o;
    PrimeField f(7);
    int total = 0, caught = 0, still_hopf = 0;
    for (const auto& G : {cyclic_group(2), cyclic_group(3), klein_group()}) {
        auto DG = make_bicrossed(group_double_pair(G, f));
        auto id = double_data_from_quadruple(decompose_psi(identity_map(DG.E), DG, DG));
        auto base = check_double_morphism_data(id, G, G, f);
        o.require(base.valid(), "identity data of D(k[G]), |G|=" + str(G.order()) + ": " + base.report.str());
        o.require(base.psi && *base.psi == identity_map(DG.E), "identity data do not assemble to the identity");
        using Table = std::vector<std::vector<Fp>>;
        auto mutate = [&](Table DoubleMorphismData<PrimeField>::*table) {
            auto& rows = id.*table;
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t j = 0; j < rows[i].size(); ++j)
                    for (const auto& x : f.elements()) {
                        if (x == rows[i][j]) continue;
                        auto d = id;
                        (d.*table)[i][j] = x;
                        ++total;
                        auto rep = check_double_conditions(d, G, G, f);
                        if (!rep.ok()) {
                            ++caught;
                            continue;
                        }
                        auto psi = double_morphism_map(d, G, G, DG.E, DG.E);
                        bool hopf = is_hopf_map(psi);
                        still_hopf += hopf;
                        o.require(hopf, "uncaught mutant does not assemble to a Hopf map");
                    }
        };
        mutate(&DoubleMorphismData<PrimeField>::lambda);
        mutate(&DoubleMorphismData<PrimeField>::omega);
        mutate(&DoubleMorphismData<PrimeField>::theta);
    }
    o.require(caught * 100 >= total * 95, "only " + str(caught) + "/" + str(total) + " mutants caught");
    o.detail = str(caught) + "/" + str(total) + " single-entry mutants caught (" + str(caught * 100 / std::max(total, 1)) +
               "%); the other " + str(still_hopf) + " assemble to verified Hopf maps";
    return o;
}

// ------------------------------------------------------------ 9

Outcome klein() {
    Outcome o;
    for (std::uint32_t p : {3u, 5u}) {
        PrimeField f(p);
        auto ks = klein_survey(f);
        std::string tag = "F_" + str(p);
        o.require(ks.pairs.size() == 4, tag + ": " + str(ks.pairs.size()) + " pairs");
        if (ks.pairs.size() != 4) continue;
        auto minus = f.from_int(-1);
        // a, b, ab acting on x (and on gx): the trivial table, then the three sign patterns
        std::vector<std::vector<Fp>> signs{{f.one(), f.one(), f.one()},
                                           {f.one(), minus, minus},
                                           {minus, f.one(), minus},
                                           {minus, minus, f.one()}};
        auto A = share(sweedler_h4(f));
        auto T = tensor_hopf(*A, group_algebra(klein_group(), f));
        for (int k = 0; k < 4; ++k) {
            const auto& mp = ks.pairs[k];
            o.require(mp.right_trivial(), tag + ": right action not trivial");
            for (int h = 1; h < 4; ++h) {
                o.require(diagonal_coefficient(mp, h, 1) == f.one(), tag + ": group elements act on g");
                o.require(diagonal_coefficient(mp, h, 2) == signs[k][h - 1] && diagonal_coefficient(mp, h, 3) == signs[k][h - 1],
                          tag + ": table " + str(k) + " differs");
            }
            const auto& w = ks.isomorphisms[k];
            o.require(w && is_bijective(*w) && is_hopf_map(*w) && w->cod->same_structure(T),
                      tag + ": pair " + str(k) + " has no verified isomorphism onto H4 (x) k[C2 x C2]");
        }
    }
    o.detail = "4 pairs over F_3 and F_5, each product isomorphic to H4 (x) k[C2 x C2] via a verified witness";
    return o;
}

// ------------------------------------------------------------ 10

Outcome factorization() {
    Outcome o;
    auto fixtures = base_fixtures();
    std::vector<Fixture> all = fixtures;
    for (const auto& fx : fixtures) all.push_back({"mirror of " + fx.name, mirror_pair(fx.pair).pair});
    PrimeField f3(3);
    for (const auto& mp : klein_survey(f3).pairs) all.push_back({"Klein pair", mp});
    for (const auto& fx : all) {
        auto E = share(bicrossed_product(fx.pair));
        auto fac = factorize(E, inclusion_a(fx.pair, E), inclusion_h(fx.pair, E));
        o.require(fac.pair.right == fx.pair.right && fac.pair.left == fx.pair.left, fx.name + ": tables differ");
        o.require(fac.pair.A->same_structure(*fx.pair.A) && fac.pair.H->same_structure(*fx.pair.H), fx.name + ": factors differ");
        o.require(is_hopf_map(fac.iso) && is_bijective(fac.iso), fx.name + ": multiplication map not an isomorphism");
    }
    o.detail = str(all.size()) + " matched pairs reproduced entry for entry";
    return o;
}

} // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"axiom closure of bicrossed products", axiom_closure},
        {"matched pair census for (H4, k[C_n])", census},
        {"isomorphism class counts", class_counts},
        {"criterion versus brute-force isomorphism search", dual_certification},
        {"automorphism group orders", automorphism_groups},
        {"CoZ1 sizes", coz1_sizes},
        {"morphism decomposition round trips", morphism_round_trips},
        {"double morphism data and mutations", double_mutations},
        {"Klein four-group survey", klein},
        {"factorization round trip", factorization},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail << " ["
                  << millis_since(t0) << " ms]\n";
        for (const auto& p : o.problems) std::cout << "    " << p << "\n";
        std::cout.flush();
    }
    return failures ? 1 : 0;
}
