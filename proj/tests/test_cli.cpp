#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopf/io.hpp"

using namespace hopf;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run hopf_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(HOPF_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const std::string& name) { return std::string(HOPF_SAMPLES_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("hopf_cli_" + std::to_string(getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string tmp(const std::string& name) const { return (dir / name).string(); }
    fs::path dir;
};

} // namespace

TEST(CliGolden, ReportsMatchStoredOutput) {
    struct Case {
        std::string args, golden;
        int code;
    };
    std::vector<Case> cases{
        {"verify " + sample("h4_f3.json"), "verify_h4_f3.txt", 0},
        {"verify " + sample("h4_f3_broken.json"), "verify_h4_f3_broken.txt", 1},
        {"classify h4n --n 3 --field 7", "classify_h4n_3_f7.txt", 0},
        {"classify h4n --n 8 --field 17", "classify_h4n_8_f17.txt", 0},
        {"aut h4n --n 3 --t 1 --field 7", "aut_h4n_3_1_f7.txt", 0},
        {"klein --field 5", "klein_f5.txt", 0},
        {"double-hom C2 C2 --data " + sample("double_c2_broken.json"), "double_c2_broken.txt", 1},
    };
    for (const auto& c : cases) {
        auto r = hopf_cli(c.args);
        EXPECT_EQ(r.code, c.code) << c.args;
        EXPECT_EQ(r.out, slurp(sample("golden/" + c.golden))) << c.args;
    }
}

TEST(CliGolden, HeadlineLines) {
    auto v = hopf_cli("verify " + sample("h4_f3.json"));
    EXPECT_EQ(v.out, "algebra: ok, coalgebra: ok, bialgebra: ok, antipode: ok\n");
    auto c = hopf_cli("classify h4n --n 3 --field 7");
    EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "nu=3, classes=2, representatives=[1, xi]");
    auto a = hopf_cli("aut h4n --n 3 --t 1 --field 7");
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "structure = k* x U_1(Z_3), order = 6");
}

TEST(CliExitCodes, UsageAndInputErrors) {
    auto bad = hopf_cli("verify " + sample("malformed.json"), true);
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("malformed JSON at byte"), std::string::npos) << bad.out;
    EXPECT_NE(bad.out.find("line 2"), std::string::npos) << bad.out;

    EXPECT_EQ(hopf_cli("verify " + sample("h4_f3.json") + " --frobnicate").code, 2);
    EXPECT_EQ(hopf_cli("verify /nonexistent/file.json").code, 2);
    EXPECT_EQ(hopf_cli("").code, 2);
    EXPECT_EQ(hopf_cli("classify h4n --n 3").code, 2);         // --field missing
    EXPECT_EQ(hopf_cli("classify h4n --n 3 --field 4").code, 2); // not prime
    EXPECT_EQ(hopf_cli("aut h4n --n 3 --t 5 --field 7").code, 2);
    EXPECT_EQ(hopf_cli("export nonsense --out /dev/null").code, 2);

    // H4 over F_3 against a pair over F_7
    auto mm = hopf_cli("morphisms " + sample("h4n_pair_3_1_f7.json") + " " + sample("klein_pair_1_f3.json"), true);
    EXPECT_EQ(mm.code, 2);
    EXPECT_NE(mm.out.find("field mismatch"), std::string::npos);

    auto broken = hopf_cli("verify " + sample("h4_f3_broken.json"));
    EXPECT_EQ(broken.code, 1);
    EXPECT_NE(broken.out.find("first failing axiom: algebra"), std::string::npos);
}

TEST_F(CliTest, ExportMatchesSamplesAndLibrary) {
    struct Case {
        std::string args, sample_name;
        int dim;
    };
    // D(k[C2]) has dimension |C2|^2 = 4
    std::vector<Case> cases{{"export h4 --field 3", "h4_f3.json", 4},
                            {"export h4n --n 3 --t 1 --field 7", "h4n_3_1_f7.json", 12},
                            {"export double-group --group C2 --field 3", "double_c2_f3.json", 4}};
    for (const auto& c : cases) {
        auto path = tmp(c.sample_name);
        auto r = hopf_cli(c.args + " --out " + path);
        ASSERT_EQ(r.code, 0) << c.args << "\n" << r.out;
        EXPECT_NE(r.out.find("round trip ok"), std::string::npos);
        EXPECT_EQ(slurp(path), slurp(sample(c.sample_name))) << c.args;
        auto j = io::read_json_file(path);
        EXPECT_EQ(j["dim"], c.dim);
    }
    PrimeField f3(3), f7(7);
    auto h4 = io::hopf_from_json(f3, io::read_json_file(tmp("h4_f3.json")));
    EXPECT_TRUE(h4.same_structure(sweedler_h4(f3)));
    EXPECT_EQ(h4.labels(), sweedler_h4(f3).labels());
    auto h12 = io::hopf_from_json(f7, io::read_json_file(tmp("h4n_3_1_f7.json")));
    EXPECT_TRUE(h12.same_structure(build_h4n(make_h4n_spec(3, 1, f7))));
    auto d = io::hopf_from_json(f3, io::read_json_file(tmp("double_c2_f3.json")));
    EXPECT_TRUE(d.same_structure(bicrossed_product(group_double_pair(cyclic_group(2), f3))));

    for (int k = 0; k < 4; ++k) {
        auto path = tmp("klein" + std::to_string(k) + ".json");
        auto r = hopf_cli("export klein --field 3 --index " + std::to_string(k) + " --out " + path);
        ASSERT_EQ(r.code, 0) << r.out;
        EXPECT_EQ(io::read_json_file(path)["dim"], 16);
    }
    EXPECT_EQ(hopf_cli("export klein --field 3 --index 4 --out " + tmp("k.json")).code, 2);
}

TEST_F(CliTest, BicrossedThenFactorizeReproducesTheTables) {
    auto E = tmp("E.json"), facdir = tmp("factors"), back = tmp("back.json");
    auto r = hopf_cli("bicrossed " + sample("h4n_pair_3_1_f7.json") + " --out " + E + " --factors " + facdir);
    ASSERT_EQ(r.code, 0) << r.out;
    auto f = hopf_cli("factorize " + E + " --a-factor " + facdir + "/A.json --a-image " + facdir + "/i.json --h-factor " +
                      facdir + "/H.json --h-image " + facdir + "/j.json --out " + back);
    ASSERT_EQ(f.code, 0) << f.out;
    auto a = io::read_json_file(sample("h4n_pair_3_1_f7.json")), b = io::read_json_file(back);
    EXPECT_EQ(a["left_action"], b["left_action"]);
    EXPECT_EQ(a["right_action"], b["right_action"]);

    // an inclusion checked against the wrong algebra is refused by hash
    auto wrong = hopf_cli("factorize " + E + " --a-factor " + facdir + "/H.json --a-image " + facdir + "/i.json --h-factor " +
                          facdir + "/H.json --h-image " + facdir + "/j.json");
    EXPECT_EQ(wrong.code, 2);
}

TEST_F(CliTest, MorphismsAndCoz1) {
    auto m = hopf_cli("morphisms " + sample("h4n_pair_3_1_f7.json") + " " + sample("h4n_pair_3_2_f7.json") + " --out " +
                      tmp("w.json"));
    ASSERT_EQ(m.code, 0);
    EXPECT_EQ(m.out.substr(0, m.out.find('\n')), "morphisms = 12, isomorphisms = 6");
    auto w = io::read_json_file(tmp("w.json"));
    ASSERT_EQ(w.size(), 12u);
    int bijective = 0;
    for (const auto& x : w) {
        for (const char* k : {"u", "p", "r", "v", "psi"}) EXPECT_TRUE(x.contains(k));
        bijective += x["bijective"].get<bool>();
    }
    EXPECT_EQ(bijective, 6);
    auto iso = hopf_cli("morphisms " + sample("h4n_pair_3_1_f7.json") + " " + sample("h4n_pair_3_2_f7.json") + " --isomorphisms");
    EXPECT_EQ(iso.out.substr(0, iso.out.find('\n')), "morphisms = 6, isomorphisms = 6");
    // determinism
    EXPECT_EQ(hopf_cli("morphisms " + sample("h4n_pair_3_1_f7.json") + " " + sample("h4n_pair_3_2_f7.json")).out,
              hopf_cli("morphisms " + sample("h4n_pair_3_1_f7.json") + " " + sample("h4n_pair_3_2_f7.json")).out);

    auto s = hopf_cli("morphisms " + sample("h4n_pair_3_1_f7.json") + " " + sample("h4n_pair_3_1_f7.json") + " --stabilize-a");
    EXPECT_EQ(s.code, 0);

    ASSERT_EQ(hopf_cli("bicrossed " + sample("h4n_pair_3_1_f7.json") + " --factors " + tmp("fac")).code, 0);
    auto c = hopf_cli("coz1 " + tmp("fac") + "/H.json " + tmp("fac") + "/A.json");
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "order = 4");
}

TEST(CliJson, MachineReadableReports) {
    auto c = hopf_cli("--json classify h4n --n 9 --field 19");
    ASSERT_EQ(c.code, 0);
    auto j = json::parse(c.out);
    EXPECT_EQ(j["nu"], 9);
    EXPECT_EQ(j["classes"], 3);
    EXPECT_EQ(j["representatives"], json({"1", "xi", "xi^3"}));
    auto a = json::parse(hopf_cli("aut h4n --n 4 --t 1 --field 5 --json").out);
    EXPECT_EQ(a["structure"], "k* x U~_1(Z_4)");
    EXPECT_EQ(a["order"], 8);
    auto v = json::parse(hopf_cli("verify " + sample("h4_f3_broken.json") + " --json").out);
    EXPECT_FALSE(v["ok"].get<bool>());
}

TEST(CliCertify, BruteForceAgreesWithTheCriterion) {
    auto r = hopf_cli("classify h4n --n 4 --field 5 --certify --threads 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("brute force agrees on 16/16 pairs"), std::string::npos);
    EXPECT_EQ(r.out, hopf_cli("classify h4n --n 4 --field 5 --certify --threads 1").out);
}

TEST(CliDouble, GroupDoubleAndData) {
    auto d = hopf_cli("double group " + sample("groups/c3.json") + " --field 7");
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("dim = 9"), std::string::npos);
    auto ok = hopf_cli("double-hom " + sample("groups/c2.json") + " " + sample("groups/c2.json") + " --data " +
                       sample("double_c2_identity.json"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("psi: Hopf map, bijective"), std::string::npos);
}

// ------------------------------------------------------------ serialization in process

TEST(Serialization, Scalars) {
    PrimeField f(7);
    EXPECT_EQ(io::scalar_from_json(f, json(-1), "x"), f.from_int(6));
    EXPECT_EQ(io::scalar_from_json(f, json("1/2"), "x"), f.from_int(4));
    EXPECT_THROW(io::scalar_from_json(f, json("1/7"), "x"), io::format_error);
    EXPECT_THROW(io::scalar_from_json(f, json(1.5), "x"), io::format_error);

    RationalField q;
    EXPECT_EQ(io::scalar_json(Rational(-3, 6)), json("-1/2"));
    EXPECT_EQ(io::scalar_json(Rational(4)), json(4));
    EXPECT_EQ(io::scalar_from_json(q, json("6/-4"), "x"), Rational(-3, 2));
    EXPECT_THROW(io::scalar_from_json(q, json("1/0"), "x"), io::format_error);
    EXPECT_THROW(io::scalar_from_json(q, json("abc"), "x"), io::format_error);

    CyclotomicField c(8);
    auto z = c.zeta();
    auto x = z * z * z + c.from_rational(Rational(1, 3));
    EXPECT_EQ(io::scalar_from_json(c, io::scalar_json(x), "x"), x);
    // z^4 = -1 in Q(z_8): longer coefficient arrays are reduced
    EXPECT_EQ(io::scalar_from_json(c, json({0, 0, 0, 0, 1}), "x"), c.from_int(-1));
}

TEST(Serialization, FieldSpecs) {
    for (auto s : {FieldSpec::prime(7), FieldSpec::rationals(), FieldSpec::cyclotomic(8)})
        EXPECT_EQ(io::field_from_json(io::to_json(s)), s);
    EXPECT_EQ(io::to_json(FieldSpec::prime(7)).dump(), R"({"kind":"prime","p":7})");
    EXPECT_EQ(io::to_json(FieldSpec::cyclotomic(8)).dump(), R"({"kind":"cyclotomic","m":8})");
    EXPECT_THROW(io::field_from_json(json{{"kind", "prime"}, {"p", 2}}), io::format_error);
    EXPECT_THROW(io::field_from_json(json{{"kind", "padic"}}), io::format_error);
}

TEST(Serialization, AlgebrasAndPairsRoundTripOverEveryField) {
    auto check = [](const auto& f) {
        auto H = sweedler_h4(f);
        auto back = io::hopf_from_json(f, json::parse(io::to_json(H).dump()));
        EXPECT_TRUE(back.same_structure(H));
        EXPECT_EQ(io::structure_hash(back), io::structure_hash(H));
        auto mp = h4_cn_pair(2, f.from_int(-1), f);
        auto mb = io::matched_pair_from_json(f, io::to_json(mp));
        EXPECT_EQ(mb, mp);
        EXPECT_TRUE(mb.A->same_structure(*mp.A));
    };
    check(PrimeField(5));
    check(RationalField{});
    check(CyclotomicField(12));
}

TEST(Serialization, RejectsBadShapesAndForeignMaps) {
    PrimeField f(5);
    auto j = io::to_json(sweedler_h4(f));
    auto short_unit = j;
    short_unit["unit"] = json({1, 0});
    EXPECT_THROW(io::hopf_from_json(f, short_unit), io::format_error);
    auto no_mult = j;
    no_mult.erase("mult");
    EXPECT_THROW(io::hopf_from_json(f, no_mult), io::format_error);
    EXPECT_THROW(io::hopf_from_json(PrimeField(7), j), field_mismatch);

    auto A = share(sweedler_h4(f));
    auto K = share(group_algebra(cyclic_group(4), f));
    auto m = io::to_json(identity_map(A));
    EXPECT_EQ(io::linmap_from_json(m, A, A), identity_map(A));
    EXPECT_THROW(io::linmap_from_json(m, K, K), io::format_error);

    EXPECT_THROW(io::group_from_json(json{{"order", 2}, {"table", {{0, 1}, {1, 1}}}}), io::format_error);
    EXPECT_EQ(io::group_from_json(io::to_json(symmetric_group(3))), symmetric_group(3));
}

TEST(Serialization, DoubleData) {
    PrimeField f(3);
    auto G = cyclic_group(2);
    auto d = io::double_data_from_json(f, io::read_json_file(sample("double_c2_identity.json")), 2, 2);
    auto DG = make_bicrossed(group_double_pair(G, f));
    EXPECT_EQ(d, double_data_from_quadruple(identity_quadruple(DG)));
    EXPECT_EQ(io::double_data_from_json(f, io::to_json(d), 2, 2), d);
    EXPECT_THROW(io::double_data_from_json(f, io::to_json(d), 3, 2), io::format_error);
}
