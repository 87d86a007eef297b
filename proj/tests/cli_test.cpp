#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rees_cli.hpp"

namespace {

struct result {
    int code;
    std::string out, err;
};

result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = rees::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--out", "json"});
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST(Cli, SemigroupDuplication) {
    auto j = run_json({"sgp", "dup", "--sgp", "<2,3>", "--ideal", "3", "--m", "5"});
    EXPECT_EQ(j["semigroup"]["literal"], "<4,6,11>");
    EXPECT_EQ(j["semigroup"]["generators"], nlohmann::json::parse("[4,6,11]"));
    EXPECT_EQ(j["semigroup"]["gaps"], nlohmann::json::parse("[1,2,3,5,7,9,13]"));
    EXPECT_EQ(j["semigroup"]["symmetric"], true);
    EXPECT_EQ(j["semigroup"]["type"], 1);
    auto text = run({"sgp", "dup", "--sgp", "<2,3>", "--ideal", "3", "--m", "5"});
    EXPECT_EQ(text.code, 0);
    EXPECT_EQ(text.out.substr(0, 9), "<4,6,11>\n");
    EXPECT_NE(text.out.find("symmetric: true"), std::string::npos);
}

TEST(Cli, SemigroupInfoKeys) {
    auto info = run({"--out", "json", "sgp", "info", "--sgp", "<3,4,5>"});
    auto j = nlohmann::ordered_json::parse(info.out);
    std::vector<std::string> keys;
    for (auto it = j["semigroup"].begin(); it != j["semigroup"].end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"literal", "generators", "frobenius", "gaps", "genus", "type", "symmetric"}));
    EXPECT_EQ(j["semigroup"]["type"], 2);
    EXPECT_EQ(run_json({"sgp", "apery", "--sgp", "<4,6,11>"})["apery"], nlohmann::json::parse("[0,6,11,17]"));
    EXPECT_EQ(run_json({"sgp", "type", "--sgp", "<2,3>", "--ideal", "3"})["type"], 1);
    auto k = run_json({"sgp", "canonical", "--sgp", "<2,3>"})["canonical"].get<std::string>();
    EXPECT_EQ(rees::parse_ideal(k), rees::canonical_ideal(rees::parse_semigroup("<2,3>")));
}

TEST(Cli, RingMultiplication) {
    auto r = run({"ring", "mul", "--ring", "zmod:8", "--ideal", "2", "--a", "0", "--b", "0", "3+2t", "3+6t"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1\n");
    auto j = run_json({"ring", "mul", "--ring", "zmod:8", "--ideal", "2", "--a", "0", "--b", "0", "3+2t", "3+6t"});
    EXPECT_EQ(j["ctx"]["ring"], "zmod:8");
    EXPECT_EQ(j["op"], "mul");
    EXPECT_EQ(j["args"], nlohmann::json::parse(R"(["3+2t","3+6t"])"));
    EXPECT_EQ(j["result"]["r"], "1");
    EXPECT_EQ(j["result"]["i"], "0");
}

TEST(Cli, RingOperations) {
    auto base = std::vector<std::string>{"--ring", "zmod:8", "--ideal", "2"};
    auto with = [&](std::vector<std::string> head, std::vector<std::string> tail) {
        head.insert(head.end(), base.begin(), base.end());
        head.insert(head.end(), tail.begin(), tail.end());
        return run(head);
    };
    EXPECT_EQ(with({"ring", "invert"}, {"3+2t"}).out, "3+6t\n");
    EXPECT_EQ(with({"ring", "unit"}, {"2+2t"}).out, "false\n");
    EXPECT_EQ(with({"ring", "idealization"}, {"3+2t"}).out, "(3, 2)\n");
    EXPECT_EQ(with({"ring", "duplication", "--a", "-1"}, {"3+2t"}).out, "(3, 5)\n");

    auto rz = run({"ring", "rationalize", "--ring", "int", "--ideal", "1", "--b", "6", "2+5t", "1+t"});
    EXPECT_EQ(rz.code, 0) << rz.err;
    EXPECT_NE(rz.out.find(")/(7)"), std::string::npos) << rz.out;

    auto series = run({"ring", "mul", "--ring", "series:q", "--sgp", "<2,3>", "--ideal", "3", "--b=-X^5",
                       "(X^2)+(X^3)t", "(X^3)t"});
    EXPECT_EQ(series.code, 0) << series.err;
    EXPECT_EQ(series.out, "(X^11)+(X^5)t\n");  // t^2 = X^5
    auto fp = run({"ring", "add", "--ring", "series:fp:5", "--sgp", "<2,3>", "X^2+3*X^3", "4*X^3"});
    EXPECT_EQ(fp.out, "X^2+2*X^3\n");
    auto phi_pair = run({"ring", "parse", "--ring", "series:q", "--sgp", "<2,3>", "X^2+1/2*X^4+(-X^3)t"});
    EXPECT_EQ(phi_pair.out, "(X^2+1/2*X^4)+(-X^3)t\n");
}

TEST(Cli, DomainErrorsAreStructured) {
    auto r = run({"ring", "invert", "--ring", "zmod:8", "--ideal", "2", "2+2t"});
    EXPECT_EQ(r.code, 1);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["error"]["kind"], "NotAUnit");
    EXPECT_FALSE(j["error"]["message"].get<std::string>().empty());

    auto d = run({"sgp", "dup", "--sgp", "<2,3>", "--ideal", "3", "--m", "4"});
    EXPECT_EQ(d.code, 1);
    auto parse = run({"sgp", "info", "--sgp", "<2,x>"});
    EXPECT_EQ(parse.code, 1);
    EXPECT_EQ(nlohmann::json::parse(parse.out)["error"]["kind"], "ParseError");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"sgp", "info", "--bogus"}).code, 2);
    EXPECT_EQ(run({"--out", "xml", "sgp", "info"}).code, 2);
    EXPECT_EQ(run({"sgp", "warp"}).code, 2);
    EXPECT_EQ(run({"ring", "mul", "--ring", "zmod:8", "3"}).code, 2);
    EXPECT_EQ(run({"ring", "mul", "--ring", "gf:4", "1", "1"}).code, 2);
    auto r = run({"sgp", "info", "--bogus"});
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, InvariantsHilbert) {
    auto j = run_json({"invariants", "hilbert", "--sgp", "<2,3>", "--ideal", "3", "--nmax", "4"});
    EXPECT_EQ(j["hilbert"]["rows"], nlohmann::json::parse(
                                        R"([{"n":0,"H":1},{"n":1,"H":3},{"n":2,"H":4},{"n":3,"H":4},{"n":4,"H":4}])"));
    auto o = run_json({"invariants", "hilbert", "--sgp", "<2,3>", "--ideal", "3", "--nmax", "4", "--oracle",
                       "--b=-X^5", "--field", "fp:2"});
    EXPECT_EQ(o["agree"], true);
    EXPECT_EQ(o["oracle"]["rows"], j["hilbert"]["rows"]);
    EXPECT_EQ(run({"invariants", "gorenstein", "--sgp", "<2,3>", "--ideal", "3"}).out, "true\n");
    auto t = rees::numerical_semigroup::from_generators({3, 4, 5});
    const int dup_type = rees::duplication(t, rees::relative_ideal::maximal(t), 3).semigroup.type();
    EXPECT_EQ(run({"invariants", "type", "--sgp", "<3,4,5>", "--ideal", "3,4,5"}).out, std::to_string(dup_type) + "\n");
    EXPECT_EQ(run({"invariants", "embdim", "--sgp", "<3,4,5>", "--ideal", "3,4,5"}).out, "6\n");
}

TEST(Cli, Fibers) {
    auto r = run({"fibers", "--a", "0", "--b", "1", "--pmax", "7"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "p,disc,splitting,quadratic,family\n"
                     "2,-4,double-root,1,1\n"
                     "3,-4,irreducible,1,1\n"
                     "5,-4,two-distinct-roots,2,<=2\n"
                     "7,-4,irreducible,1,1\n");
    auto d = run({"fibers", "--a", "-1", "--b", "0", "--pmax", "5", "--duplication", "--ideal", "6,9"});
    EXPECT_EQ(d.out, "p,disc,splitting,quadratic,family\n"
                     "2,1,two-distinct-roots,2,2\n"
                     "3,1,two-distinct-roots,2,1\n"
                     "5,1,two-distinct-roots,2,2\n");
}

TEST(Cli, DeterministicJson) {
    std::vector<std::vector<std::string>> commands{
        {"--out", "json", "sgp", "dup", "--sgp", "<2,3>", "--ideal", "3", "--m", "5"},
        {"--out", "json", "invariants", "hilbert", "--sgp", "<3,4,5>", "--ideal", "3,4,5", "--oracle", "--nmax", "4"},
        {"--out", "json", "verify", "--suite", "worked-example"},
        {"--out", "json", "fibers", "--a", "0", "--b", "1", "--pmax", "50"},
    };
    for (const auto& c : commands) {
        auto a = run(c), b = run(c);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, ConfigAndEnvironment) {
    const std::string path = ::testing::TempDir() + "rees_cli_test.cfg";
    {
        std::ofstream f(path);
        f << "# settings\nprecision = 20\npmax=5\n";
    }
    auto j = run_json({"--config", path, "ring", "mul", "--ring", "series:q", "--sgp", "<2,3>", "X^2", "X^3"});
    EXPECT_EQ(j["ctx"]["precision"], 20);
    auto flag = run_json({"--config", path, "--precision", "30", "ring", "mul", "--ring", "series:q", "X^2", "X^3"});
    EXPECT_EQ(flag["ctx"]["precision"], 30);
    auto f = run_json({"--config", path, "fibers", "--a", "0", "--b", "1"});
    EXPECT_EQ(f["rows"].size(), 3u);

    ::setenv("REES_PRECISION", "40", 1);
    auto env = run_json({"ring", "mul", "--ring", "series:q", "X^2", "X^3"});
    EXPECT_EQ(env["ctx"]["precision"], 40);
    ::unsetenv("REES_PRECISION");
    EXPECT_EQ(run_json({"ring", "mul", "--ring", "series:q", "X^2", "X^3"})["ctx"]["precision"], 64);

    {
        std::ofstream f2(path);
        f2 << "colour=blue\n";
    }
    EXPECT_EQ(run({"--config", path, "sgp", "info"}).code, 2);
    std::remove(path.c_str());
}

TEST(Cli, Verify) {
    auto r = run({"verify", "--suite", "worked-example"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[PASS]  1 worked-example"), std::string::npos) << r.out;
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 1);
}
