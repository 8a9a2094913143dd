#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hopfforge/liebialg.hpp"
#include "hopfforge/serialization.hpp"

namespace fs = std::filesystem;
namespace lb = hopfforge::liebialg;
using hopfforge::Json;
using hopfforge::Rational;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

class Cli : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override
    {
        dir = fs::temp_directory_path() /
              ("hopfforge_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
        write("b2.json", lb::serialize(lb::examples::b2()));
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string path(const std::string& name) const { return (dir / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
    std::string read(const std::string& name) const
    {
        std::ifstream in(path(name));
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    CliResult run(const std::string& args) const
    {
        std::string cmd = std::string(HOPFFORGE_CLI) + " " + args + " > " + path("stdout.txt") + " 2>&1";
        int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read("stdout.txt")};
    }
};

} // namespace

TEST_F(Cli, CheckExitCodes)
{
    EXPECT_EQ(run("check " + path("b2.json")).code, 0);

    lb::LieBialgebra bad(3, {"A", "B", "C"});
    bad.set_bracket(0, 1, 1, Rational(1));
    bad.set_bracket(0, 2, 2, Rational(1));
    bad.set_bracket(1, 2, 0, Rational(1));
    write("bad.json", lb::serialize(bad));
    CliResult r = run("check " + path("bad.json"));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL Jacobi"), std::string::npos);
    EXPECT_NE(r.out.find("(A,B,C)"), std::string::npos);

    write("empty.json", "");
    EXPECT_EQ(run("check " + path("empty.json")).code, 2);
    EXPECT_EQ(run("check " + path("missing.json")).code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST_F(Cli, AssociatorFiles)
{
    ASSERT_EQ(run("associator --degree 2 --out " + path("a2.json")).code, 0);
    Json a2 = Json::parse(read("a2.json"));
    int nonzero = 0;
    for (const auto& deg : a2["coefficients"])
        for (const auto& e : deg["entries"])
            if (e["num"] != 0)
                ++nonzero;
    EXPECT_EQ(nonzero, 1);

    ASSERT_EQ(run("associator --degree 1 --out " + path("a1.json")).code, 0);
    Json a1 = Json::parse(read("a1.json"));
    for (const auto& deg : a1["coefficients"])
        for (const auto& e : deg["entries"])
            EXPECT_EQ(e["num"], 0);

    ASSERT_EQ(run("associator --degree 4 --out " + path("a4.json")).code, 0);
    ASSERT_EQ(run("associator --degree 4 --out " + path("a4b.json")).code, 0);
    EXPECT_EQ(read("a4.json"), read("a4b.json"));

    EXPECT_EQ(run("associator --degree 9").code, 2);
}

TEST_F(Cli, QuantizeVerifyTwist)
{
    ASSERT_EQ(run("associator --degree 2 --out " + path("a2.json")).code, 0);
    write("ab.json", lb::serialize(lb::examples::abelian(2)));
    ASSERT_EQ(run("quantize -b " + path("ab.json") + " -a " + path("a2.json") + " -N 2 -o " + path("hab.json")).code, 0);
    Json hab = Json::parse(read("hab.json"));
    for (const auto& e : hab["tables"]["coproduct"])
        for (const auto& t : e["value"])
            for (const auto& c : t["coeff"])
                EXPECT_EQ(c[0], 0);

    ASSERT_EQ(run("quantize -b " + path("b2.json") + " -a " + path("a2.json") + " -N 1 -o " + path("h.json")).code, 0);
    CliResult v = run("verify --hopf " + path("h.json") + " --test-degree 1");
    EXPECT_EQ(v.code, 0) << v.out;
    bool half_term = false;
    Json hj = Json::parse(read("h.json"));
    for (const auto& e : hj["tables"]["coproduct"])
        if (e["monomial"] == Json::parse("[1]"))
            for (const auto& t : e["value"])
                if (t["left"] == Json::parse("[1]") && t["right"] == Json::parse("[0]"))
                    half_term = t["coeff"] == Json::parse("[[1, 1, 2]]");
    EXPECT_TRUE(half_term);

    Json tampered = Json::parse(read("h.json"));
    tampered["bialgebra_hash"] = "ffffffffffffffff";
    write("bad_h.json", tampered.dump());
    EXPECT_EQ(run("verify --hopf " + path("bad_h.json")).code, 2);
    EXPECT_EQ(run("verify --hopf " + path("h.json") + " --test-degree 3").code, 2);
    EXPECT_EQ(run("quantize -b " + path("b2.json") + " -a " + path("a2.json") + " -N 3").code, 2);

    write("j0.json", hopfforge::dump_file(lb::twist_to_json(lb::zero_matrix(2, 2))));
    ASSERT_EQ(run("twist -b " + path("b2.json") + " -j " + path("j0.json") + " -a " + path("a2.json") + " -N 2 -o " +
                  path("t.json"))
                  .code,
              0);
    Json t = Json::parse(read("t.json"));
    EXPECT_EQ(t["J"], Json::parse(R"([{"coeff": [[0, 1, 1]], "left": [], "right": []}])"));
    Json wrong = Json::parse(read("j0.json"));
    wrong["bialgebra_hash"] = "0";
    write("j_wrong.json", wrong.dump());
    EXPECT_EQ(run("twist -b " + path("b2.json") + " -j " + path("j_wrong.json") + " -a " + path("a2.json") + " -N 1").code, 2);
}
