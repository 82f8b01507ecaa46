#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "knotadj/cli.hpp"

using namespace knotadj;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json::Json json() const { return json::Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(SAMPLE_DATA) + "/" + name; }

class TempDir {
   public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("knotadj_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& text) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    fs::path path() const { return path_; }

   private:
    fs::path path_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, InvariantsTrefoil) {
    const Outcome r = run({"invariants", "braid 2: 1 1 1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["alexander_text"], "1 - t + t^2");
    EXPECT_EQ(j["signature"], -2);
    EXPECT_EQ(j["determinant"], 3);
    EXPECT_EQ(j["fibered_status"]["status"], "FIBERED");
    EXPECT_EQ(j["alpha"]["upper"], 0);
}

TEST(Cli, InvariantsTableNameAndPd) {
    const Outcome t = run({"invariants", "4_1"});
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_EQ(t.json()["alexander_text"], "1 - 3*t + t^2");
    const Outcome p = run({"invariants", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "--name", "trefoil"});
    ASSERT_EQ(p.code, 0) << p.err;
    EXPECT_EQ(p.json()["id"], "trefoil");
    EXPECT_EQ(p.json()["alexander_text"], "1 - t + t^2");
}

TEST(Cli, InvariantsMatrixFile) {
    const Outcome r = run({"invariants", sample("trefoil_extended.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["id"], "trefoil_extended");
    EXPECT_EQ(r.json()["alexander_text"], "1 - t + t^2");
}

TEST(Cli, InvariantsErrors) {
    EXPECT_EQ(run({"invariants", "braid 2: 1 -1"}).code, 2);
    const Outcome r = run({"invariants", "no_such_knot"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("no_such_knot"), std::string::npos);
    const Outcome cap = run({"--max-crossings", "2", "invariants", "braid 2: 1 1 1"});
    EXPECT_EQ(cap.code, 2);
    EXPECT_NE(cap.err.find("--max-crossings"), std::string::npos) << cap.err;
}

TEST(Cli, VerifyBadPresentationFails) {
    const Outcome r = run({"verify", sample("bad_presentation.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["verdict"], "FAIL");
}

TEST(Cli, VerifyTrefoilToUnknot) {
    const Outcome r = run({"verify", sample("trefoil_to_unknot.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["verdict"], "PASS");
    EXPECT_EQ(j["records"].size(), 3u);
    EXPECT_EQ(j["fibering_verdict"]["verdict"], "INAPPLICABLE");
}

TEST(Cli, VerifyInputErrorsHaveContext) {
    TempDir d;
    const Outcome syntax = run({"verify", d.file("broken.json", "{\n  \"base\": [1,\n}")});
    EXPECT_EQ(syntax.code, 2);
    EXPECT_NE(syntax.err.find("broken.json: line 3"), std::string::npos) << syntax.err;

    const Outcome missing = run({"verify", d.file("nobase.json", R"({"twist_sites": [], "target": "unknot", "n": 1})")});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("base"), std::string::npos) << missing.err;

    const Outcome zero = run({"verify", d.file("zero.json", R"({"base": "3_1", "twist_sites": [{"crossings": [0], "q": 1}],
        "target": "unknot", "n": 1})")});
    EXPECT_EQ(zero.code, 2);
    EXPECT_NE(zero.err.find("twist_sites/0/crossings/0"), std::string::npos) << zero.err;
}

TEST(Cli, BracketFour) {
    const Outcome r = run({"bracket", "--n", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["bracket"], "K@0/1 - K'@0/1");
    EXPECT_EQ(j["binomial_sum"], -1);
    EXPECT_EQ(j["matches_expansion"], true);
}

TEST(Cli, BracketErrors) {
    EXPECT_EQ(run({"bracket", "--n", "0"}).code, 2);
    EXPECT_EQ(run({"bracket", "--n", "3", "--slope", "1/0"}).code, 2);
    EXPECT_EQ(run({"bracket", "--n", "3", "--slope", "3"}).code, 2);
}

TEST(Cli, ExtendTrefoil) {
    const Outcome r = run({"extend", sample("trefoil_matrix.json"), "--n", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["member"]["size"], 8);
    EXPECT_EQ(j["adjacency_certificate"]["verdict"], "PASS");
    EXPECT_EQ(j["adjacency_certificate"]["records"].size(), 7u);
    EXPECT_EQ(j["bound"]["verdict"], "FEASIBLE");
}

TEST(Cli, ExtendErrors) {
    EXPECT_EQ(run({"extend", sample("trefoil_matrix.json"), "--n", "2", "--q", "2,x"}).code, 2);
    EXPECT_EQ(run({"extend", sample("trefoil_matrix.json"), "--n", "2", "--q", "2"}).code, 2);
    EXPECT_EQ(run({"extend", "/nonexistent.json", "--n", "2"}).code, 2);
}

TEST(Cli, ReduceExtension) {
    const Outcome r = run({"reduce", sample("trefoil_extended.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["result"], json::from_matrix(SeifertMatrix{{-1, 1}, {0, -1}}));
    EXPECT_EQ(j["invariants_preserved"], true);
    EXPECT_EQ(j["sites"], json::Json::array({3}));  // 1-based first row of the block
}

TEST(Cli, ReduceExpectMismatchFails) {
    TempDir d;
    const std::string f = d.file("m.json", R"({"size": 4, "rows": [[-1,1,0,0],[0,-1,0,0],[0,0,0,0],[0,0,1,2]],
        "expect": {"size": 2, "rows": [[-1,0],[1,-1]]}})");
    const Outcome r = run({"reduce", f});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["matches_expected"], false);
}

TEST(Cli, Table) {
    const Outcome r = run({"table", TABLE_CSV});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["summary"]["count"], j["summary"]["oracles_agree"]);
    EXPECT_GE(j["knots"].size(), 20u);
}

TEST(Cli, TableRowProblemsReported) {
    TempDir d;
    const std::string bad_genus = d.file("t.csv", "name,strands,word,fibered,genus\n3_1,2,1 1 1,1,1\n4_1,3,1 -2 1 -2,1,2\n");
    const Outcome r = run({"table", bad_genus});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["summary"]["failures"][0]["name"], "4_1");
    EXPECT_EQ(r.json()["summary"]["failures"][0]["line"], 3);

    const std::string malformed = d.file("m.csv", "name,strands,word,fibered,genus\n3_1,2,1 1 1,maybe,1\n");
    const Outcome m = run({"table", malformed});
    EXPECT_EQ(m.code, 2);
    EXPECT_NE(m.err.find("m.csv:2"), std::string::npos) << m.err;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"bracket"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"invariants", "7_4"},
             {"extend", sample("trefoil_matrix.json"), "--n", "2", "--q", "3,-1"},
             {"verify", sample("trefoil_to_unknot.json")},
             {"table", TABLE_CSV}}) {
        EXPECT_EQ(run(args).out, run(args).out) << args[0];
    }
}

TEST(Cli, OutDirectoryPersists) {
    TempDir d;
    const std::string dir = (d.path() / "reports").string();
    const Outcome r = run({"--out", dir, "bracket", "--n", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(fs::path(dir) / "bracket.json"), r.out);

    const Outcome t = run({"--out", dir, "table", TABLE_CSV});
    ASSERT_EQ(t.code, 0);
    EXPECT_TRUE(fs::exists(fs::path(dir) / "3_1.json"));
    EXPECT_EQ(slurp(fs::path(dir) / "table.json"), t.out);
}
