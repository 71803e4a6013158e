#include <gtest/gtest.h>

#include <sstream>

#include <cattab/cli/app.hpp>

using namespace cattab::cli;

namespace {

struct result {
    int code;
    std::string out;
    std::string err;
};

result invoke(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "cattab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(invoke({}).code, exit_usage);
    EXPECT_EQ(invoke({"frobnicate"}).code, exit_usage);
    EXPECT_EQ(invoke({"enumerate", "--object", "graphs", "--n", "2"}).code, exit_usage);
    EXPECT_EQ(invoke({"tasep", "--n", "2", "--alpha", "0.5"}).code, exit_usage);
    EXPECT_EQ(invoke({"enumerate", "--help"}).code, exit_ok);
}

TEST(Cli, EnumerateCounts)
{
    const auto r = invoke({"enumerate", "--object", "tableaux", "--n", "5", "--count-only"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "42\n");
    EXPECT_EQ(invoke({"enumerate", "--object", "trees", "--n", "10", "--count-only"}).out, "16796\n");
    EXPECT_EQ(invoke({"enumerate", "--object", "trees", "--n", "3", "--count-only", "--format", "json"}).out,
              "{\"object\":\"trees\",\"n\":3,\"count\":5}\n");
}

TEST(Cli, EnumerateListings)
{
    const auto one = invoke({"enumerate", "--object", "trees", "--n", "1", "--format", "json"});
    EXPECT_EQ(one.out, "{\"l\":null,\"r\":null}\n");

    const auto two = invoke({"enumerate", "--object", "tableaux", "--n", "2", "--format", "json"});
    EXPECT_EQ(two.out,
              "{\"index\":2,\"k\":1,\"parts\":[1],\"filling\":[[1]]}\n"
              "{\"index\":2,\"k\":2,\"parts\":[],\"filling\":[]}\n");

    const auto listing = invoke({"enumerate", "--object", "tableaux", "--n", "6", "--format", "json"});
    EXPECT_EQ(count_lines(listing.out), 132);
    std::vector<std::string> lines;
    std::istringstream in(listing.out);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
}

TEST(Cli, EnumerateCap)
{
    const auto r = invoke({"enumerate", "--object", "trees", "--n", "13"});
    EXPECT_EQ(r.code, exit_cap);
    EXPECT_NE(r.err.find("cap"), std::string::npos);
    EXPECT_EQ(invoke({"enumerate", "--object", "trees", "--n", "5", "--cap", "4"}).code, exit_cap);
}

TEST(Cli, MapExamples)
{
    const auto tree = invoke({"map", "--from", "tableau", "--to", "tree", "--format", "json"},
                             R"({"index":1,"k":1,"parts":[],"filling":[]})");
    EXPECT_EQ(tree.code, exit_ok);
    EXPECT_EQ(tree.out, "{\"l\":null,\"r\":null}\n");

    const auto pair = invoke({"map", "--from", "tableau", "--to", "pair", "--format", "json"},
                             R"({"index":2,"k":1,"parts":[1],"filling":[[1]]})");
    EXPECT_EQ(pair.out, "{\"omega\":\"E\",\"eta\":\"E\"}\n");

    const std::string input = R"({"l":{"l":null,"r":{"l":null,"r":null}},"r":{"l":null,"r":null}})";
    const auto tableau = invoke({"map", "--from", "tree", "--to", "tableau", "--format", "json"}, input);
    ASSERT_EQ(tableau.code, exit_ok);
    const auto back = invoke({"map", "--from", "tableau", "--to", "tree", "--format", "json"}, tableau.out);
    EXPECT_EQ(back.out, input + "\n");

    const auto dyck = invoke({"map", "--from", "tree", "--to", "dyck"}, R"({"l":null,"r":null})");
    EXPECT_EQ(dyck.out, "UDD\n");
    const auto poly = invoke({"map", "--from", "dyck", "--to", "polyomino", "--format", "json"}, R"("UUDUDDD")");
    EXPECT_EQ(poly.out, "{\"cols\":[[2],[2,2]]}\n");
    const auto from_poly = invoke({"map", "--from", "polyomino", "--to", "pair"}, R"({"kind":"polyomino","value":{"cols":[[1]]}})");
    EXPECT_EQ(from_poly.out, "omega=- eta=-\n");
}

TEST(Cli, MapErrors)
{
    EXPECT_EQ(invoke({"map", "--from", "tableau", "--to", "tree"}, "{").code, exit_usage);
    EXPECT_EQ(invoke({"map", "--from", "tableau", "--to", "tree"}, R"({"index":2,"k":1,"parts":[1],"filling":[[0]]})").code,
              exit_invalid_object);
    EXPECT_EQ(invoke({"map", "--from", "tree", "--to", "tableau"}, "null").code, exit_invalid_object);
    EXPECT_EQ(invoke({"map", "--from", "pair", "--to", "tree"}, R"({"omega":"N","eta":"N"})").code, exit_unsupported_map);
    EXPECT_EQ(invoke({"map", "--from", "tree", "--to", "tableau", "/nonexistent/file.json"}).code, exit_usage);
}

TEST(Cli, Tasep)
{
    const auto r = invoke({"tasep", "--n", "2", "--alpha", "1", "--beta", "1", "--method", "chain"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "00:1/5\n01:1/5\n10:2/5\n11:1/5\n");

    const auto trees = invoke({"tasep", "--n", "1", "--alpha", "1/2", "--beta", "1/3", "--method", "trees"});
    EXPECT_EQ(trees.out, "0:2/5\n1:3/5\n");

    for (const char* n : {"1", "2", "3", "4"}) {
        const auto chain = invoke({"tasep", "--n", n, "--alpha", "2/3", "--beta", "1/4", "--method", "chain", "--format", "json"});
        const auto by_trees = invoke({"tasep", "--n", n, "--alpha", "2/3", "--beta", "1/4", "--method", "trees", "--format", "json"});
        EXPECT_EQ(chain.out, by_trees.out);
    }
}

TEST(Cli, TasepErrors)
{
    const auto r = invoke({"tasep", "--n", "2", "--alpha", "1/2", "--method", "paths"});
    EXPECT_EQ(r.code, exit_usage);
    EXPECT_NE(r.err.find("alpha = beta = 1"), std::string::npos);
    EXPECT_EQ(invoke({"tasep", "--n", "2", "--alpha", "3/2"}).code, exit_usage);
    EXPECT_EQ(invoke({"tasep", "--n", "9"}).code, exit_cap);
    EXPECT_EQ(invoke({"tasep", "--n", "4", "--cap", "3"}).code, exit_cap);
    EXPECT_EQ(invoke({"tasep", "--n", "2", "--alpha", "1/0"}).code, exit_usage);
}

TEST(Cli, SimulateIsDeterministicAndLabelled)
{
    const std::vector<std::string> args{"simulate", "--n", "2", "--steps", "2000", "--seed", "9", "--format", "json"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.code, exit_ok);
    EXPECT_EQ(a.out, b.out);
    const auto j = json::parse(a.out);
    EXPECT_TRUE(j.at("approximate").get<bool>());
    EXPECT_EQ(j.at("samples").get<int>(), 2001);

    const auto text = invoke({"simulate", "--n", "2", "--steps", "0", "--start", "10"});
    EXPECT_NE(text.out.find("approximate"), std::string::npos);
    EXPECT_NE(text.out.find("10:~1 "), std::string::npos);
}

TEST(Cli, VerifyCounts)
{
    const auto r = invoke({"verify", "--suite", "counts", "--max-n", "10", "--format", "json"});
    EXPECT_EQ(r.code, exit_ok);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.at("checks").size(), 10u);
    EXPECT_EQ(j.at("summary").at("failed").get<int>(), 0);
    EXPECT_FALSE(j.contains("duration_seconds"));
    EXPECT_EQ(r.out, invoke({"verify", "--suite", "counts", "--max-n", "10", "--format", "json"}).out);
}

TEST(Cli, VerifyTasepReference)
{
    const auto r = invoke({"verify", "--suite", "tasep", "--max-n", "2", "--grid", "1", "--format", "json"});
    EXPECT_EQ(r.code, exit_ok);
    bool reference = false;
    const auto report = json::parse(r.out);
    for (const auto& c : report.at("checks")) {
        if (c.at("name").get<std::string>() == "reference-n2" && c.at("pass").get<bool>()) reference = true;
    }
    EXPECT_TRUE(reference);
}

TEST(Cli, VerifyAllSuitesPassSmall)
{
    for (const char* suite : {"counts", "bijections", "pipelines", "tasep", "partition"}) {
        const auto r = invoke({"verify", "--suite", suite, "--max-n", "4", "--grid", "1/2,1"});
        EXPECT_EQ(r.code, exit_ok) << suite << "\n" << r.out;
    }
}

TEST(Cli, VerifyMutationsFailWithWitness)
{
    const auto phi = invoke({"verify", "--suite", "bijections", "--max-n", "3", "--mutate", "phi", "--format", "json"});
    EXPECT_EQ(phi.code, exit_verify_failed);
    const auto report = json::parse(phi.out);
    EXPECT_GT(report.at("summary").at("failed").get<int>(), 0);
    for (const auto& c : report.at("checks")) {
        if (!c.at("pass").get<bool>()) {
            EXPECT_FALSE(c.at("witness").is_null());
        }
    }

    const auto stat = invoke({"verify", "--suite", "tasep", "--max-n", "2", "--grid", "1", "--mutate", "stationary"});
    EXPECT_EQ(stat.code, exit_verify_failed);
    EXPECT_NE(stat.out.find("witness="), std::string::npos);
}

TEST(Cli, VerifyTiming)
{
    const auto r = invoke({"verify", "--suite", "counts", "--max-n", "3", "--format", "json", "--timing"});
    EXPECT_TRUE(json::parse(r.out).contains("duration_seconds"));
    EXPECT_EQ(invoke({"verify", "--suite", "counts", "--grid", "2"}).code, exit_usage);
}
