#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holt/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = holt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("holt_cli_test_" + name);
}

} // namespace

TEST_CASE("verify")
{
    const Outcome ok = invoke({"verify"});
    CHECK(ok.code == holt::cli::kOk);
    CHECK(ok.out.find("PASS bracket_k3_k2") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const Outcome flipped = invoke({"verify", "--flip-sign", "K2_3:0"});
    CHECK(flipped.code == holt::cli::kVerificationFailed);
    CHECK(flipped.out.find("FAIL conserved_u_k2") != std::string::npos);

    const Outcome group = invoke({"verify", "--suite", "brackets"});
    CHECK(group.code == holt::cli::kOk);
    CHECK(group.out.find("3/3 checks passed") != std::string::npos);

    CHECK(invoke({"verify", "--suite", "nope"}).code == holt::cli::kUsage);
    CHECK(invoke({"verify", "--flip-sign", "K2_3"}).code == holt::cli::kUsage);
    CHECK(invoke({"verify", "--flip-sign", "K2_3:99"}).code == holt::cli::kUsage);
}

TEST_CASE("verify report file is reproducible")
{
    const auto a = scratch("a.json");
    const auto b = scratch("b.json");
    REQUIRE(invoke({"verify", "--out", a.string(), "--no-timings"}).code == 0);
    REQUIRE(invoke({"verify", "--out", b.string(), "--no-timings"}).code == 0);
    const std::string text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(text.find("\"all_passed\": true") != std::string::npos);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("bracket")
{
    const Outcome r = invoke({"bracket", "K3_4", "K2_3"});
    CHECK(r.code == 0);
    CHECK(r.out == "108*k2^3\n");

    CHECK(invoke({"bracket", "K3_4", "K2_3", "--k2", "1/3"}).out == "4\n");
    CHECK(invoke({"bracket", "x", "px"}).out == "1\n");
    CHECK(invoke({"bracket", "u^-2", "py"}).out == "-2/3*u^-5\n");

    const Outcome bad = invoke({"bracket", "x +", "px"});
    CHECK(bad.code == holt::cli::kUsage);
    CHECK_FALSE(bad.err.empty());
    CHECK(invoke({"bracket", "x", "px", "--k1", "1/0"}).code == holt::cli::kUsage);
}

TEST_CASE("catalog")
{
    const Outcome list = invoke({"catalog", "list"});
    CHECK(list.code == 0);
    CHECK(list.out.find("K4_6\tintegral\t6\t") != std::string::npos);

    CHECK(invoke({"catalog", "show", "U"}).out == "k2*x*u^-2 + k3*u^-2\n");
    const Outcome g = invoke({"catalog", "show", "Gamma_H"});
    CHECK(g.out.find("x: px\ny: py\npx: -k2*u^-2\n") == 0);
    CHECK(invoke({"catalog", "show", "V_h9"}).code == holt::cli::kUsage);
}

TEST_CASE("simulate")
{
    const auto table = scratch("traj.tsv");
    const std::vector<std::string> args{"simulate", "--k3", "1", "--t-end", "1", "--integrator", "composed4", "--out",
                                        table.string()};
    const Outcome first = invoke(args);
    CHECK(first.code == 0);
    CHECK(first.out.find("H_U") != std::string::npos);
    const std::string text = slurp(table);
    CHECK(text.rfind("t\tx\ty\tpx\tpy\tH_U\tK2_3\tK3_4\tK4_6\n", 0) == 0);

    const Outcome second = invoke(args);
    CHECK(second.out == first.out);
    CHECK(slurp(table) == text);
    std::filesystem::remove(table);

    const Outcome aborted = invoke({"simulate"});
    CHECK(aborted.code == holt::cli::kDomainAbort);
    CHECK(aborted.err.find("domain abort") != std::string::npos);

    CHECK(invoke({"simulate", "--integrator", "euler"}).code == holt::cli::kUsage);
    CHECK(invoke({"simulate", "--start", "0,1,0.5"}).code == holt::cli::kUsage);
    CHECK(invoke({"simulate", "--potential", "K2_3"}).code == holt::cli::kUsage);
    CHECK(invoke({"simulate", "--help"}).code == holt::cli::kOk);
}

TEST_CASE("usage")
{
    CHECK(invoke({}).code == holt::cli::kUsage);
    CHECK(invoke({"frobnicate"}).code == holt::cli::kUsage);
    CHECK(invoke({"--help"}).code == holt::cli::kOk);
}
