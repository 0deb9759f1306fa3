#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "valparam/poly.hpp"

using namespace valparam;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string ws(const char* name) { return std::string(VALPARAM_WORKSPACES) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(CliEval, Examples) {
    auto r = run({"--input", ws("rt.json"), "eval", "v_t2", "x"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
    EXPECT_EQ(run({"--input", ws("nt.json"), "eval", "nt_val", "x^2+x+t"}).out, "inf\n");
    EXPECT_EQ(run({"--input", ws("vt.json"), "eval", "vt_val", "1"}).out, "0\n");
    EXPECT_EQ(run({"--input", ws("vt.json"), "eval", "vt_val", "F"}).out, "0-\n");
    EXPECT_EQ(run({"--input", ws("nt.json"), "eval", "nt_aug", "x"}).out, "1\n");
}

TEST(CliEval, OutputReparses) {
    for (const char* f : {"x", "F", "x^3 + t", "x^3 + x^2 + t^(-2)*x"}) {
        auto r = run({"--input", ws("vt.json"), "eval", "vt_val", f});
        ASSERT_EQ(r.code, 0) << r.err;
        std::string text = first_line(r.out);
        EXPECT_EQ(to_string(parse_ext(text)), text);
    }
}

TEST(CliEval, Errors) {
    EXPECT_EQ(run({"eval", "v", "x"}).code, 1);
    EXPECT_EQ(run({"--input", ws("rt.json"), "eval", "nope", "x"}).code, 1);
    EXPECT_EQ(run({"--input", ws("rt.json"), "eval", "v_t2", "x +"}).code, 1);
    EXPECT_EQ(run({"--input", "/nonexistent.json", "eval", "v_t2", "x"}).code, 1);
    EXPECT_EQ(run({"--format", "xml", "examples", "--p", "2"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliClassify, Examples) {
    auto rt = run({"--input", ws("rt.json"), "classify", "rt_seq"});
    EXPECT_EQ(rt.code, 0);
    EXPECT_EQ(first_line(rt.out), "RT, gamma=2");
    auto vt = run({"--input", ws("vt.json"), "classify", "vt_seq"});
    EXPECT_EQ(first_line(vt.out), "VT, gamma=0-");
    EXPECT_NE(vt.out.find("onset: v(x) = -1 from index 0"), std::string::npos);
    auto nt = run({"--input", ws("nt.json"), "classify", "nt_seq"});
    EXPECT_EQ(first_line(nt.out), "NT, gamma=inf");
    auto al = run({"--input", ws("al.json"), "--budget", "30", "classify", "main"});
    EXPECT_EQ(al.code, 0);
    EXPECT_EQ(first_line(al.out), "AL, gamma=inf-");
}

TEST(CliClassify, InconclusiveExitCode) {
    auto r = run({"--input", ws("nt.json"), "--budget", "2", "classify", "nt_bare"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(first_line(r.out), "Inconclusive");
}

TEST(CliClassify, Json) {
    auto r = run({"--input", ws("vt.json"), "--format", "json", "classify", "vt_seq"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["class"], "VT");
    EXPECT_EQ(j["gamma"], "0-");
    EXPECT_EQ(j["onset"]["since"], 0);
}

TEST(CliCompare, Monomials) {
    auto r = run({"--input", ws("rt.json"), "compare", "v_t2", "v_01"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "relation: v_01 <= v_t2");
    EXPECT_EQ(first_line(run({"--input", ws("rt.json"), "compare", "v_t2", "v_t2"}).out), "relation: equal");
    auto j = nlohmann::json::parse(run({"--input", ws("vt.json"), "--format", "json", "compare", "vt_seq", "vt_shift"}).out);
    EXPECT_FALSE(j["separating"].is_null());
}

TEST(CliExpand, Reassembles) {
    auto r = run({"--input", ws("custom.json"), "--format", "json", "expand", "x^5 + t*x + 1", "q"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    auto f = FieldSpec::rat_fun(3);
    std::vector<PolyK> parts;
    for (const auto& s : j["parts"]) parts.push_back(parse_poly(f, s.get<std::string>()));
    EXPECT_EQ(reassemble(parts, parse_poly(f, "x^2 + t")), parse_poly(f, "x^5 + t*x + 1"));
    EXPECT_EQ(run({"--input", ws("custom.json"), "expand", "x", "2*x"}).code, 1);
}

TEST(CliAppr, Containment) {
    auto r = run({"--input", ws("nt.json"), "appr", "nt_seq", "--center", "t + t^2", "--radius", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("support: inf-"), std::string::npos);
    EXPECT_NE(r.out.find(": contained"), std::string::npos);
    auto b = run({"--input", ws("nt.json"), "--budget", "2", "appr", "nt_seq", "--center", "t + t^2", "--radius", "100"});
    EXPECT_EQ(b.code, 2);
    EXPECT_EQ(run({"--input", ws("nt.json"), "appr", "nt_seq", "--center", "t"}).code, 1);
}

TEST(CliExamples, GoldenRuns) {
    auto r2 = run({"examples", "--p", "2", "--depth", "5"});
    EXPECT_EQ(r2.code, 0) << r2.out;
    EXPECT_EQ(r2.out.find("FAIL"), std::string::npos);
    auto r3 = run({"examples", "--p", "3", "--depth", "4"});
    EXPECT_EQ(r3.code, 0) << r3.out;
    auto r4 = run({"examples", "--p", "4"});
    EXPECT_EQ(r4.code, 1);
    EXPECT_NE(r4.err.find("not prime"), std::string::npos);
    EXPECT_EQ(run({"examples", "--p", "2", "--depth", "1"}).code, 1);
}
