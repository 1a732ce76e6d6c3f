#include <doctest.h>

#include "mouldinv/cli.hpp"
#include "mouldinv/fixtures.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace mouldinv;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream o, e;
    int code = run_cli(args, o, e);
    return {code, o.str(), e.str()};
}

std::string temp_file(const std::string& name, const std::string& body)
{
    std::string path = std::string(P_tmpdir) + "/mouldinv_test_" + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("tan-in-te output")
{
    auto r = run({"tan-in-te", "--length", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "Tan^{n1,n2} = 1/2 Te^{n1,n2} - 1/2 Te^{n2,n1}\n");
    CHECK(run({"tan-in-te", "--length", "5", "--count"}).out.find("540") != std::string::npos);
    CHECK(run({"tan-in-te", "--length", "9"}).code != 0);
}

TEST_CASE("reduce is deterministic")
{
    auto a = run({"reduce", "--family", "tan", "--seq", "2,6,4", "--format", "json"});
    auto b = run({"reduce", "--family", "tan", "--seq", "2,6,4", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("malformed input is reported with its location")
{
    auto bad_json = temp_file("bad.json", "{\"kind\": \"g\", \"coeffs\": {\"3\": 0.1}}");
    auto r = run({"collector", "--input", bad_json, "--weight", "6"});
    CHECK(r.code != 0);
    CHECK(r.err.find("coeffs") != std::string::npos);
    auto syntax = temp_file("syntax.json", "{\"kind\": \"g\",\n \"coeffs\": {\"3\": \"1/10\"");
    r = run({"collector", "--input", syntax, "--weight", "6"});
    CHECK(r.code != 0);
    CHECK(r.err.find("line") != std::string::npos);
    auto unknown = temp_file("unknown.json", "{\"kind\": \"g\", \"coefs\": {}}");
    r = run({"collector", "--input", unknown, "--weight", "6"});
    CHECK(r.code != 0);
    CHECK(r.err.find("coefs") != std::string::npos);
    auto ok = temp_file("ok.json", "{\"kind\": \"g\", \"coeffs\": {\"3\": \"1/10\"}, \"cap\": 6}");
    r = run({"collector", "--input", ok, "--weight", "9"});
    CHECK(r.code != 0);
    CHECK(r.err.find("cap") != std::string::npos);
    CHECK(run({"reduce", "--family", "te", "--seq", "2,x"}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
}

TEST_CASE("invariants output carries an error estimate")
{
    auto in = temp_file("inv.json", "{\"kind\": \"g\", \"coeffs\": {\"3\": \"1/20\"}}");
    auto r = run({"invariants", "--input", in, "--weight", "9", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("est_err") != std::string::npos);
}

TEST_CASE("comparators")
{
    std::string detail;
    CHECK(compare_text("a  = b\nc\n", "a = b\n c", detail));
    CHECK_FALSE(compare_text("c\na = b\n", "a = b\nc\n", detail));
    CHECK_FALSE(compare_text("a = 1/2\n", "a = 1/3\n", detail));
    CHECK(compare_collector("Te^2 [1/2] g*3\n", "# note\nTe^2 [2/4] g*3\n", 1e-10L, 1e-12L, detail));
    CHECK_FALSE(compare_collector("Te^2 [1/2] g*3\n", "Te^2 [3/5] g*3\n", 1e-10L, 1e-12L, detail));
    CHECK_FALSE(compare_collector("Te^2 [1/2] g*3\n", "Te^4 [1/2] g*3\n", 1e-10L, 1e-12L, detail));
}

TEST_CASE("fixture directory override")
{
    setenv("MOULDINV_FIXTURES", "/nonexistent/dir", 1);
    CHECK(fixture_dir() == "/nonexistent/dir");
    unsetenv("MOULDINV_FIXTURES");
    CHECK(fixture_dir() != "/nonexistent/dir");
}
