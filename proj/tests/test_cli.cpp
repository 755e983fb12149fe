#include "support.hpp"

#include "xsb/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

using namespace xsb::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "xsb-ladder");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("xsb_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string p = temp_path(name);
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("verify the bundled ladder") {
    auto r = invoke({"verify", XSB_BUNDLED_LADDER});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("14 steps, 2 goals, verdict VERIFIED") != std::string::npos);
}

TEST_CASE("verify an empty ladder") {
    auto r = invoke({"verify", write_temp("empty.ladder", "")});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("0 steps, 0 goals") != std::string::npos);
}

TEST_CASE("check-product with negative literals") {
    auto r = invoke({"check-product", "3/4+1e", "0", "3/8-2e", "1/4+2e", "-1/8-1e", "1/4+2e"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("holds (identity)") != std::string::npos);
    auto f = invoke({"check-product", "0", "0", "0", "0", "0", "0"});
    CHECK(f.code == exit_code::failure);
    CHECK(f.out.find("P1b") != std::string::npos);
}

TEST_CASE("reduce, search and interpolate") {
    auto r = invoke({"reduce", "21/32+3e", "1/2-e", "-5/32-3e", "1/2+e", "-5/32-3e", "1/2+e", "--a", "1/2-e", "--b",
                     "1/2", "--c", "1/2"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("11/32-4*e") != std::string::npos);
    auto rej = invoke({"reduce", "0", "0", "0", "0", "0", "0", "--b", "1/2"});
    CHECK(rej.code == exit_code::failure);
    auto s = invoke({"search", "0", "0", "0", "0", "0", "0", "--grid", "2"});
    CHECK(s.code == exit_code::failure);
    auto i = invoke({"interpolate", "X(-7/32,1/2+e)", "X(0,0)", "X(-7/64,1/4+1/2*e)"});
    CHECK(i.code == exit_code::ok);
    CHECK(i.out == "theta = 1/2\n");
    auto none = invoke({"interpolate", "X(0,0)", "X(1,1)", "X(2,2)"});
    CHECK(none.code == exit_code::failure);
}

TEST_CASE("sampling commands") {
    CHECK(invoke({"sample-nullform", "--n", "2000", "--seed", "3"}).code == exit_code::ok);
    CHECK(invoke({"sample-angle", "--n", "2000", "--a", "0", "--b", "0", "--c", "0", "--C", "4"}).code == exit_code::ok);
    CHECK(invoke({"sample-angle", "--n", "20000", "--C", "0.01"}).code == exit_code::failure);
    CHECK(invoke({"comparability", "--m", "5", "--n", "2000"}).code == exit_code::ok);
    auto j = invoke({"comparability", "--m", "1", "--n", "100", "--json", "-"});
    auto doc = nlohmann::json::parse(j.out.substr(j.out.find('{')));
    CHECK(doc["ok"] == true);
    CHECK(doc["samples"] == 100);
}

TEST_CASE("JSON certificates are byte-identical across runs") {
    std::string a = temp_path("a.json"), b = temp_path("b.json");
    CHECK(invoke({"verify", XSB_BUNDLED_LADDER, "--json", a}).code == 0);
    CHECK(invoke({"verify", XSB_BUNDLED_LADDER, "--json", b}).code == 0);
    std::string ja = support::read_file(a);
    CHECK(!ja.empty());
    CHECK(ja == support::read_file(b));
    auto doc = nlohmann::json::parse(ja);
    CHECK(doc["verdict"] == true);
    CHECK(doc["steps"].size() == 14);
    std::string c = temp_path("c.json"), d = temp_path("d.json");
    invoke({"sample-angle", "--n", "1000", "--seed", "9", "--json", c});
    invoke({"sample-angle", "--n", "1000", "--seed", "9", "--json", d});
    CHECK(support::read_file(c) == support::read_file(d));
}

TEST_CASE("exit code contract") {
    // Usage and parse errors.
    CHECK(invoke({}).code == exit_code::usage);
    CHECK(invoke({"frobnicate"}).code == exit_code::usage);
    CHECK(invoke({"verify"}).code == exit_code::usage);
    CHECK(invoke({"verify", "/nonexistent/x.ladder"}).code == exit_code::usage);
    CHECK(invoke({"verify", write_temp("bad.ladder", "symbol Psi kind bilinear-spinor\nstep S1: Psi in X(0,) by embed\n")}).code ==
          exit_code::usage);
    CHECK(invoke({"check-product", "1", "2", "3"}).code == exit_code::usage);
    CHECK(invoke({"sample-angle", "--n", "0"}).code == exit_code::usage);
    CHECK(invoke({"sample-angle", "--n", "10", "--a", "3/4"}).code == exit_code::usage);
    CHECK(invoke({"comparability", "--m", "-1"}).code == exit_code::usage);
    CHECK(invoke({"search", "0", "0", "0", "0", "0", "0", "--grid", "0"}).code == exit_code::usage);
    CHECK(invoke({"interpolate", "X(0,0)", "Q(1,1)", "X(0,0)"}).code == exit_code::usage);

    // Malformed literals in every position.
    support::RandomExponents gen(31);
    const std::string junk[] = {"", "1/", "/2", "e*", "1//2", "3x", "1/0", "--", "1 2", "+", "e^2"};
    for (int i = 0; i < 60; ++i) {
        std::vector<std::string> args = {"check-product"};
        for (int k = 0; k < 6; ++k) args.push_back(gen.next().str());
        args[1 + gen.pick(0, 5)] = junk[gen.pick(0, 10)];
        auto r = invoke(args);
        CAPTURE(args[1] + " " + args[2] + " " + args[3] + " " + args[4] + " " + args[5] + " " + args[6]);
        CHECK(r.code == exit_code::usage);
    }

    // Well-formed literals never produce usage or internal errors.
    for (int i = 0; i < 60; ++i) {
        std::vector<std::string> args = {"check-product"};
        for (int k = 0; k < 6; ++k) args.push_back(gen.next().str());
        int code = invoke(args).code;
        CHECK((code == exit_code::ok || code == exit_code::failure));
    }

    // Verification failure.
    std::string weak = support::bundled_ladder_source();
    weak.replace(weak.find("Ct(1/2)"), 7, "Ct(1/4)");
    CHECK(invoke({"verify", write_temp("weak.ladder", weak)}).code == exit_code::failure);

    // Invariant breach.
    RunConfig broken;
    broken.command = static_cast<Command>(99);
    CHECK(run(broken).exit == exit_code::internal);
}

TEST_CASE("help") {
    auto r = invoke({"--help"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("check-product") != std::string::npos);
}

}
