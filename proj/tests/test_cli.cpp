#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run drsl(const std::string& args)
{
    const std::string cmd = std::string(DRSL_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("drsl_cli_" + name);
    std::filesystem::remove(p);
    return p;
}

} // namespace

TEST_CASE("trace")
{
    const Run ok = drsl("trace --start 0.5,0");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("outcome ConvergedRight") != std::string::npos);
    CHECK(ok.out.find("first P1 at step 7") != std::string::npos);

    CHECK(drsl("trace --start 0,0.3").code == 3);
    CHECK(drsl("trace --start -0.5,0.4").out.find("ConvergedLeft") != std::string::npos);
    CHECK(drsl("trace --start 0.5,0.5 --alpha 1.5 --max-iter 50").code == 2);
    CHECK(drsl("trace --start 0.5").code == 64);

    const auto path = scratch("orbit.json");
    CHECK(drsl("trace --start 0.5,0 -o " + path.string()).code == 0);
    const auto j = nlohmann::json::parse(std::ifstream(path));
    CHECK(j.at("outcome") == "ConvergedRight");
    std::filesystem::remove(path);
}

TEST_CASE("classify")
{
    const Run r = drsl("classify 0.6,0.3 0.3,0.5 0,1");
    CHECK(r.code == 0);
    CHECK(r.out.find("P1") != std::string::npos);
    CHECK(r.out.find("P6") != std::string::npos);
    CHECK(r.out.find("SingularAxis") != std::string::npos);
    CHECK(drsl("classify 0.6,0.3 --alpha 0.5").code == 64);
}

TEST_CASE("certify")
{
    const Run one = drsl("certify quintic-root");
    CHECK(one.code == 0);
    const auto j = nlohmann::json::parse(one.out);
    CHECK(j.at("claim") == "quintic-root");
    CHECK(j.at("status") == "PROVED");

    CHECK(drsl("certify no-such-claim").code == 64);
    CHECK(drsl("certify all --alpha 0.5").code == 64);
    CHECK(drsl("certify eq3-nonpositive --max-boxes 5").code == 1);
    CHECK(drsl("certify --delta 1/2 eq3-nonpositive").code == 64);

    const Run list = drsl("certify --list");
    CHECK(list.code == 0);
    CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 13);

    const Run a = drsl("certify all --no-timing");
    const Run b = drsl("certify all --no-timing");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out).size() == 13);
}

TEST_CASE("usage")
{
    CHECK(drsl("--help").code == 0);
    CHECK(drsl("").code == 64);
    const auto path = scratch("never.csv");
    CHECK(drsl("basin --bogus -o " + path.string()).code == 64);
    CHECK_FALSE(std::filesystem::exists(path));
    CHECK(drsl("basin --nx 0").code == 64);
    CHECK(drsl("trace --start 0.5,0 --format xml").code == 64);
}

TEST_CASE("verify")
{
    const Run a = drsl("verify lemmas --samples 10 --seed 1 --no-timing");
    CHECK(a.code == 0);
    CHECK(nlohmann::json::parse(a.out).at("passed") == true);
    CHECK(drsl("verify lemmas --samples 10 --seed 1 --no-timing").out == a.out);
    const Run t = drsl("verify theorem-main --step 0.1 --no-timing");
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out).at("total") == 121);
    CHECK(drsl("verify nothing").code == 64);
}

TEST_CASE("basin")
{
    const Run r = drsl("basin --nx 5 --ny 4 --workers 2");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 21);
    CHECK(r.out.rfind("x0,y0,outcome", 0) == 0);

    const auto path = scratch("basin.svg");
    CHECK(drsl("basin --nx 5 --ny 4 -o " + path.string()).code == 0);
    CHECK(std::filesystem::file_size(path) > 100);
    std::filesystem::remove(path);
}
