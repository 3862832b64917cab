#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FACTO_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    auto e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

} // namespace

TEST_CASE("cli counting commands") {
    CHECK(strip(run_cli("f 18").out) == "f(18) = 4");
    CHECK(strip(run_cli("pvec 1 2").out) == "p(1,2) = 4");
    CHECK(strip(run_cli("pvec 2 1").out) == "p(1,2) = 4"); // order-insensitive
    CHECK(strip(run_cli("pvec 1 1 1 1").out) == "p(1,1,1,1) = 15");
    CHECK(strip(run_cli("partition 10").out) == "p(10) = 42");
    CHECK(strip(run_cli("bell 5").out) == "B_5 = 52");
}

TEST_CASE("cli listing") {
    auto r = run_cli("f 18 --list");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2 * 3 * 3") != std::string::npos);
    CHECK(r.out.find("2 * 9") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("").exit_code == 3);
    CHECK(run_cli("f").exit_code == 3);
    CHECK(run_cli("f 0").exit_code == 3);
    CHECK(run_cli("nonsense 5").exit_code == 3);
    // 1000000007^2: beyond 64-bit trial scale and not smooth, so refused
    CHECK(run_cli("f 1000000014000000049").exit_code == 4);
    CHECK(run_cli("f 18").exit_code == 0);
}

TEST_CASE("cli json output parses and matches text") {
    auto r = run_cli("--format json f 18");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n") == "18");
    CHECK(j.at("f") == "4");

    auto b = run_cli("--format json bound 2 3");
    REQUIRE(b.exit_code == 0);
    auto jb = nlohmann::json::parse(b.out);
    CHECK(jb.at("exact_p") == "16");
    CHECK(jb.at("status") == "PASS");
    double lo = std::stod(jb.at("hypergeom_lower").at("lo").get<std::string>());
    CHECK(lo > 0);
    CHECK(lo <= 16.0);
}

TEST_CASE("cli csv carries the same fields as json") {
    auto j = run_cli("--format json spectrum 100");
    auto c = run_cli("--format csv spectrum 100");
    REQUIRE(j.exit_code == 0);
    REQUIRE(c.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    // every scalar JSON field name appears in the CSV header line
    std::string header = c.out.substr(0, c.out.find('\n'));
    for (auto& [key, value] : parsed.items())
        if (!value.is_array() && !value.is_object())
            CHECK(header.find(key) != std::string::npos);
}

TEST_CASE("cli worker count does not change bytes") {
    auto a = run_cli("--format json --workers 1 spectrum 500");
    auto b = run_cli("--format json --workers 8 spectrum 500");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);

    auto va = run_cli("--workers 1 verify --kmax 20 --nmax 50 --ymax 50 --hmax 20 --grid-sum 5");
    auto vb = run_cli("--workers 8 verify --kmax 20 --nmax 50 --ymax 50 --hmax 20 --grid-sum 5");
    CHECK(va.exit_code == 0);
    CHECK(vb.exit_code == 0);
    CHECK(va.out == vb.out);
}

TEST_CASE("cli verify self test fails when corrupted") {
    auto r = run_cli(
        "verify --kmax 10 --nmax 20 --ymax 20 --hmax 50 --grid-sum 4 --selftest-corrupt 0.5");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli cache round trip") {
    std::string path = std::string("/tmp/facto_cli_cache_") + std::to_string(getpid()) + ".txt";
    auto a = run_cli("--cache " + path + " pvec 2 3");
    REQUIRE(a.exit_code == 0);
    CHECK(strip(a.out) == "p(2,3) = 16");
    auto b = run_cli("--cache " + path + " pvec 2 3");
    REQUIRE(b.exit_code == 0);
    CHECK(strip(b.out) == "p(2,3) = 16");
    std::remove(path.c_str());
}
