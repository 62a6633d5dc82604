#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <fstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MIRRORQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("expand json emits exact coefficients") {
    RunResult r = run_cli("expand --order 2 --format json --no-meta");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["order"] == 2);
    bool found_h4 = false;
    for (const auto& s : j["series"]) {
        if (s["name"] == "h4") {
            found_h4 = true;
            CHECK(s["coeffs"] == json::array({"0", "1", "-170"}));
        }
        if (s["name"] == "h0") CHECK(s["coeffs"] == json::array({"1/5", "24", "4200"}));
    }
    CHECK(found_h4);
}

TEST_CASE("expand csv scaled like the printed table") {
    RunResult r = run_cli("expand --order 6 --scaled-like-paper --format csv");
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "series,q^0,q^1,q^2,q^3,q^4,q^5,q^6");
    std::getline(is, line);
    CHECK(line == "(1/24)h0,1/120,1,175,117625,111784375,126958105626,160715581780591");
    for (int i = 0; i < 7; ++i) std::getline(is, line);
    CHECK(line == "(1/125)h7,-1/5,13,2860,1855775,1750773750,1981335668498,2502724752660128");
}

TEST_CASE("expand --order 1 gives the two initial columns") {
    RunResult r = run_cli("expand --order 1 --format csv");
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "series,q^0,q^1");
    std::getline(is, line);
    CHECK(line == "h0,1/5,24");
}

TEST_CASE("deterministic output with --no-meta") {
    RunResult a = run_cli("expand --order 4 --scaled-like-paper --no-meta");
    RunResult b = run_cli("expand --order 4 --scaled-like-paper --no-meta");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult v1 = run_cli("verify --suite monodromy,group --samples 10 --no-meta");
    RunResult v2 = run_cli("verify --suite monodromy,group --samples 10 --no-meta");
    CHECK(v1.code == 0);
    CHECK(v1.out == v2.out);
}

TEST_CASE("cache round-trip is bit-identical") {
    fs::path dir = fs::temp_directory_path() / "mirrorq-cache-test";
    fs::remove_all(dir);
    std::string flag = " --cache-dir " + dir.string();
    RunResult cold = run_cli("expand --order 5 --no-meta" + flag);
    CHECK(cold.code == 0);
    bool have_file = false;
    for (auto& e : fs::directory_iterator(dir)) have_file = have_file || e.is_regular_file();
    CHECK(have_file);
    RunResult warm = run_cli("expand --order 5 --no-meta" + flag);
    CHECK(warm.code == 0);
    CHECK(cold.out == warm.out);
    RunResult nocache = run_cli("expand --order 5 --no-meta");
    CHECK(nocache.out == cold.out);

    // corrupted cache entries are ignored, not trusted
    for (auto& e : fs::directory_iterator(dir)) {
        std::ofstream f(e.path(), std::ios::binary | std::ios::trunc);
        f << "{\"checksum\":\"0\",\"payload\":{}}";
    }
    RunResult rebuilt = run_cli("expand --order 5 --no-meta" + flag);
    CHECK(rebuilt.code == 0);
    CHECK(rebuilt.out == cold.out);

    // environment-variable override
    fs::path dir2 = fs::temp_directory_path() / "mirrorq-cache-env-test";
    fs::remove_all(dir2);
    std::string env = "MIRRORQ_CACHE_DIR=" + dir2.string() + " ";
    std::string cmd = env + MIRRORQ_CLI_PATH + " expand --order 5 --no-meta 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    pclose(p);
    CHECK(out == cold.out);
    CHECK(fs::exists(dir2));
    fs::remove_all(dir2);
    fs::remove_all(dir);
}

TEST_CASE("verify subcommand exit codes and shape") {
    RunResult ok = run_cli("verify --suite monodromy --no-meta");
    CHECK(ok.code == 0);
    json j = json::parse(ok.out);
    CHECK(j["pass"] == true);
    CHECK(j["reports"][0]["suite"] == "monodromy");
    for (const auto& c : j["reports"][0]["checks"]) CHECK(c["status"] == "pass");

    RunResult bad = run_cli("verify --suite no-such-suite --no-meta");
    CHECK(bad.code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("expand --order notanumber").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("").code == 2);
}

TEST_CASE("instantons command") {
    RunResult r = run_cli("instantons --max-degree 3 --no-meta");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["n"]["1"] == "2875");
    CHECK(j["n"]["2"] == "609250");
    CHECK(j["n"]["3"] == "317206375");
    CHECK(j["kappa"] == "-125");
}

TEST_CASE("mirror-map command") {
    RunResult r = run_cli("mirror-map --order 3 --no-meta");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["q_of_z"]["coeffs"] == json::array({"0", "1", "770", "1014275"}));
    CHECK(j["z_of_q"]["coeffs"] == json::array({"0", "1", "-770", "171525"}));
}

TEST_CASE("group subcommands") {
    RunResult inv = run_cli("group inv --a 2,1,0,0,0,0");
    CHECK(inv.code == 0);
    CHECK(json::parse(inv.out)["result"] == json::array({"1/2", "1", "0", "0", "0", "0"}));

    RunResult mul = run_cli("group mul --a 2,1,0,0,0,0 --b 1/2,1,0,0,0,0");
    CHECK(mul.code == 0);
    CHECK(json::parse(mul.out)["result"] == json::array({"1", "1", "0", "0", "0", "0"}));

    RunResult act = run_cli("group act --t 1,0,0,0,2,1,0 --a 3,1,0,0,0,0");
    CHECK(act.code == 0);
    CHECK(json::parse(act.out)["result"][4] == "486");  // t4 k^5 = 2*3^5

    CHECK(run_cli("group inv --a 0,1,0,0,0,0").code == 2);
    CHECK(run_cli("group inv --a 1,2,3").code == 2);
}

TEST_CASE("periods command emits residual metadata") {
    RunResult r = run_cli("periods --ztilde 1/10 --prec 128 --no-meta");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["prec_bits"] == 128);
    CHECK(j["matrix"].size() == 4);
    CHECK(j["matrix"][0].size() == 4);
    CHECK(j["matrix"][0][0].contains("re"));
    // residuals are tiny decimals like "1.23e-70"
    for (const auto& s : j["quadratic_residuals"]) {
        std::string v = s.get<std::string>();
        CHECK((v == "0" || v.find("e-") != std::string::npos));
    }
}

TEST_CASE("mirror-map inverse coefficient matches Lagrange inversion") {
    // for s = q + a q^2 + b q^3, the inverse is q - a q^2 + (2a^2 - b) q^3;
    // with a = 770, b = 1014275 that gives 2*770^2 - 1014275 = 171525.
    RunResult r = run_cli("mirror-map --order 4 --no-meta");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["z_of_q"]["coeffs"][3] == "171525");
    CHECK(j["z_of_q"]["coeffs"][4] == "-81623000");
}
