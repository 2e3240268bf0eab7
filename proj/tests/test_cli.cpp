#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> ls;
    std::string cur;
    for (const char c : s) {
        if (c == '\n') {
            ls.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) ls.push_back(cur);
    return ls;
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("gen writes csv with header and one line per point") {
    const auto r = run_cli("gen --family mod --m 7 --format csv");
    CHECK(r.code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 14);
    CHECK(ls[0] == "x,y");
    CHECK(ls[1] == "0,0");
}

TEST_CASE("gen honors the star variant") {
    const auto r = run_cli("gen --family fib --m 5 --star");
    CHECK(r.code == 0);
    CHECK(lines_of(r.out).size() == 5);  // header + 4 points
}

TEST_CASE("gen json carries backend, meta, and exact coordinates") {
    const auto r = run_cli("gen --family fib --m 5 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["backend"] == "exact");
    CHECK(j["meta"]["family"] == "fib");
    CHECK(j["meta"]["m"] == 5);
    REQUIRE(j["points"].size() == 5);
    CHECK(j["points"][1]["x"]["num"]["b"] == 1);
    CHECK(j["points"][1]["x"]["den"]["b"] == 5);
    CHECK(j["points"][1]["y"]["num"]["b"] == 2);
}

TEST_CASE("gen json for the grid has about R^2 float points") {
    const auto r = run_cli("gen --family grid --R 10 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["backend"] == "float");
    const auto n = j["points"].size();
    CHECK(n >= 90);
    CHECK(n <= 110);
    CHECK(j["points"][0]["x"].is_number());
}

TEST_CASE("disp reproduces the scaled dispersion of the starred order-7 set") {
    const auto r = run_cli("disp --family mod --m 7 --star");
    CHECK(r.code == 0);
    CHECK(r.out.find("n = 12\n") != std::string::npos);
    CHECK(r.out.find("disp = 0.14589803375\n") != std::string::npos);
    CHECK(r.out.find("n*disp(5dp) = 1.75078\n") != std::string::npos);
    CHECK(r.out.find("exact = ") != std::string::npos);
    CHECK(r.out.find("class interior") != std::string::npos);
}

TEST_CASE("disp torus value is two over the point count") {
    const auto r = run_cli("disp --family fib --m 7 --torus --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["torus"] == true);
    CHECK(j["n"] == 13);
    CHECK(j["exact_value"]["num"]["b"] == 26);
    CHECK(j["exact_value"]["den"]["b"] == 169);
    CHECK(j["witness"]["class"] == "periodic_wrap");
    CHECK(j["witness"]["span"].size() == 2);
}

TEST_CASE("disp tuned family runs on the float backend") {
    const auto r = run_cli("disp --family modprime --m 6 --star");
    CHECK(r.code == 0);
    CHECK(r.out.find("backend = float\n") != std::string::npos);
    CHECK(r.out.find("n*disp(5dp) = 1.28438\n") != std::string::npos);
}

TEST_CASE("disp box listing includes every maximal box") {
    const auto r = run_cli("disp --family fib --m 5 --boxes");
    CHECK(r.code == 0);
    CHECK(r.out.find("boxes = ") != std::string::npos);
    CHECK(count_of(r.out, "\nbox [") >= 4);
}

TEST_CASE("table1 golden rows") {
    const auto r = run_cli("table1");
    REQUIRE(r.code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 12);
    CHECK(ls[1] == "  5         1.44      1.52786            1");
    CHECK(ls[4] == "  8      1.81406      1.80340      1.57491");
    CHECK(ls[8].find("1.97232") != std::string::npos);
    CHECK(ls[8].find("(conjectured-in-paper: 1.83465)") != std::string::npos);
    CHECK(ls[11].find("(conjectured-in-paper: 1.87970)") != std::string::npos);
}

TEST_CASE("table3 golden rows") {
    const auto r = run_cli("table3");
    REQUIRE(r.code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 10);
    CHECK(ls[1] ==
          "  6    0.23199    0.22865    0.89146    0.77149    0.74419    0.60696");
    CHECK(ls[4].find("0.27608") != std::string::npos);
    CHECK(ls[4].find("0.87375") != std::string::npos);
    CHECK(ls[9].find("0.33692") != std::string::npos);
    CHECK(ls[9].find("0.68544") != std::string::npos);
}

TEST_CASE("empty table range prints the header only") {
    const auto r = run_cli("table3 --m-min 9 --m-max 8");
    CHECK(r.code == 0);
    CHECK(lines_of(r.out).size() == 1);
}

TEST_CASE("identical invocations are byte-identical") {
    const auto a = run_cli("table1 --m-max 9");
    const auto b = run_cli("table1 --m-max 9");
    CHECK(a.out == b.out);
    const auto c = run_cli("disc --family mod --m 6 --samples 20000 --seed 4");
    const auto d = run_cli("disc --family mod --m 6 --samples 20000 --seed 4");
    CHECK(c.out == d.out);
    CHECK(c.out.find("mc_flagged = 0\n") != std::string::npos);
}

TEST_CASE("disc json report shape") {
    const auto r =
        run_cli("disc --family fib --m 6 --notion periodic --samples 20000 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["notion"] == "periodic");
    CHECK(j["value"].is_number());
    CHECK(j["squared"].is_number());
    CHECK(j["mc"]["samples"] == 20000);
    CHECK(j["mc"]["seed"] == 12345);
}

TEST_CASE("validation failures exit 2 and write nothing") {
    const auto target = temp_file("golden_cli_should_not_exist.csv");
    std::filesystem::remove(target);
    const auto r = run_cli("gen --family modprime --m 6 --backend exact --out " +
                           target.string());
    CHECK(r.code == 2);
    CHECK_FALSE(std::filesystem::exists(target));
    CHECK(run_cli("gen --family fib --m 2").code == 2);
    CHECK(run_cli("gen --family grid --R 1").code == 2);
    CHECK(run_cli("disc --family fib --m 5 --samples 5000").code == 2);
    CHECK(run_cli("gen --family fib --m 5 --format svg").code == 2);
}

TEST_CASE("io failures exit 1") {
    CHECK(run_cli("disp --family fib --m 5 --out /nonexistent-dir/x.txt").code == 1);
    CHECK(run_cli("svg --in /nonexistent-dir/missing.csv").code == 1);
}

TEST_CASE("svg plots one dot per point") {
    const auto r = run_cli("svg --family mod --m 7");
    CHECK(r.code == 0);
    CHECK(count_of(r.out, "<circle") == 13);
    CHECK(r.out.find("width=\"600\" height=\"600\"") != std::string::npos);
}

TEST_CASE("svg box overlay annotates areas") {
    const auto r = run_cli("svg --family mod --m 6 --boxes");
    CHECK(r.code == 0);
    CHECK(r.out.find("<title>area=") != std::string::npos);
    CHECK(r.out.find("fill=\"#c8c8c8\"") != std::string::npos);
    CHECK(r.out.find("fill=\"none\" stroke=\"#777777\"") != std::string::npos);
}

TEST_CASE("svg of an empty point file draws axes only") {
    const auto csv = temp_file("golden_cli_empty.csv");
    {
        std::ofstream f(csv);
        f << "x,y\n";
    }
    const auto r = run_cli("svg --in " + csv.string());
    CHECK(r.code == 0);
    CHECK(count_of(r.out, "<circle") == 0);
    CHECK(r.out.find("<svg ") != std::string::npos);
    CHECK(r.out.find("</svg>") != std::string::npos);
    std::filesystem::remove(csv);
}

TEST_CASE("svg round-trips a generated csv file") {
    const auto csv = temp_file("golden_cli_roundtrip.csv");
    const auto gen = run_cli("gen --family fib --m 6 --out " + csv.string());
    REQUIRE(gen.code == 0);
    const auto r = run_cli("svg --in " + csv.string());
    CHECK(r.code == 0);
    CHECK(count_of(r.out, "<circle") == 8);
    std::filesystem::remove(csv);
}
