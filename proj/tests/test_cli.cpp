// End-to-end tests of the qmdr command-line tool. The binary path arrives as
// the first non-doctest argument (wired up in CMake).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;
std::filesystem::path g_tmp;

int run(const std::string& args) {
    std::string cmd = "\"" + g_binary + "\" " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
    std::filesystem::path p = g_tmp / name;
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("verify passes and is deterministic byte for byte") {
    auto out1 = g_tmp / "verify1.json";
    auto out2 = g_tmp / "verify2.json";
    CHECK(run("verify --samples 12 --seed 5 --output " + out1.string()) == 0);
    CHECK(run("verify --samples 12 --seed 5 --output " + out2.string()) == 0);
    std::string a = slurp(out1);
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(out2));
    CHECK(a.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("corrupting C_2 yields a counterexample exit") {
    auto out = g_tmp / "corrupt.json";
    CHECK(run("verify --samples 12 --corrupt-c2 --output " + out.string()) == 1);
    std::string text = slurp(out);
    CHECK(text.find("\"status\": \"fail\"") != std::string::npos);
    CHECK(text.find("\"failing_grade\": 2") != std::string::npos);
}

TEST_CASE("mdr reports the universal quartic form") {
    auto in = write_file("mdr_polymer.json", R"({"name": "polymer"})");
    auto out = g_tmp / "mdr.json";
    CHECK(run("mdr --input " + in.string() + " --output " + out.string()) == 0);
    std::string text = slurp(out);
    CHECK(text.find("\"sigma\": -1") != std::string::npos);
    CHECK(text.find("\"-1/3\"") != std::string::npos);

    // csv sampling with a numeric scale
    auto in2 = write_file("mdr_moyal.json", R"({"name": "moyal", "scale_sq": "1/4"})");
    auto csv = g_tmp / "mdr.csv";
    CHECK(run("mdr --format csv --input " + in2.string() + " --output " + csv.string()) == 0);
    CHECK(slurp(csv).rfind("p,E,v\n", 0) == 0);
}

TEST_CASE("sw-map on a 2d background") {
    auto in = write_file("sw.json", R"({
        "dim": 2,
        "g": [["1", "0"], ["0", "1"]],
        "B": [["0", "1/2"], ["-1/2", "0"]],
        "alpha_prime": "1"
    })");
    auto out = g_tmp / "sw.json";
    CHECK(run("sw-map --input " + in.string() + " --output " + out.string()) == 0);
    std::string text = slurp(out);
    CHECK(text.find("\"Theta\"") != std::string::npos);
    CHECK(text.find("\"theta_norm_sq\"") != std::string::npos);
}

TEST_CASE("flux gives gamma = 1 for n = 1 at equal lengths") {
    auto in = write_file("flux.json", R"({"n": 1, "ell_s": "1", "ell_P": "1"})");
    auto out = g_tmp / "flux.json";
    CHECK(run("flux --input " + in.string() + " --output " + out.string()) == 0);
    std::string text = slurp(out);
    CHECK(text.find("\"value\": \"1\"") != std::string::npos);
    CHECK(text.find("\"matches_gamma_ellP_sq\": true") != std::string::npos);
}

TEST_CASE("a4 of the unit-scale polymer realization is -1/3") {
    auto in = write_file("a4.json", R"({"name": "polymer", "scale_sq": "1"})");
    auto out = g_tmp / "a4.json";
    CHECK(run("a4 --input " + in.string() + " --output " + out.string()) == 0);
    std::string text = slurp(out);
    CHECK(text.find("\"a4\": \"-1/3\"") != std::string::npos);
    CHECK(text.find("\"sigma\": -1") != std::string::npos);
}

TEST_CASE("constrain produces a finite bound") {
    auto in = write_file("channels.json", R"([{
        "distance": {"value": 1e17, "unit": "s"},
        "e_high": {"value": 1e-6, "unit": "GeV"},
        "e_low": {"value": 0, "unit": "GeV"},
        "delta_t_bound": {"value": 1e4, "unit": "s"}
    }])");
    auto out = g_tmp / "bounds.csv";
    CHECK(run("constrain --sigma -1 --format csv --input " + in.string() + " --output " +
              out.string()) == 0);
    std::string text = slurp(out);
    CHECK(text.find("0,-1,") != std::string::npos);
}

TEST_CASE("schema violations exit with code 2") {
    CHECK(run("mdr") == 2);  // missing --input
    auto bad = write_file("bad.json", "{ not json");
    CHECK(run("mdr --input " + bad.string()) == 2);
    auto wrong = write_file("wrong.json", R"({"name": "lattice"})");
    CHECK(run("mdr --input " + wrong.string()) == 2);
    auto ragged = write_file("ragged.json", R"({
        "dim": 2, "g": [["1", "0"], ["0"]], "B": [["0","0"],["0","0"]], "alpha_prime": "1"
    })");
    CHECK(run("sw-map --input " + ragged.string()) == 2);
}

TEST_CASE("numeric domain errors exit with code 3") {
    // rest mass above the highest observed energy
    auto in = write_file("heavy.json", R"([{
        "distance": {"value": 1e17, "unit": "s"},
        "e_high": {"value": 1e-6, "unit": "GeV"},
        "e_low": {"value": 0, "unit": "GeV"},
        "delta_t_bound": {"value": 1e4, "unit": "s"}
    }])");
    CHECK(run("constrain --mass 1.0 --input " + in.string()) == 3);
    // singular combined metric g + 2 pi alpha' B with g = 0 forbidden by schema,
    // so use a g that makes the combination singular at B = 0
    auto singular = write_file("singular.json", R"({
        "dim": 2,
        "g": [["1", "1"], ["1", "1"]],
        "B": [["0", "0"], ["0", "0"]],
        "alpha_prime": "1"
    })");
    CHECK(run("sw-map --input " + singular.string()) == 3);
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    ctx.applyCommandLine(argc, argv);
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (!arg.empty() && arg[0] != '-') {
            g_binary = arg;
            break;
        }
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-qmdr-binary>\n");
        return 1;
    }
    g_tmp = std::filesystem::temp_directory_path() / "qmdr_cli_test";
    std::filesystem::create_directories(g_tmp);
    return ctx.run();
}
