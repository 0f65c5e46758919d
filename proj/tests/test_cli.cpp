#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

// End-to-end checks of the installed command surface: exit codes, report
// shapes, cache round trips, output determinism.

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "psit-cli-test";
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = scratch_dir();
    const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd =
        std::string(PSIT_BIN) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << content;
    return p;
}

} // namespace

TEST_CASE("validate reports degeneracies with exit code 2") {
    const fs::path bad = write_file("collinear.txt", "0 0\n1 1\n2 2\n5 0\n");
    const CliResult r = run_cli("points validate " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("collinear") != std::string::npos);

    const fs::path broken = write_file("broken.txt", "0 0\nnot a point\n1 0\n");
    const CliResult p = run_cli("points validate " + broken.string());
    CHECK(p.exit_code == 2);
    CHECK(p.err.find("line 2") != std::string::npos);

    const fs::path good = write_file("good.txt", "# three points\n0 0\n10 0\n0 10\n");
    CHECK(run_cli("points validate " + good.string()).exit_code == 0);
}

TEST_CASE("unknown commands and flags are input errors") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("lp verify --bogus-flag 1").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("size caps exit with code 3") {
    const CliResult gen = run_cli("gen convex --n 13");
    REQUIRE(gen.exit_code == 0);
    const fs::path big = write_file("big.txt", gen.out);
    const CliResult r = run_cli("--no-cache enumerate --input " + big.string());
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("lp verification exit codes") {
    CHECK(run_cli("lp verify").exit_code == 0);
    CHECK(run_cli("lp verify --lambda3 0.34507190").exit_code == 1);
    const CliResult pairs = run_cli("lp pairs");
    CHECK(pairs.exit_code == 0);
    CHECK(pairs.out.find("\"matches_embedded\": true") != std::string::npos);
    CHECK(pairs.out == run_cli("lp pairs").out);  // byte-stable rerun
}

TEST_CASE("audits run from the command line") {
    const CliResult gen = run_cli("gen trianglecenter");
    REQUIRE(gen.exit_code == 0);
    const fs::path tc = write_file("tc.txt", gen.out);
    CHECK(run_cli("--no-cache audit --theorem 2 --input " + tc.string()).exit_code == 0);
    CHECK(run_cli("--no-cache audit --theorem obs1 --input " + tc.string()).exit_code == 0);
    CHECK(run_cli("--no-cache audit --theorem obs2 --input " + tc.string()).exit_code == 0);
    CHECK(run_cli("audit --theorem crossing").exit_code == 0);
    CHECK(run_cli("audit --theorem thm8").exit_code == 0);
}

TEST_CASE("chain verification matches the recurrences") {
    const CliResult r = run_cli("tn --n 5 --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"match\": true") != std::string::npos);
    CHECK(r.out.find("\"pointed\": \"17\"") != std::string::npos);
    CHECK(r.out.find("\"all\": \"43\"") != std::string::npos);
}

TEST_CASE("census reports are cached byte-for-byte") {
    const fs::path cache_dir = scratch_dir() / "cache";
    fs::remove_all(cache_dir);
    const CliResult gen = run_cli("gen trianglecenter");
    const fs::path tc = write_file("tc_cache.txt", gen.out);
    const std::string base =
        " enumerate --input " + tc.string() + " --census --cache-dir " + cache_dir.string();

    const CliResult first = run_cli(base);
    REQUIRE(first.exit_code == 0);
    CHECK(fs::exists(cache_dir));
    const CliResult second = run_cli(base);  // cache hit
    CHECK(second.out == first.out);
    const CliResult fresh = run_cli("--no-cache" + base);
    CHECK(fresh.out == first.out);

    // The environment variable names the cache directory when no flag is
    // given.
    const fs::path env_dir = scratch_dir() / "env-cache";
    fs::remove_all(env_dir);
    const std::string env_cmd = "PSIT_CACHE_DIR=" + env_dir.string() + " " + std::string(PSIT_BIN) +
                                " enumerate --input " + tc.string() + " --census > /dev/null 2>&1";
    REQUIRE(std::system(env_cmd.c_str()) == 0);
    CHECK(fs::exists(env_dir));
}

TEST_CASE("svg output is byte-stable and respects highlights") {
    const CliResult tn = run_cli("tn --n 3");
    REQUIRE(tn.exit_code == 0);
    const fs::path tri = write_file("t3.json", tn.out);

    const CliResult sub = run_cli("--no-cache subpt --tri " + tri.string() + " --mode pointed --list");
    REQUIRE(sub.exit_code == 0);

    const CliResult svg1 = run_cli("svg --input " + tri.string());
    const CliResult svg2 = run_cli("svg --input " + tri.string());
    CHECK(svg1.exit_code == 0);
    CHECK(svg1.out == svg2.out);
    CHECK(svg1.out.find("<svg") != std::string::npos);
}

TEST_CASE("orientation counting from the command line") {
    const CliResult tn = run_cli("tn --n 4");
    const fs::path tri = write_file("t4.json", tn.out);
    const CliResult r = run_cli("orient count --input " + tri.string() + " --scope interior");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("valid_count") != std::string::npos);
    const CliResult est = run_cli("orient estimate --input " + tri.string() +
                                  " --scope interior --samples 2000 --seed 5");
    CHECK(est.exit_code == 0);
    CHECK(est.out == run_cli("orient estimate --input " + tri.string() +
                             " --scope interior --samples 2000 --seed 5")
                         .out);
}
