// Exercises the installed CLI end to end: exit codes, file exports, and the
// worked-example table. Needs ZDCHROMA_BIN pointing at the binary.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int failures = 0;
std::string bin;

int run(const std::string& args) {
    std::string cmd = "\"" + bin + "\" " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

void expect_exit(const std::string& args, int want) {
    int got = run(args);
    bool ok = got == want;
    std::printf("%s exit %d (want %d): %s\n", ok ? "ok  " : "FAIL", got, want, args.c_str());
    if (!ok) ++failures;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main() {
    const char* env = std::getenv("ZDCHROMA_BIN");
    if (!env || !*env) {
        std::printf("ZDCHROMA_BIN not set\n");
        return 1;
    }
    bin = env;

    // exit code contract: 0 pass, 1 verification failure, 2 usage, 3 timeout
    expect_exit("analyze --ring Z8xZ16 --graph gamma0 --formula", 0);
    expect_exit("analyze --ring Z8xZ16 --graph gamma0 --exact --construct --formula", 0);
    expect_exit("analyze --ring Z7 --graph gamma --exact", 0);
    expect_exit("analyze --ring \"GF(6)\" --graph gamma0", 2);
    expect_exit("analyze --ring Z1 --graph gamma0", 2);
    expect_exit("analyze", 2);
    expect_exit("analyze --ring Z16 --graph complement_gamma --exact --construct --formula", 1);
    expect_exit("analyze --ring Z8xZ16 --graph gamma0 --exact --budget-ms 0", 3);
    expect_exit("verify --theorem lem1 --p-max 3 --r-max 3 --max-order 128 --solver-cap 128", 0);
    expect_exit("verify --theorem lembar --p-max 2 --r-max 4 --max-order 64 --solver-cap 64", 1);
    expect_exit("table --budget-ms 60000", 0);

    // the order cap environment override
    {
        std::string cmd = "ZDCHROMA_MAX_ORDER=32 \"" + bin +
                          "\" analyze --ring Z64 --graph gamma0 > /dev/null 2>&1";
        int got = WEXITSTATUS(std::system(cmd.c_str()));
        bool ok = got == 2;
        std::printf("%s exit %d (want 2): env-capped Z64\n", ok ? "ok  " : "FAIL", got);
        if (!ok) ++failures;
    }

    // exports land on disk and look like what they claim to be
    const std::string tmp = "cli_test_out";
    expect_exit("export --ring Z8 --graph gamma --format dot --out " + tmp + ".dot", 0);
    std::string dot = slurp(tmp + ".dot");
    if (dot.find("graph") != 0 || dot.find(" -- ") == std::string::npos) {
        std::printf("FAIL dot export content\n");
        ++failures;
    }
    expect_exit("export --ring Z12 --graph gamma0 --exact --construct --formula "
                "--format json --out " + tmp + ".json", 0);
    std::string json = slurp(tmp + ".json");
    for (const char* key : {"\"ring\"", "\"graph\"", "\"results\"", "\"certificates\"",
                            "\"timings\""})
        if (json.find(key) == std::string::npos) {
            std::printf("FAIL json export key %s\n", key);
            ++failures;
        }
    expect_exit("export --ring Z12 --graph gamma0 --formula --format csv --out " + tmp + ".csv", 0);
    std::string csv = slurp(tmp + ".csv");
    if (csv.rfind("ring,kind,", 0) != 0) {
        std::printf("FAIL csv export header\n");
        ++failures;
    }
    expect_exit("verify --theorem lem1 --p-max 2 --r-max 2 --max-order 8 --solver-cap 8 "
                "--out " + tmp + "_grid.csv --format csv", 0);
    std::string grid = slurp(tmp + "_grid.csv");
    if (grid.rfind("instance,", 0) != 0 || std::count(grid.begin(), grid.end(), '\n') != 3) {
        std::printf("FAIL grid csv rows\n");
        ++failures;
    }

    std::remove((tmp + ".dot").c_str());
    std::remove((tmp + ".json").c_str());
    std::remove((tmp + ".csv").c_str());
    std::remove((tmp + "_grid.csv").c_str());

    std::printf(failures ? "cli integration: %d failure(s)\n" : "cli integration: all ok\n",
                failures);
    return failures ? 1 : 0;
}
