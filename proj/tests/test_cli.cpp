#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

// End-to-end checks of the installed command line over real files.

namespace {

namespace fs = std::filesystem;

struct CommandResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

CommandResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out_path =
        fs::temp_directory_path() / ("substoch_cli_out_" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(SUBSTOCH_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    fs::remove(out_path);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return CommandResult{code, buf.str()};
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

struct Fixture {
    fs::path matrix = write_file("substoch_S.txt", "matrix 2 2\n0.2 0.1\n0.3 0.4\n");
    fs::path weights = write_file("substoch_w.txt", "weights 2\n1 1\n");
    fs::path ones = write_file("substoch_f.txt", "vector 2\n1 1\n");
    fs::path not_positive = write_file("substoch_bad_f.txt", "vector 2\n1 0\n");
    fs::path malformed = write_file("substoch_broken.txt", "matrix 2 2\n0.2 0.1\nx 0.4\n");
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("complete prints the golden completion") {
    Fixture fx;
    const auto r = run_cli("complete --matrix " + fx.matrix.string() + " --weights " +
                           fx.weights.string() + " --vector " + fx.ones.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("matrix 2 2") != std::string::npos);
    CHECK(r.output.find("0.55") != std::string::npos);
    CHECK(r.output.find("0.45") != std::string::npos);
    CHECK(r.output.find("completion lambda=1\n") != std::string::npos);
}

TEST_CASE("check-cone rejection names the 1-based index and exits 1") {
    Fixture fx;
    const auto r = run_cli("check-cone --matrix " + fx.matrix.string() + " --vector " +
                           fx.not_positive.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("index 2") != std::string::npos);

    const auto ok = run_cli("check-cone --matrix " + fx.matrix.string() + " --vector " +
                            fx.ones.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("ACCEPTED") != std::string::npos);
}

TEST_CASE("classify prints the class and column masses") {
    Fixture fx;
    const auto r = run_cli("classify --matrix " + fx.matrix.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("StrictlySubstochastic") != std::string::npos);
    CHECK(r.output.find("0.5 0.5") != std::string::npos);
}

TEST_CASE("malformed files exit 2 with a one-line diagnostic naming file and line") {
    Fixture fx;
    const auto r = run_cli("classify --matrix " + fx.malformed.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find(fx.malformed.string() + ":3") != std::string::npos);

    const auto usage = run_cli("frobnicate");
    CHECK(usage.exit_code == 2);

    const auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
}

TEST_CASE("missing weights default to the counting measure") {
    Fixture fx;
    const auto with = run_cli("leontief --matrix " + fx.matrix.string() + " --weights " +
                              fx.weights.string() + " --vector " + fx.ones.string());
    const auto without =
        run_cli("leontief --matrix " + fx.matrix.string() + " --vector " + fx.ones.string());
    CHECK(with.exit_code == 0);
    CHECK(with.output == without.output);
}

TEST_CASE("solver commands print vector files that agree with each other") {
    Fixture fx;
    const auto res = run_cli("resolvent --matrix " + fx.matrix.string() + " --lambda 1 " +
                             " --vector " + fx.ones.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.rfind("vector 2\n", 0) == 0);
    const auto page = run_cli("pagerank --matrix " + fx.matrix.string() + " --vector " +
                              fx.ones.string());
    CHECK(page.output == res.output);

    const auto gate = run_cli("resolvent --matrix " + fx.matrix.string() +
                              " --lambda 0.4 --vector " + fx.ones.string());
    CHECK(gate.exit_code == 2);

    const auto spec = run_cli("spectral --matrix " + fx.matrix.string());
    CHECK(spec.exit_code == 0);
    CHECK(spec.output.rfind("rho=0.5", 0) == 0);
    CHECK(spec.output.find("converged=true") != std::string::npos);
}

TEST_CASE("combine rejects a non-member and combines members") {
    Fixture fx;
    const auto second = write_file("substoch_f2.txt", "vector 2\n0.3 0.7\n");
    const auto ok = run_cli("combine --matrix " + fx.matrix.string() + " --vectors " +
                            fx.ones.string() + "," + second.string() + " --alphas 0.5,0.5");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.rfind("vector 2\n", 0) == 0);
    CHECK(ok.output.find("0.547722557505166") != std::string::npos);  // sqrt(0.3)

    const auto bad = run_cli("combine --matrix " + fx.matrix.string() + " --vectors " +
                             fx.ones.string() + "," + fx.not_positive.string());
    CHECK(bad.exit_code == 1);
}

TEST_CASE("kernel-demo covers the built-in kernels") {
    const auto demo = run_cli("kernel-demo --kernel const:0.5 --n 4");
    CHECK(demo.exit_code == 0);
    CHECK(demo.output.find("StrictlySubstochastic") != std::string::npos);
    CHECK(demo.output.find("completion lambda=0.5") != std::string::npos);

    const auto table = run_cli("kernel-demo --kernel quadratic --refine 8,16,32");
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("n=8 ") != std::string::npos);
    CHECK(table.output.find("n=32 ") != std::string::npos);

    const auto unknown = run_cli("kernel-demo --kernel rbf");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("verify reports all properties and repeats byte-identically") {
    const auto first = run_cli("verify --seed 42 --trials 40");
    CHECK(first.exit_code == 0);
    for (const char* name :
         {"young_sharpened", "holder_seminorm", "kernel_holder", "kernel_seminorm_chain",
          "sum_split", "sum_split_seminorm", "cone_norm_bound", "cone_mixed_bound",
          "log_convex_closure", "stochastic_completion"}) {
        CHECK(first.output.find(std::string("PASS ") + name) != std::string::npos);
    }
    const auto second = run_cli("verify --seed 42 --trials 40");
    CHECK(first.output == second.output);

    const auto other_seed = run_cli("verify --seed 43 --trials 40");
    CHECK(other_seed.exit_code == 0);
}

}  // TEST_SUITE
