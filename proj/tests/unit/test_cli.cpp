#include <doctest.h>

#include "../support/testutil.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string cli_path() {
    if (const char* env = std::getenv("EVT_CLI_BIN")) return env;
    return "./tools/evt";
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out = "/tmp/evt_cli_out.txt";
    const std::string err = "/tmp/evt_cli_err.txt";
    const std::string cmd = cli_path() + " " + args + " >" + out + " 2>" + err;
    const int status = std::system(cmd.c_str());
    const int code = (status >= 256) ? status / 256 : status;  // WEXITSTATUS without the macro
    return {code, slurp(out), slurp(err)};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

const char* kHandFile = "/tmp/evt_hand_sample.txt";

struct Fixture {
    Fixture() {
        // 1, e, e^2, e^3 with a comment and blank line in the mix
        write_file(kHandFile,
                   "# top of file comment\n1\n2.718281828459045235\n\n7.389056098930650227\n"
                   "20.08553692318766774  # inline comment\n");
    }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("estimate reproduces the hand values through the full pipeline") {
    Fixture fx;
    const auto hill = run("estimate --input " + std::string(kHandFile) + " --method hill --k 3");
    CHECK(hill.code == 0);
    CHECK(hill.out == "k,method,estimate\n3,hill,2\n");
    const auto mop = run("estimate --input " + std::string(kHandFile) +
                         " --method mop --p 0 --k 3 --format csv");
    CHECK(mop.code == 0);
    CHECK(mop.out == "k,method,estimate\n3,mop,2\n");
}

TEST_CASE("json output carries the schema version") {
    Fixture fx;
    const auto r = run("estimate --input " + std::string(kHandFile) +
                       " --method hill --k 3 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"schema\": 1") != std::string::npos);
    CHECK(r.out.find("\"command\": \"estimate\"") != std::string::npos);
}

TEST_CASE("input failures exit with code 2 and a line-numbered message") {
    write_file("/tmp/evt_bad.txt", "1.5\nnot-a-number\n2.5\n");
    const auto bad = run("estimate --input /tmp/evt_bad.txt --method hill --k 1");
    CHECK(bad.code == 2);
    CHECK(bad.err.find(":2:") != std::string::npos);

    write_file("/tmp/evt_empty.txt", "# nothing but comments\n");
    CHECK(run("estimate --input /tmp/evt_empty.txt --method hill --k 1").code == 2);

    CHECK(run("estimate --input /tmp/evt_missing_file.txt --method hill --k 1").code == 2);
    Fixture fx;
    CHECK(run("estimate --input " + std::string(kHandFile) + " --method nope --k 1").code == 2);
    CHECK(run("estimate --input " + std::string(kHandFile) + " --k 0:5").code == 2);
}

TEST_CASE("numeric-domain failures exit with code 3") {
    write_file("/tmp/evt_neg.txt", "-4\n-3\n-2\n-1\n");
    const auto r = run("estimate --input /tmp/evt_neg.txt --method hill --k 3");
    CHECK(r.code == 3);
    CHECK(!r.err.empty());
}

TEST_CASE("selection failures exit with code 4") {
    std::stringstream flat;
    for (int i = 0; i < 400; ++i) flat << "5.0\n";
    write_file("/tmp/evt_flat.txt", flat.str());
    const auto r = run("bootstrap-k --input /tmp/evt_flat.txt --B 100 --seed 1");
    CHECK(r.code == 4);
}

TEST_CASE("stochastic commands refuse to run without a seed") {
    const auto sim = run("simulate --model gev --xi 0.5 --n 50 --reps 1 --raw");
    CHECK(sim.code == 2);
    Fixture fx;
    const auto boot = run("bootstrap-k --input " + std::string(kHandFile));
    CHECK(boot.code == 2);
}

TEST_CASE("campaign reruns are byte identical") {
    const std::string args =
        "simulate --model hall-welsh --xi 1 --beta 1 --rho -0.5 --C 1 --n 600 --seed 7 "
        "--reps 15 --methods hill,mvrb --k 10:120:10";
    const auto r1 = run(args);
    const auto r2 = run(args);
    CHECK(r1.code == 0);
    CHECK(!r1.out.empty());
    CHECK(r1.out == r2.out);
    // header advertises both the raw and the corrected columns
    CHECK(r1.out.find("hill_mse") != std::string::npos);
    CHECK(r1.out.find("mvrb_mse") != std::string::npos);
}

TEST_CASE("raw emission feeds back into estimate") {
    const auto rc = std::system(
        (cli_path() +
         " simulate --model gev --xi 0.5 --loc 1 --n 400 --seed 3 --reps 1 --raw > /tmp/evt_raw.txt")
            .c_str());
    CHECK(rc == 0);
    const auto est = run("estimate --input /tmp/evt_raw.txt --method moment --k 50");
    CHECK(est.code == 0);
    CHECK(est.out.find("moment") != std::string::npos);
}

TEST_CASE("port and choose-model subcommands") {
    write_file("/tmp/evt_12345.txt", "1\n2\n3\n4\n5\n");
    const auto choose = run("choose-model --input /tmp/evt_12345.txt");
    CHECK(choose.code == 0);
    CHECK(choose.out == "n,gumbel_w\n5,1\n");

    // location invariance through the CLI: shifted file gives identical rows
    std::stringstream base, shifted;
    base.precision(17);
    shifted.precision(17);
    for (int i = 0; i < 200; ++i) {
        const double v = 1.0 + static_cast<double>((i * 37) % 256) / 16.0;
        base << v << "\n";
        shifted << v + 1000.0 << "\n";
    }
    write_file("/tmp/evt_port_a.txt", base.str());
    write_file("/tmp/evt_port_b.txt", shifted.str());
    const auto pa = run("port --input /tmp/evt_port_a.txt --s 0.1 --method hill --k 20");
    const auto pb = run("port --input /tmp/evt_port_b.txt --s 0.1 --method hill --k 20");
    CHECK(pa.code == 0);
    CHECK(pa.out == pb.out);
}

TEST_CASE("clustering subcommand on a hand-counted series") {
    std::stringstream series;
    for (int i = 0; i < 100; ++i) series << (i < 3 ? "1.0" : "0.0") << "\n";
    write_file("/tmp/evt_ei.txt", series.str());
    const auto r = run("ei --input /tmp/evt_ei.txt --block-len 10 --threshold 0.5");
    CHECK(r.code == 0);
    CHECK(r.out.find("0.33333333333333331,10,0.5,3") != std::string::npos);
}

TEST_CASE("convergence subcommand emits penultimate improvements") {
    const auto r = run("converge --model normal --n 100,1000 --format csv");
    CHECK(r.code == 0);
    std::stringstream ss(r.out);
    std::string line;
    std::getline(ss, line);  // header
    int rows = 0;
    while (std::getline(ss, line)) {
        ++rows;
        // columns: n,a_n,b_n,ultimate,penultimate,shape
        std::stringstream ls(line);
        std::string tok;
        std::vector<double> cols;
        while (std::getline(ls, tok, ',')) cols.push_back(std::stod(tok));
        REQUIRE(cols.size() == 6);
        CHECK(cols[4] < cols[3]);
        CHECK(cols[5] < 0.0);
    }
    CHECK(rows == 2);
}

}  // TEST_SUITE
