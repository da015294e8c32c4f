#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "cdbent/cli.hpp"

using namespace cdbent;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<const char*> argv) {
    argv.insert(argv.begin(), "cdbent");
    std::ostringstream out, err;
    int rc = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("check: verdicts, expectations and exit codes") {
    CliRun r = run({"check", "--field", "2^3", "--fn", "x^3", "--c", "0", "--pred", "perfect1",
                    "--expect", "true", "--no-timing"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"verdict\":true") != std::string::npos);
    CHECK(r.out.find("\"schema\":1") != std::string::npos);

    CliRun mism = run({"check", "--field", "2^3", "--fn", "x^3", "--c", "0", "--pred", "perfect1",
                       "--expect", "false", "--no-timing"});
    CHECK(mism.exit_code == 1);

    CliRun usage = run({"check", "--field", "2^3", "--c", "0", "--pred", "perfect1"});
    CHECK(usage.exit_code == 2);

    CliRun badflag = run({"check", "--field", "2^3", "--fn", "x", "--format", "yaml"});
    CHECK(badflag.exit_code == 2);
}

TEST_CASE("check: one report per (predicate, c)") {
    CliRun r = run({"check", "--field", "3^3", "--fn", "x^5", "--c", "0,2", "--pred",
                    "strict-perfect1,delta", "--expect", "strict-perfect1=true", "--no-timing"});
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 4);

    CliRun delta = run({"check", "--field", "2^3", "--fn", "x^3", "--c", "1", "--pred", "delta",
                        "--expect", "delta=2", "--no-timing"});
    CHECK(delta.exit_code == 0);
}

TEST_CASE("check: c-set forms") {
    CliRun all = run({"check", "--field", "2^2", "--fn", "x", "--c", "all", "--pred", "delta",
                      "--no-timing"});
    CHECK(count_lines(all.out) == 4);
    CliRun but1 = run({"check", "--field", "2^2", "--fn", "x", "--c", "all-but-1", "--pred",
                       "delta", "--no-timing"});
    CHECK(count_lines(but1.out) == 3);
    CliRun sub = run({"check", "--field", "2^6", "--fn", "x", "--c", "subfield:2-but-1", "--pred",
                      "delta", "--no-timing"});
    CHECK(count_lines(sub.out) == 3);
    CliRun lits = run({"check", "--field", "2^5/1,0,0,1,0,1", "--fn", "x", "--c", "0,g^3,14",
                       "--pred", "delta", "--no-timing"});
    CHECK(count_lines(lits.out) == 3);
}

TEST_CASE("check output is deterministic and worker-independent") {
    std::vector<const char*> args = {"check", "--field", "3^2",  "--fn",   "x^3+g*x", "--c",
                                     "all",   "--pred",  "perfect1,bent1,perfect2", "--no-timing"};
    CliRun a = run(args);
    CliRun b = run(args);
    CHECK(a.out == b.out);
    std::vector<const char*> args1 = args;
    args1.push_back("--workers");
    args1.push_back("1");
    std::vector<const char*> args4 = args;
    args4.push_back("--workers");
    args4.push_back("4");
    CHECK(run(args1).out == run(args4).out);
}

TEST_CASE("check: csv format") {
    CliRun r = run({"check", "--field", "2^3", "--fn", "x^3", "--c", "0", "--pred", "perfect1",
                    "--format", "csv", "--no-timing"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("predicate,c,verdict,method,witness\n", 0) == 0);
    CHECK(r.out.find("perfect1,0,true,balance") != std::string::npos);
}

TEST_CASE("scan-monomials catalog") {
    CliRun r = run({"scan-monomials", "--field", "2^3", "--d", "1..6", "--c", "0", "--format",
                    "csv"});
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 7);  // header + 6 rows
    // every d with gcd 1 over GF(8) is bent at c=0
    CHECK(r.out.find("false") == std::string::npos);

    CliRun gcd2 = run({"scan-monomials", "--field", "3^3", "--d", "2,4", "--c", "0", "--format",
                       "csv"});
    CHECK(gcd2.out.find("2,0,2,") != std::string::npos);
    CHECK(gcd2.out.find("false") != std::string::npos);

    CliRun empty = run({"scan-monomials", "--field", "2^3", "--d", "5..4", "--c", "0", "--format",
                        "csv"});
    CHECK(empty.exit_code == 0);
    CHECK(count_lines(empty.out) == 1);  // header only
}

TEST_CASE("verify subcommand") {
    CliRun r = run({"verify", "lemma1", "--seed", "3", "--count", "3", "--format", "text"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pass") != std::string::npos);

    CliRun j = run({"verify", "gold", "--format", "json"});
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"pass\":true") != std::string::npos);

    CliRun bad = run({"verify", "nonsense"});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("spectrum dumps") {
    CliRun zero = run({"spectrum", "--field", "2^3", "--fn", "0*x", "--kind", "walsh1"});
    CHECK(zero.exit_code == 0);
    // rows with a=0 all carry p^n
    CHECK(zero.out.find("\"a\":0,\"approx\":[8.0,0.0],\"b\":0") != std::string::npos);

    CliRun ident = run({"spectrum", "--field", "2^3", "--fn", "x", "--kind", "walsh1"});
    std::istringstream lines(ident.out);
    std::string line;
    std::size_t diag = 0;
    while (std::getline(lines, line)) {
        bool nonzero = line.find("\"approx\":[8.0,0.0]") != std::string::npos;
        if (nonzero) ++diag;
    }
    CHECK(diag == 8);

    CliRun w2 = run({"spectrum", "--field", "2^3", "--fn", "x^3", "--kind", "walsh2"});
    CHECK(w2.exit_code == 0);
    CHECK(w2.out.find("\"a\":0,\"approx\":[0.0,0.0]") != std::string::npos);

    CliRun toobig = run({"spectrum", "--field", "2^12", "--fn", "x", "--kind", "walsh1"});
    CHECK(toobig.exit_code == 2);
    CHECK(toobig.err.find("TooLarge") != std::string::npos);
}

TEST_CASE("ddt dump") {
    CliRun r = run({"ddt", "--field", "2^3", "--fn", "x^3", "--c", "1", "--format", "json"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"delta\":2") != std::string::npos);
    CliRun csv = run({"ddt", "--field", "2^3", "--fn", "x^3", "--c", "1", "--format", "csv"});
    CHECK(count_lines(csv.out) == 8);
    CHECK(csv.out.rfind("8,0,0,0,0,0,0,0\n", 0) == 0);
}

TEST_CASE("family dump round-trips through --table") {
    std::string path = "cli_family_test.tbl";
    CliRun r = run({"family", "--field", "2^5/1,0,0,1,0,1", "--family", "gold:k=1", "--out",
                    path.c_str()});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"family\":\"gold:k=1\"") != std::string::npos);

    CliRun chk = run({"check", "--field", "2^5/1,0,0,1,0,1", "--table", path.c_str(), "--c", "0",
                      "--pred", "bent1", "--expect", "true", "--no-timing"});
    CHECK(chk.exit_code == 0);
    std::remove(path.c_str());

    CliRun meta = run({"family", "--field", "3^3", "--family", "coulter_matthews:k=2", "--out",
                       "cli_family_cm.tbl"});
    CHECK(meta.exit_code == 0);
    CHECK(meta.out.find("\"gcd\":1") != std::string::npos);
    std::remove("cli_family_cm.tbl");
}

TEST_CASE("expression functions with a traced codomain") {
    CliRun r = run({"check", "--field", "3^2", "--cod", "3^1", "--fn", "x^2", "--c", "1", "--pred",
                    "bent1", "--expect", "true", "--no-timing"});
    CHECK(r.exit_code == 0);
}

#ifdef CDBENT_CLI_PATH
TEST_CASE("installed binary end-to-end") {
    std::string cmd = std::string(CDBENT_CLI_PATH) +
                      " check --field 2^3 --fn x^3 --c 0 --pred perfect1 --expect true"
                      " --no-timing > /dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
}
#endif
