#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <unistd.h>

#include "subprocess.hpp"

using testutil::ProcResult;
using testutil::run_cli;

namespace {

const std::string kScanGrid2 =
    "x,omega_n,w_minus,w_plus,region,energy,delta_h\n"
    "-1,0,1,0,VertexCation,-90,\n"
    "0,0,0.5,0.5,Origin,-94.5,\n"
    "1,0,0,1,VertexAnion,-99,\n"
    "-1,0.5,,,Outside,,\n"
    "0,0.5,0.25,0.25,NeutralAxis,-97.25,2.25\n"
    "1,0.5,,,Outside,,\n"
    "-1,1,,,Outside,,\n"
    "0,1,0,0,VertexNeutral,-100,\n"
    "1,1,,,Outside,,\n";

// A scratch file that removes itself; contents written on construction.
struct TempFile {
    std::string path;

    TempFile(const std::string& suffix, const std::string& contents)
        : path("/tmp/gcdm-cli-test-" + std::to_string(getpid()) + "-" +
               std::to_string(next_id()) + suffix) {
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }

    ~TempFile() { std::remove(path.c_str()); }

    static int next_id() {
        static int id = 0;
        return id++;
    }
};

}  // namespace

TEST_CASE("weights prints the vector and region for both point routes") {
    const ProcResult column =
        run_cli({"weights", "--x", "0.5", "--omega-n", "0.4"});
    CHECK(column.exit_code == 0);
    CHECK(column.out == "0.050000 0.400000 0.550000 InteriorAcceptor\n");
    CHECK(column.err.empty());

    const ProcResult line = run_cli({"weights", "--nu", "0.5", "--nu0", "0.6"});
    CHECK(line.exit_code == 0);
    CHECK(line.out == column.out);

    const ProcResult stepped = run_cli(
        {"weights", "--nu", "1.2", "--nu0", "1.5", "--q", "2"});
    CHECK(stepped.exit_code == 0);
    CHECK(stepped.out == "0.075000 0.250000 0.675000 InteriorAcceptor\n");
}

TEST_CASE("weights rejects bad points and bad option sets") {
    CHECK(run_cli({"weights", "--x", "0.9", "--omega-n", "0.5"}).exit_code ==
          2);
    CHECK(run_cli({"weights", "--x", "0.5"}).exit_code == 2);
    CHECK(run_cli({"weights"}).exit_code == 2);
    CHECK(run_cli({"weights", "--x", "0.5", "--omega-n", "0.4", "--nu", "0.1",
                   "--nu0", "0.5"})
              .exit_code == 2);
    CHECK(run_cli({"weights", "--nu", "0.7", "--nu0", "0.5"}).exit_code == 2);
}

TEST_CASE("classify labels any finite point without failing") {
    const ProcResult outside =
        run_cli({"classify", "--x", "2", "--omega-n", "0.5"});
    CHECK(outside.exit_code == 0);
    CHECK(outside.out == "Outside\n");
    CHECK(run_cli({"classify", "--x", "0", "--omega-n", "1"}).out ==
          "VertexNeutral\n");
    CHECK(run_cli({"classify", "--x", "0.5", "--omega-n", "0.5"}).out ==
          "EdgeAcceptor\n");
}

TEST_CASE("energy evaluates a catalog species at a point") {
    const std::string json = testutil::data_path("fixture.json");
    const ProcResult from_json = run_cli({"energy", "--domain", json,
                                          "--label", "demo-a", "--x", "0.5",
                                          "--omega-n", "0.4"});
    CHECK(from_json.exit_code == 0);
    CHECK(from_json.out == "-98.950000\n");

    const std::string csv = testutil::data_path("fixture.csv");
    const ProcResult from_csv = run_cli({"energy", "--domain", csv, "--label",
                                         "demo-a", "--x", "0.5", "--omega-n",
                                         "0.4"});
    CHECK(from_csv.exit_code == 0);
    CHECK(from_csv.out == from_json.out);
}

TEST_CASE("state prints the full mixed-state summary") {
    const ProcResult demo = run_cli(
        {"state", "--domain", testutil::data_path("fixture.json"), "--label",
         "demo-a", "--x", "0.5", "--omega-n", "0.4"});
    CHECK(demo.exit_code == 0);
    CHECK(demo.out ==
          "label demo-a\n"
          "sector 5 0.050000\n"
          "sector 6 0.400000\n"
          "sector 7 0.550000\n"
          "region InteriorAcceptor\n"
          "mean_particle_number 6.500000\n"
          "purity 0.465000\n");

    const ProcResult stepped = run_cli(
        {"state", "--domain", testutil::data_path("fixture.json"), "--label",
         "demo-sym", "--nu", "1.2", "--nu0", "1.5"});
    CHECK(stepped.exit_code == 0);
    CHECK(stepped.out ==
          "label demo-sym\n"
          "sector 8 0.075000\n"
          "sector 10 0.250000\n"
          "sector 12 0.675000\n"
          "region InteriorAcceptor\n"
          "mean_particle_number 11.200000\n"
          "purity 0.523750\n");
}

TEST_CASE("descriptors prints one line and warns only when warranted") {
    const ProcResult a = run_cli({"descriptors", "--domain",
                                  testutil::data_path("fixture.json"),
                                  "--label", "demo-a"});
    CHECK(a.exit_code == 0);
    CHECK(a.out ==
          "I_q=10.000000 A_q=-1.000000 mu0=-4.500000 eta0=5.500000 "
          "Ebar=-94.500000\n");
    CHECK(a.err.empty());

    const ProcResult sym = run_cli({"descriptors", "--domain",
                                    testutil::data_path("fixture.json"),
                                    "--label", "demo-sym"});
    CHECK(sym.exit_code == 0);
    CHECK(sym.out ==
          "I_q=5.000000 A_q=-5.000000 mu0=0.000000 eta0=5.000000 "
          "Ebar=-45.000000\n");
    CHECK(sym.err.find("warning") != std::string::npos);
    CHECK(sym.err.find("demo-sym") != std::string::npos);
}

TEST_CASE("catalog failures map to the load and domain exit codes") {
    const std::string json = testutil::data_path("fixture.json");
    const ProcResult unknown = run_cli({"energy", "--domain", json, "--label",
                                        "nope", "--x", "0", "--omega-n", "1"});
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.err.find("nope") != std::string::npos);

    CHECK(run_cli({"energy", "--domain", "/does/not/exist.json", "--label",
                   "demo-a", "--x", "0", "--omega-n", "1"})
              .exit_code == 1);

    const TempFile garbage(".json", "{ this is not json");
    CHECK(run_cli({"energy", "--domain", garbage.path, "--label", "demo-a",
                   "--x", "0", "--omega-n", "1"})
              .exit_code == 1);

    const std::string broken = testutil::data_path("bad_ionization.json");
    CHECK(run_cli({"energy", "--domain", broken, "--label", "broken", "--x",
                   "0", "--omega-n", "1"})
              .exit_code == 1);
    CHECK(run_cli({"verify", "--domain", broken}).exit_code == 1);
}

TEST_CASE("the format flag covers extensionless catalog files") {
    const TempFile catalog(
        "", testutil::read_file(testutil::data_path("fixture.csv")));
    CHECK(run_cli({"energy", "--domain", catalog.path, "--label", "demo-a",
                   "--x", "0", "--omega-n", "1"})
              .exit_code == 1);
    const ProcResult forced =
        run_cli({"energy", "--domain", catalog.path, "--format", "csv",
                 "--label", "demo-a", "--x", "0", "--omega-n", "1"});
    CHECK(forced.exit_code == 0);
    CHECK(forced.out == "-100.000000\n");
}

TEST_CASE("scan writes the frozen grid CSV to stdout or a file") {
    const std::string json = testutil::data_path("fixture.json");
    const ProcResult streamed = run_cli(
        {"scan", "--domain", json, "--label", "demo-a", "--grid", "2"});
    CHECK(streamed.exit_code == 0);
    CHECK(streamed.out == kScanGrid2);

    const std::string out_path =
        "/tmp/gcdm-cli-test-scan-" + std::to_string(getpid()) + ".csv";
    const ProcResult written =
        run_cli({"scan", "--domain", json, "--label", "demo-a", "--grid", "2",
                 "--output", out_path});
    CHECK(written.exit_code == 0);
    CHECK(written.out.empty());
    CHECK(testutil::read_file(out_path) == kScanGrid2);
    std::remove(out_path.c_str());

    const ProcResult repeat = run_cli(
        {"scan", "--domain", json, "--label", "demo-a", "--grid", "2"});
    CHECK(repeat.out == streamed.out);

    CHECK(run_cli({"scan", "--domain", json, "--label", "demo-a", "--grid",
                   "1"})
              .exit_code == 2);
}

TEST_CASE("verify reports every check and exits clean") {
    const ProcResult report =
        run_cli({"verify", "--domain", testutil::data_path("fixture.json"),
                 "--synthetic", "2", "--seed", "11"});
    CHECK(report.exit_code == 0);
    CHECK(report.out.find("three-state ensemble verification\n") == 0);
    CHECK(report.out.find("seed: 11\n") != std::string::npos);
    CHECK(report.out.find("catalog domains: 3\n") != std::string::npos);
    CHECK(report.out.find("synthetic domains: 2\n") != std::string::npos);
    CHECK(report.out.find("result: PASS (12/12)\n") != std::string::npos);
    CHECK(report.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("argument errors and help use the expected exit codes") {
    CHECK(run_cli({"--help"}).exit_code == 0);
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"energy", "--label", "demo-a", "--x", "0", "--omega-n",
                   "1"})
              .exit_code == 2);
}
