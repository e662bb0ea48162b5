#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dvgauss/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "dvg_cli_stdout.txt";
    const std::string cmd = std::string(DVG_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return RunResult{code, buf.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("purity-table reproduces the reference purities") {
    const RunResult r = run_cli("purity-table --sigma 2,0,2 --dims 3,5,7,9");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"d", "purity", "limit"});
    const double expected[] = {0.52865, 0.50099, 0.50003, 0.50000};
    for (int i = 0; i < 4; ++i) {
        CHECK(std::stod(rows[i + 1][1]) == Catch::Approx(expected[i]).margin(5e-4));
        CHECK(std::stod(rows[i + 1][2]) == Catch::Approx(0.5).margin(1e-12));
    }
}

TEST_CASE("spectrum subcommand emits a descending spectrum") {
    const RunResult r = run_cli("spectrum --sigma 2,1,1 --dim 5");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 6);
    CHECK(std::stod(rows[1][1]) == Catch::Approx(1.0).margin(1e-8));
    for (std::size_t i = 2; i < rows.size(); ++i) {
        CHECK(std::abs(std::stod(rows[i][1])) < 1e-8);
    }
}

TEST_CASE("thermal subcommand emits both reference columns") {
    const RunResult r = run_cli("thermal --nu 2 --dim 7");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == std::vector<std::string>{"n", "lambda_n", "N_n", "deviation"});
    CHECK(std::stod(rows[1][1]) == Catch::Approx(0.6667).margin(5e-4));
    CHECK(std::stod(rows[1][2]) == Catch::Approx(0.6669).margin(1e-4));
    CHECK(std::stod(rows[7][1]) == Catch::Approx(0.0010).margin(5e-4));
}

TEST_CASE("commutator subcommand lists the modulus-sorted eigenvalues") {
    const RunResult r = run_cli("commutator --dim 11");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 12);
    CHECK(std::stod(rows[1][1]) == Catch::Approx(-1.4e-8).margin(1e-9));
    CHECK(std::stod(rows[11][1]) == Catch::Approx(-34.92).margin(5e-3));
}

TEST_CASE("wigner subcommand emits a normalized grid in CSV and JSON") {
    const RunResult r = run_cli("wigner --kappa 1 --dim 31");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 31 * 31 + 1);
    CHECK(rows[0] == std::vector<std::string>{"n", "k", "w"});
    double sum = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) sum += std::stod(rows[i][2]);
    CHECK(sum == Catch::Approx(1.0).margin(1e-10));

    const RunResult j = run_cli("wigner --kappa 1 --dim 5 --format json");
    REQUIRE(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.stdout_text);
    CHECK(parsed["d"] == 5);
    CHECK(parsed["values"].size() == 25);
}

TEST_CASE("transform subcommand reports both norms per dimension") {
    const RunResult r = run_cli("transform --A 0.78539816339744831 --B 0,0 --sigma 2,1,1 --dims 5");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"A_re", "B_re", "B_im", "d", "norm_kind", "deviation"});
    REQUIRE(rows[1][4] == "frobenius");
    REQUIRE(rows[2][4] == "spectral");
    CHECK(std::stod(rows[2][5]) == Catch::Approx(0.1701).margin(5e-4));
}

TEST_CASE("check subcommand passes on a clean build") {
    const RunResult r = run_cli("check");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("fail") == std::string::npos);
}

TEST_CASE("exit codes distinguish bad arguments, IO failures, and invariants") {
    CHECK(run_cli("purity-table --sigma 1,2,1 --dims 5").exit_code == 2);   // not PD
    CHECK(run_cli("purity-table --sigma 2,0 --dims 5").exit_code == 2);     // wrong arity
    CHECK(run_cli("purity-table --sigma 2,0,2 --dims 4").exit_code == 2);   // even d
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("purity-table --sigma 2,0,2 --dims 5 --out /nonexistent-dir/x.csv").exit_code == 3);
}

TEST_CASE("output files are written atomically and runs are deterministic") {
    const fs::path dir = fs::temp_directory_path() / "dvg_cli_out";
    fs::create_directories(dir);
    const fs::path a = dir / "a.csv";
    const fs::path b = dir / "b.csv";
    REQUIRE(run_cli("wigner --kappa 2 --dim 9 --out " + a.string()).exit_code == 0);
    REQUIRE(run_cli("wigner --kappa 2 --dim 9 --out " + b.string()).exit_code == 0);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK_FALSE(sa.str().empty());
    CHECK_FALSE(fs::exists(dir / "a.csv.tmp"));
}

TEST_CASE("config file supplies defaults and flags win on conflict") {
    const fs::path cfg = fs::temp_directory_path() / "dvg_cli_cfg.ini";
    {
        std::ofstream out(cfg);
        out << "[purity-table]\n";
        out << "sigma=\"2,0,2\"\n";
        out << "dims=\"3,5\"\n";
        out << "digits=6\n";
    }
    const RunResult r = run_cli("purity-table --config " + cfg.string());
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 3);
    CHECK(std::stod(rows[1][1]) == Catch::Approx(0.52865).margin(5e-4));

    const RunResult over = run_cli("purity-table --dims 7 --config " + cfg.string());
    REQUIRE(over.exit_code == 0);
    const auto rows2 = parse_csv(over.stdout_text);
    REQUIRE(rows2.size() == 2);
    CHECK(rows2[1][0] == "7");
}

TEST_CASE("--digits controls printed precision") {
    const RunResult r = run_cli("purity-table --sigma 2,0,2 --dims 9 --digits 5");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    CHECK(rows[1][1] == "0.5");
    CHECK(rows[1][2] == "0.5");
}
