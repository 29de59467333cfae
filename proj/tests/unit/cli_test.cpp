#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coulombz/app.hpp"
#include "coulombz/rotation.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using coulombz::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<double> column(const std::string& name) const {
    std::size_t idx = 0;
    while (idx < header.size() && header[idx] != name) ++idx;
    REQUIRE(idx < header.size());
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(r[idx]);
    return out;
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

Csv parse_csv(const std::string& text) {
  CHECK(text.find('\r') == std::string::npos);
  std::istringstream in(text);
  std::string line;
  Csv csv;
  REQUIRE(std::getline(in, line));
  csv.header = split(line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    for (const auto& cell : split(line)) row.push_back(std::stod(cell));
    REQUIRE(row.size() == csv.header.size());
    for (double v : row) CHECK(std::isfinite(v));
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("spectrum table") {
  const auto r = invoke({"spectrum", "--Z", "200", "--xi", "0.4", "--kappa", "-1",
                         "--nmax", "5"});
  REQUIRE(r.code == 0);
  const Csv csv = parse_csv(r.out);
  CHECK(csv.header == std::vector<std::string>{"n", "kappa", "epsilon_over_m"});
  CHECK(csv.rows.size() == 6);
  for (double e : csv.column("epsilon_over_m")) {
    CHECK(e > -1.0);
    CHECK(e < 1.0);
  }
  CHECK(csv.column("n") == std::vector<double>{0, 1, 2, 3, 4, 5});

  // Positive κ has no n = 0 level.
  const Csv pos = parse_csv(
      invoke({"spectrum", "--Z", "200", "--xi", "0.75", "--kappa", "1"}).out);
  CHECK(pos.rows.size() == 5);
  CHECK(pos.column("n").front() == 1.0);

  const Csv many = parse_csv(
      invoke({"spectrum", "--Z", "150", "--xi", "0.8", "--kappamax", "2", "--nmax", "2"})
          .out);
  CHECK(many.rows.size() == 3 + 2 + 3 + 2);
}

TEST_CASE("spectrum with xi = 0 carries the Sommerfeld column") {
  const auto r = invoke({"spectrum", "--Z", "100", "--xi", "0", "--kappamax", "2"});
  REQUIRE(r.code == 0);
  const Csv csv = parse_csv(r.out);
  REQUIRE(csv.header.size() == 4);
  CHECK(csv.header[3] == "sommerfeld_over_m");
  const auto e = csv.column("epsilon_over_m");
  const auto s = csv.column("sommerfeld_over_m");
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(std::abs(e[i] - s[i]) <= 1e-14);
}

TEST_CASE("parameter validation exit codes") {
  const auto bad = invoke({"spectrum", "--Z", "274", "--xi", "0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("non-Hermitian regime") != std::string::npos);
  CHECK(bad.out.empty());

  const auto warn = invoke({"spectrum", "--Z", "250", "--xi", "0.4"});
  CHECK(warn.code == 0);
  CHECK(warn.err.find("no-transition bound") != std::string::npos);

  const auto strict =
      invoke({"spectrum", "--Z", "250", "--xi", "0.4", "--require-no-transition"});
  CHECK(strict.code == 2);
  CHECK(strict.err.find("no-transition bound") != std::string::npos);

  CHECK(invoke({"spectrum", "--kappa", "0"}).code == 2);
  CHECK(invoke({"spectrum", "--Z", "-3"}).code == 2);
  CHECK(invoke({"spectrum", "--bogus"}).code == 2);
  CHECK(invoke({"spectrum", "--Z", "abc"}).code == 2);
  CHECK(invoke({"spectrum", "--format", "xml"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"figure", "fig9"}).code == 2);
  CHECK(invoke({"wavefunction", "--grid", "1,0.5,10"}).code == 2);
  CHECK(invoke({"wavefunction", "--Z", "548", "--alpha", "0.5", "--xi", "0.375"}).code ==
        2);

  const auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("spectrum") != std::string::npos);
}

TEST_CASE("json mirrors csv") {
  const std::vector<std::string> base = {"spectrum", "--Z", "180", "--xi", "0.6",
                                         "--nmax", "3"};
  const Csv csv = parse_csv(invoke(base).out);
  auto args = base;
  args.insert(args.end(), {"--format", "json"});
  const auto doc = nlohmann::json::parse(invoke(args).out);
  CHECK(doc["columns"].get<std::vector<std::string>>() == csv.header);
  REQUIRE(doc["rows"].size() == csv.rows.size());
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    for (std::size_t j = 0; j < csv.header.size(); ++j) {
      CHECK(doc["rows"][i][csv.header[j]].get<double>() == csv.rows[i][j]);
    }
  }
  CHECK(doc["metadata"]["Z"].get<double>() == 180.0);
}

TEST_CASE("ground table") {
  const auto r = invoke({"ground", "--Z", "274", "--alpha", "0.0072992700729927005",
                         "--xi", "0.5"});
  REQUIRE(r.code == 0);
  const Csv csv = parse_csv(r.out);
  CHECK(csv.rows.size() == 1);
  CHECK(std::abs(csv.column("epsilon0_over_m")[0]) <= 1e-12);
  CHECK(csv.column("gamma")[0] == -1.0);
}

TEST_CASE("wavefunction export") {
  const auto r = invoke({"wavefunction", "--Z", "200", "--xi", "0.75", "--n", "1"});
  REQUIRE(r.code == 0);
  const Csv csv = parse_csv(r.out);
  CHECK(csv.header == std::vector<std::string>{"r_times_m", "phi_plus", "phi_minus"});
  CHECK(csv.rows.size() == 2000);

  const auto g = invoke({"wavefunction", "--grid", "0,40,401", "--uniform"});
  REQUIRE(g.code == 0);
  const Csv uni = parse_csv(g.out);
  CHECK(uni.rows.size() == 401);
  CHECK(uni.rows[10][0] == doctest::Approx(1.0));

  const auto neg = invoke({"wavefunction", "--Z", "200", "--xi", "0.75", "--kappa", "1",
                           "--negative", "--grid", "0.01,30,300"});
  REQUIRE(neg.code == 0);
  CHECK(parse_csv(neg.out).rows.size() == 300);
}

TEST_CASE("figure exports") {
  const auto f1 = invoke({"figure", "fig1"});
  REQUIRE(f1.code == 0);
  const Csv c1 = parse_csv(f1.out);
  CHECK(c1.header ==
        std::vector<std::string>{"Z", "n", "kappa", "xi", "epsilon_over_m"});
  CHECK(!c1.rows.empty());
  // ξ = 0.4 stops at the Hermiticity limit αZ = √5.
  for (const auto& row : c1.rows) {
    if (row[3] == 0.4) CHECK(row[0] / 137.0 <= std::sqrt(5.0));
  }

  const auto f2 = invoke({"figure", "fig2"});
  REQUIRE(f2.code == 0);
  const Csv c2 = parse_csv(f2.out);
  CHECK(c2.header == std::vector<std::string>{"xi", "epsilon0_over_m"});
  CHECK(c2.rows.front()[0] == doctest::Approx(1.0 - 137.0 / 200.0));
  CHECK(c2.rows.back()[0] == 1.0);
  const auto p = coulombz::make_params(1, 1.0 / 137.0, 200, 1.0, -1);
  CHECK(c2.rows.back()[1] == doctest::Approx(coulombz::rotation(p).c_minus).epsilon(1e-14));

  for (const std::string id : {"fig3a", "fig3b"}) {
    const auto f3 = invoke({"figure", id});
    REQUIRE(f3.code == 0);
    const Csv c3 = parse_csv(f3.out);
    CHECK(c3.header ==
          std::vector<std::string>{"n", "r_times_m", "phi_plus", "phi_minus"});
    std::map<int, std::pair<std::vector<double>, std::vector<double>>> series;
    for (const auto& row : c3.rows) {
      auto& s = series[static_cast<int>(row[0])];
      s.first.push_back(row[1]);
      s.second.push_back(row[2] * row[2] + row[3] * row[3]);
    }
    CHECK(series.size() == 3);
    for (const auto& [n, s] : series) {
      CHECK(std::abs(oracle::trapezoid(s.first, s.second) - 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("output is deterministic and file output matches stdout") {
  const auto path = std::filesystem::temp_directory_path() / "coulombz_cli_test.csv";
  for (const std::string id : {"fig1", "fig2", "fig3a", "fig3b"}) {
    const auto a = invoke({"figure", id});
    const auto b = invoke({"figure", id});
    CHECK(a.out == b.out);
    REQUIRE(invoke({"figure", id, "--out", path.string()}).code == 0);
    std::ifstream in(path, std::ios::binary);
    const std::string file((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    CHECK(file == a.out);
  }
  std::filesystem::remove(path);
  CHECK(invoke({"spectrum", "--out", "/nonexistent/dir/x.csv"}).code == 1);
}

TEST_CASE("verify command") {
  const auto ok = invoke({"verify", "--quick"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS shooting_agreement") != std::string::npos);

  const auto bad = invoke({"verify", "--quick", "--inject-fault"});
  CHECK(bad.code == 3);
  CHECK(bad.out.find("FAIL kinetic_balance") != std::string::npos);
  CHECK(bad.out.find("FAIL first_order_residual") != std::string::npos);
}

}
