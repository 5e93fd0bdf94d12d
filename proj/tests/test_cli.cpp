// End-to-end checks of the ahe binary: JSON/CSV emission, determinism,
// exit codes, and structural validation against the shipped schemas.
//
// Usage: test_cli <path-to-ahe> <path-to-schemas>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

#define REQUIRE(cond, msg)                                                    \
  do {                                                                        \
    if (!(cond)) {                                                            \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (msg)   \
                << "\n";                                                      \
      std::exit(1);                                                           \
    }                                                                         \
  } while (0)

std::string g_binary;
fs::path g_tmp;

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr, "popen failed");
  while (fgets(buf.data(), buf.size(), p)) out += buf.data();
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// minimal structural validator: type, required, properties, items
void validate(const json& schema, const json& value, const std::string& where) {
  if (schema.contains("type")) {
    std::string t = schema["type"];
    bool ok = (t == "object" && value.is_object()) ||
              (t == "array" && value.is_array()) ||
              (t == "string" && value.is_string()) ||
              (t == "number" && value.is_number()) ||
              (t == "integer" && value.is_number_integer()) ||
              (t == "boolean" && value.is_boolean());
    REQUIRE(ok, where + ": expected type " + t);
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      REQUIRE(value.contains(key.get<std::string>()),
              where + ": missing required key " + key.get<std::string>());
  if (schema.contains("properties") && value.is_object())
    for (auto& [key, sub] : schema["properties"].items())
      if (value.contains(key)) validate(sub, value[key], where + "." + key);
  if (schema.contains("items") && value.is_array())
    for (const auto& item : value) validate(schema["items"], item, where + "[]");
}

json load_schema(const fs::path& dir, const std::string& name) {
  fs::path p = dir / name;
  REQUIRE(fs::exists(p), "schema file missing: " + p.string());
  return json::parse(slurp(p));
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  REQUIRE(argc >= 3, "usage: test_cli <ahe-binary> <schema-dir>");
  g_binary = argv[1];
  fs::path schema_dir = argv[2];
  g_tmp = fs::temp_directory_path() / "ahe_cli_test";
  fs::create_directories(g_tmp);

  // blackhole: values and byte-identical reruns
  {
    fs::path f1 = g_tmp / "bh1.json", f2 = g_tmp / "bh2.json";
    RunResult r1 = run("blackhole --c 0 --m 0.5 --out " + f1.string());
    RunResult r2 = run("blackhole --c 0 --m 0.5 --out " + f2.string());
    REQUIRE(r1.exit_code == 0 && r2.exit_code == 0, "blackhole exit code");
    REQUIRE(slurp(f1) == slurp(f2), "blackhole output not deterministic");
    json j = json::parse(slurp(f1));
    validate(load_schema(schema_dir, "blackhole.schema.json"), j, "blackhole");
    REQUIRE(std::fabs(j["r_plus"].get<double>() - 1.0) < 1e-12, "r_plus != 1");
    REQUIRE(std::fabs(j["beta"].get<double>() - 4.18879020478639) < 1e-9,
            "beta != 4 pi / 3");
  }

  // match-boundary: the non-uniqueness pair at beta = pi
  {
    fs::path f = g_tmp / "mb.json";
    RunResult r = run("match-boundary --c +1 --beta 3.14159265358979 --out " +
                      f.string());
    REQUIRE(r.exit_code == 0, "match-boundary exit code");
    json j = json::parse(slurp(f));
    validate(load_schema(schema_dir, "match-boundary.schema.json"), j,
             "match-boundary");
    auto members = j["competitors"];
    REQUIRE(members.size() == 3, "expected 2 branches + quotient");
    REQUIRE(std::fabs(members[0]["m"].get<double>() - 5.0 / 27.0) < 1e-8,
            "first branch mass");
    REQUIRE(std::fabs(members[1]["m"].get<double>() - 1.0) < 1e-8,
            "second branch mass");
    REQUIRE(members[2]["kind"] == "hyperbolic_quotient", "quotient missing");
    // above beta_o: no black-hole branch, competitors remain: exit 0
    RunResult r2 = run("match-boundary --c +1 --beta 4.0 --out " +
                       (g_tmp / "mb2.json").string());
    REQUIRE(r2.exit_code == 0, "match-boundary beta=4 exit");
    json j2 = json::parse(slurp(g_tmp / "mb2.json"));
    REQUIRE(j2["black_hole_branches"].get<int>() == 0, "no branch expected");
  }

  // fg
  {
    fs::path f = g_tmp / "fg.json";
    RunResult r = run("fg --family toral --m 1 --order 3 --out " + f.string());
    REQUIRE(r.exit_code == 0, "fg exit code");
    json j = json::parse(slurp(f));
    validate(load_schema(schema_dir, "fg.schema.json"), j, "fg");
    double g3_00 = j["coefficients"][3][0][0].get<double>();
    REQUIRE(std::fabs(g3_00 + 4.0 / 3.0) < 1e-9, "g3 theta component");
    REQUIRE(j["residual_report"]["tr_g3_pass"].get<bool>(), "tr g3 report");
    // tolerance overrides may only loosen
    RunResult bad = run("fg --family toral --tol tr_g3=1e-9 --out -");
    REQUIRE(bad.exit_code == 2, "tightening override must be rejected");
  }

  // renvol json + csv
  {
    fs::path f = g_tmp / "rv.json";
    RunResult r = run("renvol --family ball --out " + f.string());
    REQUIRE(r.exit_code == 0, "renvol exit");
    json j = json::parse(slurp(f));
    validate(load_schema(schema_dir, "renvol.schema.json"), j, "renvol");
    REQUIRE(std::fabs(j["V_ren"].get<double>() - 13.159472534785811) < 1e-5,
            "ball V_ren");
    fs::path fc = g_tmp / "rv.csv";
    RunResult rc = run("renvol --family toral --m 1 --format csv --out " +
                       fc.string());
    REQUIRE(rc.exit_code == 0, "renvol csv exit");
    auto rows = parse_csv(slurp(fc));
    REQUIRE(rows.size() == 2 && rows[0][0] == "family", "csv header");
    REQUIRE(slurp(fc).find("\r\n") != std::string::npos, "csv must be CRLF");
  }

  // dehn
  {
    fs::path f = g_tmp / "dehn.json";
    RunResult r = run(
        "dehn fill4d --gram 1,0,0,1 --sigma 1,0 --beta2 1 --out " + f.string());
    REQUIRE(r.exit_code == 0, "dehn exit");
    json j = json::parse(slurp(f));
    validate(load_schema(schema_dir, "dehn.schema.json"), j, "dehn");
    REQUIRE(std::fabs(j["R"].get<double>() - 1.2843) < 1e-3, "matched radius");
    RunResult bad = run("dehn fill3d --gram 1,0,0,1 --sigma 2,2 --out -");
    REQUIRE(bad.exit_code == 2, "non-primitive sigma must exit 2");
    RunResult en = run("dehn enumerate --gram 1,0,0,1 --lmax 1.5 --out " +
                       (g_tmp / "en.json").string());
    REQUIRE(en.exit_code == 0, "enumerate exit");
    REQUIRE(json::parse(slurp(g_tmp / "en.json"))["classes"].size() == 4,
            "enumerate count");
  }

  // invalid input exit code
  {
    RunResult r = run("blackhole --c +1 --m -1 --out -");
    REQUIRE(r.exit_code == 2, "inadmissible mass must exit 2");
  }

  // bach
  {
    fs::path f = g_tmp / "bach.json";
    RunResult r = run("bach --check-polynomials --seed 7 --draws 25 --out " +
                      f.string());
    REQUIRE(r.exit_code == 0, "bach exit");
    REQUIRE(r.stdout_text.find("PASS") != std::string::npos, "bach pass line");
    json j = json::parse(slurp(f));
    validate(load_schema(schema_dir, "bach.schema.json"), j, "bach");
    REQUIRE(j["kernel_dimensions"]["parameters"].get<int>() == 26, "kernel dim");
  }

  // enumerate schema
  {
    json j = json::parse(slurp(g_tmp / "en.json"));
    validate(load_schema(schema_dir, "dehn-enumerate.schema.json"), j,
             "dehn-enumerate");
  }

  // verify: full identity suite, exit 0, schema-valid report
  {
    fs::path f = g_tmp / "verify.json";
    RunResult r = run("verify --out " + f.string());
    REQUIRE(r.exit_code == 0, "verify exit");
    json j = json::parse(slurp(f));
    validate(load_schema(schema_dir, "verify.schema.json"), j, "verify");
    REQUIRE(j["all_pass"].get<bool>(), "verify all_pass");
  }

  // sweep fg: CSV rows of expansion data
  {
    fs::path f = g_tmp / "sweepfg.csv";
    RunResult r = run(
        "sweep fg --family toral --start 0.5 --stop 2 --count 4 --out " +
        f.string());
    REQUIRE(r.exit_code == 0, "sweep fg exit");
    auto rows = parse_csv(slurp(f));
    REQUIRE(rows.size() == 5, "4 rows + header");
    REQUIRE(std::fabs(std::stod(rows[1][5]) + 4.0 / 3.0 * 0.5) < 1e-8,
            "g3 theta column at m = 1/2");
  }

  // output-directory override via the environment
  {
    fs::path dir = g_tmp / "outdir";
    fs::create_directories(dir);
    std::string cmd = "AHE_OUT_DIR=" + dir.string() + " " + g_binary +
                      " blackhole --c 0 --m 0.5 --out env.json >/dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0, "env override run");
    REQUIRE(fs::exists(dir / "env.json"), "AHE_OUT_DIR must redirect output");
  }

  // sweep beta: interior maximum near 1/sqrt(3) for c = +1
  {
    fs::path f = g_tmp / "sweep.csv";
    RunResult r = run("sweep beta --c +1 --start 0.1 --stop 3 --count 100 --out " +
                      f.string());
    REQUIRE(r.exit_code == 0, "sweep exit");
    auto rows = parse_csv(slurp(f));
    REQUIRE(rows.size() == 101, "100 rows + header");
    double best_r = 0, best_b = -1;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      double rr = std::stod(rows[i][0]), bb = std::stod(rows[i][1]);
      if (bb > best_b) {
        best_b = bb;
        best_r = rr;
      }
    }
    REQUIRE(std::fabs(best_r - 0.5774) < 0.05, "maximum near 1/sqrt(3)");
    // c = -1: strictly decreasing over [0.6, 5]
    fs::path f2 = g_tmp / "sweep2.csv";
    run("sweep beta --c -1 --start 0.6 --stop 5 --count 40 --out " + f2.string());
    auto rows2 = parse_csv(slurp(f2));
    for (std::size_t i = 2; i < rows2.size(); ++i)
      REQUIRE(std::stod(rows2[i][1]) < std::stod(rows2[i - 1][1]),
              "beta must decrease for c = -1");
  }

  // sweep renvol: finite column, no nan
  {
    fs::path f = g_tmp / "sweepv.csv";
    RunResult r = run(
        "sweep renvol --family toral --start 0.25 --stop 4 --count 16 --out " +
        f.string());
    REQUIRE(r.exit_code == 0, "sweep renvol exit");
    auto rows = parse_csv(slurp(f));
    REQUIRE(rows.size() == 17, "16 rows + header");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      double v = std::stod(rows[i][5]);
      REQUIRE(std::isfinite(v), "V_ren must be finite");
    }
    // byte-identical rerun
    fs::path f2 = g_tmp / "sweepv2.csv";
    run("sweep renvol --family toral --start 0.25 --stop 4 --count 16 --out " +
        f2.string());
    REQUIRE(slurp(f) == slurp(f2), "sweep not deterministic");
  }

  std::puts("test_cli: all checks passed");
  return 0;
}
