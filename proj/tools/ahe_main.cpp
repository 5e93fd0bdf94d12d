// Command-line front end: black-hole families, boundary matching, FG
// expansions, renormalized volumes, Dehn fillings, the linearized Bach
// checks, parameter sweeps and the verification suite.
//
// Exit codes: 0 success, 2 invalid input, 3 no solution, 4 numerical failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ahe/action.hpp"
#include "ahe/black_holes.hpp"
#include "ahe/curvature.hpp"
#include "ahe/compactification.hpp"
#include "ahe/dehn.hpp"
#include "ahe/errors.hpp"
#include "ahe/fg.hpp"
#include "ahe/linear_bach.hpp"
#include "ahe/verify.hpp"

using json = nlohmann::ordered_json;
using namespace ahe;

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitNumericalFailure = 4;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Numbers are emitted as 17-significant-digit strings parsed back into JSON
// so reruns are byte-identical across platforms.
json num(double x) { return json::parse(fmt17(x)); }

void write_atomic(const std::string& path_in, const std::string& content) {
  if (path_in.empty() || path_in == "-") {
    std::fputs(content.c_str(), stdout);
    return;
  }
  // the only environment configuration: an output-directory override
  std::string path = path_in;
  if (const char* dir = std::getenv("AHE_OUT_DIR");
      dir && !std::filesystem::path(path).is_absolute())
    path = (std::filesystem::path(dir) / path).string();
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << content;
  }
  std::filesystem::rename(tmp, path);
}

void emit(const std::string& out_path, const json& j, const std::string& summary) {
  write_atomic(out_path, j.dump(2) + "\n");
  if (!out_path.empty() && out_path != "-")
    std::printf("%s -> %s\n", summary.c_str(), out_path.c_str());
  else
    std::printf("%s\n", summary.c_str());
}

struct CsvWriter {
  std::ostringstream os;
  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      os << cols[i] << (i + 1 < cols.size() ? "," : "");
    os << "\r\n";
  }
  void row(const std::vector<std::string>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i)
      os << vals[i] << (i + 1 < vals.size() ? "," : "");
    os << "\r\n";
  }
};

double parse_sign(const std::string& s) {
  if (s == "+1" || s == "1") return 1.0;
  if (s == "0") return 0.0;
  if (s == "-1") return -1.0;
  throw domain_error("c must be one of +1, 0, -1");
}

Gram2 parse_gram2(const std::vector<double>& v) {
  if (v.size() != 4) throw domain_error("2x2 Gram needs 4 row-major entries");
  if (std::fabs(v[1] - v[2]) > 1e-14)
    throw domain_error("Gram matrix must be symmetric");
  Gram2 g{v[0], v[1], v[3]};
  if (!g.spd()) throw domain_error("Gram matrix must be positive definite");
  return g;
}

json boundary_json(const BoundaryMetric3& b) {
  json j;
  j["label"] = b.label();
  j["scalar_curvature"] = num(b.scalar_curvature());
  j["volume"] = num(b.volume());
  return j;
}

json sym3_json(const Sym3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int jj = 0; jj < 3; ++jj) row.push_back(num(m(i, jj)));
    rows.push_back(row);
  }
  return rows;
}

FamilyMetric family_by_name(const std::string& name, double m, int genus,
                            double beta) {
  if (name == "ball") return hyperbolic_ball();
  if (name == "schwarzschild") return ads_schwarzschild(m);
  if (name == "toral") return toral_black_hole(m);
  if (name == "genus2") return higher_genus_black_hole(m, genus);
  if (name == "cusp") return cusp_metric(Gram3{});
  if (name == "quotient") return hyperbolic_quotient(beta);
  throw domain_error("unknown family: " + name);
}

// Reporting tolerances; overrides may only loosen these (internal
// consistency assertions are compiled in and unaffected).
const std::map<std::string, double> kDefaultTolerances = {
    {"einstein", 1e-8}, {"g1", 1e-8},      {"tr_g3", 1e-6},
    {"fg_path", 1e-6},  {"gbw", 1e-3},     {"monotonicity", 1e-5},
    {"matching", 1e-12}, {"boundary", 1e-8}};

std::map<std::string, double> apply_tolerance_overrides(
    const std::vector<std::string>& overrides) {
  auto tols = kDefaultTolerances;
  for (const auto& kv : overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw domain_error("--tol expects key=value");
    std::string key = kv.substr(0, eq);
    double val = std::stod(kv.substr(eq + 1));
    auto it = tols.find(key);
    if (it == tols.end()) throw domain_error("unknown tolerance key: " + key);
    if (val < it->second)
      throw domain_error("tolerance overrides may only loosen reporting: " + key);
    it->second = val;
  }
  return tols;
}

int cmd_blackhole(int n, const std::string& c_str, double m, int genus,
                  const std::vector<double>& periods, const std::string& out) {
  double c = parse_sign(c_str);
  Gram2 gram;
  if (!periods.empty()) {
    if (periods.size() != 2) throw domain_error("--periods expects two values");
    gram = Gram2{periods[0] * periods[0], 0.0, periods[1] * periods[1]};
  }
  BlackHoleSolution bh = make_black_hole(n, c, m, genus, gram);
  std::vector<double> grid;
  for (int i = 1; i <= 25; ++i) grid.push_back(bh.r_plus + 0.08 * i * i);
  double resid = einstein_residual(bh.family.metric, grid);

  json j;
  j["schema"] = "blackhole/1";
  j["n"] = n;
  j["c"] = num(c);
  j["m"] = num(m);
  j["r_plus"] = num(bh.r_plus);
  j["beta"] = num(bh.beta);
  j["admissible"] = true;
  j["topology"] = bh.family.topology;
  j["chi"] = bh.family.chi;
  j["einstein_residual"] = num(resid);
  if (n == 4) {
    j["boundary"] = boundary_json(conformal_infinity(bh, {}));
    j["renormalized_volume"] = num(renormalized_volume_closed_form(bh.family));
  }
  j["competitors"] = json::array();
  emit(out, j, "blackhole n=" + std::to_string(n) + " c=" + c_str +
                   " m=" + fmt17(m) + " r_plus=" + fmt17(bh.r_plus) +
                   " beta=" + fmt17(bh.beta));
  return 0;
}

int cmd_match_boundary(const std::string& c_str, double beta,
                       const std::string& out) {
  double c = parse_sign(c_str);
  CompetitorSet set = masses_for_beta(c, beta);
  int holes = 0;
  for (const auto& comp : set.members)
    if (comp.kind == "black_hole") ++holes;

  json j;
  j["schema"] = "match-boundary/1";
  j["n"] = 4;
  j["c"] = num(c);
  j["beta"] = num(beta);
  j["boundary"] = boundary_json(set.boundary);
  j["black_hole_branches"] = holes;
  json comps = json::array();
  for (const auto& comp : set.members) {
    json cj;
    cj["kind"] = comp.kind;
    cj["topology"] = comp.topology;
    cj["m"] = num(comp.m);
    cj["r_plus"] = num(comp.r_plus);
    if (comp.renormalized_volume)
      cj["renormalized_volume"] = num(*comp.renormalized_volume);
    if (comp.twist_alpha) cj["twist_alpha"] = num(*comp.twist_alpha);
    comps.push_back(cj);
  }
  j["competitors"] = comps;
  emit(out, j, "match-boundary c=" + c_str + " beta=" + fmt17(beta) + " -> " +
                   std::to_string(set.members.size()) + " fillings (" +
                   std::to_string(holes) + " black-hole)");
  if (set.members.empty()) return kExitNoSolution;
  return 0;
}

int cmd_fg(const std::string& family, double m, int genus, double beta, int order,
           const std::map<std::string, double>& tols, const std::string& out) {
  FamilyMetric fam = family_by_name(family, m, genus, beta);
  GeodesicCompactification comp(fam, fam.boundary);
  FGExpansion e = fg_coefficients(comp, order);

  json j;
  j["schema"] = "fg/1";
  j["family"] = family;
  j["m"] = num(m);
  j["order"] = order;
  j["frame"] = "boundary orthonormal, circle direction first where present";
  j["boundary"] = boundary_json(e.boundary);
  json coeffs = json::array();
  for (const auto& g : e.coefficients) coeffs.push_back(sym3_json(g));
  j["coefficients"] = coeffs;
  json rep;
  double g1 = e.coefficients.size() > 1 ? e.coefficients[1].max_abs() : 0.0;
  rep["g1_norm"] = num(g1);
  rep["g1_pass"] = g1 < tols.at("g1");
  if (order >= 3) {
    TTReport tt = tt_check(e);
    rep["tr_g3"] = num(tt.trace_residual);
    rep["tr_g3_pass"] = tt.trace_residual < tols.at("tr_g3");
    rep["divergence_g3"] = num(tt.divergence_residual);
    rep["divergence_structural"] = tt.divergence_structural;
  }
  rep["series_grid_gap"] = num(e.remainder_estimate);
  rep["series_grid_pass"] = e.remainder_estimate < tols.at("fg_path");
  j["residual_report"] = rep;
  emit(out, j, "fg family=" + family + " order=" + std::to_string(order) +
                   " path-gap=" + fmt17(e.remainder_estimate));
  return 0;
}

int cmd_renvol(const std::string& family, double m, int genus, double beta,
               const std::string& format, const std::string& out) {
  FamilyMetric fam = family_by_name(family, m, genus, beta);
  GeodesicCompactification comp(fam, fam.boundary);
  VolumeExpansion v = volume_expansion_fit(comp);
  GaussBonnetReport gb = gauss_bonnet_weyl_check(fam, fam.chi);

  if (format == "csv") {
    CsvWriter w;
    w.header({"family", "c", "m", "v0", "v2", "V_ren", "weyl_energy", "chi",
              "gap_3_7"});
    w.row({family, fmt17(fam.c), fmt17(m), fmt17(v.v0), fmt17(v.v2),
           fmt17(v.V_ren), fmt17(gb.weyl_energy_full), std::to_string(fam.chi),
           fmt17(gb.relative_gap)});
    write_atomic(out, w.os.str());
    if (!out.empty() && out != "-") std::printf("renvol -> %s\n", out.c_str());
    return 0;
  }
  json j;
  j["schema"] = "renvol/1";
  j["family"] = family;
  j["c"] = num(fam.c);
  j["m"] = num(m);
  j["v0"] = num(v.v0);
  j["v2"] = num(v.v2);
  j["V_ren"] = num(v.V_ren);
  j["fit_residual"] = num(v.fit_residual);
  j["r_window"] = json::array({num(v.r_window.first), num(v.r_window.second)});
  j["weyl_energy"] = num(gb.weyl_energy_full);
  j["chi"] = fam.chi;
  j["gap_3_7"] = num(gb.relative_gap);
  emit(out, j, "renvol family=" + family + " V_ren=" + fmt17(v.V_ren) +
                   " gap(3.7)=" + fmt17(gb.relative_gap));
  return 0;
}

json filling_json(const DehnFilling& f) {
  json j;
  j["schema"] = "dehn/1";
  j["dimension"] = f.dimension;
  j["sigma"] = json::array({f.sigma.p, f.sigma.q});
  j["L"] = num(f.L);
  j["R"] = num(f.R);
  j["core_length"] = num(f.core_length);
  j["ortho_height"] = num(f.ortho_height);
  j["twist"] = num(f.twist);
  json bc;
  bc["gram"] = json::array({num(f.base_torus.gram.a), num(f.base_torus.gram.b),
                            num(f.base_torus.gram.b), num(f.base_torus.gram.c)});
  if (f.dimension == 4) {
    bc["beta2"] = num(f.beta2);
    j["mass"] = num(f.mass);
  }
  j["boundary_class"] = bc;
  j["cusp_flag"] = f.cusp_flag;
  return j;
}

int cmd_dehn_fill(int dim, const std::vector<double>& gram_entries,
                  const std::vector<long long>& sigma, double beta2,
                  const std::string& out) {
  FlatTorus2 torus{parse_gram2(gram_entries)};
  if (sigma.size() != 2) throw domain_error("--sigma expects p,q");
  SigmaClass s{sigma[0], sigma[1]};
  DehnFilling f = (dim == 3) ? fill_3d(torus, s) : fill_4d(torus, s, beta2);
  emit(out, filling_json(f),
       "dehn fill" + std::to_string(dim) + "d sigma=(" + std::to_string(s.p) +
           "," + std::to_string(s.q) + ") R=" + fmt17(f.R) +
           " core=" + fmt17(f.core_length));
  return 0;
}

int cmd_dehn_enumerate(const std::vector<double>& gram_entries, double lmax,
                       const std::string& out) {
  FlatTorus2 torus{parse_gram2(gram_entries)};
  auto list = primitive_geodesics(torus, lmax);
  json j;
  j["schema"] = "dehn-enumerate/1";
  j["gram"] = json::array({num(torus.gram.a), num(torus.gram.b),
                           num(torus.gram.b), num(torus.gram.c)});
  j["L_max"] = num(lmax);
  json cl = json::array();
  for (const auto& [s, L] : list) {
    json e;
    e["sigma"] = json::array({s.p, s.q});
    e["length"] = num(L);
    cl.push_back(e);
  }
  j["classes"] = cl;
  emit(out, j, "dehn enumerate: " + std::to_string(list.size()) + " classes");
  return 0;
}

int cmd_bach(unsigned seed, int draws, const std::string& out) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> numd(-9, 9);
  auto rand_gauge_block = [&]() {
    RatMat4 mm{};
    int d2 = numd(rng), d3 = numd(rng);
    mm[1][1] = Rational(d2);
    mm[2][2] = Rational(d3);
    mm[3][3] = Rational(-d2 - d3);
    mm[1][2] = mm[2][1] = Rational(numd(rng));
    mm[1][3] = mm[3][1] = Rational(numd(rng));
    mm[2][3] = mm[3][2] = Rational(numd(rng));
    return mm;
  };
  bool all_zero = true, all_gauge = true;
  for (int i = 0; i < draws; ++i) {
    SolutionBlocks b;
    b.c0 = Rational(numd(rng));
    b.c1 = Rational(numd(rng));
    b.C2 = rand_gauge_block();
    b.C3 = rand_gauge_block();
    b.A1 = rand_gauge_block();
    for (int p = 0; p < 4; ++p)
      for (int q = p; q < 4; ++q) b.A0[p][q] = b.A0[q][p] = Rational(numd(rng));
    InvariantForm h = general_solution(b);
    if (!bach_residual(h).is_zero()) all_zero = false;
    if (!gauge_check(h).holds()) all_gauge = false;
  }
  InvariantForm h5;
  h5.set(1, 2, RatPoly::monomial(Rational(1), 5));
  bool deg5 = !bach_residual(h5).is_zero();
  KernelReport k = kernel_dimensions();

  json j;
  j["schema"] = "bach/1";
  j["seed"] = seed;
  j["draws"] = draws;
  j["residual_exact_zero"] = all_zero;
  j["gauge_holds"] = all_gauge;
  j["degree5_excluded"] = deg5;
  j["kernel_dimensions"] = {{"parameters", k.parameter_dimension},
                            {"brute_force", k.brute_force_dimension},
                            {"gauge_bach_only", k.gauge_bach_only_dimension}};
  bool pass = all_zero && all_gauge && deg5 &&
              k.parameter_dimension == k.brute_force_dimension;
  j["pass"] = pass;
  emit(out, j,
       std::string("bach polynomial check: ") + (pass ? "PASS" : "FAIL"));
  return pass ? 0 : 1;
}

int cmd_sweep_beta(const std::string& c_str, double start, double stop, int count,
                   const std::string& out) {
  double c = parse_sign(c_str);
  if (count < 2) throw domain_error("sweep needs count >= 2");
  CsvWriter w;
  w.header({"r_plus", "beta", "dbeta_drplus", "m"});
  for (int i = 0; i < count; ++i) {
    double r = start + (stop - start) * i / (count - 1);
    w.row({fmt17(r), fmt17(beta_of_rplus(c, r)), fmt17(dbeta_drplus(c, r)),
           fmt17(mass_of_rplus(c, r))});
  }
  write_atomic(out, w.os.str());
  if (!out.empty() && out != "-")
    std::printf("sweep beta c=%s n=%d -> %s\n", c_str.c_str(), count, out.c_str());
  return 0;
}

int cmd_sweep_renvol(const std::string& family, double start, double stop,
                     int count, const std::string& out) {
  if (count < 2) throw domain_error("sweep needs count >= 2");
  CsvWriter w;
  w.header({"family", "c", "m", "v0", "v2", "V_ren", "weyl_energy", "chi",
            "gap_3_7"});
  for (int i = 0; i < count; ++i) {
    double m = start + (stop - start) * i / (count - 1);
    FamilyMetric fam = family_by_name(family, m, 2, 2 * std::numbers::pi);
    GeodesicCompactification comp(fam, fam.boundary);
    VolumeExpansion v = volume_expansion_fit(comp);
    GaussBonnetReport gb = gauss_bonnet_weyl_check(fam, fam.chi);
    w.row({family, fmt17(fam.c), fmt17(m), fmt17(v.v0), fmt17(v.v2),
           fmt17(v.V_ren), fmt17(gb.weyl_energy_full), std::to_string(fam.chi),
           fmt17(gb.relative_gap)});
  }
  write_atomic(out, w.os.str());
  if (!out.empty() && out != "-")
    std::printf("sweep renvol family=%s n=%d -> %s\n", family.c_str(), count,
                out.c_str());
  return 0;
}

int cmd_sweep_fg(const std::string& family, double start, double stop,
                 int count, const std::string& out) {
  if (count < 2) throw domain_error("sweep needs count >= 2");
  CsvWriter w;
  w.header({"family", "m", "g2_theta", "g2_f1", "g2_f2", "g3_theta", "g3_f1",
            "g3_f2", "tr_g3", "g1_norm", "path_gap"});
  for (int i = 0; i < count; ++i) {
    double m = start + (stop - start) * i / (count - 1);
    FamilyMetric fam = family_by_name(family, m, 2, 2 * std::numbers::pi);
    GeodesicCompactification comp(fam, fam.boundary);
    FGExpansion e = fg_coefficients(comp, 3);
    const Sym3 &g2 = e.coefficients[2], &g3 = e.coefficients[3];
    w.row({family, fmt17(m), fmt17(g2(0, 0)), fmt17(g2(1, 1)), fmt17(g2(2, 2)),
           fmt17(g3(0, 0)), fmt17(g3(1, 1)), fmt17(g3(2, 2)),
           fmt17(g3.trace()), fmt17(e.coefficients[1].max_abs()),
           fmt17(e.remainder_estimate)});
  }
  write_atomic(out, w.os.str());
  if (!out.empty() && out != "-")
    std::printf("sweep fg family=%s n=%d -> %s\n", family.c_str(), count,
                out.c_str());
  return 0;
}

int cmd_verify(unsigned seed, const std::string& out) {
  auto checks = run_full_verification(seed);
  bool all = true;
  json arr = json::array();
  for (const auto& c : checks) {
    std::printf("%-8s %-4s %6.2fs  %s — %s\n", c.id.c_str(),
                c.pass ? "PASS" : "FAIL", c.seconds, c.name.c_str(),
                c.detail.c_str());
    all = all && c.pass;
    json cj;
    cj["id"] = c.id;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    arr.push_back(cj);
  }
  if (!out.empty()) {
    json j;
    j["schema"] = "verify/1";
    j["seed"] = seed;
    j["all_pass"] = all;
    j["checks"] = arr;
    write_atomic(out, j.dump(2) + "\n");
  }
  std::printf("verify: %s\n", all ? "ALL PASS" : "FAILURES PRESENT");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification toolkit for asymptotically hyperbolic Einstein 4-metrics"};
  app.require_subcommand(1);

  std::string out, c_str = "+1", family = "toral", format = "json";
  int n = 4, genus = 2, order = 3, count = 16, draws = 100;
  double m = 1.0, beta = std::numbers::pi, beta2 = 1.0;
  double start = 0.25, stop = 4.0, lmax = 2.5;
  unsigned seed = 20240801;
  std::vector<double> periods, gram{1.0, 0.0, 0.0, 1.0};
  std::vector<long long> sigma{1, 0};
  std::vector<std::string> tol_overrides;

  auto* bh = app.add_subcommand("blackhole", "materialize a black-hole family member");
  bh->add_option("--n", n, "dimension (4 or 5)")->default_val(4);
  bh->add_option("--c", c_str, "horizon curvature sign: +1, 0, -1")->required();
  bh->add_option("--m", m, "mass")->required();
  bh->add_option("--genus", genus, "genus for c = -1")->default_val(2);
  bh->add_option("--periods", periods, "torus periods p1,p2 for c = 0")->delimiter(',');
  bh->add_option("--out", out, "output path (default stdout)");

  auto* mb = app.add_subcommand("match-boundary",
                                "all fillings with conformal infinity S1(beta) x fiber");
  mb->add_option("--c", c_str)->required();
  mb->add_option("--beta", beta, "boundary circle length")->required();
  mb->add_option("--out", out);

  auto* fg = app.add_subcommand("fg", "Fefferman-Graham expansion coefficients");
  fg->add_option("--family", family, "ball|schwarzschild|toral|genus2|cusp|quotient")
      ->required();
  fg->add_option("--m", m)->default_val(1.0);
  fg->add_option("--genus", genus)->default_val(2);
  fg->add_option("--beta", beta, "translation length (quotient family)");
  fg->add_option("--order", order, "expansion order <= 4")->default_val(3);
  fg->add_option("--tol", tol_overrides, "loosen a reporting tolerance key=value");
  fg->add_option("--out", out);

  auto* rv = app.add_subcommand("renvol", "renormalized volume and the curvature identity");
  rv->add_option("--family", family)->required();
  rv->add_option("--m", m)->default_val(1.0);
  rv->add_option("--genus", genus)->default_val(2);
  rv->add_option("--beta", beta);
  rv->add_option("--format", format, "json|csv")->default_val("json");
  rv->add_option("--out", out);

  auto* dehn = app.add_subcommand("dehn", "solid-torus fillings");
  dehn->require_subcommand(1);
  auto* f3 = dehn->add_subcommand("fill3d", "hyperbolic tube filling");
  f3->add_option("--gram", gram, "2x2 Gram, row-major a,b,b,c")->delimiter(',');
  f3->add_option("--sigma", sigma, "primitive class p,q")->delimiter(',')->required();
  f3->add_option("--out", out);
  auto* f4 = dehn->add_subcommand("fill4d", "toral black-hole filling");
  f4->add_option("--gram", gram)->delimiter(',');
  f4->add_option("--sigma", sigma)->delimiter(',')->required();
  f4->add_option("--beta2", beta2, "second circle period")->required();
  f4->add_option("--out", out);
  auto* fe = dehn->add_subcommand("enumerate", "primitive classes up to a length");
  fe->add_option("--gram", gram)->delimiter(',');
  fe->add_option("--lmax", lmax)->required();
  fe->add_option("--out", out);

  auto* bach = app.add_subcommand("bach", "linearized Bach polynomial checks");
  bool check_polys = false;
  bach->add_flag("--check-polynomials", check_polys, "run the polynomial suite");
  bach->add_option("--seed", seed)->default_val(20240801u);
  bach->add_option("--draws", draws)->default_val(100);
  bach->add_option("--out", out);

  auto* sweep = app.add_subcommand("sweep", "parameter sweeps to CSV");
  sweep->require_subcommand(1);
  auto* sb = sweep->add_subcommand("beta", "beta(r_plus) curve");
  sb->add_option("--c", c_str)->required();
  sb->add_option("--start", start)->required();
  sb->add_option("--stop", stop)->required();
  sb->add_option("--count", count)->required();
  sb->add_option("--out", out);
  auto* sr = sweep->add_subcommand("renvol", "V_ren(m) curve");
  sr->add_option("--family", family)->default_val("toral");
  sr->add_option("--start", start)->required();
  sr->add_option("--stop", stop)->required();
  sr->add_option("--count", count)->required();
  sr->add_option("--out", out);
  auto* sf = sweep->add_subcommand("fg", "FG coefficients along a mass range");
  sf->add_option("--family", family)->default_val("toral");
  sf->add_option("--start", start)->required();
  sf->add_option("--stop", stop)->required();
  sf->add_option("--count", count)->required();
  sf->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "run the full identity suite");
  verify->add_option("--seed", seed)->default_val(20240801u);
  verify->add_option("--out", out, "also write a JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bh->parsed())
      return cmd_blackhole(n, c_str, m, genus, periods, out);
    if (mb->parsed()) return cmd_match_boundary(c_str, beta, out);
    if (fg->parsed()) {
      auto tols = apply_tolerance_overrides(tol_overrides);
      return cmd_fg(family, m, genus, beta, order, tols, out);
    }
    if (rv->parsed()) return cmd_renvol(family, m, genus, beta, format, out);
    if (dehn->parsed()) {
      if (f3->parsed()) return cmd_dehn_fill(3, gram, sigma, beta2, out);
      if (f4->parsed()) return cmd_dehn_fill(4, gram, sigma, beta2, out);
      if (fe->parsed()) return cmd_dehn_enumerate(gram, lmax, out);
    }
    if (bach->parsed()) return cmd_bach(seed, draws, out);
    if (sweep->parsed()) {
      if (sb->parsed()) return cmd_sweep_beta(c_str, start, stop, count, out);
      if (sr->parsed()) return cmd_sweep_renvol(family, start, stop, count, out);
      if (sf->parsed()) return cmd_sweep_fg(family, start, stop, count, out);
    }
    if (verify->parsed()) return cmd_verify(seed, out);
  } catch (const domain_error& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitInvalidInput;
  } catch (const type_error& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitInvalidInput;
  } catch (const invalid_metric_error& e) {
    std::fprintf(stderr, "invalid metric: %s\n", e.what());
    return kExitInvalidInput;
  } catch (const no_solution_error& e) {
    std::fprintf(stderr, "no solution: %s\n", e.what());
    return kExitNoSolution;
  } catch (const numerical_error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumericalFailure;
  } catch (const consistency_error& e) {
    std::fprintf(stderr, "internal consistency failure: %s\n", e.what());
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumericalFailure;
  }
  return 0;
}
