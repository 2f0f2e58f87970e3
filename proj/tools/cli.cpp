#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <complex>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "skl/checks.hpp"
#include "skl/ellfun.hpp"
#include "skl/geom.hpp"
#include "skl/leafdim.hpp"
#include "skl/parabolics.hpp"
#include "skl/rootsys.hpp"
#include "skl/sing_io.hpp"
#include "skl/toric.hpp"

namespace skl::cli {

namespace {

using json = nlohmann::json;
using cplx = std::complex<double>;

cplx parse_pair(const std::string& s, const char* what) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument(std::string(what) + ": expected 're,im'");
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": malformed number in '" + s + "'");
  }
}

json ratvec_json(const RatVec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(rat_str(c));
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "a,b,m;a,b,m;..." -> divisor with points a + b tau.
ellfun::EllipticDivisor parse_divisor(const ellfun::EllipticContext& ctx, const std::string& s) {
  std::vector<std::pair<cplx, long long>> raw;
  std::stringstream entries(s);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    if (entry.empty()) continue;
    std::stringstream fields(entry);
    std::string a, b, m;
    if (!std::getline(fields, a, ',') || !std::getline(fields, b, ',') ||
        !std::getline(fields, m, ','))
      throw std::invalid_argument("divisor entry '" + entry + "': expected 'a,b,mult'");
    raw.emplace_back(ellfun::from_lattice_coords(ctx, std::stod(a), std::stod(b)), std::stoll(m));
  }
  return ellfun::make_divisor(ctx, raw);
}

int parse_algebra(const std::string& s) {
  if (s == "sl2") return 2;
  if (s == "sl3") return 3;
  if (s.rfind("sln:", 0) == 0) {
    int n = std::stoi(s.substr(4));
    if (n < 2) throw std::invalid_argument("--algebra sln:N needs N >= 2");
    return n;
  }
  throw std::invalid_argument("unknown algebra '" + s + "' (sl2|sl3|sln:N)");
}

void emit(std::ostream& out, const json& j, bool pretty, const std::string& table) {
  if (pretty)
    out << table;
  else
    out << j.dump() << "\n";
}

// ---- subcommand bodies; each returns the exit code ----

int cmd_rootsys_info(std::ostream& out, const std::string& family, int rank, bool pretty) {
  auto rs = rootsys::build_root_system({rootsys::family_from_char(family.at(0)), rank});
  json j;
  j["schema"] = 1;
  j["family"] = family;
  j["rank"] = rank;
  j["ambient_dim"] = rs.ambient_dim;
  j["num_roots"] = rs.roots.size();
  j["num_positive_roots"] = rs.positive_roots.size();
  j["simple_roots"] = json::array();
  for (const auto& a : rs.simple_roots) j["simple_roots"].push_back(ratvec_json(a));
  j["fundamental_weights"] = json::array();
  for (const auto& w : rs.fundamental_weights) j["fundamental_weights"].push_back(ratvec_json(w));
  j["fundamental_coweights"] = json::array();
  for (const auto& w : rs.fundamental_coweights)
    j["fundamental_coweights"].push_back(ratvec_json(w));
  j["weyl_vector"] = ratvec_json(rs.weyl_vector);
  j["cartan_matrix"] = rs.cartan_matrix;

  std::ostringstream t;
  t << rs.name() << ": " << rs.roots.size() << " roots, ambient dim " << rs.ambient_dim << "\n";
  t << "  simple roots:\n";
  for (int i = 0; i < rs.rank(); ++i) {
    t << "    alpha_" << i + 1 << " = (";
    for (int k = 0; k < rs.ambient_dim; ++k)
      t << (k ? ", " : "") << rat_str(rs.simple_roots[i][k]);
    t << ")\n";
  }
  t << "  weyl vector = (";
  for (int k = 0; k < rs.ambient_dim; ++k) t << (k ? ", " : "") << rat_str(rs.weyl_vector[k]);
  t << ")\n";
  emit(out, j, pretty, t.str());
  return 0;
}

int cmd_dim(std::ostream& out, const std::string& file, bool hecke, bool pretty) {
  auto sd = sing_io::parse_singularity_data(read_file(file));
  auto detail = leafdim::leaf_dimension_detail(sd);
  json j;
  j["schema"] = 1;
  j["dimension"] = hecke ? leafdim::hecke_dimension(sd) : detail.dimension;
  j["gamma_per_point"] = detail.gamma_per_point;
  j["gamma_sum"] = detail.gamma_sum;
  j["center_dim"] = sd.group.center_dim;
  j["parity_warning"] = !detail.gamma_sum_even;
  j["pi1_identity"] = leafdim::pi1_image(sd).is_identity();
  j["data"] = json::parse(sing_io::write_singularity_data(sd));

  std::ostringstream t;
  t << (hecke ? "hecke" : "leaf") << " dimension = " << j["dimension"].get<long long>()
    << "  (2*" << sd.group.center_dim << " center + " << detail.gamma_sum << " gamma)\n";
  emit(out, j, pretty, t.str());
  return 0;
}

json table_row_json(const parabolics::TableRow& row) {
  json jr;
  jr["type"] = std::string(1, rootsys::family_char(row.type.family)) + std::to_string(row.type.rank);
  jr["compact_orbit_roots"] = row.compact_roots;
  jr["flag_dimensions"] = row.flag_dims;
  return jr;
}

int cmd_classify(std::ostream& out, const std::string& family, int rank, int max_rank,
                 bool pretty) {
  json j;
  j["schema"] = 1;
  std::ostringstream t;
  if (!family.empty()) {
    auto rs = rootsys::build_root_system({rootsys::family_from_char(family.at(0)), rank});
    parabolics::TableRow row;
    row.type = rs.type;
    row.compact_roots = parabolics::compact_orbit_roots(rs);
    for (int i : row.compact_roots) row.flag_dims.push_back(parabolics::flag_dimension(rs, i));
    j.update(table_row_json(row));
    t << j["type"].get<std::string>() << ": roots {";
    for (std::size_t k = 0; k < row.compact_roots.size(); ++k)
      t << (k ? ", " : "") << "alpha_" << row.compact_roots[k];
    t << "} dims {";
    for (std::size_t k = 0; k < row.flag_dims.size(); ++k) t << (k ? ", " : "") << row.flag_dims[k];
    t << "}\n";
  } else {
    j["table"] = json::array();
    t << std::left << std::setw(6) << "type" << std::setw(24) << "compact-orbit roots"
      << "flag dims\n";
    for (const auto& row : parabolics::classification_table(max_rank)) {
      j["table"].push_back(table_row_json(row));
      std::ostringstream roots, dims;
      for (std::size_t k = 0; k < row.compact_roots.size(); ++k)
        roots << (k ? "," : "") << row.compact_roots[k];
      for (std::size_t k = 0; k < row.flag_dims.size(); ++k)
        dims << (k ? "," : "") << row.flag_dims[k];
      t << std::left << std::setw(6)
        << (std::string(1, rootsys::family_char(row.type.family)) + std::to_string(row.type.rank))
        << std::setw(24) << ("{" + roots.str() + "}") << "{" << dims.str() << "}\n";
    }
  }
  emit(out, j, pretty, t.str());
  return 0;
}

int cmd_ellfun_check(std::ostream& out, const std::string& tau_s, int points, double tol,
                     std::uint64_t seed, bool pretty) {
  const cplx tau = parse_pair(tau_s, "--tau");
  auto r = checks::run_ellfun_checks(tau, points, seed);
  const bool pass = r.pass(tol, 1e-8);
  json j;
  j["schema"] = 1;
  j["tau"] = {tau.real(), tau.imag()};
  j["points"] = points;
  j["max_residuals"] = {{"theta_shift_1", r.theta_shift_1},
                        {"theta_shift_tau", r.theta_shift_tau},
                        {"theta_odd", r.theta_odd},
                        {"sigma_shift_1", r.sigma_shift_1},
                        {"sigma_shift_tau", r.sigma_shift_tau},
                        {"sigma_symmetry", r.sigma_symmetry},
                        {"rho_shift_1", r.rho_shift_1},
                        {"rho_shift_tau", r.rho_shift_tau},
                        {"rho_odd", r.rho_odd}};
  j["sigma_residue_err"] = r.sigma_residue_err;
  j["rho_residue_err"] = r.rho_residue_err;
  j["pass"] = pass;
  std::ostringstream t;
  t << "elliptic function checks at tau = " << tau << "\n"
    << "  max periodicity residual: " << r.max_periodicity() << "\n"
    << "  residue errors: sigma " << r.sigma_residue_err << ", rho " << r.rho_residue_err << "\n"
    << (pass ? "PASS" : "FAIL") << "\n";
  emit(out, j, pretty, t.str());
  return pass ? 0 : 1;
}

int cmd_cdybe_check(std::ostream& out, const std::string& algebra, const std::string& tau_s,
                    int samples, double tol, std::uint64_t seed, bool pretty) {
  const int n = parse_algebra(algebra);
  const cplx tau = parse_pair(tau_s, "--tau");
  auto r = checks::run_cdybe_checks(n, tau, samples, seed);
  const bool pass = r.pass(tol);
  json j;
  j["schema"] = 1;
  j["algebra"] = algebra;
  j["samples"] = samples;
  j["convention_a_max_residual"] = r.convention_a_max;
  j["convention_b_max_residual"] = r.convention_b_max;
  j["selected_convention"] = std::string(1, r.selected_convention);
  j["antisymmetry_max"] = r.antisymmetry_max;
  j["casimir_residue_err"] = r.casimir_residue_err;
  j["fd_deviation_max"] = r.fd_deviation_max;
  j["pass"] = pass;
  std::ostringstream t;
  t << "CDYBE residuals for " << algebra << " over " << samples << " samples\n"
    << "  convention a: " << r.convention_a_max << "\n"
    << "  convention b: " << r.convention_b_max << "\n"
    << "  antisymmetry: " << r.antisymmetry_max << ", casimir: " << r.casimir_residue_err
    << ", fd gap: " << r.fd_deviation_max << "\n"
    << (pass ? "PASS" : "FAIL") << "\n";
  emit(out, j, pretty, t.str());
  return pass ? 0 : 1;
}

int cmd_project_check(std::ostream& out, const std::string& algebra, const std::string& tau_s,
                      double tol, std::uint64_t seed, bool pretty) {
  const int n = parse_algebra(algebra);
  const cplx tau = parse_pair(tau_s, "--tau");
  auto r = checks::run_projection_checks(n, tau, seed);
  const bool pass = r.pass(tol, 1e-7, 1e-8);
  json j;
  j["schema"] = 1;
  j["algebra"] = algebra;
  j["reproduce_holomorphic"] = r.reproduce_holomorphic;
  j["annihilate_rho"] = r.annihilate_rho;
  j["annihilate_sigma"] = r.annihilate_sigma;
  j["idempotence"] = r.idempotence;
  j["skew_adjoint"] = r.skew_adjoint;
  j["pass"] = pass;
  std::ostringstream t;
  t << "projection kernels for " << algebra << "\n"
    << "  reproduce O(U+): " << r.reproduce_holomorphic << "\n"
    << "  annihilate rho:  " << r.annihilate_rho << "\n"
    << "  annihilate sigma: " << r.annihilate_sigma << "\n"
    << "  P+ idempotence:  " << r.idempotence << "\n"
    << "  R skew residual: " << r.skew_adjoint << "\n"
    << (pass ? "PASS" : "FAIL") << "\n";
  emit(out, j, pretty, t.str());
  return pass ? 0 : 1;
}

int cmd_genus(std::ostream& out, const std::string& example, long long n, bool pretty) {
  auto tag = geom::example_tag_from_string(example);
  auto chain = geom::genus_chain(tag, n);
  json j;
  j["schema"] = 1;
  j["example"] = example;
  j["n"] = n;
  j["chain"] = json::array();
  std::ostringstream t;
  t << example << " example, n = " << n << "\n";
  for (const auto& step : chain) {
    j["chain"].push_back({{"label", step.label}, {"value", step.value}});
    t << "  " << std::left << std::setw(32) << step.label << step.value << "\n";
  }
  const bool half = geom::halfdim_consistency(tag, n);
  j["halfdim_consistent"] = half;
  t << "  half-dimension consistency: " << (half ? "yes" : "NO") << "\n";
  emit(out, j, pretty, t.str());
  return half ? 0 : 1;
}

int cmd_toric_hilbert(std::ostream& out, long long k, bool pretty) {
  if (k < 1) throw std::invalid_argument("toric hilbert: --k must be >= 1");
  toric::Cone2D sigma({1, k}, {1, -k});
  toric::Cone2D dual = toric::dual_cone(sigma);
  auto basis = toric::hilbert_basis(dual);
  auto rel = toric::binomial_relation(basis);
  json j;
  j["schema"] = 1;
  j["k"] = k;
  j["cone"] = {{sigma.u[0], sigma.u[1]}, {sigma.v[0], sigma.v[1]}};
  j["dual_cone"] = {{dual.u[0], dual.u[1]}, {dual.v[0], dual.v[1]}};
  j["hilbert_basis"] = json::array();
  for (const auto& p : basis) j["hilbert_basis"].push_back({p[0], p[1]});
  j["relation"] = {{"lhs_exponents", rel.lhs}, {"rhs_exponents", rel.rhs}};
  std::ostringstream t;
  t << "sigma = cone((1," << k << "), (1,-" << k << ")), dual generated by (" << dual.u[0] << ","
    << dual.u[1] << ") and (" << dual.v[0] << "," << dual.v[1] << ")\n  hilbert basis:";
  for (const auto& p : basis) t << " (" << p[0] << "," << p[1] << ")";
  t << "\n  relation: x^" << rel.lhs[0] << " = w z\n";
  emit(out, j, pretty, t.str());
  return 0;
}

int cmd_toric_rays(std::ostream& out, const std::string& family, int rank,
                   const std::string& coweight, const std::string& basis_name, bool pretty) {
  auto rs = rootsys::build_root_system({rootsys::family_from_char(family.at(0)), rank});
  RatVec coords;
  std::stringstream fields(coweight);
  std::string c;
  while (std::getline(fields, c, ',')) coords.push_back(rat_parse(c));
  rootsys::Basis basis;
  if (basis_name == "ambient")
    basis = rootsys::Basis::Ambient;
  else if (basis_name == "fundamental_coweight")
    basis = rootsys::Basis::FundamentalCoweight;
  else
    throw std::invalid_argument("--basis must be ambient or fundamental_coweight");
  RatVec a = rs.to_ambient({coords, basis});
  auto rays = toric::rays_of_XO(rs, a);
  json j;
  j["schema"] = 1;
  j["type"] = rs.name();
  j["count"] = rays.size();
  j["rays"] = json::array();
  for (const auto& ray : rays) j["rays"].push_back(ratvec_json(ray));
  std::ostringstream t;
  t << rs.name() << " local model: " << rays.size() << " rays\n";
  for (const auto& ray : rays) {
    t << "  (";
    for (std::size_t i = 0; i < ray.size(); ++i) t << (i ? ", " : "") << rat_str(ray[i]);
    t << ")\n";
  }
  emit(out, j, pretty, t.str());
  return 0;
}

int cmd_divisor_equiv(std::ostream& out, const std::string& tau_s, const std::string& d1_s,
                      const std::string& d2_s, double tol, bool pretty) {
  ellfun::EllipticContext ctx(parse_pair(tau_s, "--tau"));
  auto d1 = parse_divisor(ctx, d1_s);
  auto d2 = parse_divisor(ctx, d2_s);
  const cplx a1 = ellfun::abel_sum(ctx, d1);
  const cplx a2 = ellfun::abel_sum(ctx, d2);
  const bool eq = ellfun::linearly_equivalent(ctx, d1, d2, tol);
  json j;
  j["schema"] = 1;
  j["degree1"] = d1.degree();
  j["degree2"] = d2.degree();
  j["abel1"] = {a1.real(), a1.imag()};
  j["abel2"] = {a2.real(), a2.imag()};
  j["equivalent"] = eq;
  std::ostringstream t;
  t << "deg " << d1.degree() << " vs " << d2.degree() << ", abel gap "
    << ellfun::lattice_distance(ctx, a1 - a2) << " -> " << (eq ? "equivalent" : "NOT equivalent")
    << "\n";
  emit(out, j, pretty, t.str());
  return eq ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"elliptic Sklyanin system calculator"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable tables instead of JSON");

  std::string family, file, tau_s = "0,1", algebra = "sl2", coweight, basis_name =
      "fundamental_coweight";
  std::string example, d1_s, d2_s;
  int rank = 0, max_rank = 8, points = 100, samples = 20;
  long long k = 1, nval = 2;
  double tol = 1e-10, cdybe_tol = 1e-6, proj_tol = 1e-8, div_tol = 1e-9;
  std::uint64_t seed = 12345;

  auto* info = app.add_subcommand("rootsys", "root system data");
  auto* info_cmd = info->add_subcommand("info", "print exact Cartan data");
  info_cmd->add_option("--type", family, "family A..G")->required();
  info_cmd->add_option("--rank", rank, "rank")->required();

  auto* leaf = app.add_subcommand("leaf-dim", "symplectic leaf dimension from singularity data");
  leaf->add_option("--file", file, "singularity data JSON")->required();

  auto* hecke = app.add_subcommand("hecke-dim", "Hecke correspondence dimension");
  hecke->add_option("--file", file, "singularity data JSON")->required();

  auto* classify = app.add_subcommand("classify-parabolics", "compact loop-Grassmannian orbits");
  classify->add_option("--type", family, "single family A..G");
  classify->add_option("--rank", rank, "rank for --type");
  classify->add_option("--max-rank", max_rank, "table mode: all types up to this rank");

  auto* ell = app.add_subcommand("ellfun", "elliptic special function checks");
  auto* ell_check = ell->add_subcommand("check", "verify periodicities and residues");
  ell_check->add_option("--tau", tau_s, "modulus re,im");
  ell_check->add_option("--points", points, "number of sample points");
  ell_check->add_option("--tol", tol, "periodicity tolerance");
  ell_check->add_option("--seed", seed, "rng seed");

  auto* cdybe = app.add_subcommand("cdybe-check", "dynamical Yang-Baxter residuals");
  cdybe->add_option("--algebra", algebra, "sl2|sl3|sln:N");
  cdybe->add_option("--tau", tau_s, "modulus re,im");
  cdybe->add_option("--samples", samples, "number of (lambda, z) samples");
  cdybe->add_option("--tol", cdybe_tol, "residual tolerance");
  cdybe->add_option("--seed", seed, "rng seed");

  auto* proj = app.add_subcommand("project-check", "loop-algebra projection kernels");
  proj->add_option("--algebra", algebra, "sl2|sl3|sln:N");
  proj->add_option("--tau", tau_s, "modulus re,im");
  proj->add_option("--tol", proj_tol, "kernel tolerance");
  proj->add_option("--seed", seed, "rng seed");

  auto* genus = app.add_subcommand("genus", "spectral-curve genus bookkeeping");
  genus->add_option("--example", example, "quadric|isotropic|calogero|grassmann")->required();
  genus->add_option("--n", nval, "example parameter")->required();

  auto* toric_cmd = app.add_subcommand("toric", "rank-2 cone arithmetic");
  auto* hilb = toric_cmd->add_subcommand("hilbert", "dual cone Hilbert basis of the SL(2) model");
  hilb->add_option("--k", k, "cocharacter multiple")->required();
  auto* rays = toric_cmd->add_subcommand("rays", "ray data of the local model X(O)");
  rays->add_option("--type", family, "family A..G")->required();
  rays->add_option("--rank", rank, "rank")->required();
  rays->add_option("--coweight", coweight, "comma-separated rational coordinates")->required();
  rays->add_option("--basis", basis_name, "ambient|fundamental_coweight");

  auto* dequiv = app.add_subcommand("divisor-equiv", "Abel-sum linear equivalence test");
  dequiv->add_option("--tau", tau_s, "modulus re,im");
  dequiv->add_option("--d1", d1_s, "divisor 'a,b,mult;...' in lattice coordinates")->required();
  dequiv->add_option("--d2", d2_s, "second divisor")->required();
  dequiv->add_option("--tol", div_tol, "Abel-sum tolerance");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (info_cmd->parsed()) return cmd_rootsys_info(out, family, rank, pretty);
    if (leaf->parsed()) return cmd_dim(out, file, false, pretty);
    if (hecke->parsed()) return cmd_dim(out, file, true, pretty);
    if (classify->parsed()) {
      if (!family.empty() && rank == 0)
        throw std::invalid_argument("classify-parabolics: --type needs --rank");
      return cmd_classify(out, family, rank, max_rank, pretty);
    }
    if (ell_check->parsed()) return cmd_ellfun_check(out, tau_s, points, tol, seed, pretty);
    if (cdybe->parsed()) return cmd_cdybe_check(out, algebra, tau_s, samples, cdybe_tol, seed, pretty);
    if (proj->parsed()) return cmd_project_check(out, algebra, tau_s, proj_tol, seed, pretty);
    if (genus->parsed()) return cmd_genus(out, example, nval, pretty);
    if (hilb->parsed()) return cmd_toric_hilbert(out, k, pretty);
    if (rays->parsed()) return cmd_toric_rays(out, family, rank, coweight, basis_name, pretty);
    if (dequiv->parsed()) return cmd_divisor_equiv(out, tau_s, d1_s, d2_s, div_tol, pretty);
    if (info->parsed() || ell->parsed() || toric_cmd->parsed()) {
      err << "error: missing nested subcommand\n";
      return 2;
    }
    err << "error: unknown subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace skl::cli
