#include "gct/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gct/errors.hpp"
#include "gct/modular.hpp"
#include "gct/report.hpp"

namespace gct::cli {

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw PreconditionError(what + ": '" + text + "' is not a nonnegative integer");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_primes(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw PreconditionError("primes must be given as 'p1,p2'");
  return {parse_u64(parts[0], "prime"), parse_u64(parts[1], "prime")};
}

std::vector<int> parse_weight(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw PreconditionError("weight entries must be integers, got '" + part + "'");
    }
  }
  require(!out.empty(), "weight must have at least one part");
  return out;
}

Json integer_json(const Integer& z) {
  if (z.fits_ulong_p()) return Json(z.get_ui());
  return Json(z.get_str());
}

void render(const Json& j, std::ostream& out, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const bool rows = v.is_array() && !v.empty() && v.front().is_object();
    if (v.is_object() && !v.empty()) {
      out << indent << it.key() << ":\n";
      render(v, out, indent + "  ");
    } else if (rows) {
      out << indent << it.key() << ":\n";
      for (const auto& row : v) {
        out << indent << "  -";
        for (auto f = row.begin(); f != row.end(); ++f) out << ' ' << f.key() << '=' << f.value().dump();
        out << '\n';
      }
    } else {
      out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

struct Emitted {
  int code = kOk;
  Json report;
};

Json error_json(const std::string& kind, const std::string& message) {
  Json j{{"schema", "gct-error/1"}, {"error", kind}, {"message", message}};
  if (kind == "budget") j["verdict"] = "inconclusive: budget";
  return j;
}

Emitted cmd_isotropy(const std::string& target, int m, int n, const std::string& sub_name) {
  RankPolicy policy;
  if (target == "det") {
    require(n == 0, "--n does not apply to det");
    const auto sub = SubalgebraSpec::parse(sub_name.empty() ? "full-gl" : sub_name, m, 0);
    return {kOk, isotropy_json(annihilator_dim(det_poly(m), sub, policy), target)};
  }
  if (target == "perm") {
    const int size = n == 0 ? m : n;
    require(n == 0 || m == n, "for perm give the size once (--m or --n)");
    const auto sub = SubalgebraSpec::parse(sub_name.empty() ? "full-gl" : sub_name, size, 0);
    return {kOk, isotropy_json(annihilator_dim(perm_poly(size), sub, policy), target)};
  }
  if (target == "padded") {
    require(n >= 1 && n < m, "padded target needs 1 <= n < m");
    const auto sub = SubalgebraSpec::parse(sub_name.empty() ? "full-gl" : sub_name, m, n);
    Json j = isotropy_json(annihilator_dim(padded_perm(m, n), sub, policy), target);
    if (sub_name.empty() && n >= 3) {
      const PaddedProfile prof = padded_isotropy_profile(m, n, policy);
      j["profile"] = profile_json(prof);
      j["certified"] = prof.all_hold();
      return {prof.all_hold() ? kOk : kInternal, j};
    }
    return {kOk, j};
  }
  throw PreconditionError("unknown target '" + target + "' (det, perm or padded)");
}

Emitted cmd_quadrics() {
  Json rows = Json::array();
  for (const auto& r : quadric_orbit_dims())
    rows.push_back({{"rank", r.rank}, {"kernel_dim", r.kernel_dim}, {"orbit_dim", r.orbit_dim}});
  return {kOk, Json{{"schema", "gct-quadrics/1"},
                    {"m", 2},
                    {"rows", rows},
                    {"certified", true},
                    {"seed", nullptr},
                    {"paper_ref", "dimensions: 10, 9, 7, 4, 0"}}};
}

Emitted cmd_rigidity(int n) {
  const std::size_t k = solve_translation_invariance(n);
  const std::size_t control = translation_kernel_dim(Poly(VarSpace::full(n)));
  return {kOk, Json{{"schema", "gct-rigidity/1"},
                    {"n", n},
                    {"kernel_dim", k},
                    {"zero_control_kernel_dim", control},
                    {"rigid", k == 0},
                    {"certified", true},
                    {"seed", nullptr},
                    {"paper_ref", "perm(X+C) = perm(X) for all X forces C = 0"}}};
}

Emitted cmd_branch(const std::string& text) {
  const DominantWeight lam(parse_weight(text));
  require(lam.rank() >= 2, "branching needs rank >= 2");
  Json rows = Json::array();
  Integer sum = 0;
  for (const auto& mu : branch(lam)) {
    const Integer d = weyl_dim(mu);
    sum += d;
    rows.push_back({{"weight", weight_json(mu)}, {"weyl_dim", integer_json(d)}});
  }
  const Integer total = weyl_dim(lam);
  return {kOk, Json{{"schema", "gct-branch/1"},
                    {"weight", weight_json(lam)},
                    {"rank", lam.rank()},
                    {"weyl_dim", integer_json(total)},
                    {"branches", rows},
                    {"branch_dim_sum", integer_json(sum)},
                    {"sum_rule_holds", sum == total},
                    {"certified", sum == total},
                    {"seed", nullptr},
                    {"paper_ref", "lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ..."}}};
}

Emitted cmd_multiplicities(int m, int n, int d, bool pieri, const RunConfig& cfg) {
  CoordRingOptions o;
  o.seed = cfg.seed;
  o.threads = cfg.threads;
  const QTable q = coord_ring_degree(n, d, o);
  const MTable t = multiplicities_6_5(q, m);
  Json lifted = Json::array();
  for (const auto& lw : lift_to_G(t)) lifted.push_back({{"weight", weight_json(lw.weight)}, {"mult", lw.mult}});
  Json j{{"schema", "gct-mtable/1"}, {"m", m}, {"n", n}, {"d", d}, {"qtable", qtable_json(q)}, {"mtable", mtable_json(t)}};
  int code = kOk;
  if (pieri) {
    const PieriCheck c = pieri_consistency(q, m);
    j["pieri"] = {{"holds", c.holds},
                  {"witness", c.witness},
                  {"lhs_dim", integer_json(c.lhs_dim)},
                  {"rhs_dim", integer_json(c.rhs_dim)}};
    if (!c.holds) code = kInternal;
  }
  j["lift"] = {{"rank", m * m}, {"note", "highest weights of V_G(lambda-hat)* for the normalization"}, {"weights", lifted}};
  j["certified"] = q.certified;
  j["seed"] = cfg.seed;
  j["paper_ref"] = "sum over mu interlacing lambda of q_mu(d); |lambda| = dm";
  return {code, j};
}

Emitted cmd_certify(int m, int n, const RunConfig& cfg, std::ostream& err) {
  CertificateOptions o;
  o.seed = cfg.seed;
  o.blocks.size_budget = cfg.size_budget;
  o.blocks.prime1 = cfg.prime1;
  o.blocks.prime2 = cfg.prime2;
  o.blocks.threads = cfg.threads;
  if (cfg.verbose) o.progress = [&err](const std::string& s) { err << "certify: " << s << '\n'; };
  const CertificateReport r = nonnormality_certificate(m, n, o);
  return {r.obstruction() ? kOk : kInconclusive, certificate_json(r)};
}

Emitted cmd_orbit_dim(int m, int n) {
  const OrbitDimY y = orbit_dim_y(m, n);
  return {kOk, Json{{"schema", "gct-orbit-dim/1"},
                    {"m", m},
                    {"n", n},
                    {"dim_Y", y.value},
                    {"cross_checked", y.cross_checked},
                    {"lie_orbit_dim", y.cross_checked ? Json(y.lie_value) : Json(nullptr)},
                    {"certified", y.cross_checked},
                    {"seed", nullptr},
                    {"paper_ref", "dim Y = m^2(n^2+1) - 2n + 1"}}};
}

Emitted cmd_decompose(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw PreconditionError("'" + path + "' is not valid JSON: " + ex.what());
  }
  DecompReport r = schur_decompose(character_from_json(j));
  r.certified = true;
  Json out = decomp_json(r);
  out["seed"] = nullptr;
  return {kOk, out};
}

}  // namespace

void RunConfig::apply_environment() {
  if (const char* b = std::getenv("GCT_SIZE_BUDGET")) size_budget = parse_u64(b, "GCT_SIZE_BUDGET");
  if (const char* p = std::getenv("GCT_PRIMES")) std::tie(prime1, prime2) = parse_primes(p);
}

void RunConfig::validate() const {
  require(size_budget > 0, "size budget must be positive");
  require(prime1 != prime2, "the two primes must be distinct");
  for (auto p : {prime1, prime2}) {
    require(p < (std::uint64_t{1} << 62), "primes must be below 2^62");
    require(modp::is_prime(p), std::to_string(p) + " is not prime");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.apply_environment();
  } catch (const PreconditionError& e) {
    out << error_json("precondition", e.what()).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }

  CLI::App app{"Exact computations for the orbit closures of det and the padded permanent", "gct"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string primes, output = "json";
  app.add_option("--seed", cfg.seed, "Random seed for all sampling");
  app.add_option("--budget", cfg.size_budget, "Largest weight block, in columns");
  app.add_option("--primes", primes, "Two primes below 2^62 for modular rank, 'p1,p2'");
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  app.add_flag("--timing", cfg.timing, "Add runtime_ms to the report");
  app.add_flag("--verbose", cfg.verbose, "Progress messages on stderr");

  std::string target, sub_name, weight, input;
  int m = 0, n = 0, d = 1;
  bool pieri = false;
  auto* iso = app.add_subcommand("isotropy", "Isotropy kernel and orbit dimension");
  iso->add_option("--target", target, "det, perm or padded")->required();
  iso->add_option("--m", m, "Matrix size")->required();
  iso->add_option("--n", n, "Permanent size (padded, perm)");
  iso->add_option("--subalgebra", sub_name, "full-gl, parabolic-P, levi-L2P, levi-LR, unipotent-UP, levi-L1P");
  app.add_subcommand("quadrics", "Orbit dimensions of the quadrics of rank 4..0 on 2x2 matrices");
  auto* rig = app.add_subcommand("rigidity", "Translations fixing the permanent");
  rig->add_option("--n", n, "Permanent size")->required();
  auto* br = app.add_subcommand("branch", "Branching of a dominant weight");
  br->add_option("--weight", weight, "Comma-separated parts, e.g. 2,1,0")->required();
  auto* mul = app.add_subcommand("multiplicities", "Interlacing multiplicities in degree d");
  mul->add_option("--m", m, "Matrix size")->required();
  mul->add_option("--n", n, "Permanent size")->required();
  mul->add_option("--d", d, "Degree (1 or 2)")->required();
  mul->add_flag("--pieri-check", pieri, "Recompute the table by the Pieri rule");
  auto* cert = app.add_subcommand("certify", "Degree-1 non-normality certificate");
  cert->add_option("--m", m, "Matrix size")->required();
  cert->add_option("--n", n, "Permanent size")->required();
  auto* od = app.add_subcommand("orbit-dim", "Dimension of the orbit closure Y of the padded permanent");
  od->add_option("--m", m, "Matrix size")->required();
  od->add_option("--n", n, "Permanent size")->required();
  auto* dec = app.add_subcommand("decompose", "Decompose a weight character given as JSON");
  dec->add_option("--input", input, "File with {rank, entries: [{weight, mult}]}")->required();

  std::vector<const char*> argv{"gct"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Emitted result;
  try {
    if (!primes.empty()) std::tie(cfg.prime1, cfg.prime2) = parse_primes(primes);
    cfg.output = output == "table" ? RunConfig::Output::table : RunConfig::Output::json;
    cfg.validate();
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "isotropy") result = cmd_isotropy(target, m, n, sub_name);
    else if (name == "quadrics") result = cmd_quadrics();
    else if (name == "rigidity") result = cmd_rigidity(n);
    else if (name == "branch") result = cmd_branch(weight);
    else if (name == "multiplicities") result = cmd_multiplicities(m, n, d, pieri, cfg);
    else if (name == "certify") result = cmd_certify(m, n, cfg, err);
    else if (name == "orbit-dim") result = cmd_orbit_dim(m, n);
    else result = cmd_decompose(input);
  } catch (const PreconditionError& e) {
    result = {kPrecondition, error_json("precondition", e.what())};
    err << "error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    result = {kInconclusive, error_json("budget", e.what())};
    err << "inconclusive: budget: " << e.what() << '\n';
  } catch (const std::exception& e) {
    result = {kInternal, error_json("internal", e.what())};
    err << "internal error: " << e.what() << '\n';
  }
  if (cfg.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    result.report["runtime_ms"] = ms.count();
  }
  if (cfg.output == RunConfig::Output::table) render(result.report, out, "");
  else out << result.report.dump(2) << '\n';
  return result.code;
}

}  // namespace gct::cli
