#include "gct/report.hpp"

#include "gct/errors.hpp"

namespace gct {

Json weight_json(const DominantWeight& w) { return Json(w.parts()); }

Json table_json(const std::map<DominantWeight, std::uint64_t>& entries) {
  Json out = Json::object();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) out[it->first.key()] = it->second;
  return out;
}

Json mtable_json(const MTable& t) {
  return Json{{"m", t.m},
              {"n", t.n},
              {"d", t.d},
              {"rank", t.n * t.n + 1},
              {"count", t.entries.size()},
              {"theorem_regime", t.theorem_regime},
              {"entries", table_json(t.entries)}};
}

Json qtable_json(const QTable& q) {
  return Json{{"n", q.n},
              {"d", q.d},
              {"rank", q.n * q.n},
              {"method", q.method},
              {"span_dim", q.span_dim},
              {"certified", q.certified},
              {"theorem_regime", q.theorem_regime},
              {"entries", table_json(q.entries)}};
}

namespace {

Json assertions_json(const std::vector<Assertion>& list) {
  Json out = Json::array();
  for (const auto& a : list) out.push_back({{"name", a.name}, {"holds", a.holds}, {"detail", a.detail}});
  return out;
}

}  // namespace

namespace {

std::string isotropy_ref(const std::string& target) {
  if (target == "det") return "dim (G'.det) = (m^2-1)^2";
  if (target == "perm") return "the identity component of the stabilizer of perm has dimension 2(n-1)";
  return "isotropy of p under P equals that under G";
}

}  // namespace

Json isotropy_json(const IsotropyReport& r, const std::string& target) {
  const auto& s = r.subalgebra;
  Json n = s.n == 0 ? Json(nullptr) : Json(s.n);
  return Json{{"schema", "gct-isotropy/1"},
              {"target", target},
              {"subalgebra", s.label()},
              {"m", s.m},
              {"n", n},
              {"dimension", s.dimension()},
              {"kernel_dim", r.kernel_dim},
              {"orbit_dim", r.orbit_dim},
              {"rank_method", r.rank.modular ? "modular" : "exact"},
              {"assertions", assertions_json(r.assertions)},
              {"certified", !r.rank.modular || r.rank.primes_agree},
              {"seed", nullptr},
              {"paper_ref", isotropy_ref(target)}};
}

Json profile_json(const PaddedProfile& p) {
  return Json{{"m", p.m},
              {"n", p.n},
              {"k_full", p.k_full},
              {"k_P", p.k_P},
              {"k_L2P", p.k_L2P},
              {"k_LR", p.k_LR},
              {"dim_full", p.dim_full},
              {"dim_P", p.dim_P},
              {"dim_UP", p.dim_UP},
              {"dim_L1P", p.dim_L1P},
              {"dim_L2P", p.dim_L2P},
              {"dim_LR", p.dim_LR},
              {"assertions", assertions_json(p.assertions)},
              {"all_hold", p.all_hold()}};
}

Json decomp_json(const DecompReport& r) {
  Json entries = Json::array();
  for (auto it = r.entries.rbegin(); it != r.entries.rend(); ++it)
    entries.push_back({{"weight", weight_json(it->first)}, {"mult", it->second}});
  return Json{{"schema", "gct-decomp/1"},
              {"rank", r.rank},
              {"entries", entries},
              {"span_dim", r.span_dim},
              {"certified", r.certified},
              {"seed", r.seed},
              {"paper_ref", "peeling of highest weights by Gelfand-Tsetlin counts"}};
}

Json certificate_json(const CertificateReport& r) {
  return Json{
      {"schema", "gct-cert/1"},
      {"m", r.m},
      {"n", r.n},
      {"span_dim", r.span_dim},
      {"predicted_span_dim", r.predicted_span_dim},
      {"kernel_K_dim", r.kernel_K_dim},
      {"predicted_K_dim", r.predicted_K_dim},
      {"sym_dim", r.sym_dim},
      {"lhs", {{"count", r.lhs_count}, {"top_weight", weight_json(r.lhs_top_weight)}, {"certified", r.lhs_certified}}},
      {"rhs", mtable_json(r.rhs)},
      {"rhs_multiplicity_source",
       "interlacing formula applied to C^1[Z] = S^n(S1), q = {(n,0,...,0): 1}; every multiplicity is 1"},
      {"cross_check",
       {{"grading", r.cross_check_grading},
        {"span_dim", r.cross_check_span_dim},
        {"largest_block", r.cross_check_largest_block},
        {"primes", r.primes},
        {"primes_agree", r.cross_check_primes_agree}}},
      {"membership", {{"samples_checked", r.membership_checked}, {"all_inside", r.membership_ok}}},
      {"samples", r.samples},
      {"verdict", r.verdict},
      {"certified", r.span_certified && r.lhs_certified},
      {"seed", r.seed},
      {"paper_ref", "is not an isomorphism for d=1; lambda_1 >= n >= lambda_2"}};
}

WeightCharacter character_from_json(const Json& j) {
  try {
    const auto rank = j.at("rank").get<std::size_t>();
    require(rank >= 1, "character rank must be positive");
    WeightCharacter chi(rank);
    for (const auto& e : j.at("entries")) {
      const auto w = e.at("weight").get<std::vector<int>>();
      require(w.size() == rank, "character weight has the wrong rank");
      const auto mult = e.at("mult").get<long long>();
      require(mult >= 0, "character multiplicity is negative");
      chi.add(w, static_cast<std::uint64_t>(mult));
    }
    return chi;
  } catch (const nlohmann::json::exception& ex) {
    throw PreconditionError(std::string("malformed character: ") + ex.what());
  }
}

}  // namespace gct
