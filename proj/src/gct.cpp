#include "gct/gct.hpp"

#include <set>

#include "gct/errors.hpp"
#include "gct/liealg.hpp"

namespace gct {

namespace {

std::size_t to_size(const Integer& z) {
  if (!z.fits_ulong_p()) throw BudgetExceeded("dimension " + z.get_str() + " does not fit a machine word");
  return z.get_ui();
}

void check_qtable(const QTable& q) {
  require(q.n >= 1 && q.d >= 0, "q table needs n >= 1 and d >= 0");
  const std::size_t rank = static_cast<std::size_t>(q.n) * q.n;
  for (const auto& [mu, mult] : q.entries) {
    require(mu.rank() == rank, "q table weight (" + mu.key() + ") does not have rank n^2");
    require(mu.parts().back() >= 0, "q table weight (" + mu.key() + ") has a negative part");
    require(mu.size() == q.d * q.n, "q table weight (" + mu.key() + ") does not have size dn");
    require(mult > 0, "q table stores a zero multiplicity");
  }
}

// Compositions of `total` into `parts` nonnegative integers.
void compositions(int total, std::size_t parts, std::vector<int>& prefix, const std::function<void()>& visit) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(total);
    visit();
    prefix.pop_back();
    return;
  }
  for (int a = total; a >= 0; --a) {
    prefix.push_back(a);
    compositions(total - a, parts, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

QTable coord_ring_degree(int n, int d, const CoordRingOptions& options) {
  require(n >= 1, "coordinate ring needs n >= 1");
  require(d >= 1, "coordinate ring degree must be at least 1");
  if (d > 2) throw PreconditionError("degree d = " + std::to_string(d) + " is beyond desk scale (d <= 2)");
  const std::size_t rank = static_cast<std::size_t>(n) * n;
  QTable q;
  q.n = n;
  q.d = d;
  q.seed = options.seed;
  q.theorem_regime = n >= 3;
  if (d == 1) {
    // The orbit spans the irreducible S^n(S1*), so C^1[Z] = S^n(S1).
    std::vector<int> top(rank, 0);
    top[0] = n;
    q.entries[DominantWeight(top)] = 1;
    q.method = "direct";
    q.span_dim = to_size(sym_power_dim(n, static_cast<int>(rank)));
    return q;
  }

  // C^2[Z] is dual to the span of {f (x) f : f in GL(S1).perm} inside
  // S^2(S^n(S1*)). Each degree-n monomial becomes a variable y_a of weight a.
  const auto monomials = monomials_of_degree(rank, n);
  std::vector<Weight> weights;
  for (const auto& e : monomials) weights.emplace_back(e.begin(), e.end());
  const VarSpace y = VarSpace::generic(static_cast<int>(monomials.size()));
  BlockPolicy blocks;
  blocks.threads = options.threads;
  SpanBasis span(y, 2, Grading::columns(std::move(weights)), blocks);

  OrbitSpanOptions o;
  o.round_size = options.round_size;
  o.threads = options.threads;
  o.upper_bound = span.ambient_dim();
  o.transform = [&](const Poly& f) { return linearize(f, monomials).pow(2); };
  GroupSampler sampler(VarSpace::full(n), Pattern::all(rank), options.seed);
  const OrbitSpan result = orbit_span(perm_poly(n), sampler, std::move(span), o);

  const DecompReport dec = schur_decompose(result.span.character());
  q.entries = dec.entries;
  q.method = "symmetric-square span";
  q.span_dim = result.span.dimension();
  q.certified = result.certified;
  q.samples = result.samples;
  return q;
}

MTable multiplicities_6_5(const QTable& q, int m) {
  check_qtable(q);
  require(m > q.n, "multiplicities need m > n");
  MTable out;
  out.m = m;
  out.n = q.n;
  out.d = q.d;
  out.theorem_regime = m >= 2 * q.n;
  if (q.entries.empty()) return out;
  const std::size_t rank = static_cast<std::size_t>(q.n) * q.n + 1;
  for (const auto& lam : partitions_of(q.d * m, rank)) {
    std::uint64_t total = 0;
    for (const auto& mu : branch(lam)) {
      auto it = q.entries.find(mu);
      if (it != q.entries.end()) total += it->second;
    }
    if (total > 0) out.entries[lam] = total;
  }
  return out;
}

PieriCheck pieri_consistency(const QTable& q, int m) {
  check_qtable(q);
  require(m > q.n, "pieri check needs m > n");
  return pieri_consistency(q, multiplicities_6_5(q, m));
}

PieriCheck pieri_consistency(const QTable& q, const MTable& direct) {
  check_qtable(q);
  const int m = direct.m;
  require(m > q.n && direct.n == q.n && direct.d == q.d, "claimed table does not match the q table");
  const std::size_t rank = static_cast<std::size_t>(q.n) * q.n + 1;
  const int boxes = (m - q.n) * q.d;
  PieriCheck check;
  check.pieri_table.m = m;
  check.pieri_table.n = q.n;
  check.pieri_table.d = q.d;
  check.pieri_table.theorem_regime = m >= 2 * q.n;

  Integer q_dim = 0;
  for (const auto& [mu, mult] : q.entries) {
    const Partition hat = Partition(mu.parts()).padded(rank);
    q_dim += weyl_dim(hat) * static_cast<unsigned long>(mult);
    for (const auto& lam : pieri_row(hat, boxes, rank)) check.pieri_table.entries[lam] += mult;
  }
  for (const auto& [lam, mult] : direct.entries) check.lhs_dim += weyl_dim(lam) * static_cast<unsigned long>(mult);
  check.rhs_dim = sym_power_dim(boxes, static_cast<int>(rank)) * q_dim;

  check.holds = true;
  std::set<DominantWeight> keys;
  for (const auto& [lam, x] : direct.entries) keys.insert(lam);
  for (const auto& [lam, x] : check.pieri_table.entries) keys.insert(lam);
  for (const auto& lam : keys) {
    auto a = direct.entries.find(lam);
    auto b = check.pieri_table.entries.find(lam);
    const std::uint64_t x = a == direct.entries.end() ? 0 : a->second;
    const std::uint64_t z = b == check.pieri_table.entries.end() ? 0 : b->second;
    if (x != z) {
      check.holds = false;
      check.witness = "(" + lam.key() + "): interlacing gives " + std::to_string(x) + ", Pieri gives " +
                      std::to_string(z);
      return check;
    }
  }
  if (check.lhs_dim != check.rhs_dim) {
    check.holds = false;
    check.witness = "dimension identity: " + check.lhs_dim.get_str() + " != " + check.rhs_dim.get_str();
  }
  return check;
}

std::vector<LiftedWeight> lift_to_G(const MTable& table) {
  std::vector<LiftedWeight> out;
  // entries are ascending; report the largest weight first
  for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it)
    out.push_back({dualize(hat_lift(dualize(it->first), table.m, table.n)), it->second});
  return out;
}

std::size_t certificate_largest_block(int m, int n) {
  std::size_t best = 0;
  std::vector<int> prefix;
  for (int j = 0; j <= m; ++j) {
    compositions(m - j, static_cast<std::size_t>(n), prefix, [&] {
      Integer cols = 1;
      for (int r : prefix) cols *= binomial(r + n - 1, n - 1);
      best = std::max(best, to_size(cols));
    });
  }
  return best;
}

CertificateReport nonnormality_certificate(int m, int n, const CertificateOptions& options) {
  require(n >= 3, "certificate requires n >= 3");
  require(m >= 2 * n, "certificate requires m >= 2n");
  auto note = [&](const std::string& s) {
    if (options.progress) options.progress(s);
  };
  CertificateReport rep;
  rep.m = m;
  rep.n = n;
  rep.seed = options.seed;
  rep.primes = {options.blocks.prime1, options.blocks.prime2};
  const int nn = n * n;

  rep.cross_check_largest_block = certificate_largest_block(m, n);
  if (rep.cross_check_largest_block > options.blocks.size_budget)
    throw BudgetExceeded("weight block of " + std::to_string(rep.cross_check_largest_block) +
                         " columns exceeds the size budget of " + std::to_string(options.blocks.size_budget));

  // Predicted span: x11^(m-n-b) times S^(n+b)(S1*), b = 0..m-n.
  for (int b = 0; b <= m - n; ++b) rep.predicted_span_dim += to_size(sym_power_dim(n + b, nn));
  for (int j = 0; j <= n - 1; ++j) rep.predicted_K_dim += to_size(sym_power_dim(j, nn));
  rep.sym_dim = to_size(sym_power_dim(m, nn + 1));

  const VarSpace s = VarSpace::s_block(m, n);
  const Poly p = padded_perm(m, n);
  std::set<Exponent> predicted;
  for (const auto& e : monomials_of_degree(s.size(), m))
    if (e[0] <= m - n) predicted.insert(e);
  if (predicted.size() != rep.predicted_span_dim) throw ConsistencyError("predicted monomial basis has the wrong size");

  // Full torus of S: blocks are single monomials, rank is exact.
  SpanBasis torus(s, m, Grading::exponents(s.size()), options.blocks);
  // Cross-check: x11-degree and the row degrees of the block, modular rank.
  std::vector<Weight> coarse(s.size(), Weight(static_cast<std::size_t>(n) + 1, 0));
  coarse[0][0] = 1;
  for (std::size_t v = 1; v < s.size(); ++v) coarse[v][1 + (v - 1) / static_cast<std::size_t>(n)] = 1;
  BlockPolicy modular = options.blocks;
  modular.force_modular = true;
  SpanBasis cross(s, m, Grading::columns(coarse), modular);
  rep.cross_check_grading = "x11-degree and block row degrees";

  note("sampling R-orbit of p");
  OrbitSpanOptions o;
  o.round_size = options.round_size;
  o.threads = options.blocks.threads;
  o.upper_bound = rep.predicted_span_dim;
  std::size_t outside = 0;
  o.on_sample = [&](const Poly& sample) {
    ++rep.membership_checked;
    for (const auto& [e, c] : sample.terms())
      if (!predicted.count(e)) {
        ++outside;
        break;
      }
    torus.add(sample);
  };
  GroupSampler sampler(s, Pattern::parabolic_r(s), options.seed);
  OrbitSpan crossed = orbit_span(p, sampler, std::move(cross), o);
  rep.samples = crossed.samples;
  rep.membership_ok = outside == 0;
  rep.cross_check_span_dim = crossed.span.dimension();
  rep.cross_check_primes_agree = !crossed.span.primes_disagree();
  rep.span_dim = torus.dimension();
  rep.span_certified = rep.span_dim == rep.predicted_span_dim && crossed.certified;
  if (rep.span_dim > rep.predicted_span_dim) throw ConsistencyError("span exceeds its predicted dimension");
  rep.kernel_K_dim = rep.sym_dim - rep.span_dim;
  note("span " + std::to_string(rep.span_dim) + " after " + std::to_string(rep.samples) + " samples");

  // The L_P^2 = GL(S) module generated by p is S^m(S*); decompose it.
  note("decomposing the GL(S)-span of p");
  OrbitSpanOptions lo;
  lo.round_size = options.round_size;
  lo.threads = options.blocks.threads;
  lo.upper_bound = rep.sym_dim;
  GroupSampler full_sampler(s, Pattern::all(s.size()), options.seed);
  const OrbitSpan lhs_span =
      orbit_span(p, full_sampler, SpanBasis(s, m, Grading::exponents(s.size()), options.blocks), lo);
  const DecompReport lhs = schur_decompose(lhs_span.span.character());
  rep.lhs_count = lhs.entries.size();
  if (!lhs.entries.empty()) rep.lhs_top_weight = lhs.entries.rbegin()->first;
  rep.lhs_certified = lhs_span.certified;

  rep.rhs = multiplicities_6_5(coord_ring_degree(n, 1), m);

  std::string reason;
  if (!rep.membership_ok) reason = "sample outside the predicted span";
  else if (rep.span_dim != rep.predicted_span_dim) reason = "span below predicted dimension";
  else if (rep.cross_check_span_dim != rep.span_dim || !rep.cross_check_primes_agree) reason = "cross-check disagrees";
  else if (rep.kernel_K_dim != rep.predicted_K_dim) reason = "kernel dimension mismatch";
  else if (rep.lhs_count != 1) reason = "left side not irreducible";
  else if (rep.rhs.entries.size() < 2) reason = "right side irreducible";
  rep.verdict = reason.empty() ? "obstruction-found" : "inconclusive: " + reason;
  return rep;
}

OrbitDimY orbit_dim_y(int m, int n, int max_check_m) {
  require(n >= 3 && n < m, "orbit dimension needs 3 <= n < m");
  OrbitDimY out;
  out.value = static_cast<long long>(m) * m * (static_cast<long long>(n) * n + 1) - 2LL * n + 1;
  if (m <= max_check_m) {
    const auto rep = annihilator_dim(padded_perm(m, n), SubalgebraSpec::make(Subalgebra::full_gl, m, n));
    out.cross_checked = true;
    out.lie_value = static_cast<long long>(rep.orbit_dim);
    if (out.lie_value != out.value)
      throw ConsistencyError("orbit dimension " + std::to_string(out.lie_value) + " disagrees with closed form " +
                             std::to_string(out.value));
  }
  return out;
}

}  // namespace gct
