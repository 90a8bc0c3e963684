#include "gct/chardecomp.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "gct/errors.hpp"
#include "gct/modular.hpp"
#include "gct/parallel.hpp"

namespace gct {

namespace {

Weight sorted_desc(Weight w) {
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

std::string weight_text(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

// Dominant weights of rank k and size `total` with entries in [lo, hi], lexicographically descending.
void dominant_weights(std::size_t k, int total, int lo, int hi, Weight& prefix, std::vector<Weight>& out) {
  const std::size_t left = k - prefix.size();
  if (left == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  const long remaining = static_cast<long>(left);
  for (int a = hi; a >= lo; --a) {
    // the remaining parts lie in [lo, a]
    if (a * remaining < total || lo * remaining > total) continue;
    prefix.push_back(a);
    dominant_weights(k, total - a, lo, a, prefix, out);
    prefix.pop_back();
  }
}

bool dominated_by(const Weight& mu, const Weight& lam) {
  long a = 0, b = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    a += mu[i];
    b += lam[i];
    if (a > b) return false;
  }
  return a == b;
}

}  // namespace

// ---------------------------------------------------------------- Grading

Grading Grading::exponents(std::size_t k) {
  std::vector<Weight> cols(k, Weight(k, 0));
  for (std::size_t v = 0; v < k; ++v) cols[v][v] = 1;
  return columns(std::move(cols));
}

Grading Grading::columns(std::vector<Weight> variable_weights) {
  Grading g;
  g.rank_ = variable_weights.empty() ? 0 : variable_weights.front().size();
  for (const auto& w : variable_weights)
    if (w.size() != g.rank_) throw std::invalid_argument("grading weights must share one rank");
  g.weights_ = std::move(variable_weights);
  return g;
}

Weight Grading::weight(const Exponent& e) const {
  if (e.size() != weights_.size()) throw std::invalid_argument("exponent length does not match grading");
  Weight w(rank_, 0);
  for (std::size_t v = 0; v < e.size(); ++v)
    if (e[v] != 0)
      for (std::size_t i = 0; i < rank_; ++i) w[i] += e[v] * weights_[v][i];
  return w;
}

// ---------------------------------------------------------------- characters

void WeightCharacter::add(const Weight& w, std::uint64_t mult) {
  if (w.size() != rank_) throw std::invalid_argument("weight rank mismatch");
  if (mult == 0) return;
  entries_[w] += mult;
}

std::uint64_t WeightCharacter::multiplicity(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t WeightCharacter::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, m] : entries_) t += m;
  return t;
}

std::optional<Weight> WeightCharacter::symmetry_violation() const {
  for (const auto& [w, m] : entries_)
    if (multiplicity(sorted_desc(w)) != m) return w;
  return std::nullopt;
}

std::uint64_t kostka(const DominantWeight& lam, const Weight& mu_in) {
  const std::size_t k = lam.rank();
  if (mu_in.size() != k) throw std::invalid_argument("kostka: rank mismatch");
  const Weight mu = sorted_desc(mu_in);
  if (!dominated_by(mu, lam.parts())) return 0;
  if (k == 1) return 1;

  static std::mutex memo_mutex;
  static std::map<std::pair<Weight, Weight>, std::uint64_t> memo;
  const auto key = std::make_pair(lam.parts(), mu);
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  // Strip the last GT row: nu interlaces lam and carries weight mu minus its last entry.
  const int last = mu.back();
  const Weight head(mu.begin(), mu.end() - 1);
  std::uint64_t count = 0;
  for (const auto& nu : branch(lam))
    if (lam.size() - nu.size() == last) count += kostka(nu, head);
  std::lock_guard lock(memo_mutex);
  memo.emplace(key, count);
  return count;
}

WeightCharacter WeightCharacter::irreducible(const DominantWeight& lam) {
  const std::size_t k = lam.rank();
  WeightCharacter chi(k);
  std::vector<Weight> dominant;
  Weight prefix;
  dominant_weights(k, lam.size(), lam[k - 1], lam[0], prefix, dominant);
  for (const auto& mu : dominant) {
    const std::uint64_t mult = kostka(lam, mu);
    if (mult == 0) continue;
    Weight w = mu;
    std::sort(w.begin(), w.end());
    do {
      chi.add(w, mult);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return chi;
}

WeightCharacter WeightCharacter::symmetric_power(int d, std::size_t k) {
  WeightCharacter chi(k);
  for (const auto& e : monomials_of_degree(k, d)) chi.add(Weight(e.begin(), e.end()), 1);
  return chi;
}

DecompReport schur_decompose(const WeightCharacter& chi) {
  if (auto bad = chi.symmetry_violation())
    throw ConsistencyError("character is not symmetric: weight " + weight_text(*bad) + " differs from its sorted form");
  std::map<Weight, long long> residual;
  for (const auto& [w, m] : chi.entries())
    if (w == sorted_desc(w)) residual[w] = static_cast<long long>(m);

  DecompReport report;
  report.rank = chi.rank();
  report.span_dim = chi.total();
  for (;;) {
    auto top = std::find_if(residual.rbegin(), residual.rend(), [](const auto& kv) { return kv.second != 0; });
    if (top == residual.rend()) break;
    if (top->second < 0)
      throw ConsistencyError("negative multiplicity while peeling at " + weight_text(top->first));
    const DominantWeight lam(top->first);
    const long long c = top->second;
    report.entries[lam] = static_cast<std::uint64_t>(c);
    for (auto& [mu, r] : residual) r -= c * static_cast<long long>(kostka(lam, mu));
  }
  Integer dim = 0;
  for (const auto& [lam, m] : report.entries) dim += weyl_dim(lam) * static_cast<unsigned long>(m);
  if (dim != static_cast<unsigned long>(report.span_dim))
    throw ConsistencyError("decomposition dimension " + dim.get_str() + " does not match character mass " +
                           std::to_string(report.span_dim));
  return report;
}

std::vector<Exponent> monomials_of_degree(std::size_t k, int d) {
  std::vector<Exponent> out;
  if (k == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e(k, 0);
  // Recursive lexicographic-descending enumeration.
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v + 1 == k) {
      e[v] = static_cast<std::uint8_t>(left);
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[v] = static_cast<std::uint8_t>(a);
      self(self, v + 1, left - a);
    }
  };
  if (d > 255) throw std::overflow_error("degree exceeds 255");
  rec(rec, 0, d);
  return out;
}

// ---------------------------------------------------------------- SpanBasis

struct SpanBasis::Block {
  explicit Block(std::size_t c, bool mod, std::uint64_t p1, std::uint64_t p2) : cols(c), modular(mod) {
    if (modular) {
      mod1.emplace(c, p1);
      mod2.emplace(c, p2);
    }
  }
  std::size_t cols;
  bool modular;
  bool disagree = false;
  RationalEchelon exact;
  std::optional<modp::Echelon> mod1, mod2;

  std::size_t rank() const { return modular ? std::max(mod1->rank(), mod2->rank()) : exact.rank(); }
  bool full() const { return rank() == cols; }

  std::vector<std::uint64_t> dense(const SparseVector& v, std::uint64_t p) const {
    std::vector<std::uint64_t> out(cols, 0);
    for (const auto& [c, x] : v) out[c] = modp::reduce(x, p);
    return out;
  }
  void add(const SparseVector& v) {
    if (full()) return;
    if (!modular) {
      exact.add(v);
      return;
    }
    mod1->add(dense(v, mod1->prime()));
    mod2->add(dense(v, mod2->prime()));
    disagree = mod1->rank() != mod2->rank();
  }
  bool contains(const SparseVector& v) const {
    if (!modular) return exact.contains(v);
    return mod1->contains(dense(v, mod1->prime())) && mod2->contains(dense(v, mod2->prime()));
  }
};

SpanBasis::SpanBasis(VarSpace space, int degree, Grading grading, BlockPolicy policy)
    : space_(space), degree_(degree), grading_(std::move(grading)), policy_(policy) {
  require(degree >= 0, "span degree must be nonnegative");
  if (grading_.variables() != space.size()) throw std::invalid_argument("grading does not match space");
  const Integer ambient = binomial(static_cast<long>(space.size()) + degree - 1, degree);
  if (ambient > 5'000'000)
    throw BudgetExceeded("degree-" + std::to_string(degree) + " component of " + space.describe() + " has " +
                         ambient.get_str() + " monomials");
  std::map<Weight, std::size_t> block_of;
  for (auto& e : monomials_of_degree(space.size(), degree)) {
    Weight w = grading_.weight(e);
    auto [it, inserted] = block_of.try_emplace(w, block_weights_.size());
    if (inserted) {
      block_weights_.push_back(std::move(w));
      block_columns_.emplace_back();
    }
    auto& cols = block_columns_[it->second];
    column_of_.emplace(e, std::make_pair(it->second, cols.size()));
    cols.push_back(std::move(e));
  }
  for (const auto& cols : block_columns_) {
    if (cols.size() > policy_.size_budget)
      throw BudgetExceeded("weight block of " + std::to_string(cols.size()) + " columns exceeds the size budget of " +
                           std::to_string(policy_.size_budget));
    const bool modular = policy_.force_modular || cols.size() >= policy_.exact_block_limit;
    blocks_.push_back(std::make_unique<Block>(cols.size(), modular, policy_.prime1, policy_.prime2));
  }
}

SpanBasis::~SpanBasis() = default;
SpanBasis::SpanBasis(SpanBasis&&) noexcept = default;
SpanBasis& SpanBasis::operator=(SpanBasis&&) noexcept = default;

std::size_t SpanBasis::block_count() const { return blocks_.size(); }

std::size_t SpanBasis::largest_block() const {
  std::size_t best = 0;
  for (const auto& b : blocks_) best = std::max(best, b->cols);
  return best;
}

std::size_t SpanBasis::dimension() const {
  std::size_t d = 0;
  for (const auto& b : blocks_) d += b->rank();
  return d;
}

std::size_t SpanBasis::add(const std::vector<Poly>& polys) {
  // Split every polynomial into weight components, then reduce block by block.
  std::map<std::size_t, std::vector<SparseVector>> pieces;
  for (const auto& q : polys) {
    if (!(q.space() == space_)) throw PreconditionError("polynomial space does not match span");
    std::map<std::size_t, SparseVector> parts;
    for (const auto& [e, c] : q.terms()) {
      auto it = column_of_.find(e);
      if (it == column_of_.end())
        throw PreconditionError("polynomial is not homogeneous of degree " + std::to_string(degree_));
      parts[it->second.first].emplace(it->second.second, c);
    }
    for (auto& [b, v] : parts) pieces[b].push_back(std::move(v));
  }
  std::vector<std::pair<std::size_t, std::vector<SparseVector>*>> work;
  for (auto& [b, vs] : pieces)
    if (!blocks_[b]->full()) work.emplace_back(b, &vs);
  const std::size_t before = dimension();
  parallel_for(work.size(), policy_.threads, [&](std::size_t i) {
    Block& block = *blocks_[work[i].first];
    for (const auto& v : *work[i].second) block.add(v);
  });
  return dimension() - before;
}

bool SpanBasis::contains(const Poly& q) const {
  if (!(q.space() == space_)) return false;
  std::map<std::size_t, SparseVector> parts;
  for (const auto& [e, c] : q.terms()) {
    auto it = column_of_.find(e);
    if (it == column_of_.end()) return false;
    parts[it->second.first].emplace(it->second.second, c);
  }
  for (const auto& [b, v] : parts)
    if (!blocks_[b]->contains(v)) return false;
  return true;
}

bool SpanBasis::primes_disagree() const {
  return std::any_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b->disagree; });
}

bool SpanBasis::uses_modular() const {
  return std::any_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b->modular; });
}

WeightCharacter SpanBasis::character() const {
  WeightCharacter chi(grading_.rank());
  for (std::size_t b = 0; b < blocks_.size(); ++b) chi.add(block_weights_[b], blocks_[b]->rank());
  return chi;
}

std::vector<Poly> SpanBasis::basis() const {
  std::vector<Poly> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b]->modular) throw std::logic_error("basis polynomials are unavailable for modular blocks");
    for (const auto& [pivot, row] : blocks_[b]->exact.rows()) {
      Poly q(space_);
      for (const auto& [c, x] : row) q.add_term(block_columns_[b][c], x);
      out.push_back(std::move(q));
    }
  }
  return out;
}

// ---------------------------------------------------------------- orbit spans

OrbitSpan orbit_span(const Poly& f, GroupSampler& sampler, SpanBasis span, const OrbitSpanOptions& options) {
  require(!f.is_zero() && f.is_homogeneous(), "orbit_span needs a nonzero homogeneous polynomial");
  require(options.round_size > 0 && options.stagnant_rounds > 0, "orbit_span needs positive round parameters");
  OrbitSpan result{std::move(span), 0, false};
  int stagnant = 0;
  while (result.samples < options.max_samples) {
    std::vector<GroupElement> elements;
    for (std::size_t i = 0; i < options.round_size; ++i) elements.push_back(sampler.next());
    std::vector<Poly> batch(elements.size(), Poly(result.span.space()));
    std::vector<Poly> raw(elements.size(), Poly(f.space()));
    parallel_for(elements.size(), options.threads, [&](std::size_t i) {
      raw[i] = act(elements[i], f);
      batch[i] = options.transform ? options.transform(raw[i]) : raw[i];
    });
    if (options.on_sample)
      for (const auto& s : raw) options.on_sample(s);
    result.samples += elements.size();
    const std::size_t gained = result.span.add(batch);
    const std::size_t dim = result.span.dimension();
    if (options.upper_bound) {
      if (dim > *options.upper_bound)
        throw ConsistencyError("span dimension " + std::to_string(dim) + " exceeds the upper bound " +
                               std::to_string(*options.upper_bound));
      if (dim == *options.upper_bound) {
        result.certified = true;
        break;
      }
    }
    stagnant = gained == 0 ? stagnant + 1 : 0;
    if (stagnant >= options.stagnant_rounds) break;
  }
  return result;
}

OrbitSpan orbit_span(const Poly& f, GroupSampler& sampler, const OrbitSpanOptions& options) {
  require(!f.is_zero() && f.is_homogeneous(), "orbit_span needs a nonzero homogeneous polynomial");
  SpanBasis span(f.space(), f.max_degree(), Grading::exponents(f.space().size()));
  return orbit_span(f, sampler, std::move(span), options);
}

WeightCharacter weight_character(const SpanBasis& span) { return span.character(); }

std::size_t blocked_rank(const std::vector<SparseVector>& vectors, const std::vector<std::size_t>& blocks) {
  std::map<std::size_t, RationalEchelon> echelons;
  for (const auto& v : vectors) {
    std::map<std::size_t, SparseVector> parts;
    for (const auto& [c, x] : v) {
      if (c >= blocks.size()) throw std::out_of_range("coordinate has no block");
      parts[blocks[c]].emplace(c, x);
    }
    for (auto& [b, part] : parts) echelons[b].add(std::move(part));
  }
  std::size_t r = 0;
  for (const auto& [b, e] : echelons) r += e.rank();
  return r;
}

Poly linearize(const Poly& q, const std::vector<Exponent>& monomials) {
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  const VarSpace y = VarSpace::generic(static_cast<int>(monomials.size()));
  Poly out(y);
  for (const auto& [e, c] : q.terms()) {
    auto it = index.find(e);
    if (it == index.end()) throw PreconditionError("monomial outside the linearization basis");
    Exponent unit(monomials.size(), 0);
    unit[it->second] = 1;
    out.add_term(unit, c);
  }
  return out;
}

}  // namespace gct
