#include "gct/liealg.hpp"

#include <map>
#include <sstream>

#include "gct/errors.hpp"
#include "gct/sampling.hpp"

namespace gct {

namespace {

struct Regions {
  int m, n;
  bool in_s1(std::size_t v) const {
    const int i = static_cast<int>(v) / m + 1, j = static_cast<int>(v) % m + 1;
    return n > 0 && i > m - n && j > m - n;
  }
  bool in_s(std::size_t v) const { return v == 0 || in_s1(v); }
};

const std::pair<Subalgebra, const char*> kNames[] = {
    {Subalgebra::full_gl, "full-gl"},         {Subalgebra::parabolic_P, "parabolic-P"},
    {Subalgebra::levi_L2P, "levi-L2P"},       {Subalgebra::levi_LR, "levi-LR"},
    {Subalgebra::unipotent_UP, "unipotent-UP"}, {Subalgebra::levi_L1P, "levi-L1P"},
};

Poly to_full(const Poly& q, int m) {
  const VarSpace target = VarSpace::full(m);
  if (q.space() == target) return q;
  if (q.space().kind() == VarSpace::Kind::generic || q.space().m() != m)
    throw PreconditionError("polynomial on " + q.space().describe() + " does not live on " + target.describe());
  return q.embedded(target);
}

}  // namespace

SubalgebraSpec SubalgebraSpec::make(Subalgebra name, int m, int n) {
  require(m >= 1, "subalgebra needs m >= 1");
  if (name == Subalgebra::full_gl) {
    require(n == 0 || (n >= 1 && n < m), "subalgebra needs 1 <= n < m");
  } else {
    require(n >= 1 && n < m, "subalgebra " + std::string(kNames[static_cast<int>(name)].second) + " needs 1 <= n < m");
  }
  return {name, m, n};
}

SubalgebraSpec SubalgebraSpec::parse(const std::string& name, int m, int n) {
  for (const auto& [value, text] : kNames)
    if (name == text) return make(value, m, n);
  throw PreconditionError("unknown subalgebra '" + name + "'");
}

std::string SubalgebraSpec::label() const { return kNames[static_cast<int>(name)].second; }

bool SubalgebraSpec::contains(std::size_t a, std::size_t b) const {
  const Regions r{m, n};
  switch (name) {
    case Subalgebra::full_gl: return true;
    case Subalgebra::parabolic_P: return !( !r.in_s(a) && r.in_s(b));
    case Subalgebra::levi_L2P: return r.in_s(a) && r.in_s(b);
    case Subalgebra::levi_LR: return (a == 0 && b == 0) || (r.in_s1(a) && r.in_s1(b));
    case Subalgebra::unipotent_UP: return r.in_s(a) && !r.in_s(b);
    case Subalgebra::levi_L1P: return !r.in_s(a) && !r.in_s(b);
  }
  return false;
}

std::vector<std::pair<std::size_t, std::size_t>> SubalgebraSpec::basis_pairs() const {
  const std::size_t k = static_cast<std::size_t>(m) * m;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<LieElement> SubalgebraSpec::basis() const {
  std::vector<LieElement> out;
  for (auto [a, b] : basis_pairs()) out.push_back(LieElement::elementary(space(), a, b));
  return out;
}

std::size_t SubalgebraSpec::dimension() const { return basis_pairs().size(); }

IsotropyReport annihilator_dim(const Poly& q, const SubalgebraSpec& sub, const RankPolicy& policy) {
  const Poly f = to_full(q, sub.m);
  const auto pairs = sub.basis_pairs();
  std::vector<Poly> partials;
  partials.reserve(f.space().size());
  for (std::size_t v = 0; v < f.space().size(); ++v) partials.push_back(f.derivative(v));
  // lie_act(E_ab, f) = x_a * df/dx_b; cheaper than the generic path.
  std::vector<Poly> images;
  images.reserve(pairs.size());
  for (auto [a, b] : pairs) images.push_back(partials[b] * Poly::variable(f.space(), a));

  IsotropyReport report;
  report.subalgebra = sub;
  report.rank = rank_with_policy(to_vectors(images), policy);
  report.kernel_dim = pairs.size() - report.rank.rank;
  report.orbit_dim = report.rank.rank;
  return report;
}

std::vector<QuadricRow> quadric_orbit_dims() {
  const VarSpace e = VarSpace::full(2);
  const auto gl = SubalgebraSpec::make(Subalgebra::full_gl, 2);
  std::vector<QuadricRow> rows;
  for (int r = 4; r >= 0; --r) {
    Poly q(e);
    for (int i = 0; i < r; ++i) q += Poly::variable(e, static_cast<std::size_t>(i)).pow(2);
    const auto rep = annihilator_dim(q, gl);
    rows.push_back({r, rep.kernel_dim, rep.orbit_dim});
  }
  return rows;
}

RatMatrix tau_matrix(const RatMatrix& a, const RatMatrix& b, Star star) {
  require(a.square() && b.square() && a.rows() == b.rows(), "tau needs square matrices of one size");
  const std::size_t m = a.rows();
  RatMatrix t(m * m, m * m);
  // (A Y B)_{ij} = sum_{k,l} A_ik Y_kl B_lj; with Y transposed, Y_kl becomes Y_lk.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          const std::size_t col = star == Star::plain ? k * m + l : l * m + k;
          t(i * m + j, col) += a(i, k) * b(l, j);
        }
  return t;
}

GroupElement tau_element(const RatMatrix& a, const RatMatrix& b, Star star) {
  const int m = static_cast<int>(a.rows());
  return {VarSpace::full(m), tau_matrix(a, b, star).transpose()};
}

Rational tau_induced_det(const RatMatrix& a, const RatMatrix& b, Star star) {
  return tau_matrix(a, b, star).determinant();
}

std::string StabilizerVerdict::describe() const {
  switch (kind) {
    case Kind::fixes: return "fixes";
    case Kind::scales: return "scales by " + to_fraction_string(factor);
    case Kind::moves: return "moves";
  }
  return "";
}

StabilizerVerdict stabilizer_check(const Poly& q, const GroupElement& g) {
  const Poly image = act(g, q);
  if (image == q) return {StabilizerVerdict::Kind::fixes, 1};
  if (q.is_zero() || image.term_count() != q.term_count()) return {};
  const Rational c = image.terms().begin()->second / q.terms().begin()->second;
  if (image == q.scaled(c)) return {StabilizerVerdict::Kind::scales, c};
  return {};
}

std::size_t translation_kernel_dim(const Poly& q) {
  const std::size_t k = q.space().size();
  const VarSpace xc = VarSpace::generic(static_cast<int>(2 * k));
  std::vector<Poly> shifted;
  for (std::size_t v = 0; v < k; ++v)
    shifted.push_back(Poly::variable(xc, v) + Poly::variable(xc, k + v));
  const Poly diff = q.substitute(shifted);
  // Terms of C-degree one: for each X-monomial, a linear form in the c's.
  std::map<Exponent, SparseVector> rows;
  for (const auto& [e, coeff] : diff.terms()) {
    int cdeg = 0;
    std::size_t which = 0;
    for (std::size_t v = 0; v < k; ++v)
      if (e[k + v] != 0) {
        cdeg += e[k + v];
        which = v;
      }
    if (cdeg != 1) continue;
    rows[Exponent(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k))][which] = coeff;
  }
  std::vector<SparseVector> system;
  for (auto& [x, row] : rows) system.push_back(std::move(row));
  return k - exact_rank(system);
}

std::size_t solve_translation_invariance(int n) {
  require(n >= 2, "translation invariance needs n >= 2");
  return translation_kernel_dim(perm_poly(n));
}

bool PaddedProfile::all_hold() const {
  for (const auto& a : assertions)
    if (!a.holds) return false;
  return true;
}

PaddedProfile padded_isotropy_profile(int m, int n, const RankPolicy& policy) {
  require(n >= 3 && n < m, "padded isotropy profile needs 3 <= n < m");
  const Poly p = padded_perm(m, n);
  PaddedProfile out;
  out.m = m;
  out.n = n;
  auto run = [&](Subalgebra s, std::size_t& dim) {
    const auto spec = SubalgebraSpec::make(s, m, n);
    dim = spec.dimension();
    return annihilator_dim(p, spec, policy).kernel_dim;
  };
  out.k_full = run(Subalgebra::full_gl, out.dim_full);
  out.k_P = run(Subalgebra::parabolic_P, out.dim_P);
  out.k_L2P = run(Subalgebra::levi_L2P, out.dim_L2P);
  out.k_LR = run(Subalgebra::levi_LR, out.dim_LR);
  out.dim_UP = SubalgebraSpec::make(Subalgebra::unipotent_UP, m, n).dimension();
  out.dim_L1P = SubalgebraSpec::make(Subalgebra::levi_L1P, m, n).dimension();

  const long mm = static_cast<long>(m) * m, nn = static_cast<long>(n) * n;
  const auto eq = [](std::size_t a, std::size_t b) {
    return std::to_string(a) + (a == b ? " = " : " != ") + std::to_string(b);
  };
  out.assertions.push_back({"k_full = k_P", out.k_full == out.k_P, eq(out.k_full, out.k_P)});
  out.assertions.push_back({"k_L2P = k_LR", out.k_L2P == out.k_LR, eq(out.k_L2P, out.k_LR)});
  const std::size_t sum = out.dim_UP + out.dim_L1P + out.k_L2P;
  out.assertions.push_back({"k_P = dim UP + dim L1P + k_L2P", out.k_P == sum,
                            eq(out.k_P, sum) + " (" + std::to_string(out.dim_UP) + " + " +
                                std::to_string(out.dim_L1P) + " + " + std::to_string(out.k_L2P) + ")"});
  const auto orbit = out.dim_full - out.k_full;
  const auto dim_y = static_cast<std::size_t>(mm * (nn + 1) - 2L * n + 1);
  out.assertions.push_back({"m^4 - k_full = m^2(n^2+1) - 2n + 1", orbit == dim_y, eq(orbit, dim_y)});
  return out;
}

bool trivial_action_check(int m, int n, int samples, std::uint64_t seed) {
  require(n >= 3 && n < m, "trivial action check needs 3 <= n < m");
  const VarSpace e = VarSpace::full(m);
  const Poly p = padded_perm(m, n).embedded(e);
  const Regions r{m, n};
  const std::size_t k = e.size();
  std::vector<std::size_t> perp;
  for (std::size_t v = 0; v < k; ++v)
    if (!r.in_s(v)) perp.push_back(v);

  std::vector<GroupElement> elements{GroupElement::identity(e)};
  // x_{1,2} -> x_{1,2} + x_{m,m}: a U_P transvection.
  RatMatrix t = RatMatrix::identity(k);
  t(e.index_of(m, m), e.index_of(1, 2)) = 1;
  elements.emplace_back(e, t);

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    RatMatrix u = RatMatrix::identity(k);
    for (std::size_t a = 0; a < k; ++a)
      if (r.in_s(a))
        for (std::size_t b : perp) u(a, b) = rng.uniform_int(-3, 3);
    elements.emplace_back(e, std::move(u));

    const RatMatrix block = random_invertible(perp.size(), rng);
    RatMatrix l = RatMatrix::identity(k);
    for (std::size_t i = 0; i < perp.size(); ++i)
      for (std::size_t j = 0; j < perp.size(); ++j) l(perp[i], perp[j]) = block(i, j);
    elements.emplace_back(e, std::move(l));
  }
  for (const auto& g : elements)
    if (!(act(g, p) == p)) return false;
  return true;
}

}  // namespace gct
