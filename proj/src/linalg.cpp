#include "gct/linalg.hpp"

#include "gct/modular.hpp"

namespace gct {

void RationalEchelon::reduce(SparseVector& v) const {
  // Rows have a leading 1 at their pivot, so eliminating left to right
  // never reintroduces an already-cleared pivot column.
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Rational c = it->second;
    const std::size_t col = it->first;
    for (const auto& [j, r] : row->second) {
      auto [pos, inserted] = v.try_emplace(j, -c * r);
      if (!inserted) {
        pos->second -= c * r;
        if (sgn(pos->second) == 0) v.erase(pos);
      }
    }
    it = v.upper_bound(col);
  }
}

bool RationalEchelon::add(SparseVector v) {
  std::erase_if(v, [](const auto& kv) { return sgn(kv.second) == 0; });
  reduce(v);
  if (v.empty()) return false;
  const Rational lead = v.begin()->second;
  for (auto& [j, x] : v) x /= lead;
  const std::size_t piv = v.begin()->first;
  rows_.emplace(piv, std::move(v));
  return true;
}

bool RationalEchelon::contains(SparseVector v) const {
  std::erase_if(v, [](const auto& kv) { return sgn(kv.second) == 0; });
  reduce(v);
  return v.empty();
}

std::size_t exact_rank(const std::vector<SparseVector>& vectors) {
  RationalEchelon ech;
  for (const auto& v : vectors) ech.add(v);
  return ech.rank();
}

std::size_t modular_rank(const std::vector<SparseVector>& vectors, std::uint64_t p) {
  using Row = std::map<std::size_t, std::uint64_t>;
  std::map<std::size_t, Row> rows;
  for (const auto& src : vectors) {
    Row v;
    for (const auto& [j, x] : src) {
      const std::uint64_t r = modp::reduce(x, p);
      if (r != 0) v.emplace(j, r);
    }
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows.find(it->first);
      if (row == rows.end()) {
        ++it;
        continue;
      }
      const std::uint64_t c = it->second;
      const std::size_t col = it->first;
      for (const auto& [j, r] : row->second) {
        const std::uint64_t t = modp::mul(c, r, p);
        auto [pos, inserted] = v.try_emplace(j, modp::sub(0, t, p));
        if (!inserted) {
          pos->second = modp::sub(pos->second, t, p);
          if (pos->second == 0) v.erase(pos);
        }
      }
      it = v.upper_bound(col);
    }
    if (v.empty()) continue;
    const std::uint64_t inv = modp::inverse(v.begin()->second, p);
    for (auto& [j, x] : v) x = modp::mul(x, inv, p);
    const std::size_t piv = v.begin()->first;
    rows.emplace(piv, std::move(v));
  }
  return rows.size();
}

RankResult rank_with_policy(const std::vector<SparseVector>& vectors, const RankPolicy& policy) {
  std::size_t entries = 0;
  for (const auto& v : vectors) entries += v.size();
  if (entries <= policy.exact_entry_limit) return {exact_rank(vectors), false, true, {}};
  const std::size_t r1 = modular_rank(vectors, policy.prime1);
  const std::size_t r2 = modular_rank(vectors, policy.prime2);
  // rank mod p never exceeds the rational rank, so the larger value is the better bound.
  return {std::max(r1, r2), true, r1 == r2, {policy.prime1, policy.prime2}};
}

std::vector<SparseVector> to_vectors(const std::vector<Poly>& polys) {
  std::map<Exponent, std::size_t> index;
  std::vector<SparseVector> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    SparseVector v;
    for (const auto& [e, c] : p.terms()) {
      auto [it, inserted] = index.try_emplace(e, index.size());
      v.emplace(it->second, c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace gct
