#include "gct/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gct/errors.hpp"

namespace gct {

bool is_dominant(const std::vector<int>& parts) {
  return std::is_sorted(parts.begin(), parts.end(), std::greater<>());
}

DominantWeight::DominantWeight(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_dominant(parts_)) throw PreconditionError("weight (" + key() + ") is not weakly decreasing");
}

int DominantWeight::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string DominantWeight::key() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition::Partition(std::vector<int> parts) : DominantWeight(std::move(parts)) {
  if (!parts_.empty() && parts_.back() < 0) throw PreconditionError("partition (" + key() + ") has a negative part");
}

Partition Partition::padded(std::size_t k) const {
  std::vector<int> p = parts_;
  if (p.size() > k) {
    if (std::any_of(p.begin() + static_cast<long>(k), p.end(), [](int x) { return x != 0; }))
      throw PreconditionError("partition (" + key() + ") has more than " + std::to_string(k) + " nonzero parts");
    p.resize(k);
  }
  p.resize(k, 0);
  return Partition(std::move(p));
}

bool interlaces(const DominantWeight& mu, const DominantWeight& lam) {
  if (mu.rank() + 1 != lam.rank())
    throw PreconditionError("interlacing needs rank(mu) = rank(lam) - 1, got " + std::to_string(mu.rank()) + " and " +
                            std::to_string(lam.rank()));
  for (std::size_t i = 0; i < mu.rank(); ++i)
    if (lam[i] < mu[i] || mu[i] < lam[i + 1]) return false;
  return true;
}

Integer weyl_dim(const DominantWeight& lam, std::size_t k) {
  if (lam.rank() != k)
    throw PreconditionError("weyl_dim: weight has rank " + std::to_string(lam.rank()) + ", expected " +
                            std::to_string(k));
  Rational prod = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      prod *= Rational(lam[i] - lam[j] + static_cast<long>(j - i), static_cast<long>(j - i));
  prod.canonicalize();
  if (prod.get_den() != 1) throw ConsistencyError("Weyl dimension is not integral");
  return prod.get_num();
}

Integer weyl_dim(const DominantWeight& lam) { return weyl_dim(lam, lam.rank()); }

Integer sym_power_dim(int d, int k) {
  if (d < 0 || k < 0) return 0;
  if (k == 0) return d == 0 ? 1 : 0;
  return binomial(k + d - 1, d);
}

std::vector<DominantWeight> branch(const DominantWeight& lam) {
  const std::size_t k = lam.rank();
  require(k >= 2, "branch requires rank >= 2");
  std::vector<DominantWeight> out;
  std::vector<int> mu(k - 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k - 1) {
      out.emplace_back(mu);
      return;
    }
    for (int x = lam[i]; x >= lam[i + 1]; --x) {
      mu[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Partition> pieri_row(const Partition& mu, int boxes, std::size_t N) {
  require(boxes >= 0, "pieri_row requires boxes >= 0");
  const Partition base = mu.padded(N);
  std::vector<Partition> out;
  std::vector<int> lam(N);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == N) {
      if (left == 0) out.emplace_back(lam);
      return;
    }
    const int lo = base[i];
    const int hi = i == 0 ? base[0] + left : std::min(base[i - 1], base[i] + left);
    for (int x = hi; x >= lo; --x) {
      lam[i] = x;
      rec(i + 1, left - (x - lo));
    }
  };
  if (N > 0) rec(0, boxes);
  else if (boxes == 0) out.emplace_back(std::vector<int>{});
  return out;
}

DominantWeight hat_lift(const DominantWeight& lam, int m, int n) {
  require(n >= 1 && n < m, "hat_lift requires 1 <= n < m");
  const auto k = static_cast<std::size_t>(n * n + 1);
  require(lam.rank() == k, "hat_lift expects a weight of rank n^2 + 1 = " + std::to_string(k));
  require(lam[0] <= 0, "hat_lift requires lam_1 <= 0, got (" + lam.key() + ")");
  std::vector<int> parts(static_cast<std::size_t>(m * m - n * n - 1), 0);
  parts.insert(parts.end(), lam.parts().begin(), lam.parts().end());
  return DominantWeight(std::move(parts));
}

DominantWeight dualize(const DominantWeight& lam) {
  std::vector<int> parts(lam.parts().rbegin(), lam.parts().rend());
  for (int& x : parts) x = -x;
  return DominantWeight(std::move(parts));
}

std::vector<Partition> partitions_of(int total, std::size_t k) {
  std::vector<Partition> out;
  if (total < 0) return out;
  std::vector<int> lam(k, 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int left, int cap) {
    if (i == k) {
      if (left == 0) out.emplace_back(lam);
      return;
    }
    for (int x = std::min(left, cap); x >= 0; --x) {
      // the remaining k - i - 1 parts can hold at most x each
      if (static_cast<long>(x) * static_cast<long>(k - i) < left) break;
      lam[i] = x;
      rec(i + 1, left - x, x);
    }
  };
  if (k == 0) {
    if (total == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  rec(0, total, total);
  return out;
}

}  // namespace gct
