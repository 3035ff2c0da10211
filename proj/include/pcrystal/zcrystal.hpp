#pragma once

// The crystal Z^infty_iota for the cyclic index sequence
// iota = (..., n, n-1, ..., 2, 1), its twist Z^infty_iota[lambda] by the
// one-element crystal R_lambda, and brute-force generation of B(infty) and
// B(lambda) inside them.

#include "pcrystal/rootdata.hpp"

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

namespace pcrystal {

/// Doubly indexed coordinate (j;i): row j >= 1, column i in [1, n].
struct Position {
  int row = 1;
  int col = 1;
  auto operator<=>(const Position &) const = default;
  bool operator==(const Position &) const = default;
};

/// The fixed sequence iota = (..., n, ..., 1, n, ..., 1). Position k carries
/// node i_k = ((k - 1) mod n) + 1, so flat index k = (j - 1) n + i.
class IotaSequence {
public:
  explicit IotaSequence(CartanDatum cartan) : cartan_(std::move(cartan)) {}

  const CartanDatum &cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }

  int node(int k) const { return (k - 1) % rank() + 1; }
  int flat(int row, int col) const { return (row - 1) * rank() + col; }
  int flat(Position p) const { return flat(p.row, p.col); }
  Position position(int k) const { return {(k - 1) / rank() + 1, (k - 1) % rank() + 1}; }

  /// k^(+) = min{l > k : i_l = i_k}.
  int next(int k) const { return k + rank(); }
  /// k^(-) = max{l < k : i_l = i_k}, or 0 when k is a first occurrence.
  int prev(int k) const { return k > rank() ? k - rank() : 0; }
  /// iota^(i): the first k with i_k = i.
  int first_occurrence(int i) const { return i; }

  Int a(int i, int j) const { return cartan_.a(i, j); }

private:
  CartanDatum cartan_;
};

/// Finitely supported integer sequence; entries are (flat index, value) with
/// nonzero values, sorted by index.
class ZVector {
public:
  using Entry = std::pair<int, Int>;

  ZVector() = default;

  static ZVector from_entries(std::vector<Entry> entries) {
    std::map<int, Int> acc;
    for (auto [k, v] : entries) {
      if (k < 1) throw crystal_error("ZVector index must be >= 1");
      acc[k] += v;
    }
    ZVector z;
    for (auto [k, v] : acc)
      if (v != 0) z.entries_.emplace_back(k, v);
    return z;
  }

  Int operator[](int k) const {
    auto it = find(k);
    return it != entries_.end() && it->first == k ? it->second : 0;
  }

  /// Copy with entry k shifted by delta.
  ZVector add(int k, Int delta) const {
    ZVector z = *this;
    auto it = z.find_mut(k);
    if (it != z.entries_.end() && it->first == k) {
      it->second += delta;
      if (it->second == 0) z.entries_.erase(it);
    } else if (delta != 0) {
      z.entries_.insert(it, {k, delta});
    }
    return z;
  }

  const std::vector<Entry> &entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  int max_index() const { return entries_.empty() ? 0 : entries_.back().first; }
  Int total() const {
    Int s = 0;
    for (auto [k, v] : entries_) s += v;
    return s;
  }

  auto operator<=>(const ZVector &) const = default;
  bool operator==(const ZVector &) const = default;

private:
  std::vector<Entry>::const_iterator find(int k) const {
    return std::lower_bound(entries_.begin(), entries_.end(), k,
                            [](const Entry &e, int key) { return e.first < key; });
  }
  std::vector<Entry>::iterator find_mut(int k) {
    return std::lower_bound(entries_.begin(), entries_.end(), k,
                            [](const Entry &e, int key) { return e.first < key; });
  }

  std::vector<Entry> entries_;
};

struct ZVectorHash {
  std::size_t operator()(const ZVector &z) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto [k, v] : z.entries()) {
      h ^= std::hash<Int>{}(static_cast<Int>(k) * 1000003 + v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using ZVectorSet = std::set<ZVector>;

/// An element of Z^infty_iota (no lambda) or of Z^infty_iota[lambda].
struct CrystalNode {
  ZVector vector;
  std::optional<Weight> lambda;

  bool tensor() const { return lambda.has_value(); }
  bool operator==(const CrystalNode &) const = default;
};

/// sigma_k(x) = x_k + sum_{j > k} <h_{i_k}, alpha_{i_j}> x_j.
inline Int sigma(const IotaSequence &iota, const ZVector &x, int k) {
  const int ik = iota.node(k);
  Int s = x[k];
  for (auto [j, v] : x.entries())
    if (j > k) s += iota.a(ik, iota.node(j)) * v;
  return s;
}

/// sigma^(i)(x) together with min M^(i) and, when the value is positive,
/// max M^(i) (M^(i) is infinite otherwise).
struct SigmaMax {
  Int value = 0;
  int min_position = 0;
  std::optional<int> max_position;
};

inline SigmaMax sigma_i_max(const IotaSequence &iota, const ZVector &x, int i) {
  const int n = iota.rank();
  // Beyond the last supported row every sigma_k vanishes, so one extra row
  // decides both the maximum and the minimal maximiser.
  const int last_row = x.is_zero() ? 1 : iota.position(x.max_index()).row + 1;
  const auto &e = x.entries();
  std::size_t p = e.size();
  Int tail = 0;
  std::vector<Int> values(last_row + 1, 0);
  for (int r = last_row; r >= 1; --r) {
    const int k = (r - 1) * n + i;
    while (p > 0 && e[p - 1].first > k) {
      tail += iota.a(i, iota.node(e[p - 1].first)) * e[p - 1].second;
      --p;
    }
    values[r] = x[k] + tail;
  }
  SigmaMax out;
  out.value = values[1];
  for (int r = 2; r <= last_row; ++r) out.value = std::max(out.value, values[r]);
  for (int r = 1; r <= last_row; ++r)
    if (values[r] == out.value) {
      out.min_position = (r - 1) * n + i;
      break;
    }
  if (out.value > 0)
    for (int r = last_row; r >= 1; --r)
      if (values[r] == out.value) {
        out.max_position = (r - 1) * n + i;
        break;
      }
  return out;
}

/// -sum_k x_k alpha_{i_k}, in the simple-root basis.
inline Root root_content(const IotaSequence &iota, const ZVector &x) {
  Root r{std::vector<Int>(iota.rank(), 0)};
  for (auto [k, v] : x.entries()) r.coefficients[iota.node(k) - 1] -= v;
  return r;
}

// ---- plain crystal Z^infty_iota -------------------------------------------

inline Weight weight(const IotaSequence &iota, const ZVector &x) {
  return iota.cartan().to_weight(root_content(iota, x));
}

inline Int epsilon(const IotaSequence &iota, const ZVector &x, int i) {
  return sigma_i_max(iota, x, i).value;
}

inline Int phi(const IotaSequence &iota, const ZVector &x, int i) {
  return weight(iota, x)[i] + epsilon(iota, x, i);
}

inline ZVector f_tilde(const IotaSequence &iota, const ZVector &x, int i) {
  return x.add(sigma_i_max(iota, x, i).min_position, 1);
}

inline std::optional<ZVector> e_tilde(const IotaSequence &iota, const ZVector &x, int i) {
  SigmaMax s = sigma_i_max(iota, x, i);
  if (s.value <= 0) return std::nullopt;
  return x.add(*s.max_position, -1);
}

// ---- dispatch on the ambient crystal --------------------------------------
//
// On Z_iota[lambda] = Z_iota (x) R_lambda with wt(r) = lambda,
// eps_i(r) = -<h_i, lambda>, phi_i(r) = 0 and e_i r = f_i r = 0:
//   f_i(x (x) r) = f_i x (x) r   if phi_i(x) >  eps_i(r), else 0
//   e_i(x (x) r) = e_i x (x) r   if phi_i(x) >= eps_i(r), else 0
//   eps_i(x (x) r) = max(eps_i(x), eps_i(r) - <h_i, wt x>)
//   phi_i(x (x) r) = max(phi_i(r), phi_i(x) + <h_i, lambda>)

inline Weight weight(const IotaSequence &iota, const CrystalNode &b) {
  Weight w = weight(iota, b.vector);
  if (b.lambda)
    for (int i = 0; i < iota.rank(); ++i) w.coefficients[i] += b.lambda->coefficients[i];
  return w;
}

inline Int epsilon(const IotaSequence &iota, const CrystalNode &b, int i) {
  Int e = epsilon(iota, b.vector, i);
  if (!b.lambda) return e;
  return std::max(e, -(*b.lambda)[i] - weight(iota, b.vector)[i]);
}

inline Int phi(const IotaSequence &iota, const CrystalNode &b, int i) {
  Int p = phi(iota, b.vector, i);
  if (!b.lambda) return p;
  return std::max(Int{0}, p + (*b.lambda)[i]);
}

inline std::optional<CrystalNode> f_tilde(const IotaSequence &iota, const CrystalNode &b, int i) {
  if (b.lambda && !(phi(iota, b.vector, i) > -(*b.lambda)[i])) return std::nullopt;
  return CrystalNode{f_tilde(iota, b.vector, i), b.lambda};
}

inline std::optional<CrystalNode> e_tilde(const IotaSequence &iota, const CrystalNode &b, int i) {
  if (b.lambda && !(phi(iota, b.vector, i) >= -(*b.lambda)[i])) return std::nullopt;
  auto y = e_tilde(iota, b.vector, i);
  if (!y) return std::nullopt;
  return CrystalNode{std::move(*y), b.lambda};
}

// ---- generation -------------------------------------------------------------

/// All vectors reachable from 0 by at most `depth` applications of f_i.
inline ZVectorSet generate_binf(const IotaSequence &iota, int depth) {
  std::unordered_set<ZVector, ZVectorHash> seen{ZVector{}};
  std::vector<ZVector> frontier{ZVector{}};
  for (int d = 0; d < depth; ++d) {
    std::vector<ZVector> next;
    for (const ZVector &x : frontier)
      for (int i = 1; i <= iota.rank(); ++i) {
        ZVector y = f_tilde(iota, x, i);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return ZVectorSet(seen.begin(), seen.end());
}

inline constexpr std::size_t kDefaultGenerationCap = 10'000'000;

/// The f_i-closure of 0 (x) r_lambda inside Z_iota[lambda].
inline ZVectorSet generate_blambda(const IotaSequence &iota, const Weight &lambda,
                                   std::size_t cap = kDefaultGenerationCap) {
  if (lambda.rank() != iota.rank()) throw crystal_error("weight length does not match rank");
  if (!lambda.dominant()) throw crystal_error("B(lambda) requires a dominant weight");
  std::unordered_set<ZVector, ZVectorHash> seen{ZVector{}};
  std::deque<ZVector> queue{ZVector{}};
  while (!queue.empty()) {
    ZVector x = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= iota.rank(); ++i) {
      auto y = f_tilde(iota, CrystalNode{x, lambda}, i);
      if (!y) continue;
      if (seen.insert(y->vector).second) {
        if (seen.size() > cap) throw crystal_error("B(lambda) generation exceeded its size cap");
        queue.push_back(std::move(y->vector));
      }
    }
  }
  return ZVectorSet(seen.begin(), seen.end());
}

} // namespace pcrystal
