#pragma once

// Cartan data, positive roots and the Weyl dimension formula for the finite
// simple types.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcrystal {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class crystal_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class TypeLabel { A, B, C, D, F4, E6, E7, E8, G2 };

inline std::string to_string(TypeLabel t) {
  switch (t) {
  case TypeLabel::A: return "A";
  case TypeLabel::B: return "B";
  case TypeLabel::C: return "C";
  case TypeLabel::D: return "D";
  case TypeLabel::F4: return "F4";
  case TypeLabel::E6: return "E6";
  case TypeLabel::E7: return "E7";
  case TypeLabel::E8: return "E8";
  case TypeLabel::G2: return "G2";
  }
  return "?";
}

// Accepts "A".."D", "F4", "E6", "E7", "E8", "G2"; also "F", "E", "G" with the
// rank supplied separately (resolved in cartan_matrix).
inline std::optional<TypeLabel> parse_type_label(std::string_view s, int rank) {
  std::string u(s);
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
  if (u == "A") return TypeLabel::A;
  if (u == "B") return TypeLabel::B;
  if (u == "C") return TypeLabel::C;
  if (u == "D") return TypeLabel::D;
  if (u == "F4" || (u == "F" && rank == 4)) return TypeLabel::F4;
  if (u == "G2" || (u == "G" && rank == 2)) return TypeLabel::G2;
  if (u == "E6" || (u == "E" && rank == 6)) return TypeLabel::E6;
  if (u == "E7" || (u == "E" && rank == 7)) return TypeLabel::E7;
  if (u == "E8" || (u == "E" && rank == 8)) return TypeLabel::E8;
  return std::nullopt;
}

/// Integer vector in the fundamental-weight basis: lambda = sum c_k Lambda_k.
struct Weight {
  std::vector<Int> coefficients;

  Weight() = default;
  explicit Weight(std::vector<Int> c) : coefficients(std::move(c)) {}

  static Weight zero(int rank) { return Weight(std::vector<Int>(rank, 0)); }
  static Weight fundamental(int rank, int node) {
    Weight w = zero(rank);
    w.coefficients.at(node - 1) = 1;
    return w;
  }

  int rank() const { return static_cast<int>(coefficients.size()); }
  Int operator[](int node) const { return coefficients[node - 1]; }
  bool dominant() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](Int c) { return c >= 0; });
  }
  auto operator<=>(const Weight &) const = default;
  bool operator==(const Weight &) const = default;
};

/// Integer vector in the simple-root basis.
struct Root {
  std::vector<Int> coefficients;

  int height() const {
    return static_cast<int>(std::accumulate(coefficients.begin(), coefficients.end(), Int{0}));
  }
  bool positive() const {
    bool any = false;
    for (Int c : coefficients) {
      if (c < 0) return false;
      any = any || c != 0;
    }
    return any;
  }
  auto operator<=>(const Root &) const = default;
  bool operator==(const Root &) const = default;
};

class CartanDatum {
public:
  CartanDatum(TypeLabel type, std::vector<std::vector<Int>> matrix)
      : type_(type), matrix_(std::move(matrix)) {
    validate();
    symmetrizer_ = compute_symmetrizer();
  }

  TypeLabel type() const { return type_; }
  int rank() const { return static_cast<int>(matrix_.size()); }
  /// a(i, j) = <h_i, alpha_j>, nodes are 1-based.
  Int a(int i, int j) const { return matrix_[i - 1][j - 1]; }
  const std::vector<std::vector<Int>> &matrix() const { return matrix_; }
  const std::vector<Int> &symmetrizer() const { return symmetrizer_; }

  std::vector<int> neighbours(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= rank(); ++j)
      if (j != i && a(i, j) != 0) out.push_back(j);
    return out;
  }

  /// <h_i, lambda> for a weight given in the fundamental basis.
  Int pair(int i, const Weight &w) const { return w[i]; }

  /// <h_i, beta> for beta in the root lattice.
  Int pair(int i, const Root &beta) const {
    Int s = 0;
    for (int j = 1; j <= rank(); ++j) s += a(i, j) * beta.coefficients[j - 1];
    return s;
  }

  /// Fundamental-basis coordinates of a root-lattice element.
  Weight to_weight(const Root &beta) const {
    Weight w = Weight::zero(rank());
    for (int i = 1; i <= rank(); ++i) w.coefficients[i - 1] = pair(i, beta);
    return w;
  }

  std::string label() const {
    switch (type_) {
    case TypeLabel::A:
    case TypeLabel::B:
    case TypeLabel::C:
    case TypeLabel::D: return to_string(type_) + std::to_string(rank());
    default: return to_string(type_);
    }
  }

  bool operator==(const CartanDatum &o) const { return type_ == o.type_ && matrix_ == o.matrix_; }

private:
  void validate() const {
    const int n = rank();
    if (n == 0) throw crystal_error("empty Cartan matrix");
    for (const auto &row : matrix_)
      if (static_cast<int>(row.size()) != n) throw crystal_error("Cartan matrix is not square");
    for (int i = 1; i <= n; ++i) {
      if (a(i, i) != 2) throw crystal_error("Cartan matrix diagonal entry is not 2");
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        if (a(i, j) > 0) throw crystal_error("positive off-diagonal Cartan entry");
        if ((a(i, j) == 0) != (a(j, i) == 0))
          throw crystal_error("Cartan matrix zero pattern is not symmetric");
      }
    }
  }

  // Minimal positive integer d with d_i a_ij = d_j a_ji; walks each connected
  // component from its lowest node using rational ratios.
  std::vector<Int> compute_symmetrizer() const {
    const int n = rank();
    std::vector<BigRational> d(n, BigRational(0));
    for (int root = 0; root < n; ++root) {
      if (d[root] != 0) continue;
      d[root] = 1;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
          if (i == j || matrix_[i][j] == 0) continue;
          BigRational want = d[i] * BigRational(matrix_[i][j]) / BigRational(matrix_[j][i]);
          if (d[j] == 0) {
            d[j] = want;
            stack.push_back(j);
          } else if (d[j] != want) {
            throw crystal_error("Cartan matrix is not symmetrizable");
          }
        }
      }
    }
    BigInt lcm_den = 1;
    for (const auto &v : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
    std::vector<BigInt> scaled;
    BigInt g = 0;
    for (const auto &v : d) {
      BigInt s = numerator(v) * (lcm_den / denominator(v));
      scaled.push_back(s);
      g = boost::multiprecision::gcd(g, s);
    }
    std::vector<Int> out;
    for (const auto &s : scaled) out.push_back(static_cast<Int>(s / g));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (out[i - 1] * a(i, j) != out[j - 1] * a(j, i))
          throw crystal_error("Cartan matrix is not symmetrizable");
    return out;
  }

  TypeLabel type_;
  std::vector<std::vector<Int>> matrix_;
  std::vector<Int> symmetrizer_;
};

namespace detail {

inline std::vector<std::vector<Int>> matrix_from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  for (auto [u, v] : edges) {
    m[u - 1][v - 1] = -1;
    m[v - 1][u - 1] = -1;
  }
  return m;
}

inline std::vector<std::pair<int, int>> chain(int from, int to) {
  std::vector<std::pair<int, int>> e;
  for (int i = from; i < to; ++i) e.emplace_back(i, i + 1);
  return e;
}

} // namespace detail

/// Cartan matrix under the node ordering that the cyclic index sequence
/// (..., n, n-1, ..., 1) of the realization tables is written against.
///   B_n: a(n, n-1) = -2.   C_n: a(n-1, n) = -2.
///   D_n: n-1 and n both attached to n-2.   F4: a(2, 3) = -2.
///   E6: 1-2-3-4-5, 3-6.   E7: 1-...-6, 4-7.   E8: 1-...-7, 5-8.
///   G2: a(2, 1) = -3.
inline CartanDatum cartan_matrix(TypeLabel type, int rank) {
  auto bad = [&](const char *why) {
    std::ostringstream os;
    os << "invalid Cartan type " << to_string(type) << " with rank " << rank << ": " << why;
    return crystal_error(os.str());
  };
  using detail::chain;
  using detail::matrix_from_edges;
  switch (type) {
  case TypeLabel::A:
    if (rank < 1) throw bad("A_n needs n >= 1");
    return CartanDatum(type, matrix_from_edges(rank, chain(1, rank)));
  case TypeLabel::B: {
    if (rank < 2) throw bad("B_n needs n >= 2");
    auto m = matrix_from_edges(rank, chain(1, rank));
    m[rank - 1][rank - 2] = -2;
    return CartanDatum(type, m);
  }
  case TypeLabel::C: {
    if (rank < 2) throw bad("C_n needs n >= 2");
    auto m = matrix_from_edges(rank, chain(1, rank));
    m[rank - 2][rank - 1] = -2;
    return CartanDatum(type, m);
  }
  case TypeLabel::D: {
    if (rank < 4) throw bad("D_n needs n >= 4");
    auto e = chain(1, rank - 1);
    e.emplace_back(rank - 2, rank);
    return CartanDatum(type, matrix_from_edges(rank, e));
  }
  case TypeLabel::F4: {
    if (rank != 4) throw bad("F4 has rank 4");
    auto m = matrix_from_edges(4, chain(1, 4));
    m[1][2] = -2;
    return CartanDatum(type, m);
  }
  case TypeLabel::E6: {
    if (rank != 6) throw bad("E6 has rank 6");
    auto e = chain(1, 5);
    e.emplace_back(3, 6);
    return CartanDatum(type, matrix_from_edges(6, e));
  }
  case TypeLabel::E7: {
    if (rank != 7) throw bad("E7 has rank 7");
    auto e = chain(1, 6);
    e.emplace_back(4, 7);
    return CartanDatum(type, matrix_from_edges(7, e));
  }
  case TypeLabel::E8: {
    if (rank != 8) throw bad("E8 has rank 8");
    auto e = chain(1, 7);
    e.emplace_back(5, 8);
    return CartanDatum(type, matrix_from_edges(8, e));
  }
  case TypeLabel::G2: {
    if (rank != 2) throw bad("G2 has rank 2");
    auto m = matrix_from_edges(2, chain(1, 2));
    m[1][0] = -3;
    return CartanDatum(type, m);
  }
  }
  throw bad("unknown type");
}

inline constexpr std::size_t kRootClosureCap = 100000;

/// Positive roots by closing the simple roots under the simple reflections
/// s_i(beta) = beta - <h_i, beta> alpha_i. Sorted by height, then
/// lexicographically.
inline std::vector<Root> positive_roots(const CartanDatum &cartan) {
  const int n = cartan.rank();
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (int i = 1; i <= n; ++i) {
    Root r{std::vector<Int>(n, 0)};
    r.coefficients[i - 1] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root &beta : frontier) {
      for (int i = 1; i <= n; ++i) {
        Root r = beta;
        r.coefficients[i - 1] -= cartan.pair(i, beta);
        if (seen.insert(r).second) next.push_back(std::move(r));
        if (seen.size() > kRootClosureCap)
          throw crystal_error("root closure exceeded cap: Cartan matrix is not of finite type");
      }
    }
    frontier = std::move(next);
  }
  std::vector<Root> out;
  for (const Root &r : seen)
    if (r.positive()) out.push_back(r);
  std::stable_sort(out.begin(), out.end(),
                   [](const Root &x, const Root &y) { return x.height() < y.height(); });
  return out;
}

inline int longest_word_length(const CartanDatum &cartan) {
  return static_cast<int>(positive_roots(cartan).size());
}

/// dim V(lambda) = prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha),
/// with (Lambda_i, alpha_j) = d_j delta_ij.
inline BigInt weyl_dim(const CartanDatum &cartan, const Weight &lambda) {
  if (lambda.rank() != cartan.rank()) throw crystal_error("weight length does not match rank");
  if (!lambda.dominant()) throw crystal_error("weyl_dim requires a dominant weight");
  const auto &d = cartan.symmetrizer();
  BigRational product = 1;
  for (const Root &alpha : positive_roots(cartan)) {
    BigInt num = 0, den = 0;
    for (int j = 0; j < cartan.rank(); ++j) {
      num += BigInt(alpha.coefficients[j]) * d[j] * (lambda.coefficients[j] + 1);
      den += BigInt(alpha.coefficients[j]) * d[j];
    }
    product *= BigRational(num, den);
  }
  if (denominator(product) != 1) throw crystal_error("Weyl dimension is not an integer");
  return numerator(product);
}

} // namespace pcrystal
