#pragma once

// Closed-form inequality families: the phi_{j;k} families of types B, C, D,
// the admissible-pattern (spin) families, the per-node Xi^(i) systems and
// the printed exceptional tables.

#include "pcrystal/forms.hpp"
#include "pcrystal/tables_data.hpp"

#include <cctype>
#include <span>
#include <string_view>

namespace pcrystal {

// ---- row cutoffs -------------------------------------------------------------

/// last_row[i-1] is the last row in which x_{j;i} can be nonzero on B(infty).
struct RowCutoffs {
  std::vector<int> last_row;
  int rows() const { return *std::max_element(last_row.begin(), last_row.end()); }
  int column(int i) const { return last_row.at(i - 1); }
  std::size_t coordinate_count() const {
    std::size_t s = 0;
    for (int r : last_row) s += r;
    return s;
  }
};

inline RowCutoffs row_cutoffs(TypeLabel type, int rank) {
  cartan_matrix(type, rank); // validates the rank
  const int n = rank;
  RowCutoffs c;
  switch (type) {
  case TypeLabel::A:
    for (int i = 1; i <= n; ++i) c.last_row.push_back(n + 1 - i);
    break;
  case TypeLabel::B:
  case TypeLabel::C: c.last_row.assign(n, n); break;
  case TypeLabel::D: c.last_row.assign(n, n - 1); break;
  case TypeLabel::F4: c.last_row.assign(4, 6); break;
  case TypeLabel::E6: c.last_row = {8, 7, 6, 5, 4, 6}; break;
  case TypeLabel::E7: c.last_row.assign(7, 9); break;
  case TypeLabel::E8: c.last_row.assign(8, 15); break;
  case TypeLabel::G2: c.last_row.assign(2, 3); break;
  }
  return c;
}

/// Positions applied by S in closures: the rows a printed family can reach
/// from generators inside the cutoff window, plus two.
inline int default_position_bound(TypeLabel type, int rank) { return (2 * row_cutoffs(type, rank).rows() + 2) * rank; }

// ---- printed-entry parser ----------------------------------------------------

namespace detail {

inline void add_cell(LinearForm &f, int n, int row, int col, Int c) {
  if (col == 0 || col == n + 1) return; // x_{j;0} = x_{j;n+1} = 0
  if (col < 0 || col > n + 1 || row < 1) throw crystal_error("table entry refers to a coordinate out of range");
  f.add_term((row - 1) * n + col, c);
}

} // namespace detail

/// Parses entries such as "2x_{j+2;4} - x_{j+4;2}", "x_{3;1} - x_{6;1}" or
/// "λ_2 + x_{1;1} - x_{1;2}" with the row parameter j fixed.
inline LinearForm parse_table_entry(std::string_view text, int rank, int j) {
  LinearForm f(rank);
  std::size_t p = 0;
  auto skip = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  auto fail = [&](const char *what) {
    throw crystal_error(std::string("cannot parse table entry '") + std::string(text) + "': " + what);
  };
  auto number = [&]() -> Int {
    Int v = 0;
    bool any = false;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      v = v * 10 + (text[p++] - '0');
      any = true;
    }
    if (!any) fail("expected a number");
    return v;
  };
  auto expect = [&](std::string_view tok) {
    skip();
    if (text.substr(p, tok.size()) != tok) fail("unexpected token");
    p += tok.size();
  };
  bool first = true;
  while (true) {
    skip();
    if (p >= text.size()) break;
    Int sign = 1;
    if (text[p] == '+' || text[p] == '-') {
      sign = text[p] == '-' ? -1 : 1;
      ++p;
      skip();
    } else if (!first) {
      fail("missing operator");
    }
    first = false;
    Int coeff = 1;
    if (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) coeff = number();
    skip();
    if (text.substr(p, 2) == "x_") {
      p += 2;
      expect("{");
      skip();
      int row = 0;
      if (p < text.size() && text[p] == 'j') {
        ++p;
        row = j;
        skip();
        if (p < text.size() && text[p] == '+') {
          ++p;
          skip();
          row += static_cast<int>(number());
        }
      } else {
        row = static_cast<int>(number());
      }
      expect(";");
      skip();
      int col = static_cast<int>(number());
      expect("}");
      detail::add_cell(f, rank, row, col, sign * coeff);
    } else if (text.substr(p, 3) == "λ_") { // UTF-8 lambda is two bytes
      p += 3;
      int node = static_cast<int>(number());
      if (node < 1 || node > rank) fail("lambda index out of range");
      f.add_lambda(node, sign * coeff);
    } else {
      fail("expected x_{..} or λ_k");
    }
  }
  return f;
}

/// A printed table with the range of j it is instantiated over. `printed`
/// holds the entries verbatim; `entries` has the errata applied.
struct LiteralTable {
  std::string id;
  std::string label;
  std::vector<std::string_view> printed;
  std::vector<std::string_view> entries;
  int j_first = 1;
  int j_last = 1;
};

inline constexpr std::size_t kF4BinfEntries = 26;
inline constexpr std::size_t kE6BinfEntries = 27;
inline constexpr std::size_t kE7BinfEntries = 56;
inline constexpr std::size_t kE8BinfEntries = 248;
inline constexpr std::size_t kF4Xi3Entries = 24;
inline constexpr std::size_t kF4Xi4Entries = 25;
inline constexpr std::size_t kE6Xi4Entries = 25;
inline constexpr std::size_t kE6Xi5Entries = 26;
inline constexpr std::size_t kE6Xi6Entries = 77;

inline LiteralTable literal_table(std::string_view id) {
  using namespace table_data;
  struct Row {
    std::string_view id, label;
    std::span<const std::string_view> data;
    int j_last;
  };
  const Row rows[] = {
      {"kF4Binf", "F4 B(infinity) table", kF4Binf, 6}, {"kE6Binf", "E6 B(infinity) table", kE6Binf, 8},
      {"kE7Binf", "E7 B(infinity) table", kE7Binf, 9}, {"kE8Binf", "E8 B(infinity) table", kE8Binf, 15},
      {"kF4Xi3", "F4 Xi^(3) list", kF4Xi3, 1},         {"kF4Xi4", "F4 Xi^(4) list", kF4Xi4, 1},
      {"kE6Xi4", "E6 Xi^(4) list", kE6Xi4, 1},         {"kE6Xi5", "E6 Xi^(5) list", kE6Xi5, 1},
      {"kE6Xi6", "E6 Xi^(6) list", kE6Xi6, 1},
  };
  for (const Row &r : rows) {
    if (r.id != id) continue;
    LiteralTable t{std::string(r.id), std::string(r.label), {r.data.begin(), r.data.end()}, {}, 1, r.j_last};
    t.entries = t.printed;
    for (const Erratum &e : kErrata) {
      if (e.table != id) continue;
      auto it = std::find(t.entries.begin(), t.entries.end(), e.printed);
      if (it == t.entries.end()) throw crystal_error("erratum does not match an entry of " + t.label);
      *it = e.corrected;
    }
    return t;
  }
  throw crystal_error("unknown table " + std::string(id));
}

inline FormSet instantiate(const LiteralTable &t, int rank, bool printed = false) {
  FormSet out;
  for (int j = t.j_first; j <= t.j_last; ++j)
    for (std::string_view e : printed ? t.printed : t.entries)
      if (auto f = canonicalize(parse_table_entry(e, rank, j))) out.insert(*f);
  return out;
}

inline std::string_view binf_table_id(TypeLabel type) {
  switch (type) {
  case TypeLabel::F4: return "kF4Binf";
  case TypeLabel::E6: return "kE6Binf";
  case TypeLabel::E7: return "kE7Binf";
  case TypeLabel::E8: return "kE8Binf";
  default: throw crystal_error("no printed B(infinity) table for type " + to_string(type));
  }
}

// ---- B, C, D families ------------------------------------------------------

namespace detail {

inline LinearForm cells(int n, std::initializer_list<std::tuple<int, int, Int>> terms) {
  LinearForm f(n);
  for (auto [row, col, c] : terms) add_cell(f, n, row, col, c);
  return f;
}

} // namespace detail

/// phi_{j;k}(x_{j;1}) (or phi'_{j;k} for type D) by closed formula.
inline LinearForm phi_form(TypeLabel type, int n, int j, int k, bool primed = false) {
  using detail::cells;
  if (j < 1) throw crystal_error("phi_form requires j >= 1");
  if (primed && type != TypeLabel::D) throw crystal_error("primed family exists only for type D");
  switch (type) {
  case TypeLabel::B:
    if (n < 2 || k < 0 || k > 2 * n - 1) throw crystal_error("phi_form: k out of range for type B");
    if (k <= n - 1) return cells(n, {{j, k + 1, 1}, {j + 1, k, -1}});
    return cells(n, {{j + k - n + 1, 2 * n - k - 1, 1}, {j + k - n + 1, 2 * n - k, -1}});
  case TypeLabel::C:
    if (n < 2 || k < 0 || k > 2 * n - 1) throw crystal_error("phi_form: k out of range for type C");
    if (k <= n - 2) return cells(n, {{j, k + 1, 1}, {j + 1, k, -1}});
    if (k == n - 1) return cells(n, {{j, n, 2}, {j + 1, n - 1, -1}});
    if (k == n) return cells(n, {{j + 1, n - 1, 1}, {j + 1, n, -2}});
    return cells(n, {{j + k - n + 1, 2 * n - k - 1, 1}, {j + k - n + 1, 2 * n - k, -1}});
  case TypeLabel::D:
    if (n < 4 || k < 0 || k > 2 * n - 2) throw crystal_error("phi_form: k out of range for type D");
    if (k <= n - 3) return cells(n, {{j, k + 1, 1}, {j + 1, k, -1}});
    if (k == n - 2) return cells(n, {{j, n - 1, 1}, {j, n, 1}, {j + 1, n - 2, -1}});
    if (k == n - 1)
      return primed ? cells(n, {{j, n - 1, 1}, {j + 1, n, -1}}) : cells(n, {{j, n, 1}, {j + 1, n - 1, -1}});
    if (k == n) return cells(n, {{j + 1, n - 2, 1}, {j + 1, n - 1, -1}, {j + 1, n, -1}});
    return cells(n, {{j + k - n + 1, 2 * n - k - 2, 1}, {j + k - n + 1, 2 * n - k - 1, -1}});
  default: throw crystal_error("phi_form is defined for types B, C, D only");
  }
}

/// The defining system of Sigma_iota as printed (B, C, D families or the
/// exceptional tables), instantiated over the rows of the cutoff window.
inline FormSet binf_table(TypeLabel type, int rank) {
  cartan_matrix(type, rank);
  const int n = rank;
  FormSet out;
  auto put = [&](const LinearForm &f) {
    if (auto c = canonicalize(f)) out.insert(*c);
  };
  switch (type) {
  case TypeLabel::B:
  case TypeLabel::C:
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= 2 * n - 1; ++k) put(phi_form(type, n, j, k));
    return out;
  case TypeLabel::D:
    for (int j = 1; j <= n - 1; ++j) {
      for (int k = 0; k <= 2 * n - 2; ++k) {
        put(phi_form(type, n, j, k, false));
        put(phi_form(type, n, j, k, true));
      }
      put(detail::cells(n, {{j, n - 1, 1}}));
      put(detail::cells(n, {{j, n, 1}}));
    }
    return out;
  case TypeLabel::F4:
  case TypeLabel::E6:
  case TypeLabel::E7:
  case TypeLabel::E8: return instantiate(literal_table(binf_table_id(type)), n);
  default: throw crystal_error("no printed B(infinity) system for " + to_string(type) + "; use the closure source");
  }
}

// ---- admissible patterns -----------------------------------------------------

using AdmissiblePattern = std::vector<int>; // mu_1 > mu_2 > ... > 0, zeros implicit

inline bool is_admissible(TypeLabel type, int n, const AdmissiblePattern &mu) {
  const int top = type == TypeLabel::B ? n : type == TypeLabel::D ? n - 1 : -1;
  if (top < 1 || mu.empty() || mu[0] < 1 || mu[0] > top) return false;
  for (std::size_t k = 1; k < mu.size(); ++k)
    if (mu[k] < 1 || mu[k] > mu[k - 1] - 1) return false;
  return true;
}

inline std::vector<AdmissiblePattern> admissible_patterns(TypeLabel type, int n) {
  if (type != TypeLabel::B && type != TypeLabel::D) throw crystal_error("admissible patterns exist for types B and D");
  if (n < 2 || (type == TypeLabel::D && n < 4)) throw crystal_error("admissible patterns: rank too small");
  const int top = type == TypeLabel::B ? n : n - 1;
  std::vector<AdmissiblePattern> out;
  AdmissiblePattern cur;
  std::function<void(int)> rec = [&](int bound) {
    for (int v = 1; v <= bound; ++v) {
      cur.push_back(v);
      out.push_back(cur);
      rec(v - 1);
      cur.pop_back();
    }
  };
  rec(top);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline int pattern_at(const AdmissiblePattern &mu, int k) {
  return k >= 1 && k <= static_cast<int>(mu.size()) ? mu[k - 1] : 0;
}

} // namespace detail

/// Type B: phi^(mu) X for X = 2x_{1;n-1} - x_{1;n}, with X_{j;i} = 2x_{j;i}
/// (i != n) and x_{j;n}.
inline LinearForm spin_form(int n, const AdmissiblePattern &mu) {
  if (!is_admissible(TypeLabel::B, n, mu)) throw crystal_error("pattern is not admissible for B_" + std::to_string(n));
  LinearForm f(n);
  auto X = [&](int row, int col, Int c) { detail::add_cell(f, n, row, col, col == n ? c : 2 * c); };
  const int L = static_cast<int>(mu.size());
  const int l = mu[L - 1] == 1 ? L : L + 1;
  for (int k = 1; k <= l; ++k) {
    const int m = detail::pattern_at(mu, k);
    X(m + k - 1, n - m, 1);
    X(m + k - 1, n - m + 1, -1);
  }
  return f;
}

/// Type D: phi^(mu) X (X = x_{1;n-2} - x_{1;n-1}) or, primed,
/// phi^(mu') X' (X' = x_{1;n-2} - x_{1;n}), with the parity swap of the two
/// spin columns.
inline LinearForm d_spin_forms(int n, const AdmissiblePattern &mu, bool primed) {
  if (!is_admissible(TypeLabel::D, n, mu)) throw crystal_error("pattern is not admissible for D_" + std::to_string(n));
  LinearForm f(n);
  auto X = [&](int row, int col, Int c) {
    const bool swap = (row % 2 == 0) != primed;
    if (swap && col == n - 1) col = n;
    else if (swap && col == n) col = n - 1;
    detail::add_cell(f, n, row, col, c);
  };
  const int l = static_cast<int>(mu.size());
  for (int k = 1; k <= l; ++k) {
    const int m = mu[k - 1];
    X(m + k - 1, n - m - 1, 1);
    X(m + k - 1, n - m, -1);
  }
  if (mu[l - 1] >= 2) X(l, n, 1);
  return f;
}

/// The S-word whose action on X gives the pattern's form, as (row, col)
/// positions in application order.
inline std::vector<Position> spin_word(TypeLabel type, int n, const AdmissiblePattern &mu, bool primed = false) {
  if (!is_admissible(type, n, mu)) throw crystal_error("pattern is not admissible");
  std::vector<Position> w;
  const bool b = type == TypeLabel::B;
  const int base = b ? n - 1 : n - 2; // column hit by the first step
  for (int v = 1; v < mu[0]; ++v) w.push_back({v, base - v + 1});
  for (int k = 2; k <= static_cast<int>(mu.size()); ++k) {
    if (b) {
      w.push_back({k - 1, n});
    } else {
      const bool even = k % 2 == 0;
      w.push_back({k - 1, even != primed ? n : n - 1});
    }
    for (int v = 1; v < mu[k - 1]; ++v) w.push_back({v + k - 1, base - v + 1});
  }
  return w;
}

/// X for the pattern families: B: 2x_{1;n-1} - x_{1;n}; D: x_{1;n-2} - x_{1;n-1}
/// (or x_{1;n-2} - x_{1;n} when primed).
inline LinearForm spin_seed(TypeLabel type, int n, bool primed = false) {
  using detail::cells;
  if (type == TypeLabel::B) return cells(n, {{1, n - 1, 2}, {1, n, -1}});
  if (type == TypeLabel::D) return cells(n, {{1, n - 2, 1}, {1, primed ? n : n - 1, -1}});
  throw crystal_error("spin seed exists for types B and D");
}

inline LinearForm apply_word(const IotaSequence &iota, const std::vector<Position> &word, LinearForm f) {
  for (Position p : word) f = apply_S(iota, iota.flat(p), f);
  return f;
}

// ---- type C from type B ------------------------------------------------------

/// Replaces x_{j;n} by 2x_{j;n}. Forms of the node-n family (those carrying
/// lambda_n) are afterwards divided by 2 in their linear part, since the B
/// seed 2x_{1;n-1} - x_{1;n} corresponds to the C seed x_{1;n-1} - x_{1;n}.
inline LinearForm c_substitution(const LinearForm &form_b, int n) {
  if (form_b.rank() != n) throw crystal_error("c_substitution: rank mismatch");
  LinearForm out(n);
  for (auto [k, v] : form_b.coeffs()) out.add_term(k, (k - 1) % n + 1 == n ? 2 * v : v);
  if (form_b.lambda_part()[n - 1] != 0) {
    LinearForm halved(n);
    for (auto [k, v] : out.coeffs()) {
      if (v % 2 != 0) throw crystal_error("c_substitution: odd coefficient in a node-n form");
      halved.add_term(k, v / 2);
    }
    out = halved;
  }
  for (int m = 1; m <= n; ++m) out.add_lambda(m, form_b.lambda_part()[m - 1]);
  out.add_absolute(form_b.absolute());
  return out;
}

// ---- per-node systems Xi^(i) -------------------------------------------------

namespace detail {

inline FormSet chain_xi(int n, int i) {
  FormSet s;
  for (int j = 1; j <= i; ++j)
    if (auto f = canonicalize(cells(n, {{j, i - j, 1}, {j, i - j + 1, -1}}))) s.insert(*f);
  return s;
}

inline FormSet literal_xi(int n, std::initializer_list<std::string_view> entries) {
  FormSet s;
  for (std::string_view e : entries) s.insert(parse_table_entry(e, n, 1));
  return s;
}

inline FormSet literal_xi_table(int n, std::string_view id) { return instantiate(literal_table(id), n); }

} // namespace detail

/// Xi^(i) for i = 1..n (element i-1 of the result), from the closed forms
/// and printed lists.
inline std::vector<FormSet> xi_first_tables(TypeLabel type, int rank) {
  cartan_matrix(type, rank);
  const int n = rank;
  std::vector<FormSet> out;
  switch (type) {
  case TypeLabel::A:
    for (int i = 1; i <= n; ++i) out.push_back(detail::chain_xi(n, i));
    return out;
  case TypeLabel::B: {
    for (int i = 1; i <= n - 1; ++i) out.push_back(detail::chain_xi(n, i));
    FormSet spin;
    for (const auto &mu : admissible_patterns(TypeLabel::B, n)) spin.insert(spin_form(n, mu));
    out.push_back(spin);
    return out;
  }
  case TypeLabel::C: {
    std::vector<FormSet> b = xi_first_tables(TypeLabel::B, n);
    for (int i = 1; i <= n; ++i) {
      FormSet s;
      for (LinearForm f : b[i - 1]) {
        f.add_lambda(i, 1);
        LinearForm g = c_substitution(f, n);
        g.add_lambda(i, -1);
        s.insert(g);
      }
      out.push_back(s);
    }
    return out;
  }
  case TypeLabel::D: {
    for (int i = 1; i <= n - 2; ++i) out.push_back(detail::chain_xi(n, i));
    FormSet unprimed, primed;
    for (const auto &mu : admissible_patterns(TypeLabel::D, n)) {
      unprimed.insert(d_spin_forms(n, mu, false));
      primed.insert(d_spin_forms(n, mu, true));
    }
    out.push_back(unprimed);
    out.push_back(primed);
    return out;
  }
  case TypeLabel::F4:
    out.push_back(detail::literal_xi(n, {"-x_{1;1}"}));
    out.push_back(detail::literal_xi(n, {"x_{1;1} - x_{1;2}", "-x_{2;1}"}));
    out.push_back(detail::literal_xi_table(n, "kF4Xi3"));
    out.push_back(detail::literal_xi_table(n, "kF4Xi4"));
    return out;
  case TypeLabel::E6:
    out.push_back(detail::literal_xi(n, {"-x_{1;1}"}));
    out.push_back(detail::literal_xi(n, {"x_{1;1} - x_{1;2}", "-x_{2;1}"}));
    out.push_back(detail::literal_xi(n, {"x_{1;2} - x_{1;3}", "x_{2;1} - x_{2;2}", "-x_{3;1}"}));
    out.push_back(detail::literal_xi_table(n, "kE6Xi4"));
    out.push_back(detail::literal_xi_table(n, "kE6Xi5"));
    out.push_back(detail::literal_xi_table(n, "kE6Xi6"));
    return out;
  case TypeLabel::E7:
  case TypeLabel::E8:
    throw crystal_error("no printed Xi^(i) tables for " + to_string(type) +
                        "; build B(lambda) systems with the closure source instead");
  case TypeLabel::G2: throw crystal_error("no closed-form Xi^(i) tables for G2; use the closure source");
  }
  return out;
}

/// Xi_iota[lambda] as printed: the B(infinity) table together with
/// lambda_i + psi for psi in Xi^(i).
inline FormSet blambda_table(TypeLabel type, int rank) {
  FormSet out = binf_table(type, rank);
  std::vector<FormSet> xi = xi_first_tables(type, rank);
  for (int i = 1; i <= rank; ++i)
    for (const LinearForm &f : add_lambda_constant(xi[i - 1], i)) out.insert(f);
  return out;
}

} // namespace pcrystal
