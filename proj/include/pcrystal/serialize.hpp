#pragma once

// Output formats shared by the CLI and the tests: canonical JSON for form
// systems and point sets, a chain-style text rendering, and DOT graphs.

#include "pcrystal/polytope.hpp"

#include <json.hpp>

#include <tuple>

namespace pcrystal {

using json = nlohmann::json;

struct SystemHeader {
  TypeLabel type;
  int rank;
  Object object;
  std::optional<Weight> lambda;
  Source source;
};

inline std::string type_name(TypeLabel type, int rank) {
  switch (type) {
  case TypeLabel::A:
  case TypeLabel::B:
  case TypeLabel::C:
  case TypeLabel::D: return to_string(type) + std::to_string(rank);
  default: return to_string(type);
  }
}

/// Inverse of type_name: "B3" -> B, "F4" -> F4.
inline std::optional<TypeLabel> parse_type_name(const std::string &name, int rank) {
  if (name.size() > 1 && std::string("ABCD").find(name[0]) != std::string::npos &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    if (std::stoi(name.substr(1)) != rank) return std::nullopt;
    return parse_type_label(name.substr(0, 1), rank);
  }
  return parse_type_label(name, rank);
}

/// Sort key: (j, i, c) terms in (j, i) order, then the constants.
using FormKey = std::tuple<std::vector<std::array<Int, 3>>, Int, std::vector<Int>>;

inline FormKey form_key(const LinearForm &f) {
  std::vector<std::array<Int, 3>> terms;
  const int n = f.rank();
  for (auto [k, c] : f.coeffs()) terms.push_back({(k - 1) / n + 1, (k - 1) % n + 1, c});
  return {std::move(terms), f.absolute(), f.lambda_part()};
}

inline std::vector<LinearForm> sorted_forms(const FormSet &forms) {
  std::vector<std::pair<FormKey, LinearForm>> keyed;
  for (const LinearForm &f : forms) keyed.emplace_back(form_key(f), f);
  std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  std::vector<LinearForm> out;
  for (auto &[k, f] : keyed) out.push_back(std::move(f));
  return out;
}

inline json form_to_json(const LinearForm &f) {
  json coeffs = json::array();
  const FormKey key = form_key(f);
  for (const auto &[j, i, c] : std::get<0>(key)) coeffs.push_back({{"j", j}, {"i", i}, {"c", c}});
  return {{"constant_abs", f.absolute()}, {"constant_lambda", f.lambda_part()}, {"coeffs", coeffs}};
}

inline LinearForm form_from_json(const json &j, int rank) {
  LinearForm f(rank);
  f.add_absolute(j.at("constant_abs").get<Int>());
  const auto lam = j.at("constant_lambda").get<std::vector<Int>>();
  if (static_cast<int>(lam.size()) != rank) throw crystal_error("constant_lambda length does not match rank");
  for (int m = 1; m <= rank; ++m) f.add_lambda(m, lam[m - 1]);
  for (const json &t : j.at("coeffs")) {
    const int row = t.at("j").get<int>(), col = t.at("i").get<int>();
    if (row < 1 || col < 1 || col > rank) throw crystal_error("coefficient position out of range");
    f.add_term((row - 1) * rank + col, t.at("c").get<Int>());
  }
  return f;
}

inline json system_to_json(const SystemHeader &h, const FormSet &forms) {
  json out;
  out["type"] = type_name(h.type, h.rank);
  out["rank"] = h.rank;
  out["object"] = to_string(h.object);
  out["lambda"] = h.lambda ? json(h.lambda->coefficients) : json(nullptr);
  out["source"] = to_string(h.source);
  json arr = json::array();
  for (const LinearForm &f : sorted_forms(forms)) arr.push_back(form_to_json(f));
  out["forms"] = std::move(arr);
  return out;
}

struct ParsedSystem {
  SystemHeader header;
  FormSet forms;
};

inline ParsedSystem system_from_json(const json &j) {
  const int rank = j.at("rank").get<int>();
  const std::string name = j.at("type").get<std::string>();
  auto type = parse_type_name(name, rank);
  if (!type) throw crystal_error("unknown type " + name);
  const std::string obj = j.at("object").get<std::string>();
  const std::string src = j.at("source").get<std::string>();
  if (obj != "binf" && obj != "blambda") throw crystal_error("unknown object " + obj);
  if (src != "table" && src != "closure") throw crystal_error("unknown source " + src);
  ParsedSystem p{{*type, rank, obj == "binf" ? Object::Binf : Object::Blambda, std::nullopt,
                  src == "table" ? Source::Table : Source::Closure},
                 {}};
  if (!j.at("lambda").is_null()) p.header.lambda = Weight(j.at("lambda").get<std::vector<Int>>());
  for (const json &f : j.at("forms")) p.forms.insert(form_from_json(f, rank));
  return p;
}

inline json vector_to_json(const IotaSequence &iota, const ZVector &x) {
  json arr = json::array();
  for (auto [k, v] : x.entries()) {
    Position p = iota.position(k);
    arr.push_back({{"j", p.row}, {"i", p.col}, {"c", v}});
  }
  return arr;
}

// ---- text ----------------------------------------------------------------------

inline std::string coordinate_name(int n, int k) {
  return "x_{" + std::to_string((k - 1) / n + 1) + ";" + std::to_string((k - 1) % n + 1) + "}";
}

/// One line per chain x_a >= x_b >= ... >= 0 built from the telescoping forms
/// x_a - x_b and x_c, then one line "phi >= 0" per remaining form. Without
/// chains every form gets its own line.
inline std::string format_system_text(const FormSet &forms, int n, bool chains = true) {
  constexpr int kZero = 0;
  std::map<int, std::vector<int>> out_edges;
  std::map<int, int> indeg;
  std::vector<LinearForm> rest;
  for (const LinearForm &f : sorted_forms(forms)) {
    const auto &c = f.coeffs();
    if (!chains) {
      rest.push_back(f);
    } else if (!f.has_constant() && c.size() == 1 && c[0].second == 1) {
      out_edges[c[0].first].push_back(kZero);
      ++indeg[kZero];
    } else if (!f.has_constant() && c.size() == 2 && c[0].second + c[1].second == 0 && std::abs(c[0].second) == 1) {
      const int hi = c[0].second == 1 ? c[0].first : c[1].first;
      const int lo = c[0].second == 1 ? c[1].first : c[0].first;
      out_edges[hi].push_back(lo);
      ++indeg[lo];
    } else {
      rest.push_back(f);
    }
  }
  auto outdeg = [&](int v) { return out_edges.count(v) ? out_edges[v].size() : std::size_t{0}; };
  auto name = [&](int v) { return v == kZero ? std::string("0") : coordinate_name(n, v); };
  auto interior = [&](int v) { return v != kZero && indeg[v] == 1 && outdeg(v) == 1; };

  std::vector<std::string> lines;
  std::map<int, std::size_t> used;
  auto walk = [&](int start) {
    while (used[start] < outdeg(start)) {
      int v = out_edges[start][used[start]++];
      std::string line = name(start) + " ≥ " + name(v);
      while (interior(v) && used[v] == 0) {
        int w = out_edges[v][used[v]++];
        line += " ≥ " + name(w);
        v = w;
      }
      lines.push_back(std::move(line));
    }
  };
  for (auto &[v, e] : out_edges)
    if (!interior(v)) walk(v);
  for (auto &[v, e] : out_edges) walk(v); // cycles of interior vertices
  std::ostringstream os;
  for (const std::string &l : lines) os << l << "\n";
  for (const LinearForm &f : rest) os << format_form(f) << " ≥ 0\n";
  return os.str();
}

// ---- DOT -----------------------------------------------------------------------

/// Node order: lexicographic on the dense vectors (x_1, x_2, ...).
inline bool dense_less(const ZVector &a, const ZVector &b) {
  const auto &ea = a.entries(), &eb = b.entries();
  std::size_t p = 0, q = 0;
  while (p < ea.size() || q < eb.size()) {
    const int ka = p < ea.size() ? ea[p].first : std::numeric_limits<int>::max();
    const int kb = q < eb.size() ? eb[q].first : std::numeric_limits<int>::max();
    const int k = std::min(ka, kb);
    const Int va = ka == k ? ea[p].second : 0, vb = kb == k ? eb[q].second : 0;
    if (va != vb) return va < vb;
    p += ka == k;
    q += kb == k;
  }
  return false;
}

inline std::string format_dot(const IotaSequence &iota, const CrystalGraph &g) {
  std::vector<std::size_t> order(g.nodes.size());
  for (std::size_t s = 0; s < order.size(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dense_less(g.nodes[a], g.nodes[b]); });
  std::vector<std::size_t> id(g.nodes.size());
  for (std::size_t r = 0; r < order.size(); ++r) id[order[r]] = r;

  auto edges = g.edges;
  std::sort(edges.begin(), edges.end(), [&](const auto &a, const auto &b) {
    return std::tuple(id[std::get<0>(a)], std::get<1>(a), id[std::get<2>(a)]) <
           std::tuple(id[std::get<0>(b)], std::get<1>(b), id[std::get<2>(b)]);
  });
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t r = 0; r < order.size(); ++r)
    os << "  n" << r << " [label=\"" << format_vector(iota, g.nodes[order[r]]) << "\"];\n";
  for (auto [s, i, t] : edges) os << "  n" << id[s] << " -> n" << id[t] << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

inline json graph_to_json(const IotaSequence &iota, const CrystalGraph &g) {
  json nodes = json::array(), edges = json::array();
  for (const ZVector &x : g.nodes) nodes.push_back(vector_to_json(iota, x));
  for (auto [s, i, t] : g.edges) edges.push_back({{"source", s}, {"i", i}, {"target", t}});
  return {{"nodes", nodes}, {"edges", edges}};
}

inline json report_to_json(const VerifyReport &r) {
  json checks = json::array();
  for (const CheckResult &c : r.checks) {
    json counts = json::object();
    for (auto &[k, v] : c.counts) counts[k] = v;
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"counts", counts}, {"witnesses", c.witnesses}});
  }
  return {{"passed", r.passed()}, {"checks", checks}};
}

inline std::string format_report(const VerifyReport &r) {
  std::ostringstream os;
  for (const CheckResult &c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    for (auto &[k, v] : c.counts) os << "  " << k << "=" << v;
    os << "\n";
    for (const std::string &w : c.witnesses) os << "    " << w << "\n";
  }
  return os.str();
}

} // namespace pcrystal
