#pragma once

// Oracles shared by the unit tests and the acceptance binary.

#include "pcrystal/polytope.hpp"

#include <string>

namespace pcrystal::testing {

inline TypeLabel table_type(std::string_view id) {
  if (id.substr(1, 2) == "F4") return TypeLabel::F4;
  if (id.substr(1, 2) == "E6") return TypeLabel::E6;
  if (id.substr(1, 2) == "E7") return TypeLabel::E7;
  return TypeLabel::E8;
}

inline int natural_rank(TypeLabel t) {
  switch (t) {
  case TypeLabel::F4: return 4;
  case TypeLabel::E6: return 6;
  case TypeLabel::E7: return 7;
  case TypeLabel::E8: return 8;
  case TypeLabel::G2: return 2;
  default: return 0;
  }
}

/// Instances of one table entry over the table's j range.
inline FormSet entry_instances(const LiteralTable &t, std::string_view entry, int rank) {
  FormSet out;
  for (int j = t.j_first; j <= t.j_last; ++j)
    if (auto f = canonicalize(parse_table_entry(entry, rank, j))) out.insert(*f);
  return out;
}

/// Dominant weights Lambda_a and Lambda_a + Lambda_b with dimension at most
/// `max_dim`, smallest dimension first.
inline std::vector<Weight> small_weights(const CartanDatum &cd, std::size_t max_dim) {
  std::vector<std::pair<BigInt, Weight>> out;
  const int n = cd.rank();
  auto consider = [&](Weight w) {
    BigInt d = weyl_dim(cd, w);
    if (d <= max_dim) out.emplace_back(d, std::move(w));
  };
  for (int a = 1; a <= n; ++a) {
    consider(Weight::fundamental(n, a));
    for (int b = a; b <= n; ++b) {
      Weight w = Weight::fundamental(n, a);
      w.coefficients[b - 1] += 1;
      consider(w);
    }
  }
  std::sort(out.begin(), out.end());
  std::vector<Weight> ws;
  for (auto &[d, w] : out) ws.push_back(w);
  return ws;
}

/// Shows that a printed table entry is wrong without reference to the
/// closure: with that single entry restored to its printed text, the
/// inequality system cuts out a point set different from the f-generated
/// crystal (B(infinity) to a depth, or B(lambda) for small lambda).
/// Returns a description of the discrepancy, or nothing.
inline std::optional<std::string> refute_printed_entry(const table_data::Erratum &e) {
  const TypeLabel type = table_type(e.table);
  const int n = natural_rank(type);
  const CartanDatum cd = cartan_matrix(type, n);
  IotaSequence iota(cd);
  const bool xi_list = e.table.find("Xi") != std::string_view::npos;
  const LiteralTable t = literal_table(e.table);
  const FormSet printed = entry_instances(t, e.printed, n), corrected = entry_instances(t, e.corrected, n);

  auto first_difference = [&](const ZVectorSet &points, const ZVectorSet &crystal) -> std::optional<std::string> {
    for (const ZVector &x : points)
      if (!crystal.count(x)) return "admits " + format_vector(iota, x) + ", which is not in the crystal";
    for (const ZVector &x : crystal)
      if (!points.count(x)) return "excludes the crystal element " + format_vector(iota, x);
    return std::nullopt;
  };

  FormSet binf = binf_table(type, n);
  if (!xi_list) {
    for (const LinearForm &f : corrected) binf.erase(f);
    binf.insert(printed.begin(), printed.end());
    Polyhedron p{iota, Object::Binf, Source::Table, binf, row_cutoffs(type, n)};
    const int max_depth = type == TypeLabel::E8 ? 4 : type == TypeLabel::F4 ? 7 : 5;
    for (int d = 1; d <= max_depth; ++d)
      if (auto why = first_difference(enumerate_binf_truncated(p, d), generate_binf(iota, d)))
        return "B(infinity) at depth " + std::to_string(d) + ": " + *why;
    if (!has_table(type, Object::Blambda)) return std::nullopt;
  }

  FormSet system = binf;
  std::vector<FormSet> xi = xi_first_tables(type, n);
  for (int i = 1; i <= n; ++i) {
    FormSet family = xi[i - 1];
    if (xi_list && e.table.back() - '0' == i) {
      for (const LinearForm &f : corrected) family.erase(f);
      family.insert(printed.begin(), printed.end());
    }
    for (const LinearForm &f : add_lambda_constant(family, i)) system.insert(f);
  }
  Polyhedron p{iota, Object::Blambda, Source::Table, system, row_cutoffs(type, n)};
  for (const Weight &w : small_weights(cd, 120000)) {
    std::string lam;
    for (Int c : w.coefficients) lam += (lam.empty() ? "" : ",") + std::to_string(c);
    if (!check_ample(p.forms, w)) return "0 violates the system at lambda = (" + lam + ")";
    if (auto why = first_difference(enumerate_blambda(p, w), generate_blambda(iota, w)))
      return "B(lambda) at lambda = (" + lam + "): " + *why;
  }
  return std::nullopt;
}

/// The type B word for mu_1 read literally from its printed closed form,
/// S_{mu_1; n-mu_1} ... S_{1; n-1} (application order), keeping the k >= 2
/// factors as implemented.
inline std::vector<Position> printed_b_word(int n, const AdmissiblePattern &mu) {
  std::vector<Position> w;
  if (mu[0] >= 2)
    for (int v = 1; v <= mu[0]; ++v) w.push_back({v, n - v});
  std::vector<Position> rest = spin_word(TypeLabel::B, n, mu);
  rest.erase(rest.begin(), rest.begin() + (mu[0] - 1));
  w.insert(w.end(), rest.begin(), rest.end());
  return w;
}

} // namespace pcrystal::testing
