#pragma once

// Sigma_iota and Sigma_iota[lambda] as explicit inequality systems: assembly
// from tables or closures, membership, lattice-point enumeration, crystal
// graphs and the verification harness comparing both sides.

#include "pcrystal/tables.hpp"

#include <cstdlib>
#include <limits>

namespace pcrystal {

enum class Object { Binf, Blambda };
enum class Source { Table, Closure };

inline std::string to_string(Object o) { return o == Object::Binf ? "binf" : "blambda"; }
inline std::string to_string(Source s) { return s == Source::Table ? "table" : "closure"; }

/// Size caps, overridable through PCRYSTAL_CLOSURE_CAP and
/// PCRYSTAL_ENUMERATION_CAP.
inline std::size_t env_cap(const char *name, std::size_t fallback) {
  const char *v = std::getenv(name);
  if (!v || !*v) return fallback;
  char *end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) throw crystal_error(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(x);
}
inline std::size_t closure_cap() { return env_cap("PCRYSTAL_CLOSURE_CAP", kDefaultClosureCap); }
inline std::size_t enumeration_cap() { return env_cap("PCRYSTAL_ENUMERATION_CAP", kDefaultGenerationCap); }

struct Polyhedron {
  IotaSequence iota;
  Object object = Object::Binf;
  Source source = Source::Table;
  FormSet forms;
  RowCutoffs cutoffs;

  TypeLabel type() const { return iota.cartan().type(); }
  int rank() const { return iota.rank(); }
};

/// Generators of the closure-sourced B(infinity) system: x_{j;1} over the
/// cutoff rows, plus x_{j;n-1} and x_{j;n} for type D, whose spin columns are
/// not reached from the first column.
inline FormSet closure_generators(TypeLabel type, int rank) {
  const RowCutoffs cut = row_cutoffs(type, rank);
  IotaSequence iota(cartan_matrix(type, rank));
  FormSet g;
  for (int j = 1; j <= cut.rows(); ++j) {
    g.insert(LinearForm::coordinate(rank, iota.flat(j, 1)));
    if (type == TypeLabel::D) {
      g.insert(LinearForm::coordinate(rank, iota.flat(j, rank - 1)));
      g.insert(LinearForm::coordinate(rank, iota.flat(j, rank)));
    }
  }
  return g;
}

/// S-closure of {x_{j;1}} only; the object compared against printed tables.
inline ClosureResult first_column_closure(TypeLabel type, int rank) {
  IotaSequence iota(cartan_matrix(type, rank));
  FormSet g;
  for (int j = 1; j <= row_cutoffs(type, rank).rows(); ++j) g.insert(LinearForm::coordinate(rank, iota.flat(j, 1)));
  return closure(iota, g, Operator::S, default_position_bound(type, rank), closure_cap());
}

/// The printed B(infinity) system with type D's bare spin coordinates removed,
/// i.e. exactly the families the first-column closure should reproduce.
inline FormSet binf_table_families(TypeLabel type, int rank) {
  FormSet t = binf_table(type, rank);
  if (type != TypeLabel::D) return t;
  FormSet out;
  for (const LinearForm &f : t) {
    bool bare = f.coeffs().size() == 1 && f.coeffs()[0].second == 1 && (f.coeffs()[0].first - 1) % rank + 1 >= rank - 1;
    if (!bare) out.insert(f);
  }
  return out;
}

inline Polyhedron build(TypeLabel type, int rank, Object object, Source source) {
  IotaSequence iota(cartan_matrix(type, rank));
  Polyhedron p{iota, object, source, {}, row_cutoffs(type, rank)};
  const int bound = default_position_bound(type, rank);
  if (source == Source::Table) {
    p.forms = object == Object::Binf ? binf_table(type, rank) : blambda_table(type, rank);
  } else {
    ClosureResult c = closure(iota, closure_generators(type, rank), Operator::S, bound, closure_cap());
    if (c.violated())
      throw crystal_error("positivity assumption violated at position " + std::to_string(c.violations.front().position) +
                          " by " + format_form(c.violations.front().form));
    p.forms = std::move(c.forms);
    if (object == Object::Blambda)
      for (int i = 1; i <= rank; ++i)
        for (const LinearForm &f : lambda_i_closure(iota, i, bound, closure_cap()).forms) p.forms.insert(f);
  }
  if (object == Object::Binf && !check_positivity(p.forms)) {
    for (const LinearForm &f : p.forms)
      if (!first_occurrence_nonnegative(f, rank))
        throw crystal_error("positivity assumption fails for " + format_form(f));
  }
  return p;
}

inline void require_lambda(const Polyhedron &p, const std::optional<Weight> &lambda) {
  if (p.object == Object::Blambda && !lambda) throw crystal_error("B(lambda) system needs a weight");
  if (p.object == Object::Binf && lambda) throw crystal_error("B(infinity) system takes no weight");
  if (lambda) {
    if (lambda->rank() != p.rank()) throw crystal_error("weight length does not match rank");
    if (!lambda->dominant()) throw crystal_error("weight is not dominant");
  }
}

/// Every form is nonnegative at x. Forms are finite, so this is a finite test.
inline bool contains(const Polyhedron &p, const ZVector &x, const std::optional<Weight> &lambda = std::nullopt) {
  require_lambda(p, lambda);
  const Weight w = lambda ? *lambda : Weight::zero(p.rank());
  return std::all_of(p.forms.begin(), p.forms.end(), [&](const LinearForm &f) { return f.evaluate(x, w) >= 0; });
}

// ---- lattice points ----------------------------------------------------------

namespace detail {

/// Integer interval propagation over a system c + sum a_v x_v >= 0 on
/// nonnegative integer variables.
class BoundSystem {
public:
  static constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

  struct Row {
    Int constant;
    std::vector<std::pair<int, Int>> terms; // variable index, coefficient
  };

  BoundSystem(const FormSet &forms, const Weight &lambda, std::optional<Int> depth) {
    std::set<int> vars;
    for (const LinearForm &f : forms)
      for (auto [k, v] : f.coeffs()) vars.insert(k);
    flat_.assign(vars.begin(), vars.end());
    for (std::size_t v = 0; v < flat_.size(); ++v) index_[flat_[v]] = static_cast<int>(v);
    for (const LinearForm &f : forms) {
      Row r{f.constant_at(lambda), {}};
      for (auto [k, c] : f.coeffs()) r.terms.emplace_back(index_.at(k), c);
      rows_.push_back(std::move(r));
    }
    if (depth) {
      Row r{*depth, {}};
      for (std::size_t v = 0; v < flat_.size(); ++v) r.terms.emplace_back(static_cast<int>(v), -1);
      rows_.push_back(std::move(r));
    }
    uses_.resize(flat_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (auto [v, c] : rows_[r].terms) uses_[v].push_back(static_cast<int>(r));
  }

  std::size_t size() const { return flat_.size(); }
  int flat(int v) const { return flat_[v]; }

  struct Box {
    std::vector<Int> lo, hi;
  };

  Box initial() const { return {std::vector<Int>(size(), 0), std::vector<Int>(size(), kInf)}; }

  /// Tightens the box to a fixed point; false if it becomes empty.
  bool propagate(Box &b, std::optional<int> touched = std::nullopt) const {
    std::vector<char> queued(rows_.size(), 0);
    std::deque<int> work;
    auto enqueue_var = [&](int v) {
      for (int r : uses_[v])
        if (!queued[r]) {
          queued[r] = 1;
          work.push_back(r);
        }
    };
    if (touched) {
      enqueue_var(*touched);
    } else {
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        queued[r] = 1;
        work.push_back(static_cast<int>(r));
      }
    }
    while (!work.empty()) {
      const Row &row = rows_[work.front()];
      queued[work.front()] = 0;
      work.pop_front();
      // Largest value of the left side, split into a finite part and a count
      // of unbounded contributions.
      Int finite = row.constant;
      int unbounded = 0;
      for (auto [v, c] : row.terms) {
        if (c > 0) {
          if (b.hi[v] >= kInf) ++unbounded;
          else finite += c * b.hi[v];
        } else {
          finite += c * b.lo[v];
        }
      }
      if (unbounded == 0 && finite < 0) return false;
      for (auto [v, c] : row.terms) {
        Int own_inf = c > 0 && b.hi[v] >= kInf;
        if (unbounded - own_inf > 0) continue;
        Int rest = finite - (own_inf ? 0 : (c > 0 ? c * b.hi[v] : c * b.lo[v]));
        if (c < 0) {
          // c x_v >= -rest  =>  x_v <= rest / |c|
          Int nh = floor_div(rest, -c);
          if (nh < b.hi[v]) {
            b.hi[v] = nh;
            if (nh < b.lo[v]) return false;
            enqueue_var(v);
          }
        } else {
          Int nl = ceil_div(-rest, c);
          if (nl > b.lo[v]) {
            b.lo[v] = nl;
            if (b.hi[v] < nl) return false;
            enqueue_var(v);
          }
        }
      }
    }
    return true;
  }

  bool satisfied(const std::vector<Int> &x) const {
    for (const Row &r : rows_) {
      Int s = r.constant;
      for (auto [v, c] : r.terms) s += c * x[v];
      if (s < 0) return false;
    }
    return true;
  }

private:
  static Int floor_div(Int a, Int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
  static Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

  std::vector<int> flat_;
  std::map<int, int> index_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> uses_;
};

inline ZVectorSet enumerate(const FormSet &forms, const Weight &lambda, std::optional<Int> depth, std::size_t cap) {
  BoundSystem sys(forms, lambda, depth);
  ZVectorSet out;
  BoundSystem::Box root = sys.initial();
  if (!sys.propagate(root)) return out;
  std::function<void(BoundSystem::Box &)> dfs = [&](BoundSystem::Box &b) {
    int pick = -1;
    bool open_unbounded = false;
    for (std::size_t v = 0; v < sys.size(); ++v) {
      if (b.lo[v] == b.hi[v]) continue;
      if (b.hi[v] >= BoundSystem::kInf) {
        open_unbounded = true;
        continue;
      }
      if (pick < 0 || b.hi[v] - b.lo[v] < b.hi[pick] - b.lo[pick]) pick = static_cast<int>(v);
    }
    if (pick < 0) {
      if (open_unbounded)
        throw crystal_error("no finite bound for some coordinate; the inequality system does not cut out a finite set");
      if (!sys.satisfied(b.lo)) return;
      std::vector<ZVector::Entry> e;
      for (std::size_t v = 0; v < sys.size(); ++v) e.emplace_back(sys.flat(static_cast<int>(v)), b.lo[v]);
      out.insert(ZVector::from_entries(std::move(e)));
      if (out.size() > cap) throw crystal_error("enumeration exceeded its size cap");
      return;
    }
    for (Int value = b.lo[pick]; value <= b.hi[pick]; ++value) {
      BoundSystem::Box child = b;
      child.lo[pick] = child.hi[pick] = value;
      if (sys.propagate(child, pick)) dfs(child);
    }
  };
  dfs(root);
  return out;
}

} // namespace detail

/// All lattice points of Sigma_iota[lambda]. Coordinates never mentioned by a
/// form are taken to be zero.
inline ZVectorSet enumerate_blambda(const Polyhedron &p, const Weight &lambda, std::size_t cap = enumeration_cap()) {
  require_lambda(p, lambda);
  if (!check_ample(p.forms, lambda)) throw crystal_error("(iota, lambda) is not ample: 0 violates a form");
  return detail::enumerate(p.forms, lambda, std::nullopt, cap);
}

/// Lattice points of Sigma_iota with coordinate sum at most depth.
inline ZVectorSet enumerate_binf_truncated(const Polyhedron &p, int depth, std::size_t cap = enumeration_cap()) {
  require_lambda(p, std::nullopt);
  if (depth < 0) throw crystal_error("depth must be nonnegative");
  return detail::enumerate(p.forms, Weight::zero(p.rank()), depth, cap);
}

/// Coordinates among those mentioned by the forms that are not forced to be
/// zero once every coordinate is known to be nonnegative.
inline std::vector<Position> nonzero_coordinates(const Polyhedron &p) {
  detail::BoundSystem sys(p.forms, Weight::zero(p.rank()), std::nullopt);
  detail::BoundSystem::Box b = sys.initial();
  sys.propagate(b);
  std::vector<Position> out;
  for (std::size_t v = 0; v < sys.size(); ++v)
    if (b.hi[v] > 0) out.push_back(p.iota.position(sys.flat(static_cast<int>(v))));
  return out;
}

// ---- crystal graph -------------------------------------------------------------

struct CrystalGraph {
  std::vector<ZVector> nodes; // sorted
  std::vector<std::tuple<std::size_t, int, std::size_t>> edges;
};

/// f_i edges inside a finite set of vectors (in Z_iota or Z_iota[lambda]).
inline CrystalGraph crystal_graph(const IotaSequence &iota, const ZVectorSet &set,
                                  const std::optional<Weight> &lambda = std::nullopt) {
  CrystalGraph g;
  g.nodes.assign(set.begin(), set.end());
  auto index = [&](const ZVector &x) -> std::optional<std::size_t> {
    auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), x);
    if (it == g.nodes.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - g.nodes.begin());
  };
  for (std::size_t s = 0; s < g.nodes.size(); ++s)
    for (int i = 1; i <= iota.rank(); ++i) {
      auto y = f_tilde(iota, CrystalNode{g.nodes[s], lambda}, i);
      if (!y) continue;
      if (auto t = index(y->vector)) g.edges.emplace_back(s, i, *t);
    }
  return g;
}

inline CrystalGraph crystal_graph(const CartanDatum &cartan, const Weight &lambda) {
  IotaSequence iota(cartan);
  return crystal_graph(iota, generate_blambda(iota, lambda, enumeration_cap()), lambda);
}

// ---- verification ----------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> counts;
  std::vector<std::string> witnesses;

  void fail(const std::string &witness) {
    passed = false;
    if (witnesses.size() < 10) witnesses.push_back(witness);
  }
  void count(const std::string &key, std::size_t value) { counts.emplace_back(key, std::to_string(value)); }
  void note(const std::string &key, const std::string &value) { counts.emplace_back(key, value); }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
  }
};

inline std::string format_vector(const IotaSequence &iota, const ZVector &x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (auto [k, v] : x.entries()) {
    Position p = iota.position(k);
    if (!s.empty()) s += ",";
    s += "x_{" + std::to_string(p.row) + ";" + std::to_string(p.col) + "}=" + std::to_string(v);
  }
  return s;
}

/// Compares two finite sets, recording up to ten elements of the symmetric
/// difference as witnesses.
template <class Set, class Fmt>
void compare_sets(CheckResult &c, const std::string &lhs, const Set &a, const std::string &rhs, const Set &b, Fmt fmt) {
  c.count(lhs, a.size());
  c.count(rhs, b.size());
  for (const auto &x : a)
    if (!b.count(x)) c.fail("only in " + lhs + ": " + fmt(x));
  for (const auto &x : b)
    if (!a.count(x)) c.fail("only in " + rhs + ": " + fmt(x));
}

/// Crystal axioms on a finite set generated from 0: e/f round trips, weight
/// shifts, phi = eps + <h, wt>, string lengths, unique highest weight node,
/// connectivity. With a depth, f-images beyond the truncation are ignored.
inline CheckResult check_crystal_axioms(const IotaSequence &iota, const ZVectorSet &set,
                                        const std::optional<Weight> &lambda, std::optional<int> depth = std::nullopt) {
  CheckResult c{"crystal axioms"};
  c.count("elements", set.size());
  const CartanDatum &cd = iota.cartan();
  auto fmt = [&](const ZVector &x) { return format_vector(iota, x); };
  auto inside = [&](const ZVector &x) { return set.count(x) > 0; };
  std::size_t sources = 0;
  for (const ZVector &x : set) {
    const CrystalNode b{x, lambda};
    const Weight wb = weight(iota, b);
    bool highest = true;
    for (int i = 1; i <= iota.rank(); ++i) {
      const Int eps = epsilon(iota, b, i), ph = phi(iota, b, i);
      if (ph != eps + wb[i]) c.fail("phi != eps + <h,wt> at " + fmt(x) + " i=" + std::to_string(i));
      auto e = e_tilde(iota, b, i);
      if (e) {
        highest = false;
        if (!inside(e->vector)) c.fail("e_" + std::to_string(i) + " leaves the set at " + fmt(x));
        auto back = f_tilde(iota, *e, i);
        if (!back || back->vector != x) c.fail("f e != id at " + fmt(x) + " i=" + std::to_string(i));
        Weight we = weight(iota, *e);
        for (int m = 1; m <= iota.rank(); ++m)
          if (we[m] != wb[m] + cd.a(m, i)) c.fail("wt(e x) != wt x + alpha at " + fmt(x));
      }
      auto f = f_tilde(iota, b, i);
      if (f && (!depth || f->vector.total() <= *depth)) {
        if (lambda && !inside(f->vector)) c.fail("f_" + std::to_string(i) + " leaves B(lambda) at " + fmt(x));
        if (inside(f->vector)) {
          auto back = e_tilde(iota, *f, i);
          if (!back || back->vector != x) c.fail("e f != id at " + fmt(x) + " i=" + std::to_string(i));
          Weight wf = weight(iota, *f);
          for (int m = 1; m <= iota.rank(); ++m)
            if (wf[m] != wb[m] - cd.a(m, i)) c.fail("wt(f x) != wt x - alpha at " + fmt(x));
        }
      }
      // eps_i = length of the e_i string; on B(lambda) also phi_i = f_i string.
      Int len = 0;
      for (auto y = e_tilde(iota, b, i); y; y = e_tilde(iota, *y, i)) ++len;
      if (len != eps) c.fail("eps_" + std::to_string(i) + " is not the e-string length at " + fmt(x));
      if (lambda) {
        Int up = 0;
        for (auto y = f_tilde(iota, b, i); y; y = f_tilde(iota, *y, i)) ++up;
        if (up != ph) c.fail("phi_" + std::to_string(i) + " is not the f-string length at " + fmt(x));
      }
    }
    if (highest) {
      ++sources;
      if (!x.is_zero()) c.fail("extra highest weight element " + fmt(x));
    }
  }
  if (sources != 1) c.fail("expected exactly one highest weight element, found " + std::to_string(sources));
  // undirected connectivity through f edges inside the set
  CrystalGraph g = crystal_graph(iota, set, lambda);
  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (auto [s, i, t] : g.edges) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  std::vector<char> seen(g.nodes.size(), 0);
  std::vector<std::size_t> stack;
  if (!g.nodes.empty()) {
    stack.push_back(0);
    seen[0] = 1;
  }
  std::size_t reached = stack.size();
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t t : adj[s])
      if (!seen[t]) {
        seen[t] = 1;
        ++reached;
        stack.push_back(t);
      }
  }
  if (reached != g.nodes.size()) c.fail("crystal graph is disconnected");
  return c;
}

struct VerifyOptions {
  std::optional<Weight> lambda;
  int depth = 4;
  std::vector<Source> sources{Source::Table, Source::Closure};
  // Replaces the printed B(infinity) system, e.g. with a deliberately broken one.
  std::optional<FormSet> table_override;
};

/// Table sources that exist for this type.
inline bool has_table(TypeLabel type, Object object) {
  switch (type) {
  case TypeLabel::B:
  case TypeLabel::C:
  case TypeLabel::D:
  case TypeLabel::F4:
  case TypeLabel::E6: return true;
  case TypeLabel::E7:
  case TypeLabel::E8: return object == Object::Binf;
  default: return false;
  }
}

inline VerifyReport verify(const CartanDatum &cartan, const VerifyOptions &opt) {
  const TypeLabel type = cartan.type();
  const int n = cartan.rank();
  IotaSequence iota(cartan);
  VerifyReport rep;
  const int bound = default_position_bound(type, n);
  auto ffmt = [](const LinearForm &f) { return format_form(f); };
  auto vfmt = [&](const ZVector &x) { return format_vector(iota, x); };

  std::vector<Source> sources;
  for (Source s : opt.sources)
    if (s == Source::Closure || has_table(type, Object::Binf)) sources.push_back(s);

  // (a) closure against printed families
  {
    CheckResult c{"(a) closure == table"};
    if (has_table(type, Object::Binf)) {
      ClosureResult cl = first_column_closure(type, n);
      compare_sets(c, "table", opt.table_override ? *opt.table_override : binf_table_families(type, n), "closure",
                   cl.forms, ffmt);
      if (opt.lambda && has_table(type, Object::Blambda)) {
        std::vector<FormSet> xi = xi_first_tables(type, n);
        for (int i = 1; i <= n; ++i)
          compare_sets(c, "Xi^(" + std::to_string(i) + ") table", xi[i - 1], "Xi^(" + std::to_string(i) + ") closure",
                       xi_i_closure(iota, i, bound, closure_cap()).forms, ffmt);
      }
    } else {
      c.note("skipped", "no printed table for " + cartan.label());
    }
    rep.checks.push_back(std::move(c));
  }

  std::map<Source, Polyhedron> binf;
  for (Source s : sources) {
    Polyhedron p = build(type, n, Object::Binf, s);
    if (s == Source::Table && opt.table_override) p.forms = *opt.table_override;
    binf.emplace(s, std::move(p));
  }

  // (b) B(infinity) truncated at depth
  const ZVectorSet generated = generate_binf(iota, opt.depth);
  std::map<Source, ZVectorSet> enumerated;
  {
    CheckResult c{"(b) generated B(infinity) == enumerated Sigma (depth " + std::to_string(opt.depth) + ")"};
    for (Source s : sources) {
      enumerated[s] = enumerate_binf_truncated(binf.at(s), opt.depth);
      compare_sets(c, "generated", generated, "enumerated/" + to_string(s), enumerated[s], vfmt);
    }
    rep.checks.push_back(std::move(c));
  }

  // (c) B(lambda)
  std::optional<ZVectorSet> blambda;
  if (opt.lambda) {
    CheckResult c{"(c) generated B(lambda) == enumerated Sigma[lambda] == Weyl dimension"};
    blambda = generate_blambda(iota, *opt.lambda, enumeration_cap());
    const BigInt dim = weyl_dim(cartan, *opt.lambda);
    c.note("weyl_dim", dim.str());
    if (BigInt(blambda->size()) != dim)
      c.fail("generated size " + std::to_string(blambda->size()) + " != Weyl dimension " + dim.str());
    for (Source s : sources) {
      if (s == Source::Table && !has_table(type, Object::Blambda)) continue;
      Polyhedron p = build(type, n, Object::Blambda, s);
      compare_sets(c, "generated", *blambda, "enumerated/" + to_string(s), enumerate_blambda(p, *opt.lambda), vfmt);
    }
    rep.checks.push_back(std::move(c));
  }

  // (d) positivity, strict positivity, ampleness
  {
    CheckResult c{"(d) positivity / strict positivity / ample"};
    for (auto &[s, p] : binf)
      if (!check_positivity(p.forms)) c.fail("positivity fails for the " + to_string(s) + " system");
    ClosureResult xi = first_column_closure(type, n);
    std::vector<FormSet> xi_i;
    for (const ViolationEvent &v : xi.violations) c.fail("S applied to a negative first occurrence: " + format_form(v.form));
    for (int i = 1; i <= n; ++i) {
      ClosureResult r = xi_i_closure(iota, i, bound, closure_cap());
      // xi^(i) itself is exempt; S at its own first occurrence is the only
      // place the negative branch may appear.
      for (const ViolationEvent &v : r.violations)
        if (v.form != xi_form(iota, i)) c.fail("S applied to a negative first occurrence: " + format_form(v.form));
      xi_i.push_back(std::move(r.forms));
    }
    const bool strict = check_strict_positivity(iota, xi.forms, xi_i);
    c.note("strict_positivity", strict ? "yes" : "no");
    if (!strict) c.fail("strict positivity fails");
    if (opt.lambda) {
      for (Source s : sources) {
        if (s == Source::Table && !has_table(type, Object::Blambda)) continue;
        if (!check_ample(build(type, n, Object::Blambda, s).forms, *opt.lambda))
          c.fail("(iota, lambda) not ample for the " + to_string(s) + " system");
      }
    }
    rep.checks.push_back(std::move(c));
  }

  // (e) nonzero coordinates
  {
    CheckResult c{"(e) nonzero coordinates == number of positive roots"};
    const std::size_t roots = positive_roots(cartan).size();
    c.count("positive_roots", roots);
    for (auto &[s, p] : binf) {
      std::vector<Position> nz = nonzero_coordinates(p);
      c.count("nonzero/" + to_string(s), nz.size());
      if (nz.size() != roots)
        c.fail(to_string(s) + " system leaves " + std::to_string(nz.size()) + " coordinates free, expected " +
               std::to_string(roots));
      for (Position q : nz)
        if (q.row > p.cutoffs.column(q.col))
          c.fail("x_{" + std::to_string(q.row) + ";" + std::to_string(q.col) + "} lies beyond the row cutoff");
    }
    rep.checks.push_back(std::move(c));
  }

  // (f) crystal axioms
  {
    CheckResult c = check_crystal_axioms(iota, generated, std::nullopt, opt.depth);
    c.name = "(f) crystal axioms on B(infinity) to depth " + std::to_string(opt.depth);
    rep.checks.push_back(std::move(c));
    if (blambda) {
      CheckResult d = check_crystal_axioms(iota, *blambda, opt.lambda);
      d.name = "(f) crystal axioms on B(lambda)";
      rep.checks.push_back(std::move(d));
    }
  }

  // (g) enumerated points are nonnegative
  {
    // The enumerator searches nonnegative points only, so the f-generated
    // sets are the meaningful side here; (b) and (c) tie the two together.
    CheckResult c{"(g) realized points are nonnegative"};
    auto scan = [&](const ZVectorSet &pts) {
      for (const ZVector &x : pts)
        for (auto [k, v] : x.entries())
          if (v < 0) c.fail("negative entry in " + vfmt(x));
    };
    scan(generated);
    if (blambda) scan(*blambda);
    for (auto &[s, pts] : enumerated) scan(pts);
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

} // namespace pcrystal
